// Copyright 2026 The cbpir Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cbpir/cryptanalysis.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <sstream>
#include <thread>

#include "cbpir/error.h"
#include "cbpir/random.h"

namespace cbpir {

namespace {

std::size_t FqWidth(const SchemeParams& params) {
  return params.n() * params.s();
}

void CheckQueryShape(const SchemeParams& params, const MatFqs& q) {
  if (q.rows() != params.m() * params.delta() || q.cols() != params.n() ||
      q.degree() != params.s()) {
    throw Error(ErrorCode::kShapeMismatch,
                "query must be (m*delta) x n over F_{q^s}");
  }
}

// Row r of block t as a vector over F_q.
std::span<const FqElem> BlockRow(const MatFqs& q, std::size_t delta,
                                 std::size_t t, std::size_t r) {
  return q.row(t * delta + r);
}

void Combine(const FieldSpec& f, FqElem alpha, std::span<const FqElem> a,
             std::span<const FqElem> b, std::span<FqElem> out) {
  for (std::size_t c = 0; c < out.size(); ++c) {
    out[c] = f.Add(f.Mul(alpha, a[c]), b[c]);
  }
}

// Rank increase after appending the batch rows for (i, j).
std::size_t BatchIncrease(const SchemeParams& params, const Auxiliary& aux,
                          const MatFqs& q, std::size_t i, std::size_t j,
                          std::span<const FqElem> alphas) {
  EchelonAccumulator acc = aux.acc.Fork();
  const std::size_t before = acc.rank();
  std::vector<FqElem> row(FqWidth(params));
  for (std::size_t t = 0; t < alphas.size(); ++t) {
    const std::size_t r = aux.rows_per_block + t;
    Combine(params.base(), alphas[t], BlockRow(q, params.delta(), i, r),
            BlockRow(q, params.delta(), j, r), row);
    acc.AppendRow(row);
  }
  return acc.rank() - before;
}

}  // namespace

MatFqs DeleteBlock(const MatFqs& q, std::size_t delta, std::size_t j) {
  if (delta == 0 || q.rows() % delta != 0 || j >= q.rows() / delta) {
    throw Error(ErrorCode::kInvalidArgument, "block index out of range");
  }
  MatFqs out(q.rows() - delta, q.cols(), q.degree());
  const std::size_t width = q.cols() * q.degree();
  std::copy_n(q.data().begin(), j * delta * width, out.data().begin());
  std::copy(q.data().begin() + (j + 1) * delta * width, q.data().end(),
            out.data().begin() + j * delta * width);
  return out;
}

SubqueryResult SubqueryAttack(const SchemeParams& params, const MatFqs& q) {
  CheckQueryShape(params, q);
  const std::size_t delta = params.delta();
  const std::size_t m = params.m();
  if ((m - 1) * delta < params.n()) {
    throw Error(ErrorCode::kDatabaseTooSmall,
                "subquery attack needs (m-1)*delta >= n");
  }
  SubqueryResult result;
  result.threshold = FqWidth(params) - delta;
  std::vector<std::size_t> low;
  for (std::size_t j = 0; j < m; ++j) {
    EchelonAccumulator acc(params.base(), FqWidth(params));
    for (std::size_t r = 0; r < q.rows() && acc.rank() <= result.threshold;
         ++r) {
      if (r / delta != j) acc.AppendRow(q.row(r));
    }
    result.ranks.push_back(acc.rank());
    if (acc.rank() <= result.threshold) low.push_back(j);
  }
  if (low.size() == 1) result.index = low.front();
  return result;
}

BigInt QBinomial(unsigned a, unsigned b, const BigInt& q) {
  if (b > a || q < 2) {
    throw Error(ErrorCode::kInvalidArgument, "q-binomial needs a >= b, q >= 2");
  }
  BigInt num = 1;
  BigInt den = 1;
  for (unsigned i = 1; i <= b; ++i) {
    num *= boost::multiprecision::pow(q, a - b + i) - 1;
    den *= boost::multiprecision::pow(q, i) - 1;
  }
  if (num % den != 0) {
    throw Error(ErrorCode::kInconsistent, "q-binomial product not integral");
  }
  return num / den;
}

double Log2(const BigInt& x) {
  if (x <= 0) throw Error(ErrorCode::kInvalidArgument, "log2 of non-positive");
  const unsigned msb = boost::multiprecision::msb(x);
  if (msb < 900) return std::log2(x.convert_to<double>());
  const unsigned shift = msb - 60;
  const BigInt top = x >> shift;
  return std::log2(top.convert_to<double>()) + shift;
}

double SubqueryFailureBoundLog2(const SchemeDims& dims) {
  const std::size_t sn = dims.s * dims.n;
  const std::size_t delta = dims.delta();
  if (delta == 0 || sn < 2 * delta) {
    throw Error(ErrorCode::kInvalidArgument, "bound needs sn >= 2*delta");
  }
  const BigInt binom = QBinomial(static_cast<unsigned>(sn - delta),
                                 static_cast<unsigned>(sn - 2 * delta),
                                 dims.q());
  return Log2(binom) - static_cast<double>(delta) * static_cast<double>(delta) *
                           static_cast<double>(dims.m - 1) * dims.log2_q();
}

std::size_t ResolveRowsPerBlock(const SchemeParams& params,
                                const AttackConfig& config) {
  const std::size_t excess = FqWidth(params) - params.delta();
  std::size_t p = config.rows_per_block;
  if (p == 0) p = std::max<std::size_t>(1, (excess + params.m()) / params.m());
  if (p >= params.delta()) {
    throw Error(ErrorCode::kDatabaseTooSmall,
                "rows per block must stay below delta; need (delta-1)*m > "
                "ns-delta");
  }
  if (params.m() * p <= excess) {
    throw Error(ErrorCode::kDatabaseTooSmall,
                "need m*p > ns-delta rows for the auxiliary matrix");
  }
  return p;
}

Auxiliary BuildAuxiliary(const SchemeParams& params, const MatFqs& q,
                         std::size_t rows_per_block) {
  CheckQueryShape(params, q);
  const std::size_t excess = FqWidth(params) - params.delta();
  if (rows_per_block == 0 || rows_per_block >= params.delta()) {
    throw Error(ErrorCode::kInvalidArgument, "rows per block out of range");
  }
  if (params.m() * rows_per_block <= excess) {
    throw Error(ErrorCode::kDatabaseTooSmall,
                "need m*p > ns-delta rows for the auxiliary matrix");
  }
  Auxiliary aux{EchelonAccumulator(params.base(), FqWidth(params)),
                rows_per_block, excess + rows_per_block, 0, false};
  for (std::size_t t = 0; t < params.m() && aux.acc.rank() < aux.target_rank;
       ++t) {
    for (std::size_t r = 0; r < rows_per_block; ++r) {
      aux.acc.AppendRow(BlockRow(q, params.delta(), t, r));
      ++aux.rows_absorbed;
    }
  }
  if (aux.acc.rank() > aux.target_rank) {
    throw Error(ErrorCode::kInconsistent,
                "auxiliary rank exceeds ns-delta+p; query is not well formed");
  }
  aux.full_rank = aux.acc.rank() == aux.target_rank;
  return aux;
}

bool AlphaBatchTest(const SchemeParams& params, const Auxiliary& aux,
                    const MatFqs& q, std::size_t i, std::size_t j,
                    std::span<const FqElem> alphas) {
  if (i == j) throw Error(ErrorCode::kInvalidArgument, "pair needs i != j");
  if (alphas.size() > params.delta() - aux.rows_per_block) {
    throw Error(ErrorCode::kInvalidArgument, "alpha batch exceeds delta-p");
  }
  return BatchIncrease(params, aux, q, i, j, alphas) < alphas.size();
}

AlphaSearchResult AlphaBinarySearch(const SchemeParams& params,
                                    const Auxiliary& aux, const MatFqs& q,
                                    std::size_t i, std::size_t j,
                                    std::span<const FqElem> hit_batch) {
  if (hit_batch.empty()) {
    throw Error(ErrorCode::kInconsistent, "empty alpha batch marked as a hit");
  }
  std::span<const FqElem> range = hit_batch;
  std::size_t calls = 0;
  while (range.size() > 1) {
    const std::span<const FqElem> lower = range.first(range.size() / 2);
    ++calls;
    range = AlphaBatchTest(params, aux, q, i, j, lower)
                ? lower
                : range.subspan(range.size() / 2);
  }
  return {range.front(), calls};
}

bool PairMembershipTest(const SchemeParams& params, const Auxiliary& aux_beta,
                        const MatFqs& q_beta, FqElem alpha, std::size_t i,
                        std::size_t j) {
  EchelonAccumulator acc = aux_beta.acc.Fork();
  std::vector<FqElem> row(FqWidth(params));
  const std::size_t r = aux_beta.rows_per_block;
  Combine(params.base(), alpha, BlockRow(q_beta, params.delta(), i, r),
          BlockRow(q_beta, params.delta(), j, r), row);
  return acc.AppendRow(row);
}

namespace {

PairLog EvaluatePair(const SchemeParams& params, const Auxiliary& aux,
                     const Auxiliary& aux_beta, const MatFqs& q,
                     const MatFqs& q_beta, std::span<const FqElem> alphas,
                     std::size_t i, std::size_t j) {
  PairLog log;
  log.i = i;
  log.j = j;
  const std::size_t batch = params.delta() - aux.rows_per_block;
  for (std::size_t start = 0; start < alphas.size(); start += batch) {
    const auto chunk =
        alphas.subspan(start, std::min(batch, alphas.size() - start));
    ++log.batches;
    if (AlphaBatchTest(params, aux, q, i, j, chunk)) {
      const AlphaSearchResult found =
          AlphaBinarySearch(params, aux, q, i, j, chunk);
      log.search_calls = found.rank_calls;
      log.alpha = found.alpha;
      log.member =
          PairMembershipTest(params, aux_beta, q_beta, found.alpha, i, j);
      return log;
    }
  }
  return log;
}

}  // namespace

AttackReport RecoverIndex(const SchemeParams& params, const MatFqs& q,
                          const MatFqs& q_beta, const AttackConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  CheckQueryShape(params, q);
  CheckQueryShape(params, q_beta);
  AttackReport report;
  const std::size_t p = ResolveRowsPerBlock(params, config);
  report.rows_per_block = p;
  const Auxiliary aux = BuildAuxiliary(params, q, p);
  const Auxiliary aux_beta = BuildAuxiliary(params, q_beta, p);
  report.aux_rank = aux.acc.rank();
  report.aux_beta_rank = aux_beta.acc.rank();
  report.aux_target = aux.target_rank;

  auto finish = [&](std::optional<std::size_t> index, std::string reason) {
    report.index = index;
    report.status =
        index ? AttackStatus::kRecovered : AttackStatus::kUndecided;
    report.undecided_reason = std::move(reason);
    report.rank_ops = 0;
    for (const PairLog& log : report.pairs) report.rank_ops += log.rank_ops();
    report.wall_seconds = std::chrono::duration<double>(
                              std::chrono::steady_clock::now() - start)
                              .count();
    return report;
  };

  if (!aux.full_rank || !aux_beta.full_rank) {
    return finish(std::nullopt, "auxiliary_rank_deficient");
  }

  Rng rng(config.seed);
  std::vector<FqElem> alphas(params.base().q() - 1);
  std::iota(alphas.begin(), alphas.end(), FqElem{1});
  if (config.shuffle_alphas) Shuffle(rng, alphas);
  std::vector<std::size_t> order(params.m());
  std::iota(order.begin(), order.end(), std::size_t{0});
  Shuffle(rng, order);

  auto evaluate = [&](std::size_t i, std::size_t j) {
    PairLog log = EvaluatePair(params, aux, aux_beta, q, q_beta, alphas, i, j);
    report.pairs.push_back(log);
    return log;
  };

  const std::size_t pair_count = order.size() / 2;
  const std::size_t workers = std::max(1u, config.workers);
  std::optional<PairLog> positive;
  for (std::size_t wave = 0; wave < pair_count && !positive; wave += workers) {
    const std::size_t count = std::min(workers, pair_count - wave);
    std::vector<PairLog> logs(count);
    auto run = [&](std::size_t w) {
      const std::size_t pi = wave + w;
      logs[w] = EvaluatePair(params, aux, aux_beta, q, q_beta, alphas,
                             order[2 * pi], order[2 * pi + 1]);
    };
    if (count == 1) {
      run(0);
    } else {
      std::vector<std::jthread> threads;
      for (std::size_t w = 0; w < count; ++w) threads.emplace_back(run, w);
    }
    for (const PairLog& log : logs) {
      report.pairs.push_back(log);
      if (!log.alpha) return finish(std::nullopt, "no_alpha_hit");
      if (log.member) {
        positive = log;
        break;
      }
    }
  }

  if (positive) {
    const std::size_t i = positive->i;
    const std::size_t j = positive->j;
    const auto other = std::find_if(order.begin(), order.end(), [&](auto t) {
      return t != i && t != j;
    });
    if (other == order.end()) return finish(std::nullopt, "no_third_index");
    const PairLog first = evaluate(i, *other);
    if (!first.alpha) return finish(std::nullopt, "no_alpha_hit");
    if (first.member) return finish(i, "");
    const PairLog second = evaluate(j, *other);
    if (!second.alpha) return finish(std::nullopt, "no_alpha_hit");
    if (second.member) return finish(j, "");
    return finish(std::nullopt, "pair_disambiguation_failed");
  }
  if (order.size() % 2 == 1) {
    const std::size_t last = order.back();
    const PairLog check = evaluate(last, order.front());
    if (!check.alpha) return finish(std::nullopt, "no_alpha_hit");
    if (check.member) return finish(last, "");
    return finish(std::nullopt, "leftover_not_confirmed");
  }
  return finish(std::nullopt, "no_positive_pair");
}

std::string AttackReport::ToText(bool with_time) const {
  std::ostringstream out;
  out << "status=" << (status == AttackStatus::kRecovered ? "recovered"
                                                          : "undecided")
      << '\n';
  out << "index=" << (index ? std::to_string(*index) : std::string("none"))
      << '\n';
  if (!undecided_reason.empty()) out << "reason=" << undecided_reason << '\n';
  out << "rows_per_block=" << rows_per_block << '\n';
  out << "aux_rank=" << aux_rank << '\n';
  out << "aux_beta_rank=" << aux_beta_rank << '\n';
  out << "aux_target=" << aux_target << '\n';
  out << "pairs_evaluated=" << pairs.size() << '\n';
  out << "rank_ops=" << rank_ops << '\n';
  for (std::size_t t = 0; t < pairs.size(); ++t) {
    const PairLog& log = pairs[t];
    out << "pair." << t << "=i:" << log.i << " j:" << log.j
        << " batches:" << log.batches << " search_calls:" << log.search_calls
        << " alpha:"
        << (log.alpha ? std::to_string(*log.alpha) : std::string("none"))
        << " member:" << (log.member ? 1 : 0) << '\n';
  }
  if (with_time) out << "wall_seconds=" << wall_seconds << '\n';
  return out.str();
}

AttackCost ComputeAttackCost(const SchemeDims& dims) {
  const std::size_t delta = dims.delta();
  if (delta < 2) {
    throw Error(ErrorCode::kInvalidArgument, "attack cost needs delta >= 2");
  }
  AttackCost cost;
  const BigInt q = dims.q();
  cost.batches = (q + (delta - 2)) / (delta - 1);
  cost.log2_batches = Log2(cost.batches);
  const double batches = cost.batches.convert_to<double>();
  cost.rank_ops = static_cast<double>(dims.m) / 2.0 *
                  (batches + std::log2(static_cast<double>(delta)) + 1.0);
  const double ns = static_cast<double>(dims.n) * dims.s;
  cost.fq_ops = cost.rank_ops * ns * ns * ns;
  cost.log2_fq_ops = std::log2(cost.rank_ops) + 3.0 * std::log2(ns);
  return cost;
}

}  // namespace cbpir
