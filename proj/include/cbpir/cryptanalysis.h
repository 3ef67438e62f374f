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

#ifndef CBPIR_CRYPTANALYSIS_H_
#define CBPIR_CRYPTANALYSIS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cbpir/echelon.h"
#include "cbpir/matrix.h"
#include "cbpir/params.h"

namespace cbpir {

// ---------------------------------------------------------------------------
// Subquery attack on the original scheme.

// Removes rows [j*delta, (j+1)*delta) from a query with m blocks. 0-based j.
MatFqs DeleteBlock(const MatFqs& q, std::size_t delta, std::size_t j);

struct SubqueryResult {
  std::optional<std::size_t> index;  // unset means Undecided
  std::vector<std::size_t> ranks;    // rk_{F_q}(Q[j]) per block, capped at
                                     // threshold + 1
  std::size_t threshold = 0;         // sn - delta
};

// Returns the unique block whose removal drops the F_q-rank to at most
// sn - delta. Throws Error(kDatabaseTooSmall) unless (m - 1) delta >= n.
SubqueryResult SubqueryAttack(const SchemeParams& params, const MatFqs& q);

// Gaussian binomial coefficient [a b]_q. Throws Error(kInvalidArgument)
// unless a >= b and q >= 2.
BigInt QBinomial(unsigned a, unsigned b, const BigInt& q);

// log2 of a positive big integer.
double Log2(const BigInt& x);

// log2 of [sn-delta, sn-2delta]_q * q^{-delta^2 (m-1)}. Values above 0 mean
// the bound is vacuous. Throws Error(kInvalidArgument) unless sn >= 2 delta.
double SubqueryFailureBoundLog2(const SchemeDims& dims);

// ---------------------------------------------------------------------------
// Rank attack on CB-cPIR.

struct AttackConfig {
  std::size_t rows_per_block = 0;  // 0 selects max(1, ceil((ns-delta+1)/m))
  unsigned workers = 1;
  bool shuffle_alphas = false;     // enumerate F_q^x in shuffled order
  std::uint64_t seed = 1;
};

// Resolves the auto rule and checks 1 <= p < delta and m p > ns - delta.
// Throws Error(kDatabaseTooSmall) or Error(kInvalidArgument).
std::size_t ResolveRowsPerBlock(const SchemeParams& params,
                                const AttackConfig& config);

struct Auxiliary {
  EchelonAccumulator acc;
  std::size_t rows_per_block;
  std::size_t target_rank;     // ns - delta + p
  std::size_t rows_absorbed;
  bool full_rank;
};

// Absorbs rows 0..p-1 of every block until rank ns - delta + p is reached.
// Throws Error(kDatabaseTooSmall) when m p <= ns - delta and
// Error(kInconsistent) if the rank ever exceeds ns - delta + p.
Auxiliary BuildAuxiliary(const SchemeParams& params, const MatFqs& q,
                         std::size_t rows_per_block);

// Appends alphas[t] * Q^i[p + t] + Q^j[p + t] for every t and reports
// whether the rank grew by less than alphas.size(). Throws
// Error(kInvalidArgument) if i == j or the batch exceeds delta - p.
bool AlphaBatchTest(const SchemeParams& params, const Auxiliary& aux,
                    const MatFqs& q, std::size_t i, std::size_t j,
                    std::span<const FqElem> alphas);

struct AlphaSearchResult {
  FqElem alpha;
  std::size_t rank_calls;
};

// Halves a batch known to contain the satisfying alpha. Uses at most
// ceil(log2(batch size)) rank tests. Throws Error(kInconsistent) on an
// empty batch.
AlphaSearchResult AlphaBinarySearch(const SchemeParams& params,
                                    const Auxiliary& aux, const MatFqs& q,
                                    std::size_t i, std::size_t j,
                                    std::span<const FqElem> hit_batch);

// True iff alpha * Q_beta^i[p] + Q_beta^j[p] raises the rank of aux_beta.
bool PairMembershipTest(const SchemeParams& params, const Auxiliary& aux_beta,
                        const MatFqs& q_beta, FqElem alpha, std::size_t i,
                        std::size_t j);

struct PairLog {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t batches = 0;        // batch tests run
  std::size_t search_calls = 0;   // binary-search rank tests
  std::optional<FqElem> alpha;    // unset if no batch hit
  bool member = false;            // i0 in {i, j}
  std::size_t rank_ops() const { return batches + search_calls + (alpha ? 1 : 0); }
};

enum class AttackStatus { kRecovered, kUndecided };

struct AttackReport {
  AttackStatus status = AttackStatus::kUndecided;
  std::optional<std::size_t> index;
  std::string undecided_reason;
  std::size_t rows_per_block = 0;
  std::size_t aux_rank = 0;
  std::size_t aux_beta_rank = 0;
  std::size_t aux_target = 0;
  std::vector<PairLog> pairs;
  std::size_t rank_ops = 0;  // sum of pairs[].rank_ops()
  double wall_seconds = 0;

  // key=value lines. Wall time is emitted only when with_time is set so the
  // rest of the report is reproducible byte for byte.
  std::string ToText(bool with_time) const;
};

// Full attack: builds both auxiliary matrices, then draws candidate pairs in
// a seeded order and tests them in waves of config.workers threads.
AttackReport RecoverIndex(const SchemeParams& params, const MatFqs& q,
                          const MatFqs& q_beta, const AttackConfig& config);

struct AttackCost {
  BigInt batches;         // ceil(q / (delta - 1))
  double rank_ops = 0;    // m/2 (batches + log2 delta + 1)
  double fq_ops = 0;      // rank_ops (ns)^3
  double log2_fq_ops = 0;
  double log2_batches = 0;
};

AttackCost ComputeAttackCost(const SchemeDims& dims);

}  // namespace cbpir

#endif  // CBPIR_CRYPTANALYSIS_H_
