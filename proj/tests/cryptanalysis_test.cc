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

#include <cmath>
#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

#include "cbpir/cryptanalysis.h"
#include "cbpir/error.h"
#include "cbpir/pir_scheme.h"
#include "cbpir/presets.h"
#include "cbpir/random.h"
#include "oracles.h"

namespace cbpir {
namespace {

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::kInconsistent;
}

SchemeParams Toy(std::size_t m = 40) {
  SchemeDims dims = FindPreset("toy16").dims;
  dims.m = m;
  return SchemeParams::Create(dims);
}

// A planted CB-cPIR query together with its secret.
struct Planted {
  std::size_t i0;
  QueryBundle query;
  ClientSecret secret;
};

Planted Plant(const SchemeParams& params, std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t i0 = UniformBelow(rng, params.m());
  auto [query, secret] = QueryCbcpir(params, i0, rng);
  return {i0, std::move(query), std::move(secret)};
}

TEST(DeleteBlockTest, ShapesAndReinsertion) {
  const SchemeParams params = Toy();
  Rng rng(81);
  const MatFqs q = QueryOriginal(params, 3, rng).first.q;
  const std::size_t d = params.delta();
  for (std::size_t j : {0u, 17u, 39u}) {
    const MatFqs cut = DeleteBlock(q, d, j);
    EXPECT_EQ(cut.rows(), 39u * d);
    const MatFqs back = StackRows(
        StackRows(SelectRows(cut, 0, j * d), SelectRows(q, j * d, (j + 1) * d)),
        SelectRows(cut, j * d, cut.rows()));
    EXPECT_EQ(back, q);
  }
  EXPECT_EQ(DeleteBlock(SelectRows(q, 0, d), d, 0).rows(), 0u);
  EXPECT_EQ(CodeOf([&] { DeleteBlock(q, d, 40); }), ErrorCode::kInvalidArgument);
}

TEST(SubqueryTest, RecoversOriginalSchemeIndex) {
  const SchemeParams params = Toy();
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(seed);
    const std::size_t i0 = UniformBelow(rng, params.m());
    const QueryBundle q = QueryOriginal(params, i0, rng).first;
    const SubqueryResult r = SubqueryAttack(params, q.q);
    ASSERT_TRUE(r.index.has_value());
    EXPECT_EQ(*r.index, i0);
    EXPECT_EQ(r.threshold, 36u);
    EXPECT_LE(r.ranks[i0], 36u);
  }
}

TEST(SubqueryTest, CbcpirShowsNoGap) {
  const SchemeParams params = Toy();
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Planted p = Plant(params, seed);
    EXPECT_FALSE(SubqueryAttack(params, p.query.q).index.has_value());
  }
}

TEST(SubqueryTest, IdenticalBlocksAreUndecided) {
  const SchemeParams params = Toy();
  Rng rng(82);
  const MatFqs q = QueryOriginal(params, 0, rng).first.q;
  MatFqs same = q;
  const std::size_t d = params.delta();
  for (std::size_t t = 1; t < params.m(); ++t) {
    std::copy(q.data().begin(), q.data().begin() + d * q.cols() * q.degree(),
              same.data().begin() + t * d * q.cols() * q.degree());
  }
  EXPECT_FALSE(SubqueryAttack(params, same).index.has_value());
}

TEST(SubqueryTest, PreconditionOnDatabaseSize) {
  const SchemeParams params = Toy(1);
  Rng rng(83);
  const MatFqs q = QueryOriginal(params, 0, rng).first.q;
  EXPECT_EQ(CodeOf([&] { SubqueryAttack(params, q); }),
            ErrorCode::kDatabaseTooSmall);
}

TEST(QBinomialTest, KnownValues) {
  EXPECT_EQ(QBinomial(5, 0, 7), 1);
  EXPECT_EQ(QBinomial(2, 1, 2), 3);
  EXPECT_EQ(QBinomial(4, 2, 2), 35);
  EXPECT_EQ(QBinomial(8, 4, 2), 200787);
  EXPECT_EQ(QBinomial(9, 3, 3), QBinomial(9, 6, 3));
  EXPECT_EQ(CodeOf([] { QBinomial(2, 3, 2); }), ErrorCode::kInvalidArgument);
}

TEST(QBinomialTest, MatchesSubspaceCounting) {
  for (std::uint64_t q : {2u, 3u}) {
    for (unsigned a = 0; a <= 4; ++a) {
      for (unsigned b = 0; b <= a; ++b) {
        EXPECT_EQ(QBinomial(a, b, q), oracle::CountSubspaces(a, b, q))
            << "q=" << q << " a=" << a << " b=" << b;
      }
    }
  }
}

TEST(SubqueryFailureBoundTest, WorkedExampleAndMonotonicity) {
  // s n = 12 and delta = 4, so sn - delta = 8 and sn - 2 delta = 4.
  SchemeDims dims{2, 1, 2, 1, 6, 2, 5, 1, 1};
  ASSERT_EQ(dims.delta(), 4u);
  EXPECT_NEAR(SubqueryFailureBoundLog2(dims), std::log2(200787.0) - 64.0, 1e-9);
  EXPECT_NEAR(SubqueryFailureBoundLog2(dims), -46.385, 1e-3);
  dims.m = 1;
  EXPECT_NEAR(SubqueryFailureBoundLog2(dims), std::log2(200787.0), 1e-9);
  EXPECT_GT(SubqueryFailureBoundLog2(dims), 0.0);  // vacuous
  double previous = SubqueryFailureBoundLog2(dims);
  for (dims.m = 2; dims.m < 10; ++dims.m) {
    const double bound = SubqueryFailureBoundLog2(dims);
    EXPECT_LT(bound, previous);
    previous = bound;
  }
  SchemeDims wide{2, 1, 3, 1, 5, 1, 5, 1, 1};  // delta 8, sn 15 < 2 delta
  EXPECT_EQ(CodeOf([&] { SubqueryFailureBoundLog2(wide); }),
            ErrorCode::kInvalidArgument);
}

TEST(Log2Test, BigValues) {
  EXPECT_DOUBLE_EQ(Log2(BigInt(1)), 0.0);
  EXPECT_DOUBLE_EQ(Log2(BigInt(1) << 2000), 2000.0);
  EXPECT_NEAR(Log2((BigInt(3) << 1500)), 1500 + std::log2(3.0), 1e-9);
}

TEST(AuxiliaryTest, RankBoundAndFullRankRate) {
  const SchemeParams params = Toy();
  int full = 0;
  int exact_rows_full = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Planted p = Plant(params, seed);
    const Auxiliary aux = BuildAuxiliary(params, p.query.q, 1);
    EXPECT_LE(aux.acc.rank(), 37u);
    EXPECT_EQ(aux.target_rank, 37u);
    full += aux.full_rank ? 1 : 0;
    exact_rows_full += aux.rows_absorbed == 37 ? 1 : 0;
  }
  EXPECT_GE(full, 99);
  // Without absorbing extra rows the first 37 block rows are full rank in
  // most, not all, instances.
  EXPECT_GE(exact_rows_full, 80);
}

TEST(AuxiliaryTest, DatabaseTooSmall) {
  const SchemeParams params = Toy(36);
  const Planted p = Plant(params, 1);
  EXPECT_EQ(CodeOf([&] { BuildAuxiliary(params, p.query.q, 1); }),
            ErrorCode::kDatabaseTooSmall);
  AttackConfig config;
  config.rows_per_block = 1;
  EXPECT_EQ(CodeOf([&] { ResolveRowsPerBlock(params, config); }),
            ErrorCode::kDatabaseTooSmall);
  // m (delta - 1) <= ns - delta: no admissible p.
  const SchemeParams tiny = Toy(3);
  EXPECT_EQ(CodeOf([&] { ResolveRowsPerBlock(tiny, AttackConfig{}); }),
            ErrorCode::kDatabaseTooSmall);
}

TEST(AuxiliaryTest, AutoRowsPerBlock) {
  EXPECT_EQ(ResolveRowsPerBlock(Toy(40), AttackConfig{}), 1u);
  EXPECT_EQ(ResolveRowsPerBlock(Toy(15), AttackConfig{}), 3u);
  EXPECT_EQ(ResolveRowsPerBlock(Toy(37), AttackConfig{}), 1u);
  EXPECT_EQ(ResolveRowsPerBlock(Toy(36), AttackConfig{}), 2u);
}

// Alpha search pieces on planted instances where the satisfying alpha is known.
class AlphaTest : public ::testing::Test {
 protected:
  AlphaTest() : params_(Toy()) {}

  FqElem TrueAlpha(const Planted& p, std::size_t i, std::size_t j) const {
    const FieldSpec& f = params_.base();
    return f.Neg(f.Div(p.secret.c[j], p.secret.c[i]));
  }

  std::vector<FqElem> WrongBatch(FqElem truth, std::size_t size) const {
    std::vector<FqElem> out;
    for (FqElem a = 1; a < params_.base().q() && out.size() < size; ++a) {
      if (a != truth) out.push_back(a);
    }
    return out;
  }

  SchemeParams params_;
};

TEST_F(AlphaTest, BatchDetection) {
  int wrong_clean = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Planted p = Plant(params_, seed);
    const Auxiliary aux = BuildAuxiliary(params_, p.query.q, 1);
    const std::size_t i = (p.i0 + 1) % params_.m();
    const std::size_t j = (p.i0 + 2) % params_.m();
    const FqElem truth = TrueAlpha(p, i, j);
    std::vector<FqElem> batch = WrongBatch(truth, 10);
    batch.insert(batch.begin() + static_cast<long>(seed % 11), truth);
    EXPECT_TRUE(AlphaBatchTest(params_, aux, p.query.q, i, j, batch));
    wrong_clean += AlphaBatchTest(params_, aux, p.query.q, i, j,
                                  WrongBatch(truth, 11)) ? 0 : 1;
    EXPECT_FALSE(AlphaBatchTest(params_, aux, p.query.q, i, j, {}));
  }
  EXPECT_GE(wrong_clean, 99);
}

TEST_F(AlphaTest, BatchArgumentChecks) {
  const Planted p = Plant(params_, 5);
  const Auxiliary aux = BuildAuxiliary(params_, p.query.q, 1);
  const std::vector<FqElem> twelve(12, 1);
  EXPECT_EQ(CodeOf([&] { AlphaBatchTest(params_, aux, p.query.q, 0, 1, twelve); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([&] { AlphaBatchTest(params_, aux, p.query.q, 2, 2, {}); }),
            ErrorCode::kInvalidArgument);
}

TEST_F(AlphaTest, BinarySearch) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Planted p = Plant(params_, seed);
    const Auxiliary aux = BuildAuxiliary(params_, p.query.q, 1);
    const std::size_t i = p.i0;
    const std::size_t j = (p.i0 + 5) % params_.m();
    const FqElem truth = TrueAlpha(p, i, j);

    const std::vector<FqElem> single = {truth};
    const AlphaSearchResult one =
        AlphaBinarySearch(params_, aux, p.query.q, i, j, single);
    EXPECT_EQ(one.alpha, truth);
    EXPECT_EQ(one.rank_calls, 0u);

    std::vector<FqElem> batch = WrongBatch(truth, 10);
    batch.insert(batch.begin() + static_cast<long>(seed % 11), truth);
    const AlphaSearchResult found =
        AlphaBinarySearch(params_, aux, p.query.q, i, j, batch);
    EXPECT_EQ(found.alpha, truth);
    EXPECT_LE(found.rank_calls, 4u);
  }
  const Planted p = Plant(params_, 1);
  const Auxiliary aux = BuildAuxiliary(params_, p.query.q, 1);
  EXPECT_EQ(CodeOf([&] { AlphaBinarySearch(params_, aux, p.query.q, 0, 1, {}); }),
            ErrorCode::kInconsistent);
}

TEST_F(AlphaTest, PairMembership) {
  int outside_negative = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Planted p = Plant(params_, seed);
    const MatFqs& qb = *p.query.q_beta;
    const Auxiliary aux_beta = BuildAuxiliary(params_, qb, 1);
    const std::size_t other = (p.i0 + 3) % params_.m();
    const std::size_t third = (p.i0 + 7) % params_.m();
    EXPECT_TRUE(PairMembershipTest(params_, aux_beta, qb,
                                   TrueAlpha(p, other, p.i0), other, p.i0));
    EXPECT_TRUE(PairMembershipTest(params_, aux_beta, qb,
                                   TrueAlpha(p, p.i0, other), p.i0, other));
    outside_negative += PairMembershipTest(params_, aux_beta, qb,
                                           TrueAlpha(p, other, third), other,
                                           third) ? 0 : 1;
  }
  EXPECT_GE(outside_negative, 99);
}

// For i0 in {i, j} the combination alpha beta_i + beta_j never vanishes,
// checked over every pair of nonzero betas (beta_i0 != -1 as in the scheme).
TEST(PairIdentityTest, ExhaustiveOverSmallFields) {
  for (auto [p, e] : {std::pair<std::uint64_t, unsigned>{5, 1}, {2, 3}, {2, 4}}) {
    const FieldSpec f = FieldSpec::Create(p, e);
    const FqElem minus_one = f.Neg(1);
    for (FqElem bi = 1; bi < f.q(); ++bi) {
      for (FqElem bj = 1; bj < f.q(); ++bj) {
        if (bj != minus_one) {  // i0 = j
          const FqElem alpha = f.Neg(f.Div(f.Add(1, bj), bi));
          EXPECT_EQ(f.Add(f.Mul(alpha, bi), bj), minus_one);
        }
        if (bi != minus_one) {  // i0 = i
          const FqElem alpha = f.Neg(f.Div(bj, f.Add(1, bi)));
          EXPECT_NE(f.Add(f.Mul(alpha, bi), bj), 0u);
        }
      }
    }
  }
}

TEST(RecoverIndexTest, RecoversPlantedIndex) {
  const SchemeParams params = Toy();
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Planted p = Plant(params, seed);
    AttackConfig config;
    config.seed = seed;
    const AttackReport r = RecoverIndex(params, p.query.q, *p.query.q_beta, config);
    ASSERT_EQ(r.status, AttackStatus::kRecovered) << r.undecided_reason;
    EXPECT_EQ(*r.index, p.i0);
    std::size_t ops = 0;
    for (const PairLog& log : r.pairs) {
      EXPECT_LE(log.batches, 2u);  // ceil(15 / 11)
      EXPECT_LE(log.search_calls, 4u);
      ops += log.batches + log.search_calls + 1;
    }
    EXPECT_EQ(r.rank_ops, ops);
  }
}

TEST(RecoverIndexTest, ReportIndependentOfWorkers) {
  const SchemeParams params = Toy();
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Planted p = Plant(params, seed);
    AttackConfig config;
    config.seed = seed;
    const std::string serial =
        RecoverIndex(params, p.query.q, *p.query.q_beta, config).ToText(false);
    config.workers = 4;
    const std::string parallel =
        RecoverIndex(params, p.query.q, *p.query.q_beta, config).ToText(false);
    EXPECT_EQ(serial, parallel);
    EXPECT_EQ(serial.find("wall_seconds"), std::string::npos);
  }
}

TEST(RecoverIndexTest, ShuffledAlphaOrder) {
  const SchemeParams params = Toy();
  const Planted p = Plant(params, 9);
  AttackConfig config;
  config.shuffle_alphas = true;
  const AttackReport r = RecoverIndex(params, p.query.q, *p.query.q_beta, config);
  ASSERT_TRUE(r.index.has_value());
  EXPECT_EQ(*r.index, p.i0);
}

TEST(RecoverIndexTest, SeveralRowsPerBlock) {
  const SchemeParams params = Toy(15);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Planted p = Plant(params, seed);
    AttackConfig config;
    config.seed = seed;
    config.rows_per_block = 3;
    const AttackReport r = RecoverIndex(params, p.query.q, *p.query.q_beta, config);
    ASSERT_TRUE(r.index.has_value()) << r.undecided_reason;
    EXPECT_EQ(*r.index, p.i0);
    EXPECT_EQ(r.rows_per_block, 3u);
    EXPECT_EQ(r.aux_target, 39u);
  }
}

// Odd and even databases on a tiny instance exercise the leftover index and
// the pair disambiguation paths.
TEST(RecoverIndexTest, TinyInstancesOddAndEven) {
  for (std::size_t m : {7u, 8u, 9u}) {
    const SchemeParams params =
        SchemeParams::Create(SchemeDims{2, 4, 2, 1, 4, 2, m, 2, 1});
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const Planted p = Plant(params, seed);
      AttackConfig config;
      config.seed = seed;
      const AttackReport r =
          RecoverIndex(params, p.query.q, *p.query.q_beta, config);
      if (r.index) {
        EXPECT_EQ(*r.index, p.i0) << "m=" << m << " seed=" << seed;
      } else {
        EXPECT_EQ(r.undecided_reason, "auxiliary_rank_deficient");
      }
    }
  }
}

// In odd characteristic the sign of the appended Q_beta row matters.
TEST(RecoverIndexTest, OddCharacteristic) {
  for (auto [p, e] : {std::pair<std::uint64_t, unsigned>{5, 1}, {3, 2}}) {
    const SchemeParams params =
        SchemeParams::Create(SchemeDims{p, e, 4, 2, 12, 6, 40, 5, 1});
    std::size_t recovered = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Planted planted = Plant(params, seed);
      const AttackReport r = RecoverIndex(params, planted.query.q,
                                          *planted.query.q_beta, AttackConfig{});
      if (r.index) {
        EXPECT_EQ(*r.index, planted.i0) << "q=" << params.base().q();
        ++recovered;
      }
    }
    EXPECT_GE(recovered, 19u) << "q=" << params.base().q();
  }
}

TEST(RecoverIndexTest, ReportText) {
  const SchemeParams params = Toy();
  const Planted p = Plant(params, 2);
  const AttackReport r =
      RecoverIndex(params, p.query.q, *p.query.q_beta, AttackConfig{});
  const std::string text = r.ToText(true);
  EXPECT_NE(text.find("status=recovered\n"), std::string::npos);
  EXPECT_NE(text.find("index=" + std::to_string(p.i0) + "\n"), std::string::npos);
  EXPECT_NE(text.find("rank_ops=" + std::to_string(r.rank_ops) + "\n"),
            std::string::npos);
  EXPECT_NE(text.find("wall_seconds="), std::string::npos);
}

TEST(AttackCostTest, BatchCounts) {
  SchemeDims row3 = FindPreset("table1-row3").dims;
  AttackCost c3 = ComputeAttackCost(row3);
  EXPECT_EQ(c3.batches, 662);
  EXPECT_NEAR(c3.log2_batches, 9.37, 0.01);

  SchemeDims row6 = FindPreset("table1-row6").dims;
  ASSERT_EQ(row6.delta(), 200u);
  EXPECT_NEAR(ComputeAttackCost(row6).log2_batches, 53.36, 0.01);

  SchemeDims row1 = FindPreset("table1-row1").dims;
  ASSERT_EQ(row1.delta(), 50u);
  EXPECT_EQ(ComputeAttackCost(row1).batches, 1);
  EXPECT_DOUBLE_EQ(ComputeAttackCost(row1).log2_batches, 0.0);

  const SchemeDims toy = FindPreset("toy16").dims;
  const AttackCost ct = ComputeAttackCost(toy);
  EXPECT_EQ(ct.batches, 2);
  EXPECT_NEAR(ct.rank_ops, 20.0 * (2.0 + std::log2(12.0) + 1.0), 1e-9);
  EXPECT_NEAR(ct.fq_ops, ct.rank_ops * 48.0 * 48.0 * 48.0, 1e-3);
  EXPECT_NEAR(ct.log2_fq_ops, std::log2(ct.fq_ops), 1e-9);
}

}  // namespace
}  // namespace cbpir
