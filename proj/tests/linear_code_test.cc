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

#include <vector>

#include <gtest/gtest.h>

#include "cbpir/error.h"
#include "cbpir/field.h"
#include "cbpir/linear_code.h"
#include "cbpir/matrix.h"
#include "cbpir/random.h"

namespace cbpir {
namespace {

MatFqs RandomFqs(const ExtFieldSpec& ext, std::size_t r, std::size_t c,
                 Rng& rng) {
  MatFqs m(r, c, ext.degree());
  for (FqElem& x : m.data()) x = ext.base().Random(rng);
  return m;
}

// Rows x^i * g for every generator row g and 0 <= i < s: an F_q spanning set
// of the code.
MatFqs FqSpan(const ExtFieldSpec& ext, const MatFqs& g) {
  const unsigned s = ext.degree();
  MatFqs out(g.rows() * s, g.cols(), s);
  for (std::size_t r = 0; r < g.rows(); ++r) {
    FqsElem power = ext.One();
    for (unsigned i = 0; i < s; ++i) {
      for (std::size_t c = 0; c < g.cols(); ++c) {
        out.set(r * s + i, c, ext.Mul(power, g.at(r, c)));
      }
      power = ext.Mul(power, ext.Generator());
    }
  }
  return out;
}

TEST(LinearCodeTest, SampledCodesHaveFullRank) {
  auto [f, ext] = MakeFields(2, 4, 4);
  Rng rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    const LinearCode code = LinearCode::Sample(ext, 10, 5, rng);
    EXPECT_EQ(code.length(), 10u);
    EXPECT_EQ(code.dimension(), 5u);
    EXPECT_EQ(RankFqs(ext, code.generator()), 5u);
    EXPECT_EQ(RankFq(f, ExpandFq(FqSpan(ext, code.generator()))), 5u * 4u);
    EXPECT_EQ(code.info_set().size(), 5u);
    EXPECT_EQ(code.redundancy_set().size(), 5u);
    EXPECT_TRUE(std::is_sorted(code.info_set().begin(), code.info_set().end()));
    const MatFqs gi = SelectColumns(code.generator(), code.info_set());
    const MatFqs prod = MultiplyFqs(ext, code.info_inverse(), gi);
    for (std::size_t r = 0; r < 5; ++r) {
      for (std::size_t c = 0; c < 5; ++c) {
        EXPECT_EQ(FqsElem(prod.at(r, c).begin(), prod.at(r, c).end()),
                  r == c ? ext.One() : ext.Zero());
      }
    }
  }
}

TEST(LinearCodeTest, BoundaryLengthTwo) {
  auto [f, ext] = MakeFields(2, 4, 2);
  Rng rng(52);
  const LinearCode code = LinearCode::Sample(ext, 2, 1, rng);
  EXPECT_EQ(code.dimension(), 1u);
  EXPECT_EQ(code.redundancy_set().size(), 1u);
}

TEST(LinearCodeTest, SystematicCodeAcceptsLeadingInfoSet) {
  auto [f, ext] = MakeFields(3, 1, 2);
  Rng rng(53);
  MatFqs g(3, 6, 2);
  for (std::size_t r = 0; r < 3; ++r) {
    g.set(r, r, ext.One());
    for (std::size_t c = 3; c < 6; ++c) g.set(r, c, ext.Random(rng));
  }
  const LinearCode code = LinearCode::FromGenerator(ext, g, {0, 1, 2});
  const MatFqs vals = RandomFqs(ext, 1, 3, rng);
  const MatFqs word = code.CodewordFromInfo(vals);
  EXPECT_EQ(SelectColumns(word, std::vector<std::size_t>{0, 1, 2}), vals);
  EXPECT_EQ(word, code.Encode(vals));
}

TEST(LinearCodeTest, RejectsDependentInfoSet) {
  auto [f, ext] = MakeFields(2, 2, 2);
  MatFqs g(2, 4, 2);
  g.set(0, 0, ext.One());
  g.set(0, 1, ext.One());
  g.set(1, 2, ext.One());
  g.set(1, 3, ext.One());
  try {
    LinearCode::FromGenerator(ext, g, {0, 1});
    FAIL() << "dependent information set accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSingularMatrix);
  }
}

TEST(LinearCodeTest, EncodeBasics) {
  auto [f, ext] = MakeFields(2, 4, 4);
  Rng rng(54);
  const LinearCode code = LinearCode::Sample(ext, 8, 4, rng);
  EXPECT_EQ(code.Encode(MatFqs(1, 4, 4)), MatFqs(1, 8, 4));
  for (std::size_t t = 0; t < 4; ++t) {
    MatFqs unit(1, 4, 4);
    unit.set(0, t, ext.One());
    EXPECT_EQ(code.Encode(unit), SelectRows(code.generator(), t, t + 1));
  }
  EXPECT_EQ(code.CodewordFromInfo(MatFqs(1, 4, 4)), MatFqs(1, 8, 4));
  EXPECT_THROW(code.Encode(MatFqs(1, 3, 4)), Error);
}

TEST(LinearCodeTest, InterpolationRoundTripAndLinearity) {
  auto [f, ext] = MakeFields(2, 4, 4);
  Rng rng(55);
  const LinearCode code = LinearCode::Sample(ext, 12, 6, rng);
  for (int trial = 0; trial < 1000; ++trial) {
    const MatFqs msg = RandomFqs(ext, 1, 6, rng);
    const MatFqs word = code.Encode(msg);
    const MatFqs info = SelectColumns(word, code.info_set());
    EXPECT_EQ(info, MultiplyFqs(ext, msg, SelectColumns(code.generator(),
                                                        code.info_set())));
    ASSERT_EQ(code.CodewordFromInfo(info), word);
  }
  const MatFqs a = RandomFqs(ext, 1, 6, rng);
  const MatFqs b = RandomFqs(ext, 1, 6, rng);
  MatFqs lambda(1, 1, 4);
  lambda.set(0, 0, ext.Random(rng));
  const MatFqs combo = AddFqs(f, MultiplyFqs(ext, lambda, a), b);
  EXPECT_EQ(code.Encode(combo),
            AddFqs(f, MultiplyFqs(ext, lambda, code.Encode(a)), code.Encode(b)));
  const MatFqs msgs = RandomFqs(ext, 5, 6, rng);
  const MatFqs words = code.EncodeRows(msgs);
  EXPECT_EQ(code.CodewordFromInfo(SelectColumns(words, code.info_set())), words);
}

}  // namespace
}  // namespace cbpir
