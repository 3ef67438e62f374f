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
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cbpir/error.h"
#include "cbpir/presets.h"
#include "cbpir/rate_analysis.h"

namespace cbpir {
namespace {

TEST(RateTest, AsymptoticTableOne) {
  const std::vector<TableOneRow> rows = TableOne();
  ASSERT_EQ(rows.size(), 6u);
  const int denominators[] = {128, 64, 24, 12, 10, 6};
  for (std::size_t r = 0; r < 6; ++r) {
    EXPECT_EQ(rows[r].rate, Rational(1, denominators[r])) << rows[r].preset;
  }
}

TEST(RateTest, ExactRateExample) {
  SchemeDims dims{2, 5, 32, 31, 100, 50, 100, 1000, 1};
  EXPECT_EQ(RateCbcpirExact(dims), Rational(250000, 192000000));
}

// asymptotic - exact = asymptotic * m delta / (m delta + L) for f = 1, so
// the relative gap at L is exactly m delta / (m delta + L).
TEST(RateTest, ExactRateGapIdentity) {
  for (const char* name : {"table1-row1", "table1-row4", "toy16"}) {
    SchemeDims dims = FindPreset(name).dims;
    for (std::size_t L : {1ul, 1000ul, 1000000000ul, 1000000000000000ul}) {
      dims.L = L;
      const Rational asym = RateCbcpirAsymptotic(dims);
      const Rational md = Rational(BigInt(dims.m) * dims.delta());
      EXPECT_EQ(asym - RateCbcpirExact(dims), asym * md / (md + L)) << name;
    }
    dims.L = 1000000000000000ul;
    const Rational rel = (RateCbcpirAsymptotic(dims) - RateCbcpirExact(dims)) /
                         RateCbcpirAsymptotic(dims);
    EXPECT_LT(rel, Rational(1, 1000000000)) << name;
  }
}

TEST(RateTest, ManyFilesRemoveTheBetaOverhead) {
  SchemeDims dims{2, 5, 32, 31, 100, 50, 100, 1000, 1};
  const Rational single(BigInt(dims.L) * dims.delta(),
                        (BigInt(dims.m) * dims.delta() + dims.L) * dims.n * dims.s);
  for (std::size_t f : {1ul, 3ul, 1000ul}) {
    dims.f = f;
    EXPECT_EQ(RateCbcpirExact(dims) / single, Rational(f, f + 1));
  }
}

TEST(RateTest, FileSizeRates) {
  const SchemeDims dims = FindPreset("xpir-comparison").dims;
  const double delta = 100.0;
  const double two_ns = 1200.0;
  for (double f : {6400.0, 1e6, 1e9}) {
    const double plain = RateCbcpirFilesize(f, 1000, dims, false);
    const double closed =
        delta / (two_ns * (1.0 + 1000.0 * delta * delta * 104.0 / f));
    EXPECT_NEAR(plain / closed, 1.0, 1e-12);
  }
  EXPECT_NEAR(RateCbcpirFilesize(1e30, 1000, dims, false) / (delta / two_ns), 1.0,
              1e-9);
  const double squared_limit = delta / (two_ns * std::sqrt(1000.0));
  EXPECT_NEAR(squared_limit, 2.635e-3, 1e-6);
  EXPECT_NEAR(RateCbcpirFilesize(1e30, 1000, dims, true) / squared_limit, 1.0,
              1e-9);
  EXPECT_GT(RateCbcpirFilesize(6400, 1000, dims, true),
            RateCbcpirFilesize(6400, 1000, dims, false));
  EXPECT_GT(RateCbcpirFilesize(1e10, 1000, dims, false),
            RateCbcpirFilesize(1e10, 1000, dims, true));
  EXPECT_THROW(RateCbcpirFilesize(0, 1000, dims, false), Error);
}

TEST(RateTest, Xpir) {
  const XpirConstants xpir;
  EXPECT_NEAR(RateXpir(1.28e8, 1000, xpir), 1.0 / 7.4, 1e-12);
  EXPECT_NEAR(RateXpir(1.28e8, 1000, xpir), 0.135135, 1e-6);
  EXPECT_NEAR(RateXpir(1e30, 1000, xpir) / 0.15625, 1.0, 1e-9);
  EXPECT_LT(RateXpir(1e-6, 1000, xpir), 1e-12);
}

TEST(RateTest, SimplePir) {
  const SimplePirConstants lwe;
  const double limit = std::log2(495.0) / (std::sqrt(1000.0) * 32.0);
  EXPECT_NEAR(limit, 8.846e-3, 1e-6);
  EXPECT_NEAR(RateSimplePir(1e30, 1000, lwe, kInfiniteReuse) / limit, 1.0, 1e-9);
  for (double f : {1.0, 6400.0, 1e6, 1e10}) {
    const double t1 = RateSimplePir(f, 1000, lwe, 1);
    const double t100 = RateSimplePir(f, 1000, lwe, 100);
    const double tinf = RateSimplePir(f, 1000, lwe, kInfiniteReuse);
    EXPECT_LE(t1, t100);
    EXPECT_LE(t100, tinf);
  }
  EXPECT_LT(RateSimplePir(1e-9, 1000, lwe, 1), 1e-10);
  EXPECT_THROW(RateSimplePir(10, 1000, lwe, 0.5), Error);
}

std::map<std::string, std::vector<CurvePoint>> BySeries(
    const std::vector<CurvePoint>& points) {
  std::map<std::string, std::vector<CurvePoint>> series;
  for (const CurvePoint& p : points) series[p.scheme + "/" + p.variant].push_back(p);
  return series;
}

TEST(CurveTest, GridAndMonotonicity) {
  const std::vector<double> grid = LogGrid(6400, 1e10, 100);
  ASSERT_EQ(grid.size(), 100u);
  EXPECT_EQ(grid.front(), 6400.0);
  EXPECT_EQ(grid.back(), 1e10);
  EXPECT_NEAR(grid[1] / grid[0], grid[99] / grid[98], 1e-9);
  for (Figure fig : {Figure::kXpir, Figure::kSimplePir}) {
    const auto series = BySeries(Curves(DefaultCurveConfig(fig)));
    EXPECT_EQ(series.size(), fig == Figure::kXpir ? 3u : 5u);
    for (const auto& [name, points] : series) {
      ASSERT_EQ(points.size(), 100u);
      for (std::size_t i = 1; i < points.size(); ++i) {
        EXPECT_GT(points[i].rate, points[i - 1].rate) << name;
      }
    }
  }
}

TEST(CurveTest, ComparisonClaims) {
  const auto fig4 = BySeries(Curves(DefaultCurveConfig(Figure::kXpir)));
  for (std::size_t i = 0; i < 100; ++i) {
    EXPECT_GT(fig4.at("xpir/default")[i].rate, fig4.at("cbcpir/plain")[i].rate);
    EXPECT_GT(fig4.at("xpir/default")[i].rate, fig4.at("cbcpir/squared")[i].rate);
  }
  const auto fig5 = BySeries(Curves(DefaultCurveConfig(Figure::kSimplePir)));
  for (std::size_t i = 0; i < 100; ++i) {
    const CurvePoint& plain = fig5.at("cbcpir/plain")[i];
    if (plain.file_bits >= 1e9) {
      EXPECT_GT(plain.rate, fig5.at("simplepir/t=1")[i].rate);
    }
  }
}

TEST(CurveTest, CaptionModulusVariant) {
  EXPECT_EQ(DefaultCurveConfig(Figure::kSimplePir).cbcpir.e, 135u);
  EXPECT_EQ(DefaultCurveConfig(Figure::kSimplePir, true).cbcpir.e, 104u);
  EXPECT_EQ(DefaultCurveConfig(Figure::kXpir).cbcpir.m, 1000u);
}

TEST(CurveTest, CsvFormat) {
  CurveConfig config = DefaultCurveConfig(Figure::kSimplePir);
  config.grid = {6400};
  config.reuse = {1, kInfiniteReuse};
  std::ostringstream out;
  WriteCurveCsv(out, Curves(config));
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "file_size_bits,scheme,variant,rate");
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(lines[0].rfind("6400,cbcpir,plain,", 0), 0u);
  EXPECT_EQ(lines[2].rfind("6400,simplepir,t=1,", 0), 0u);
  EXPECT_EQ(lines[3].rfind("6400,simplepir,t=inf,", 0), 0u);
  EXPECT_EQ(FormatSig12(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(FormatSig12(1e10), "10000000000");
}

TEST(TableTest, TableTwoColumns) {
  const std::vector<TableTwoRow> rows = TableTwo();
  ASSERT_EQ(rows.size(), 6u);
  const unsigned security[] = {113, 113, 113, 128, 96, 113};
  const unsigned published[] = {1, 1, 9, 25, 25, 53};
  const std::size_t deltas[] = {50, 100, 100, 120, 100, 200};
  for (std::size_t r = 0; r < 6; ++r) {
    EXPECT_EQ(rows[r].security_bits, security[r]);
    EXPECT_EQ(rows[r].dims.delta(), deltas[r]);
    EXPECT_LE(std::abs(rows[r].cost.log2_batches - published[r]), 1.0)
        << rows[r].preset;
    EXPECT_EQ(rows[r].dims.m, rows[r].dims.s * rows[r].dims.n - deltas[r] + 1);
  }
  std::ostringstream out;
  WriteTableTwoCsv(out, rows);
  EXPECT_NE(out.str().find("table1-row3,65536,12,10,100,50,100,1101,113,9,662,"),
            std::string::npos);
}

TEST(TableTest, TableOneCsv) {
  std::ostringstream out;
  WriteTableOneCsv(out, TableOne());
  EXPECT_EQ(out.str(),
            "preset,q,s,v,n,k,delta,rate\n"
            "table1-row1,32,32,31,100,50,50,1/128\n"
            "table1-row2,32,32,30,100,50,100,1/64\n"
            "table1-row3,65536,12,10,100,50,100,1/24\n"
            "table1-row4,4294967291,6,4,120,60,120,1/12\n"
            "table1-row5,4294967296,5,3,100,50,100,1/10\n"
            "table1-row6,2305843009213693951,6,2,100,50,200,1/6\n");
}

}  // namespace
}  // namespace cbpir
