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

#include "cbpir/rate_analysis.h"

#include <cmath>
#include <cstdio>

#include "cbpir/error.h"
#include "cbpir/presets.h"

namespace cbpir {

namespace {

void RequirePositive(double file_bits) {
  if (!(file_bits > 0)) {
    throw Error(ErrorCode::kInvalidArgument, "file size must be positive");
  }
}

std::string ReuseLabel(double t) {
  if (std::isinf(t)) return "t=inf";
  return "t=" + FormatSig12(t);
}

}  // namespace

Rational RateCbcpirAsymptotic(const SchemeDims& dims) {
  return Rational(BigInt(dims.delta()), BigInt(2 * dims.n * dims.s));
}

Rational RateCbcpirExact(const SchemeDims& dims) {
  const BigInt num = BigInt(dims.f) * dims.L * dims.delta();
  const BigInt den = BigInt(dims.f + 1) *
                     (BigInt(dims.m) * dims.delta() + dims.L) * dims.n * dims.s;
  return Rational(num, den);
}

double RateCbcpirFilesize(double file_bits, std::size_t m,
                          const SchemeDims& dims, bool squared) {
  RequirePositive(file_bits);
  const double delta = static_cast<double>(dims.delta());
  const double two_ns = 2.0 * static_cast<double>(dims.n) * dims.s;
  const double log2_q = dims.log2_q();
  const double md = static_cast<double>(m);
  if (squared) {
    return file_bits /
           (two_ns * std::sqrt(md) * (delta * log2_q + file_bits / delta));
  }
  return file_bits / (two_ns * (md * delta * log2_q + file_bits / delta));
}

double RateXpir(double file_bits, std::size_t m, const XpirConstants& xpir) {
  RequirePositive(file_bits);
  return file_bits /
         (static_cast<double>(m) * xpir.ciphertext_bits +
          file_bits * xpir.ciphertext_bits / xpir.plaintext_bits);
}

double RateSimplePir(double file_bits, std::size_t m,
                     const SimplePirConstants& lwe, double t) {
  RequirePositive(file_bits);
  if (!(t >= 1)) {
    throw Error(ErrorCode::kInvalidArgument, "hint reuse t must be >= 1");
  }
  const double log2_p = std::log2(lwe.plaintext);
  const double root_m = std::sqrt(static_cast<double>(m));
  const double hint = std::isinf(t) ? 0.0 : lwe.dimension * file_bits / t * root_m;
  return file_bits * log2_p /
         ((hint + (file_bits + log2_p) * root_m) * lwe.log2_modulus);
}

std::vector<TableOneRow> TableOne() {
  std::vector<TableOneRow> rows;
  for (int r = 1; r <= 6; ++r) {
    const Preset& preset = FindPreset("table1-row" + std::to_string(r));
    rows.push_back({preset.name, preset.dims,
                    RateCbcpirAsymptotic(preset.dims)});
  }
  return rows;
}

std::vector<TableTwoRow> TableTwo() {
  static const unsigned kSecurity[] = {113, 113, 113, 128, 96, 113};
  static const unsigned kExponent[] = {1, 1, 9, 25, 25, 53};
  std::vector<TableTwoRow> rows;
  for (int r = 1; r <= 6; ++r) {
    const Preset& preset = FindPreset("table1-row" + std::to_string(r));
    rows.push_back({preset.name, preset.dims, kSecurity[r - 1],
                    kExponent[r - 1], ComputeAttackCost(preset.dims)});
  }
  return rows;
}

namespace {

std::string Fraction(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

}  // namespace

void WriteTableOneCsv(std::ostream& out, const std::vector<TableOneRow>& rows) {
  out << "preset,q,s,v,n,k,delta,rate\n";
  for (const TableOneRow& row : rows) {
    const SchemeDims& d = row.dims;
    out << row.preset << ',' << d.q().str() << ',' << d.s << ',' << d.v << ','
        << d.n << ',' << d.k << ',' << d.delta() << ',' << Fraction(row.rate)
        << '\n';
  }
}

void WriteTableTwoCsv(std::ostream& out, const std::vector<TableTwoRow>& rows) {
  out << "preset,q,s,v,n,k,delta,m,security_bits,published_exponent,batches,"
         "log2_batches,rank_ops,log2_fq_ops\n";
  for (const TableTwoRow& row : rows) {
    const SchemeDims& d = row.dims;
    out << row.preset << ',' << d.q().str() << ',' << d.s << ',' << d.v << ','
        << d.n << ',' << d.k << ',' << d.delta() << ',' << d.m << ','
        << row.security_bits << ',' << row.published_exponent << ','
        << row.cost.batches.str() << ',' << FormatSig12(row.cost.log2_batches)
        << ',' << FormatSig12(row.cost.rank_ops) << ','
        << FormatSig12(row.cost.log2_fq_ops) << '\n';
  }
}

std::vector<double> LogGrid(double lo, double hi, std::size_t count) {
  if (!(lo > 0) || !(hi >= lo) || count == 0) {
    throw Error(ErrorCode::kInvalidArgument, "log grid needs 0 < lo <= hi");
  }
  if (count == 1) return {lo};
  std::vector<double> grid(count);
  const double a = std::log10(lo);
  const double b = std::log10(hi);
  for (std::size_t i = 0; i < count; ++i) {
    grid[i] = std::pow(10.0, a + (b - a) * static_cast<double>(i) /
                                     static_cast<double>(count - 1));
  }
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

CurveConfig DefaultCurveConfig(Figure figure, bool caption_modulus) {
  CurveConfig config;
  config.figure = figure;
  if (figure == Figure::kXpir) {
    config.cbcpir = FindPreset("xpir-comparison").dims;
  } else {
    config.cbcpir = FindPreset("simplepir-comparison").dims;
    if (caption_modulus) config.cbcpir.e = 104;
  }
  return config;
}

std::vector<CurvePoint> Curves(const CurveConfig& config) {
  std::vector<CurvePoint> points;
  const std::size_t m = config.cbcpir.m;
  for (double f : config.grid) {
    points.push_back({f, "cbcpir", "plain",
                      RateCbcpirFilesize(f, m, config.cbcpir, false)});
    points.push_back({f, "cbcpir", "squared",
                      RateCbcpirFilesize(f, m, config.cbcpir, true)});
    if (config.figure == Figure::kXpir) {
      points.push_back({f, "xpir", "default", RateXpir(f, m, config.xpir)});
    } else {
      for (double t : config.reuse) {
        points.push_back({f, "simplepir", ReuseLabel(t),
                          RateSimplePir(f, m, config.lwe, t)});
      }
    }
  }
  return points;
}

void WriteCurveCsv(std::ostream& out, const std::vector<CurvePoint>& points) {
  out << "file_size_bits,scheme,variant,rate\n";
  for (const CurvePoint& p : points) {
    out << FormatSig12(p.file_bits) << ',' << p.scheme << ',' << p.variant
        << ',' << FormatSig12(p.rate) << '\n';
  }
}

std::string FormatSig12(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

}  // namespace cbpir
