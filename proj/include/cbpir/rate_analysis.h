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

#ifndef CBPIR_RATE_ANALYSIS_H_
#define CBPIR_RATE_ANALYSIS_H_

#include <cstddef>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "cbpir/cryptanalysis.h"
#include "cbpir/params.h"

namespace cbpir {

// delta / (2 n s): the rate for L much larger than m delta and f = 1.
Rational RateCbcpirAsymptotic(const SchemeDims& dims);

// f L delta / ((f + 1)(m delta + L) n s), the rate of one f-file session.
Rational RateCbcpirExact(const SchemeDims& dims);

// Rate as a function of the file size F in bits with m files:
// plain   F / (2ns (m delta log2 q + F / delta))
// squared F / (2ns sqrt(m) (delta log2 q + F / delta))
double RateCbcpirFilesize(double file_bits, std::size_t m,
                          const SchemeDims& dims, bool squared);

struct XpirConstants {
  double ciphertext_bits = 128000;  // s_c
  double plaintext_bits = 20000;    // s_p
};

// F / (m s_c + F s_c / s_p).
double RateXpir(double file_bits, std::size_t m, const XpirConstants& xpir);

struct SimplePirConstants {
  double log2_modulus = 32;  // log2 q
  double plaintext = 495;    // p
  double dimension = 1024;   // n
};

inline constexpr double kInfiniteReuse = std::numeric_limits<double>::infinity();

// F log2 p / ((n F / t sqrt(m) + (F + log2 p) sqrt(m)) log2 q). With
// t = kInfiniteReuse the hint term is dropped.
double RateSimplePir(double file_bits, std::size_t m,
                     const SimplePirConstants& lwe, double t);

struct TableOneRow {
  std::string preset;
  SchemeDims dims;
  Rational rate;
};
std::vector<TableOneRow> TableOne();

struct TableTwoRow {
  std::string preset;
  SchemeDims dims;
  unsigned security_bits;
  unsigned published_exponent;
  AttackCost cost;
};
std::vector<TableTwoRow> TableTwo();

// Columns: preset,q,s,v,n,k,delta,rate
void WriteTableOneCsv(std::ostream& out, const std::vector<TableOneRow>& rows);
// Columns: preset,q,s,v,n,k,delta,m,security_bits,published_exponent,
// batches,log2_batches,rank_ops,log2_fq_ops
void WriteTableTwoCsv(std::ostream& out, const std::vector<TableTwoRow>& rows);

// count points log-spaced from lo to hi inclusive.
std::vector<double> LogGrid(double lo, double hi, std::size_t count);

struct CurvePoint {
  double file_bits;
  std::string scheme;
  std::string variant;
  double rate;
};

enum class Figure { kXpir = 4, kSimplePir = 5 };

struct CurveConfig {
  Figure figure = Figure::kXpir;
  SchemeDims cbcpir;  // CB-cPIR parameters, m included
  XpirConstants xpir;
  SimplePirConstants lwe;
  std::vector<double> reuse = {1, 100, kInfiniteReuse};  // SimplePIR t values
  std::vector<double> grid = LogGrid(6400, 1e10, 100);
};

// Default configuration of the XPIR or SimplePIR comparison. For the
// SimplePIR figure, caption_modulus selects q = 2^104 instead of 2^135.
CurveConfig DefaultCurveConfig(Figure figure, bool caption_modulus = false);

// Rows ordered by F, then scheme, then variant.
std::vector<CurvePoint> Curves(const CurveConfig& config);

// Header file_size_bits,scheme,variant,rate; numbers with 12 significant
// digits.
void WriteCurveCsv(std::ostream& out, const std::vector<CurvePoint>& points);

// Formats a value with 12 significant digits.
std::string FormatSig12(double value);

}  // namespace cbpir

#endif  // CBPIR_RATE_ANALYSIS_H_
