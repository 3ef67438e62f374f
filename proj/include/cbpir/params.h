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

#ifndef CBPIR_PARAMS_H_
#define CBPIR_PARAMS_H_

#include <cstddef>
#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

#include "cbpir/field.h"

namespace cbpir {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Numeric scheme parameters. Valid for any q = p^e, including field sizes
// that are only ever used in cost and rate formulas.
struct SchemeDims {
  std::uint64_t p = 2;  // characteristic of F_q
  unsigned e = 1;       // q = p^e
  unsigned s = 1;       // extension degree
  std::size_t v = 0;    // dim V; the payload space W has dimension s - v
  std::size_t n = 0;    // code length
  std::size_t k = 0;    // code dimension
  std::size_t m = 1;    // files in the database
  std::size_t L = 1;    // rows per file
  std::size_t f = 1;    // files requested under one beta

  // (s - v)(n - k), the F_q width of one file.
  std::size_t delta() const { return (s - v) * (n - k); }
  BigInt q() const;
  double log2_q() const;
  // Throws Error(kInvalidArgument) unless p is prime, 1 <= v < s, 1 <= k < n
  // and m, L, f >= 1.
  void Validate() const;
};

// SchemeDims together with instantiated fields F_q and F_{q^s}.
class SchemeParams {
 public:
  static SchemeParams Create(const SchemeDims& dims);

  const SchemeDims& dims() const { return dims_; }
  const FieldSpec& base() const { return ext_.base(); }
  const ExtFieldSpec& ext() const { return ext_; }

  unsigned s() const { return dims_.s; }
  std::size_t v() const { return dims_.v; }
  std::size_t n() const { return dims_.n; }
  std::size_t k() const { return dims_.k; }
  std::size_t m() const { return dims_.m; }
  std::size_t L() const { return dims_.L; }
  std::size_t f() const { return dims_.f; }
  std::size_t delta() const { return dims_.delta(); }

 private:
  SchemeParams(SchemeDims dims, ExtFieldSpec ext)
      : dims_(dims), ext_(std::move(ext)) {}

  SchemeDims dims_;
  ExtFieldSpec ext_;
};

}  // namespace cbpir

#endif  // CBPIR_PARAMS_H_
