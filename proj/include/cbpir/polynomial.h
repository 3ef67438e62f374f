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

#ifndef CBPIR_POLYNOMIAL_H_
#define CBPIR_POLYNOMIAL_H_

#include <cstdint>
#include <vector>

#include "cbpir/field.h"

namespace cbpir {

// Dense univariate polynomials over F_q, coefficients low to high. All
// results are trimmed: no trailing zero coefficients, the zero polynomial
// is empty.
using Poly = std::vector<FqElem>;

namespace poly {

void Trim(Poly& a);
int Degree(const Poly& a);  // -1 for zero
Poly Add(const FieldSpec& f, const Poly& a, const Poly& b);
Poly Sub(const FieldSpec& f, const Poly& a, const Poly& b);
Poly Mul(const FieldSpec& f, const Poly& a, const Poly& b);
// Remainder of a modulo b; b must be nonzero.
Poly Mod(const FieldSpec& f, const Poly& a, const Poly& b);
// Quotient and remainder.
std::pair<Poly, Poly> DivMod(const FieldSpec& f, const Poly& a, const Poly& b);
// Monic gcd.
Poly Gcd(const FieldSpec& f, Poly a, Poly b);
Poly PowMod(const FieldSpec& f, const Poly& base, std::uint64_t exponent,
            const Poly& modulus);
// Inverse of a modulo m; throws Error(kDivisionByZero) if gcd(a, m) != 1.
Poly InvMod(const FieldSpec& f, const Poly& a, const Poly& m);

// Ben-Or irreducibility test over F_q.
bool IsIrreducible(const FieldSpec& f, const Poly& a);

// Lexicographically first monic irreducible of the given degree over F_q:
// candidates x^d + sum_{i<d} c_i x^i are scanned in increasing order of
// sum_i c_i q^i.
Poly FirstIrreducible(const FieldSpec& f, unsigned degree);

}  // namespace poly
}  // namespace cbpir

#endif  // CBPIR_POLYNOMIAL_H_
