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

#ifndef CBPIR_FIELD_H_
#define CBPIR_FIELD_H_

#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "cbpir/random.h"

namespace cbpir {

// An element of F_q, q = p^e, stored as the integer sum_i c_i p^i of its
// polynomial-basis coordinates c_0..c_{e-1}. For p = 2 this is the usual
// bit-vector encoding; for e = 1 it is the plain residue.
using FqElem = std::uint64_t;

// An element of F_{q^s}: s polynomial-basis coordinates over F_q, lowest
// degree first.
using FqsElem = std::vector<FqElem>;

// Largest supported log2(q^s).
inline constexpr double kMaxExtensionBits = 4096.0;

bool IsPrime(std::uint64_t n);

// The finite field F_q with q = p^e < 2^63.
//
// The defining modulus is the lexicographically first monic irreducible
// polynomial of degree e over F_p, where polynomials are ordered by the
// integer sum_{i<e} c_i p^i of their non-leading coefficients. Copies share
// immutable lookup tables and are safe to use from several threads.
class FieldSpec {
 public:
  // Throws Error(kInvalidArgument) for non-prime p or e == 0, and
  // Error(kSizeLimit) when q does not fit the element encoding.
  static FieldSpec Create(std::uint64_t p, unsigned e);

  std::uint64_t p() const { return p_; }
  unsigned e() const { return e_; }
  std::uint64_t q() const { return q_; }
  bool characteristic_two() const { return p_ == 2; }
  // Monic modulus over F_p, coefficients low to high (length e + 1). For
  // e == 1 this is x, i.e. plain residues mod p.
  const std::vector<std::uint64_t>& modulus() const;
  // Bits needed to hold one element, ceil(log2 q).
  unsigned bits() const { return bits_; }

  FqElem Add(FqElem a, FqElem b) const {
    if (p_ == 2) return a ^ b;
    if (e_ == 1) {
      FqElem r = a + b;
      return r >= p_ ? r - p_ : r;
    }
    return AddDigits(a, b);
  }
  FqElem Neg(FqElem a) const {
    if (p_ == 2) return a;
    if (e_ == 1) return a == 0 ? 0 : p_ - a;
    return NegDigits(a);
  }
  FqElem Sub(FqElem a, FqElem b) const { return Add(a, Neg(b)); }
  FqElem Mul(FqElem a, FqElem b) const {
    if (a == 0 || b == 0) return 0;
    if (e_ == 1) {
      return static_cast<FqElem>(static_cast<unsigned __int128>(a) * b % p_);
    }
    if (log_ != nullptr) {
      return exp_[static_cast<std::size_t>(log_[a]) + log_[b]];
    }
    return MulPoly(a, b);
  }
  // Throws Error(kDivisionByZero) for a == 0.
  FqElem Inv(FqElem a) const;
  FqElem Div(FqElem a, FqElem b) const { return Mul(a, Inv(b)); }
  FqElem Pow(FqElem a, std::uint64_t exponent) const;

  std::vector<std::uint64_t> Coords(FqElem a) const;
  FqElem FromCoords(std::span<const std::uint64_t> coords) const;
  bool IsValid(FqElem a) const { return a < q_; }

  FqElem Random(Rng& rng) const { return UniformBelow(rng, q_); }
  FqElem RandomNonzero(Rng& rng) const { return 1 + UniformBelow(rng, q_ - 1); }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.p_ == b.p_ && a.e_ == b.e_;
  }

 private:
  struct Tables;

  FieldSpec() = default;
  FqElem AddDigits(FqElem a, FqElem b) const;
  FqElem NegDigits(FqElem a) const;
  FqElem MulPoly(FqElem a, FqElem b) const;

  std::uint64_t p_ = 0;
  unsigned e_ = 0;
  std::uint64_t q_ = 0;
  unsigned bits_ = 0;
  std::shared_ptr<const Tables> tables_;
  // Views into tables_ for the hot multiplication path (q <= 2^16, e > 1).
  const std::uint32_t* log_ = nullptr;
  const FqElem* exp_ = nullptr;
};

// F_{q^s} as F_q[x]/(f) with f the lexicographically first monic irreducible
// of degree s over F_q (same ordering as FieldSpec, digits in base q).
class ExtFieldSpec {
 public:
  static ExtFieldSpec Create(const FieldSpec& base, unsigned s);

  const FieldSpec& base() const { return base_; }
  unsigned degree() const { return s_; }
  // Monic, low to high, length s + 1.
  const std::vector<FqElem>& modulus() const { return *modulus_; }

  FqsElem Zero() const { return FqsElem(s_, 0); }
  FqsElem One() const;
  // The class of x, i.e. a root of the modulus (for s == 1, the root itself).
  FqsElem Generator() const;
  FqsElem Embed(FqElem a) const;
  bool IsZero(std::span<const FqElem> a) const;

  FqsElem Add(std::span<const FqElem> a, std::span<const FqElem> b) const;
  FqsElem Sub(std::span<const FqElem> a, std::span<const FqElem> b) const;
  FqsElem Neg(std::span<const FqElem> a) const;
  FqsElem Scale(FqElem lambda, std::span<const FqElem> a) const;
  FqsElem Mul(std::span<const FqElem> a, std::span<const FqElem> b) const;
  // Throws Error(kDivisionByZero) for a == 0.
  FqsElem Inv(std::span<const FqElem> a) const;
  FqsElem Pow(std::span<const FqElem> a, std::uint64_t exponent) const;

  // out += a * b, all of length s.
  void MulAccumulate(std::span<const FqElem> a, std::span<const FqElem> b,
                     std::span<FqElem> out) const;

  FqsElem Random(Rng& rng) const;

  friend bool operator==(const ExtFieldSpec& a, const ExtFieldSpec& b) {
    return a.base_ == b.base_ && a.s_ == b.s_;
  }

 private:
  ExtFieldSpec(FieldSpec base, unsigned s,
               std::shared_ptr<const std::vector<FqElem>> modulus)
      : base_(std::move(base)), s_(s), modulus_(std::move(modulus)) {}

  FieldSpec base_;
  unsigned s_;
  std::shared_ptr<const std::vector<FqElem>> modulus_;
};

// Builds F_q (q = p^e) and F_{q^s}. Deterministic in (p, e, s).
// Throws Error(kInvalidArgument) for non-prime p or zero sizes and
// Error(kSizeLimit) if log2(q^s) > kMaxExtensionBits or q >= 2^63.
std::pair<FieldSpec, ExtFieldSpec> MakeFields(std::uint64_t p, unsigned e,
                                              unsigned s);

}  // namespace cbpir

#endif  // CBPIR_FIELD_H_
