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

#include "cbpir/field.h"

#include <bit>
#include <cmath>
#include <string>

#include "cbpir/error.h"
#include "cbpir/polynomial.h"

namespace cbpir {

namespace {

using u128 = unsigned __int128;

std::uint64_t MulMod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t PowMod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e != 0) {
    if (e & 1) r = MulMod(r, a, m);
    a = MulMod(a, a, m);
    e >>= 1;
  }
  return r;
}

constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 63;
constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 16;

}  // namespace

bool IsPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = PowMod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = MulMod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

struct FieldSpec::Tables {
  std::vector<std::uint64_t> modulus;
  std::vector<std::uint32_t> log;
  std::vector<FqElem> exp;  // length 2(q - 1), so exp[log a + log b] is valid
};

FieldSpec FieldSpec::Create(std::uint64_t p, unsigned e) {
  if (!IsPrime(p)) {
    throw Error(ErrorCode::kInvalidArgument,
                "field characteristic " + std::to_string(p) + " is not prime");
  }
  if (e == 0) {
    throw Error(ErrorCode::kInvalidArgument, "field exponent must be >= 1");
  }
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (q > (kMaxOrder - 1) / p) {
      throw Error(ErrorCode::kSizeLimit,
                  "field order " + std::to_string(p) + "^" + std::to_string(e) +
                      " exceeds 2^63");
    }
    q *= p;
  }

  FieldSpec f;
  f.p_ = p;
  f.e_ = e;
  f.q_ = q;
  f.bits_ = static_cast<unsigned>(std::bit_width(q - 1));
  auto tables = std::make_shared<Tables>();
  if (e == 1) {
    tables->modulus = {0, 1};
    f.tables_ = std::move(tables);
    return f;
  }

  FieldSpec prime = Create(p, 1);
  tables->modulus = poly::FirstIrreducible(prime, e);
  f.tables_ = tables;

  if (q <= kTableLimit) {
    // Find a primitive element by walking powers until the cycle closes.
    std::vector<FqElem> powers;
    powers.reserve(q - 1);
    for (FqElem g = 2; g < q; ++g) {
      powers.assign(1, 1);
      FqElem x = g;
      while (x != 1 && powers.size() < q) {
        powers.push_back(x);
        x = f.MulPoly(x, g);
      }
      if (powers.size() == q - 1) break;
    }
    if (powers.size() != q - 1) {
      throw Error(ErrorCode::kInconsistent, "no primitive element found");
    }
    tables->log.assign(q, 0);
    tables->exp.resize(2 * (q - 1));
    for (std::uint64_t i = 0; i < q - 1; ++i) {
      tables->exp[i] = powers[i];
      tables->exp[i + q - 1] = powers[i];
      tables->log[powers[i]] = static_cast<std::uint32_t>(i);
    }
    f.log_ = tables->log.data();
    f.exp_ = tables->exp.data();
  }
  return f;
}

const std::vector<std::uint64_t>& FieldSpec::modulus() const {
  return tables_->modulus;
}

FqElem FieldSpec::AddDigits(FqElem a, FqElem b) const {
  FqElem r = 0;
  FqElem scale = 1;
  for (unsigned i = 0; i < e_; ++i) {
    std::uint64_t d = a % p_ + b % p_;
    if (d >= p_) d -= p_;
    r += d * scale;
    scale *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

FqElem FieldSpec::NegDigits(FqElem a) const {
  FqElem r = 0;
  FqElem scale = 1;
  for (unsigned i = 0; i < e_; ++i) {
    std::uint64_t d = a % p_;
    if (d != 0) r += (p_ - d) * scale;
    scale *= p_;
    a /= p_;
  }
  return r;
}

FqElem FieldSpec::MulPoly(FqElem a, FqElem b) const {
  const std::vector<std::uint64_t>& mod = tables_->modulus;
  if (p_ == 2) {
    u128 prod = 0;
    for (unsigned i = 0; i < e_; ++i) {
      if ((b >> i) & 1) prod ^= static_cast<u128>(a) << i;
    }
    u128 reduce = 0;
    for (unsigned i = 0; i <= e_; ++i) {
      if (mod[i] != 0) reduce |= static_cast<u128>(1) << i;
    }
    for (int bit = 2 * static_cast<int>(e_) - 2; bit >= static_cast<int>(e_);
         --bit) {
      if ((prod >> bit) & 1) prod ^= reduce << (bit - e_);
    }
    return static_cast<FqElem>(prod);
  }
  std::vector<std::uint64_t> da = Coords(a);
  std::vector<std::uint64_t> db = Coords(b);
  std::vector<std::uint64_t> prod(2 * e_ - 1, 0);
  for (unsigned i = 0; i < e_; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < e_; ++j) {
      prod[i + j] = (prod[i + j] + MulMod(da[i], db[j], p_)) % p_;
    }
  }
  for (int deg = 2 * static_cast<int>(e_) - 2; deg >= static_cast<int>(e_);
       --deg) {
    std::uint64_t c = prod[deg];
    if (c == 0) continue;
    for (unsigned i = 0; i <= e_; ++i) {
      std::uint64_t t = MulMod(c, mod[i], p_);
      std::uint64_t& slot = prod[deg - e_ + i];
      slot = (slot + p_ - t) % p_;
    }
  }
  prod.resize(e_);
  return FromCoords(prod);
}

FqElem FieldSpec::Inv(FqElem a) const {
  if (a == 0) throw Error(ErrorCode::kDivisionByZero, "inverse of zero in F_q");
  if (log_ != nullptr) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  return Pow(a, q_ - 2);
}

FqElem FieldSpec::Pow(FqElem a, std::uint64_t exponent) const {
  FqElem r = 1;
  while (exponent != 0) {
    if (exponent & 1) r = Mul(r, a);
    a = Mul(a, a);
    exponent >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> FieldSpec::Coords(FqElem a) const {
  std::vector<std::uint64_t> c(e_);
  for (unsigned i = 0; i < e_; ++i) {
    c[i] = a % p_;
    a /= p_;
  }
  return c;
}

FqElem FieldSpec::FromCoords(std::span<const std::uint64_t> coords) const {
  FqElem r = 0;
  for (std::size_t i = coords.size(); i-- > 0;) r = r * p_ + coords[i];
  return r;
}

// ---------------------------------------------------------------------------

ExtFieldSpec ExtFieldSpec::Create(const FieldSpec& base, unsigned s) {
  if (s == 0) {
    throw Error(ErrorCode::kInvalidArgument, "extension degree must be >= 1");
  }
  Poly mod = s == 1 ? Poly{0, 1} : poly::FirstIrreducible(base, s);
  return ExtFieldSpec(base, s,
                      std::make_shared<const std::vector<FqElem>>(mod));
}

FqsElem ExtFieldSpec::One() const {
  FqsElem r(s_, 0);
  r[0] = 1;
  return r;
}

FqsElem ExtFieldSpec::Generator() const {
  FqsElem r(s_, 0);
  if (s_ == 1) {
    r[0] = base_.Neg(modulus()[0]);
  } else {
    r[1] = 1;
  }
  return r;
}

FqsElem ExtFieldSpec::Embed(FqElem a) const {
  FqsElem r(s_, 0);
  r[0] = a;
  return r;
}

bool ExtFieldSpec::IsZero(std::span<const FqElem> a) const {
  for (FqElem c : a) {
    if (c != 0) return false;
  }
  return true;
}

FqsElem ExtFieldSpec::Add(std::span<const FqElem> a,
                          std::span<const FqElem> b) const {
  FqsElem r(s_);
  for (unsigned i = 0; i < s_; ++i) r[i] = base_.Add(a[i], b[i]);
  return r;
}

FqsElem ExtFieldSpec::Sub(std::span<const FqElem> a,
                          std::span<const FqElem> b) const {
  FqsElem r(s_);
  for (unsigned i = 0; i < s_; ++i) r[i] = base_.Sub(a[i], b[i]);
  return r;
}

FqsElem ExtFieldSpec::Neg(std::span<const FqElem> a) const {
  FqsElem r(s_);
  for (unsigned i = 0; i < s_; ++i) r[i] = base_.Neg(a[i]);
  return r;
}

FqsElem ExtFieldSpec::Scale(FqElem lambda, std::span<const FqElem> a) const {
  FqsElem r(s_);
  for (unsigned i = 0; i < s_; ++i) r[i] = base_.Mul(lambda, a[i]);
  return r;
}

void ExtFieldSpec::MulAccumulate(std::span<const FqElem> a,
                                 std::span<const FqElem> b,
                                 std::span<FqElem> out) const {
  const std::vector<FqElem>& mod = modulus();
  std::vector<FqElem> prod(2 * s_ - 1, 0);
  for (unsigned i = 0; i < s_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < s_; ++j) {
      if (b[j] == 0) continue;
      prod[i + j] = base_.Add(prod[i + j], base_.Mul(a[i], b[j]));
    }
  }
  for (int deg = 2 * static_cast<int>(s_) - 2; deg >= static_cast<int>(s_);
       --deg) {
    FqElem c = prod[deg];
    if (c == 0) continue;
    for (unsigned i = 0; i <= s_; ++i) {
      FqElem& slot = prod[deg - s_ + i];
      slot = base_.Sub(slot, base_.Mul(c, mod[i]));
    }
  }
  for (unsigned i = 0; i < s_; ++i) out[i] = base_.Add(out[i], prod[i]);
}

FqsElem ExtFieldSpec::Mul(std::span<const FqElem> a,
                          std::span<const FqElem> b) const {
  FqsElem r(s_, 0);
  MulAccumulate(a, b, r);
  return r;
}

FqsElem ExtFieldSpec::Inv(std::span<const FqElem> a) const {
  if (IsZero(a)) {
    throw Error(ErrorCode::kDivisionByZero, "inverse of zero in F_{q^s}");
  }
  Poly pa(a.begin(), a.end());
  poly::Trim(pa);
  Poly inv = poly::InvMod(base_, pa, modulus());
  FqsElem r(s_, 0);
  for (std::size_t i = 0; i < inv.size(); ++i) r[i] = inv[i];
  return r;
}

FqsElem ExtFieldSpec::Pow(std::span<const FqElem> a,
                          std::uint64_t exponent) const {
  FqsElem r = One();
  FqsElem x(a.begin(), a.end());
  while (exponent != 0) {
    if (exponent & 1) r = Mul(r, x);
    x = Mul(x, x);
    exponent >>= 1;
  }
  return r;
}

FqsElem ExtFieldSpec::Random(Rng& rng) const {
  FqsElem r(s_);
  for (unsigned i = 0; i < s_; ++i) r[i] = base_.Random(rng);
  return r;
}

std::pair<FieldSpec, ExtFieldSpec> MakeFields(std::uint64_t p, unsigned e,
                                              unsigned s) {
  if (s == 0) {
    throw Error(ErrorCode::kInvalidArgument, "extension degree must be >= 1");
  }
  if (p >= 2 && static_cast<double>(e) * s * std::log2(static_cast<double>(p)) >
                    kMaxExtensionBits) {
    throw Error(ErrorCode::kSizeLimit,
                "log2(q^s) exceeds " + std::to_string(int(kMaxExtensionBits)));
  }
  FieldSpec base = FieldSpec::Create(p, e);
  ExtFieldSpec ext = ExtFieldSpec::Create(base, s);
  return {base, ext};
}

}  // namespace cbpir
