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

#include "cbpir/polynomial.h"

#include "cbpir/error.h"

namespace cbpir::poly {

void Trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int Degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly Add(const FieldSpec& f, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = f.Add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  Trim(r);
  return r;
}

Poly Sub(const FieldSpec& f, const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    r[i] = f.Sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  }
  Trim(r);
  return r;
}

Poly Mul(const FieldSpec& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = f.Add(r[i + j], f.Mul(a[i], b[j]));
    }
  }
  Trim(r);
  return r;
}

std::pair<Poly, Poly> DivMod(const FieldSpec& f, const Poly& a, const Poly& b) {
  if (b.empty()) {
    throw Error(ErrorCode::kDivisionByZero, "polynomial division by zero");
  }
  Poly rem = a;
  Trim(rem);
  if (rem.size() < b.size()) return {Poly{}, rem};
  const FqElem lead_inv = f.Inv(b.back());
  Poly quot(rem.size() - b.size() + 1, 0);
  for (std::size_t deg = rem.size(); deg-- >= b.size();) {
    FqElem c = rem[deg];
    if (c == 0) continue;
    c = f.Mul(c, lead_inv);
    const std::size_t shift = deg - (b.size() - 1);
    quot[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) {
      rem[shift + i] = f.Sub(rem[shift + i], f.Mul(c, b[i]));
    }
  }
  Trim(quot);
  Trim(rem);
  return {quot, rem};
}

Poly Mod(const FieldSpec& f, const Poly& a, const Poly& b) {
  return DivMod(f, a, b).second;
}

namespace {

Poly MakeMonic(const FieldSpec& f, Poly a) {
  if (a.empty()) return a;
  const FqElem inv = f.Inv(a.back());
  for (FqElem& c : a) c = f.Mul(c, inv);
  return a;
}

}  // namespace

Poly Gcd(const FieldSpec& f, Poly a, Poly b) {
  Trim(a);
  Trim(b);
  while (!b.empty()) {
    Poly r = Mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return MakeMonic(f, std::move(a));
}

Poly PowMod(const FieldSpec& f, const Poly& base, std::uint64_t exponent,
            const Poly& modulus) {
  Poly result{1};
  result = Mod(f, result, modulus);
  Poly x = Mod(f, base, modulus);
  while (exponent != 0) {
    if (exponent & 1) result = Mod(f, Mul(f, result, x), modulus);
    exponent >>= 1;
    if (exponent != 0) x = Mod(f, Mul(f, x, x), modulus);
  }
  return result;
}

Poly InvMod(const FieldSpec& f, const Poly& a, const Poly& m) {
  // Extended Euclid tracking only the coefficient of a.
  Poly r0 = m, r1 = Mod(f, a, m);
  Poly t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r2] = DivMod(f, r0, r1);
    Poly t2 = Sub(f, t0, Mul(f, q, t1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.size() != 1) {
    throw Error(ErrorCode::kDivisionByZero, "polynomial is not invertible");
  }
  const FqElem scale = f.Inv(r0[0]);
  for (FqElem& c : t0) c = f.Mul(c, scale);
  return Mod(f, t0, m);
}

bool IsIrreducible(const FieldSpec& f, const Poly& a) {
  Poly g = a;
  Trim(g);
  const int d = Degree(g);
  if (d < 1) return false;
  if (d == 1) return true;
  const Poly x{0, 1};
  Poly h = x;
  for (int i = 1; i <= d / 2; ++i) {
    h = PowMod(f, h, f.q(), g);
    Poly common = Gcd(f, g, Sub(f, h, x));
    if (Degree(common) > 0) return false;
  }
  return true;
}

Poly FirstIrreducible(const FieldSpec& f, unsigned degree) {
  if (degree == 0) {
    throw Error(ErrorCode::kInvalidArgument, "degree must be >= 1");
  }
  Poly cand(degree + 1, 0);
  cand[degree] = 1;
  while (true) {
    if ((degree == 1 || cand[0] != 0) && IsIrreducible(f, cand)) return cand;
    std::size_t i = 0;
    while (i < degree) {
      if (++cand[i] < f.q()) break;
      cand[i] = 0;
      ++i;
    }
    if (i == degree) {
      throw Error(ErrorCode::kInconsistent, "no irreducible polynomial found");
    }
  }
}

}  // namespace cbpir::poly
