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

#include "cbpir/params.h"

#include <cmath>
#include <string>

#include "cbpir/error.h"

namespace cbpir {

BigInt SchemeDims::q() const {
  BigInt q = 1;
  for (unsigned i = 0; i < e; ++i) q *= p;
  return q;
}

double SchemeDims::log2_q() const {
  return e * std::log2(static_cast<double>(p));
}

void SchemeDims::Validate() const {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kInvalidArgument, what);
  };
  if (!IsPrime(p)) fail("q_base " + std::to_string(p) + " is not prime");
  if (e < 1) fail("q_exp must be >= 1");
  if (v < 1 || v >= s) {
    fail("need 1 <= v < s, got v=" + std::to_string(v) +
         " s=" + std::to_string(s));
  }
  if (k < 1 || k >= n) {
    fail("need 1 <= k < n, got k=" + std::to_string(k) +
         " n=" + std::to_string(n));
  }
  if (m < 1 || L < 1 || f < 1) fail("m, L and f must be >= 1");
}

SchemeParams SchemeParams::Create(const SchemeDims& dims) {
  dims.Validate();
  auto [base, ext] = MakeFields(dims.p, dims.e, dims.s);
  return SchemeParams(dims, std::move(ext));
}

}  // namespace cbpir
