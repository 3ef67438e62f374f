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

#include "cbpir/gamma_basis.h"

#include "cbpir/error.h"

namespace cbpir {

GammaBasis GammaBasis::FromElements(const ExtFieldSpec& ext,
                                    std::vector<FqsElem> gamma, unsigned v) {
  const unsigned s = ext.degree();
  if (gamma.size() != s) {
    throw Error(ErrorCode::kShapeMismatch, "basis needs exactly s elements");
  }
  if (v < 1 || v >= s) {
    throw Error(ErrorCode::kInvalidArgument, "split v must satisfy 1 <= v < s");
  }
  MatFq from(s, s);
  for (unsigned i = 0; i < s; ++i) {
    for (unsigned r = 0; r < s; ++r) from(r, i) = gamma[i][r];
  }
  MatFq to = InvertFq(ext.base(), from);
  return GammaBasis(ext.base(), std::move(gamma), v, std::move(to),
                    std::move(from));
}

GammaBasis GammaBasis::Sample(const ExtFieldSpec& ext, unsigned v, Rng& rng) {
  while (true) {
    std::vector<FqsElem> gamma;
    gamma.reserve(ext.degree());
    for (unsigned i = 0; i < ext.degree(); ++i) gamma.push_back(ext.Random(rng));
    try {
      return FromElements(ext, std::move(gamma), v);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kSingularMatrix) throw;
    }
  }
}

namespace {

std::vector<FqElem> Apply(const FieldSpec& f, const MatFq& m,
                          std::span<const FqElem> x) {
  std::vector<FqElem> out(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    FqElem acc = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      acc = f.Add(acc, f.Mul(m(r, c), x[c]));
    }
    out[r] = acc;
  }
  return out;
}

}  // namespace

std::vector<FqElem> GammaBasis::ToGamma(std::span<const FqElem> x) const {
  return Apply(base_, to_gamma_, x);
}

FqsElem GammaBasis::FromGamma(std::span<const FqElem> coords) const {
  return Apply(base_, from_gamma_, coords);
}

FqsElem GammaBasis::Project(std::span<const FqElem> x, Subspace part) const {
  std::vector<FqElem> coords = ToGamma(x);
  for (unsigned i = 0; i < degree(); ++i) {
    const bool in_v = i < v_;
    if (in_v != (part == Subspace::kV)) coords[i] = 0;
  }
  return FromGamma(coords);
}

FqsElem GammaBasis::RandomIn(Subspace part, Rng& rng) const {
  std::vector<FqElem> coords(degree(), 0);
  const unsigned begin = part == Subspace::kV ? 0 : v_;
  const unsigned end = part == Subspace::kV ? v_ : degree();
  for (unsigned i = begin; i < end; ++i) coords[i] = base_.Random(rng);
  return FromGamma(coords);
}

}  // namespace cbpir
