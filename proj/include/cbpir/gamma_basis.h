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

#ifndef CBPIR_GAMMA_BASIS_H_
#define CBPIR_GAMMA_BASIS_H_

#include <span>
#include <vector>

#include "cbpir/field.h"
#include "cbpir/matrix.h"
#include "cbpir/random.h"

namespace cbpir {

enum class Subspace { kV, kW };

// A basis gamma_1..gamma_s of F_{q^s} over F_q, split after the first v
// vectors into V = <gamma_1..gamma_v> and W = <gamma_{v+1}..gamma_s>.
//
// from_gamma() has the polynomial coordinates of gamma_i as its column i, so
// poly = from_gamma * coords and coords = to_gamma * poly.
class GammaBasis {
 public:
  // Uniform basis: resamples until the coordinate matrix is invertible.
  // Requires 1 <= v < s.
  static GammaBasis Sample(const ExtFieldSpec& ext, unsigned v, Rng& rng);
  // Throws Error(kSingularMatrix) if the elements are linearly dependent.
  static GammaBasis FromElements(const ExtFieldSpec& ext,
                                 std::vector<FqsElem> gamma, unsigned v);

  const std::vector<FqsElem>& gamma() const { return gamma_; }
  unsigned v() const { return v_; }
  unsigned degree() const { return static_cast<unsigned>(gamma_.size()); }
  const MatFq& to_gamma() const { return to_gamma_; }
  const MatFq& from_gamma() const { return from_gamma_; }

  std::vector<FqElem> ToGamma(std::span<const FqElem> x) const;
  FqsElem FromGamma(std::span<const FqElem> coords) const;

  // Psi_V / Psi_W: keeps the Gamma-coordinates of one part, zeroes the rest.
  FqsElem Project(std::span<const FqElem> x, Subspace part) const;

  // Uniform element of V or W.
  FqsElem RandomIn(Subspace part, Rng& rng) const;

 private:
  GammaBasis(const FieldSpec& base, std::vector<FqsElem> gamma, unsigned v,
             MatFq to_gamma, MatFq from_gamma)
      : base_(base), gamma_(std::move(gamma)), v_(v),
        to_gamma_(std::move(to_gamma)), from_gamma_(std::move(from_gamma)) {}

  FieldSpec base_;
  std::vector<FqsElem> gamma_;
  unsigned v_;
  MatFq to_gamma_;
  MatFq from_gamma_;
};

}  // namespace cbpir

#endif  // CBPIR_GAMMA_BASIS_H_
