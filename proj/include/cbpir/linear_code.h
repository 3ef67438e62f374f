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

#ifndef CBPIR_LINEAR_CODE_H_
#define CBPIR_LINEAR_CODE_H_

#include <cstddef>
#include <span>
#include <vector>

#include "cbpir/field.h"
#include "cbpir/matrix.h"
#include "cbpir/random.h"

namespace cbpir {

// An [n, k] linear code over F_{q^s} given by a full-rank generator matrix,
// together with one information set and the inverse of the generator
// restricted to it.
class LinearCode {
 public:
  // Uniform full-rank generator and a uniform information set (both drawn
  // with rejection). Requires 1 <= k < n.
  static LinearCode Sample(const ExtFieldSpec& ext, std::size_t n,
                           std::size_t k, Rng& rng);
  // Throws Error(kSingularMatrix) if the columns at info_set are dependent.
  static LinearCode FromGenerator(const ExtFieldSpec& ext, MatFqs generator,
                                  std::vector<std::size_t> info_set);

  std::size_t length() const { return generator_.cols(); }
  std::size_t dimension() const { return generator_.rows(); }
  const MatFqs& generator() const { return generator_; }
  // Sorted, 0-based.
  const std::vector<std::size_t>& info_set() const { return info_set_; }
  // Positions outside the information set, sorted.
  const std::vector<std::size_t>& redundancy_set() const {
    return redundancy_set_;
  }
  const MatFqs& info_inverse() const { return info_inverse_; }

  // msg * G for a 1 x k message. Throws Error(kShapeMismatch).
  MatFqs Encode(const MatFqs& msg) const;
  // Encodes every row of a r x k matrix.
  MatFqs EncodeRows(const MatFqs& msgs) const;
  // The unique codeword whose restriction to the information set equals
  // vals (1 x k, or r x k for several rows at once).
  MatFqs CodewordFromInfo(const MatFqs& vals) const;

 private:
  LinearCode(ExtFieldSpec ext, MatFqs generator,
             std::vector<std::size_t> info_set,
             std::vector<std::size_t> redundancy_set, MatFqs info_inverse)
      : ext_(std::move(ext)), generator_(std::move(generator)),
        info_set_(std::move(info_set)),
        redundancy_set_(std::move(redundancy_set)),
        info_inverse_(std::move(info_inverse)) {}

  ExtFieldSpec ext_;
  MatFqs generator_;
  std::vector<std::size_t> info_set_;
  std::vector<std::size_t> redundancy_set_;
  MatFqs info_inverse_;
};

}  // namespace cbpir

#endif  // CBPIR_LINEAR_CODE_H_
