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

#ifndef CBPIR_ECHELON_H_
#define CBPIR_ECHELON_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cbpir/field.h"
#include "cbpir/matrix.h"

namespace cbpir {

// Incremental reduced row echelon form over F_q.
//
// Rows are appended one at a time; each appended row is reduced against the
// current basis and, if independent, normalized to a leading 1 and used to
// clear its pivot column from every other basis row. The rank never
// decreases. Copying (Fork) duplicates the reduced basis, so a fork can be
// extended without touching the original; this is how candidate rows are
// tested against a shared base space.
//
// In characteristic two each row is stored bit-sliced: e bit planes of
// ceil(width/64) words, one plane per coordinate of F_{2^e} over F_2. Row
// addition is a word-wide XOR per plane and scaling by a constant is an
// F_2-linear map on the planes. Other characteristics use one word per
// element with ordinary field arithmetic.
//
// Not thread-safe for concurrent writers; fork per thread instead.
class EchelonAccumulator {
 public:
  EchelonAccumulator(const FieldSpec& field, std::size_t width);

  std::size_t width() const { return width_; }
  std::size_t rank() const { return pivots_.size(); }
  bool bit_sliced() const { return bit_sliced_; }

  // Returns true iff the row increased the rank. row.size() must be width().
  bool AppendRow(std::span<const FqElem> row);
  // Returns the rank increase. Throws Error(kShapeMismatch) on width mismatch.
  std::size_t Append(const MatFq& rows);

  EchelonAccumulator Fork() const { return *this; }

  // Pivot columns in increasing order.
  std::vector<std::size_t> pivots() const;
  // Basis rows ordered by pivot column.
  MatFq Basis() const;

 private:
  std::span<std::uint64_t> StoredRow(std::size_t i) {
    return {storage_.data() + i * row_words_, row_words_};
  }
  std::span<const std::uint64_t> StoredRow(std::size_t i) const {
    return {storage_.data() + i * row_words_, row_words_};
  }

  void Encode(std::span<const FqElem> row, std::span<std::uint64_t> out) const;
  FqElem Get(std::span<const std::uint64_t> row, std::size_t col) const;
  // dst -= c * src
  void SubScaled(std::span<std::uint64_t> dst, FqElem c,
                 std::span<const std::uint64_t> src) const;
  void Scale(std::span<std::uint64_t> row, FqElem c) const;
  // Index of the first nonzero column, or width() if the row is zero.
  std::size_t LeadingColumn(std::span<const std::uint64_t> row) const;

  FieldSpec field_;
  std::size_t width_;
  bool bit_sliced_;
  std::size_t plane_words_ = 0;
  std::size_t row_words_;
  std::vector<std::size_t> pivots_;  // in insertion order, parallel to rows
  std::vector<std::uint64_t> storage_;
  std::vector<std::uint64_t> scratch_;
};

}  // namespace cbpir

#endif  // CBPIR_ECHELON_H_
