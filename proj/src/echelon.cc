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

#include "cbpir/echelon.h"

#include <algorithm>
#include <bit>
#include <string>

#include "cbpir/error.h"

namespace cbpir {

EchelonAccumulator::EchelonAccumulator(const FieldSpec& field,
                                       std::size_t width)
    : field_(field), width_(width), bit_sliced_(field.characteristic_two()) {
  if (bit_sliced_) {
    plane_words_ = (width + 63) / 64;
    row_words_ = plane_words_ * field.e();
  } else {
    row_words_ = width;
  }
  scratch_.assign(row_words_, 0);
}

void EchelonAccumulator::Encode(std::span<const FqElem> row,
                                std::span<std::uint64_t> out) const {
  if (!bit_sliced_) {
    std::copy(row.begin(), row.end(), out.begin());
    return;
  }
  std::fill(out.begin(), out.end(), 0);
  for (std::size_t c = 0; c < width_; ++c) {
    FqElem a = row[c];
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    for (unsigned k = 0; a != 0; ++k, a >>= 1) {
      if (a & 1) out[k * plane_words_ + c / 64] |= bit;
    }
  }
}

FqElem EchelonAccumulator::Get(std::span<const std::uint64_t> row,
                               std::size_t col) const {
  if (!bit_sliced_) return row[col];
  FqElem a = 0;
  const std::size_t word = col / 64;
  const unsigned shift = col % 64;
  for (unsigned k = 0; k < field_.e(); ++k) {
    a |= ((row[k * plane_words_ + word] >> shift) & 1) << k;
  }
  return a;
}

void EchelonAccumulator::SubScaled(std::span<std::uint64_t> dst, FqElem c,
                                   std::span<const std::uint64_t> src) const {
  if (c == 0) return;
  if (!bit_sliced_) {
    for (std::size_t i = 0; i < width_; ++i) {
      if (src[i] != 0) dst[i] = field_.Sub(dst[i], field_.Mul(c, src[i]));
    }
    return;
  }
  // Column i of the multiplication-by-c matrix is c * x^i; plane i of src
  // feeds every plane j where that product has bit j set.
  const unsigned e = field_.e();
  for (unsigned i = 0; i < e; ++i) {
    FqElem image = field_.Mul(c, FqElem{1} << i);
    const std::uint64_t* in = src.data() + i * plane_words_;
    while (image != 0) {
      const unsigned j = static_cast<unsigned>(std::countr_zero(image));
      image &= image - 1;
      std::uint64_t* out = dst.data() + j * plane_words_;
      for (std::size_t w = 0; w < plane_words_; ++w) out[w] ^= in[w];
    }
  }
}

void EchelonAccumulator::Scale(std::span<std::uint64_t> row, FqElem c) const {
  if (c == 1) return;
  if (!bit_sliced_) {
    for (FqElem& x : row) x = field_.Mul(c, x);
    return;
  }
  std::vector<std::uint64_t> out(row.size(), 0);
  SubScaled(out, c, row);  // characteristic two: subtraction is addition
  std::copy(out.begin(), out.end(), row.begin());
}

std::size_t EchelonAccumulator::LeadingColumn(
    std::span<const std::uint64_t> row) const {
  if (!bit_sliced_) {
    for (std::size_t c = 0; c < width_; ++c) {
      if (row[c] != 0) return c;
    }
    return width_;
  }
  for (std::size_t w = 0; w < plane_words_; ++w) {
    std::uint64_t any = 0;
    for (unsigned k = 0; k < field_.e(); ++k) any |= row[k * plane_words_ + w];
    if (any != 0) {
      return w * 64 + static_cast<std::size_t>(std::countr_zero(any));
    }
  }
  return width_;
}

bool EchelonAccumulator::AppendRow(std::span<const FqElem> row) {
  if (row.size() != width_) {
    throw Error(ErrorCode::kShapeMismatch,
                "row of width " + std::to_string(row.size()) +
                    " appended to accumulator of width " +
                    std::to_string(width_));
  }
  if (pivots_.size() == width_) return false;
  std::span<std::uint64_t> r(scratch_);
  Encode(row, r);
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    SubScaled(r, Get(r, pivots_[i]), StoredRow(i));
  }
  const std::size_t lead = LeadingColumn(r);
  if (lead == width_) return false;
  Scale(r, field_.Inv(Get(r, lead)));
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    std::span<std::uint64_t> b = StoredRow(i);
    SubScaled(b, Get(b, lead), r);
  }
  storage_.insert(storage_.end(), r.begin(), r.end());
  pivots_.push_back(lead);
  return true;
}

std::size_t EchelonAccumulator::Append(const MatFq& rows) {
  if (rows.cols() != width_) {
    throw Error(ErrorCode::kShapeMismatch,
                "matrix of width " + std::to_string(rows.cols()) +
                    " appended to accumulator of width " +
                    std::to_string(width_));
  }
  std::size_t increase = 0;
  for (std::size_t r = 0; r < rows.rows(); ++r) {
    if (AppendRow(rows.row(r))) ++increase;
  }
  return increase;
}

std::vector<std::size_t> EchelonAccumulator::pivots() const {
  std::vector<std::size_t> sorted = pivots_;
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

MatFq EchelonAccumulator::Basis() const {
  std::vector<std::size_t> order(pivots_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
  MatFq out(order.size(), width_);
  for (std::size_t i = 0; i < order.size(); ++i) {
    std::span<const std::uint64_t> stored = StoredRow(order[i]);
    for (std::size_t c = 0; c < width_; ++c) out(i, c) = Get(stored, c);
  }
  return out;
}

}  // namespace cbpir
