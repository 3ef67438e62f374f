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

#ifndef CBPIR_MATRIX_H_
#define CBPIR_MATRIX_H_

#include <cstddef>
#include <span>
#include <vector>

#include "cbpir/field.h"

namespace cbpir {

// Dense row-major matrix over F_q. Entries are interpreted under a FieldSpec
// supplied by the caller.
class MatFq {
 public:
  MatFq() = default;
  MatFq(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static MatFq Identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  FqElem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  FqElem operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  std::span<FqElem> row(std::size_t r) {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<const FqElem> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  const std::vector<FqElem>& data() const { return data_; }
  std::vector<FqElem>& data() { return data_; }

  friend bool operator==(const MatFq&, const MatFq&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FqElem> data_;
};

// Dense row-major matrix over F_{q^s}. Each entry is s consecutive F_q
// coordinates, so row r is exactly its own F_q expansion of length cols*s.
class MatFqs {
 public:
  MatFqs() = default;
  MatFqs(std::size_t rows, std::size_t cols, unsigned degree)
      : rows_(rows), cols_(cols), degree_(degree),
        data_(rows * cols * degree, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  unsigned degree() const { return degree_; }

  std::span<FqElem> at(std::size_t r, std::size_t c) {
    return {data_.data() + (r * cols_ + c) * degree_, degree_};
  }
  std::span<const FqElem> at(std::size_t r, std::size_t c) const {
    return {data_.data() + (r * cols_ + c) * degree_, degree_};
  }
  void set(std::size_t r, std::size_t c, std::span<const FqElem> value);
  std::span<FqElem> row(std::size_t r) {
    return {data_.data() + r * cols_ * degree_, cols_ * degree_};
  }
  std::span<const FqElem> row(std::size_t r) const {
    return {data_.data() + r * cols_ * degree_, cols_ * degree_};
  }
  const std::vector<FqElem>& data() const { return data_; }
  std::vector<FqElem>& data() { return data_; }

  friend bool operator==(const MatFqs&, const MatFqs&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  unsigned degree_ = 1;
  std::vector<FqElem> data_;
};

// F_q expansion: an r x c matrix over F_{q^s} becomes r x (c*s) over F_q in
// polynomial-basis coordinates. Its F_q row rank is rk_{F_q}(m).
MatFq ExpandFq(const MatFqs& m);

// Row rank by Gaussian elimination.
std::size_t RankFq(const FieldSpec& f, const MatFq& m);
// Reduced row echelon form, in place; returns the pivot columns.
std::vector<std::size_t> ReduceRowEchelon(const FieldSpec& f, MatFq& m);
// Throws Error(kSingularMatrix) if m is singular, kShapeMismatch if not square.
MatFq InvertFq(const FieldSpec& f, const MatFq& m);
MatFq MultiplyFq(const FieldSpec& f, const MatFq& a, const MatFq& b);

// Row rank over F_{q^s}.
std::size_t RankFqs(const ExtFieldSpec& ext, const MatFqs& m);
MatFqs InvertFqs(const ExtFieldSpec& ext, const MatFqs& m);
MatFqs MultiplyFqs(const ExtFieldSpec& ext, const MatFqs& a, const MatFqs& b);
// X * Q with the F_q entries of x acting as scalars on F_{q^s}.
MatFqs MultiplyFqByFqs(const FieldSpec& f, const MatFq& x, const MatFqs& q);
MatFqs AddFqs(const FieldSpec& f, const MatFqs& a, const MatFqs& b);
MatFqs SubFqs(const FieldSpec& f, const MatFqs& a, const MatFqs& b);

MatFqs SelectColumns(const MatFqs& m, std::span<const std::size_t> cols);
MatFqs SelectRows(const MatFqs& m, std::size_t begin, std::size_t end);
// Rows of a stacked on top of rows of b.
MatFqs StackRows(const MatFqs& a, const MatFqs& b);

// c (x) delta for a column vector c over F_q: block t equals c_t * delta.
MatFqs KronVec(const FieldSpec& f, std::span<const FqElem> c,
               const MatFqs& delta);

}  // namespace cbpir

#endif  // CBPIR_MATRIX_H_
