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

#include "cbpir/matrix.h"

#include <algorithm>
#include <string>

#include "cbpir/error.h"

namespace cbpir {

namespace {

std::string Shape(std::size_t r, std::size_t c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

}  // namespace

MatFq MatFq::Identity(std::size_t n) {
  MatFq m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void MatFqs::set(std::size_t r, std::size_t c, std::span<const FqElem> value) {
  std::copy(value.begin(), value.end(), at(r, c).begin());
}

MatFq ExpandFq(const MatFqs& m) {
  MatFq out(m.rows(), m.cols() * m.degree());
  out.data() = m.data();
  return out;
}

std::vector<std::size_t> ReduceRowEchelon(const FieldSpec& f, MatFq& m) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      std::swap_ranges(m.row(pivot).begin(), m.row(pivot).end(),
                       m.row(rank).begin());
    }
    const FqElem inv = f.Inv(m(rank, col));
    for (FqElem& x : m.row(rank)) x = f.Mul(x, inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank) continue;
      const FqElem factor = m(r, col);
      if (factor == 0) continue;
      auto dst = m.row(r);
      auto src = m.row(rank);
      for (std::size_t c = col; c < m.cols(); ++c) {
        dst[c] = f.Sub(dst[c], f.Mul(factor, src[c]));
      }
    }
    pivots.push_back(col);
    ++rank;
  }
  return pivots;
}

std::size_t RankFq(const FieldSpec& f, const MatFq& m) {
  MatFq work = m;
  return ReduceRowEchelon(f, work).size();
}

MatFq InvertFq(const FieldSpec& f, const MatFq& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::kShapeMismatch,
                "cannot invert non-square " + Shape(m.rows(), m.cols()));
  }
  const std::size_t n = m.rows();
  MatFq aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    std::copy(m.row(r).begin(), m.row(r).end(), aug.row(r).begin());
    aug(r, n + r) = 1;
  }
  std::vector<std::size_t> pivots = ReduceRowEchelon(f, aug);
  if (n > 0 && (pivots.size() < n || pivots[n - 1] != n - 1)) {
    throw Error(ErrorCode::kSingularMatrix, "matrix over F_q is singular");
  }
  MatFq inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    std::copy(aug.row(r).begin() + n, aug.row(r).end(), inv.row(r).begin());
  }
  return inv;
}

MatFq MultiplyFq(const FieldSpec& f, const MatFq& a, const MatFq& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::kShapeMismatch, "cannot multiply " +
                                               Shape(a.rows(), a.cols()) +
                                               " by " + Shape(b.rows(), b.cols()));
  }
  MatFq out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto dst = out.row(i);
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const FqElem x = a(i, l);
      if (x == 0) continue;
      auto src = b.row(l);
      for (std::size_t c = 0; c < b.cols(); ++c) {
        dst[c] = f.Add(dst[c], f.Mul(x, src[c]));
      }
    }
  }
  return out;
}

namespace {

// Gauss-Jordan over F_{q^s} on an augmented matrix; returns pivot columns.
std::vector<std::size_t> ReduceRowEchelonFqs(const ExtFieldSpec& ext,
                                             MatFqs& m,
                                             std::size_t pivot_cols) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < pivot_cols && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && ext.IsZero(m.at(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      std::swap_ranges(m.row(pivot).begin(), m.row(pivot).end(),
                       m.row(rank).begin());
    }
    const FqsElem inv = ext.Inv(m.at(rank, col));
    for (std::size_t c = col; c < m.cols(); ++c) {
      m.set(rank, c, ext.Mul(inv, m.at(rank, c)));
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || ext.IsZero(m.at(r, col))) continue;
      const FqsElem factor = ext.Neg(m.at(r, col));
      for (std::size_t c = col; c < m.cols(); ++c) {
        ext.MulAccumulate(factor, m.at(rank, c), m.at(r, c));
      }
    }
    pivots.push_back(col);
    ++rank;
  }
  return pivots;
}

}  // namespace

std::size_t RankFqs(const ExtFieldSpec& ext, const MatFqs& m) {
  MatFqs work = m;
  return ReduceRowEchelonFqs(ext, work, work.cols()).size();
}

MatFqs InvertFqs(const ExtFieldSpec& ext, const MatFqs& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::kShapeMismatch,
                "cannot invert non-square " + Shape(m.rows(), m.cols()));
  }
  const std::size_t n = m.rows();
  const unsigned s = ext.degree();
  MatFqs aug(n, 2 * n, s);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.set(r, c, m.at(r, c));
    aug.at(r, n + r)[0] = 1;
  }
  if (ReduceRowEchelonFqs(ext, aug, n).size() < n) {
    throw Error(ErrorCode::kSingularMatrix, "matrix over F_{q^s} is singular");
  }
  MatFqs inv(n, n, s);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv.set(r, c, aug.at(r, n + c));
  }
  return inv;
}

MatFqs MultiplyFqs(const ExtFieldSpec& ext, const MatFqs& a, const MatFqs& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::kShapeMismatch, "cannot multiply " +
                                               Shape(a.rows(), a.cols()) +
                                               " by " + Shape(b.rows(), b.cols()));
  }
  MatFqs out(a.rows(), b.cols(), ext.degree());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      auto x = a.at(i, l);
      if (ext.IsZero(x)) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        ext.MulAccumulate(x, b.at(l, c), out.at(i, c));
      }
    }
  }
  return out;
}

MatFqs MultiplyFqByFqs(const FieldSpec& f, const MatFq& x, const MatFqs& q) {
  if (x.cols() != q.rows()) {
    throw Error(ErrorCode::kShapeMismatch, "cannot multiply " +
                                               Shape(x.rows(), x.cols()) +
                                               " by " + Shape(q.rows(), q.cols()));
  }
  MatFqs out(x.rows(), q.cols(), q.degree());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    auto dst = out.row(i);
    for (std::size_t l = 0; l < x.cols(); ++l) {
      const FqElem scalar = x(i, l);
      if (scalar == 0) continue;
      auto src = q.row(l);
      for (std::size_t c = 0; c < dst.size(); ++c) {
        dst[c] = f.Add(dst[c], f.Mul(scalar, src[c]));
      }
    }
  }
  return out;
}

MatFqs AddFqs(const FieldSpec& f, const MatFqs& a, const MatFqs& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() ||
      a.degree() != b.degree()) {
    throw Error(ErrorCode::kShapeMismatch, "cannot add " +
                                               Shape(a.rows(), a.cols()) +
                                               " and " + Shape(b.rows(), b.cols()));
  }
  MatFqs out = a;
  for (std::size_t i = 0; i < out.data().size(); ++i) {
    out.data()[i] = f.Add(out.data()[i], b.data()[i]);
  }
  return out;
}

MatFqs SubFqs(const FieldSpec& f, const MatFqs& a, const MatFqs& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() ||
      a.degree() != b.degree()) {
    throw Error(ErrorCode::kShapeMismatch, "cannot subtract " +
                                               Shape(b.rows(), b.cols()) +
                                               " from " + Shape(a.rows(), a.cols()));
  }
  MatFqs out = a;
  for (std::size_t i = 0; i < out.data().size(); ++i) {
    out.data()[i] = f.Sub(out.data()[i], b.data()[i]);
  }
  return out;
}

MatFqs SelectColumns(const MatFqs& m, std::span<const std::size_t> cols) {
  MatFqs out(m.rows(), cols.size(), m.degree());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c] >= m.cols()) {
        throw Error(ErrorCode::kShapeMismatch, "column index out of range");
      }
      out.set(r, c, m.at(r, cols[c]));
    }
  }
  return out;
}

MatFqs SelectRows(const MatFqs& m, std::size_t begin, std::size_t end) {
  if (begin > end || end > m.rows()) {
    throw Error(ErrorCode::kShapeMismatch, "row range out of bounds");
  }
  MatFqs out(end - begin, m.cols(), m.degree());
  const std::size_t width = m.cols() * m.degree();
  std::copy(m.data().begin() + begin * width, m.data().begin() + end * width,
            out.data().begin());
  return out;
}

MatFqs StackRows(const MatFqs& a, const MatFqs& b) {
  if (a.cols() != b.cols() || a.degree() != b.degree()) {
    throw Error(ErrorCode::kShapeMismatch, "cannot stack matrices of width " +
                                               std::to_string(a.cols()) +
                                               " and " + std::to_string(b.cols()));
  }
  MatFqs out(a.rows() + b.rows(), a.cols(), a.degree());
  std::copy(a.data().begin(), a.data().end(), out.data().begin());
  std::copy(b.data().begin(), b.data().end(),
            out.data().begin() + a.data().size());
  return out;
}

MatFqs KronVec(const FieldSpec& f, std::span<const FqElem> c,
               const MatFqs& delta) {
  MatFqs out(c.size() * delta.rows(), delta.cols(), delta.degree());
  const std::size_t block = delta.data().size();
  for (std::size_t t = 0; t < c.size(); ++t) {
    if (c[t] == 0) continue;
    for (std::size_t i = 0; i < block; ++i) {
      out.data()[t * block + i] = f.Mul(c[t], delta.data()[i]);
    }
  }
  return out;
}

}  // namespace cbpir
