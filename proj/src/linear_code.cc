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

#include "cbpir/linear_code.h"

#include <algorithm>
#include <string>

#include "cbpir/error.h"

namespace cbpir {

LinearCode LinearCode::FromGenerator(const ExtFieldSpec& ext, MatFqs generator,
                                     std::vector<std::size_t> info_set) {
  const std::size_t n = generator.cols();
  const std::size_t k = generator.rows();
  if (info_set.size() != k) {
    throw Error(ErrorCode::kShapeMismatch,
                "information set must have exactly k positions");
  }
  std::sort(info_set.begin(), info_set.end());
  std::vector<std::size_t> rest;
  for (std::size_t c = 0, i = 0; c < n; ++c) {
    if (i < k && info_set[i] == c) {
      ++i;
    } else {
      rest.push_back(c);
    }
  }
  if (rest.size() + k != n) {
    throw Error(ErrorCode::kInvalidArgument, "information set out of range");
  }
  MatFqs inverse = InvertFqs(ext, SelectColumns(generator, info_set));
  return LinearCode(ext, std::move(generator), std::move(info_set),
                    std::move(rest), std::move(inverse));
}

LinearCode LinearCode::Sample(const ExtFieldSpec& ext, std::size_t n,
                              std::size_t k, Rng& rng) {
  if (k < 1 || k >= n) {
    throw Error(ErrorCode::kInvalidArgument,
                "code parameters need 1 <= k < n, got n=" + std::to_string(n) +
                    " k=" + std::to_string(k));
  }
  MatFqs g(k, n, ext.degree());
  do {
    for (FqElem& x : g.data()) x = ext.base().Random(rng);
  } while (RankFqs(ext, g) < k);
  while (true) {
    std::vector<std::size_t> info = SampleSubset(rng, n, k);
    try {
      return FromGenerator(ext, g, std::move(info));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kSingularMatrix) throw;
    }
  }
}

MatFqs LinearCode::Encode(const MatFqs& msg) const {
  if (msg.rows() != 1) {
    throw Error(ErrorCode::kShapeMismatch, "message must be a single row");
  }
  return EncodeRows(msg);
}

MatFqs LinearCode::EncodeRows(const MatFqs& msgs) const {
  if (msgs.cols() != dimension()) {
    throw Error(ErrorCode::kShapeMismatch,
                "message length " + std::to_string(msgs.cols()) +
                    " does not match code dimension " +
                    std::to_string(dimension()));
  }
  return MultiplyFqs(ext_, msgs, generator_);
}

MatFqs LinearCode::CodewordFromInfo(const MatFqs& vals) const {
  if (vals.cols() != dimension()) {
    throw Error(ErrorCode::kShapeMismatch,
                "information-set values must have length k");
  }
  return MultiplyFqs(ext_, MultiplyFqs(ext_, vals, info_inverse_), generator_);
}

}  // namespace cbpir
