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

#ifndef CBPIR_RANDOM_H_
#define CBPIR_RANDOM_H_

#include <cstdint>
#include <random>
#include <vector>

namespace cbpir {

// All sampling goes through an explicitly passed engine. The helpers below
// avoid std::uniform_int_distribution, whose output is implementation
// defined, so that seeded runs are reproducible across standard libraries.
using Rng = std::mt19937_64;

// Uniform integer in [0, bound). bound must be nonzero.
inline std::uint64_t UniformBelow(Rng& rng, std::uint64_t bound) {
  // Rejection sampling on the largest multiple of bound.
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x > limit);
  return x % bound;
}

// Fisher-Yates with UniformBelow.
template <typename T>
void Shuffle(Rng& rng, std::vector<T>& items) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = UniformBelow(rng, i);
    std::swap(items[i - 1], items[j]);
  }
}

// Uniform k-subset of {0..n-1}, returned sorted.
std::vector<std::size_t> SampleSubset(Rng& rng, std::size_t n, std::size_t k);

}  // namespace cbpir

#endif  // CBPIR_RANDOM_H_
