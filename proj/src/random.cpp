// Copyright 2026 The opgrid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "opgrid/random.hpp"

namespace opgrid {

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = span == 0 ? 0 : (~std::uint64_t{0} / span) * span;
  std::uint64_t x = rng();
  while (span != 0 && x >= limit) x = rng();
  return lo + static_cast<std::int64_t>(span == 0 ? x : x % span);
}

ApproxMatrix random_approx(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  ApproxMatrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = 2.0 * uniform_unit(rng) - 1.0;
      const double im = 2.0 * uniform_unit(rng) - 1.0;
      m(i, j) = {re, im};
    }
  }
  return m;
}

ExactScalar random_scalar(Rng& rng, int bound) {
  const long re = uniform_int(rng, -bound, bound);
  const long im = uniform_int(rng, -bound, bound);
  const long den = uniform_int(rng, 1, bound);
  return ExactScalar::from_fractions(re, den, im, den);
}

ExactMatrix random_exact(Eigen::Index rows, Eigen::Index cols, Rng& rng, int bound) {
  ExactMatrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = random_scalar(rng, bound);
  }
  return m;
}

}  // namespace opgrid
