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

#pragma once

#include <cstdint>
#include <random>

#include "opgrid/numlin/dense.hpp"

namespace opgrid {

/// The library's named deterministic generator.
using Rng = std::mt19937_64;

/// Uniform in [0, 1) from the top 53 bits; identical across standard libraries.
inline double uniform_unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Uniform integer in [lo, hi] by rejection; identical across standard libraries.
std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi);

/// Entries with real and imaginary parts uniform in [−1, 1).
ApproxMatrix random_approx(Eigen::Index rows, Eigen::Index cols, Rng& rng);

/// Entries (a + b i)/d with integers |a|, |b| ≤ bound and 1 ≤ d ≤ bound.
ExactMatrix random_exact(Eigen::Index rows, Eigen::Index cols, Rng& rng, int bound = 5);

/// Random Gaussian rational as in random_exact.
ExactScalar random_scalar(Rng& rng, int bound = 5);

}  // namespace opgrid
