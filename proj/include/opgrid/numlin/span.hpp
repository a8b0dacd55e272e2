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

#include <optional>
#include <vector>

#include "opgrid/numlin/dense.hpp"

namespace opgrid {

/// Exact dimension of the complex span of equally shaped matrices.
std::size_t exact_rank(const std::vector<ExactMatrix>& family);

/// Coefficients c with Σ c_i·family[i] = x, or nullopt if x is outside the span.
/// For dependent families one particular solution is returned.
std::optional<std::vector<ExactScalar>> span_coordinates(const std::vector<ExactMatrix>& family,
                                                         const ExactMatrix& x);

inline bool in_span(const std::vector<ExactMatrix>& family, const ExactMatrix& x) {
  return span_coordinates(family, x).has_value();
}

}  // namespace opgrid
