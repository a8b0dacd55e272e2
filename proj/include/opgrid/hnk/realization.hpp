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

#include <vector>

#include "opgrid/hnk/combination.hpp"
#include "opgrid/numlin/dense.hpp"

namespace opgrid {

enum class Side { Left, Right };

/// (i_R, i_L): largest sizes of index sets with nonzero (uu*)_J, (u*u)_J.
struct Indices {
  int right = 0;
  int left = 0;
  friend bool operator==(const Indices&, const Indices&) = default;
};

inline constexpr int kMaxIndicesN = 12;

/// A finite rank-one rectangular grid u_1..u_n: pairwise colinear minimal
/// partial isometries of a common shape.
class RankOneRealization {
 public:
  /// Throws ConstructionError unless the family is nonempty, equally shaped,
  /// pairwise colinear and minimal.
  explicit RankOneRealization(std::vector<ExactMatrix> elements);

  int n() const { return static_cast<int>(elements_.size()); }
  /// u_i, 1-based.
  const ExactMatrix& u(int i) const { return elements_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<ExactMatrix>& elements() const { return elements_; }
  Eigen::Index rows() const { return elements_.front().rows(); }
  Eigen::Index cols() const { return elements_.front().cols(); }

 private:
  std::vector<ExactMatrix> elements_;
};

/// Ordered product over j ∈ S (increasing) of u_j u_j* (Right) or u_j* u_j (Left).
/// Throws ArgumentError for empty S or a mismatched ambient size.
ExactMatrix support_product(const RankOneRealization& real, Side side, const Combination& S);

/// Tests the single witness set {1..r} per size. Throws CapacityError for n > 12.
Indices indices(const RankOneRealization& real);

}  // namespace opgrid
