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

#include <string_view>
#include <vector>

#include "opgrid/numlin/dense.hpp"

namespace opgrid {

/// A nonzero matrix v with v·v*·v = v, validated at construction.
class PartialIsometry {
 public:
  /// Throws ConstructionError if `m` is zero or not a partial isometry.
  explicit PartialIsometry(ExactMatrix m);

  static bool check(const ExactMatrix& m);

  const ExactMatrix& matrix() const { return mat_; }
  Eigen::Index rows() const { return mat_.rows(); }
  Eigen::Index cols() const { return mat_.cols(); }

  friend bool operator==(const PartialIsometry& a, const PartialIsometry& b) { return a.mat_ == b.mat_; }

 private:
  ExactMatrix mat_;
};

enum class GridRelation {
  Orthogonal,
  Colinear,
  GovernsFirstOverSecond,
  GovernsSecondOverFirst,
  Equal,
  Unclassified
};

std::string_view to_string(GridRelation r);

/// {a b c} = ½(a b* c + c b* a).
ExactMatrix triple_product(const ExactMatrix& a, const ExactMatrix& b, const ExactMatrix& c);

/// a b* c.
ExactMatrix ternary_product(const ExactMatrix& a, const ExactMatrix& b, const ExactMatrix& c);

/// P_k(v)x with l = vv*, r = v*v: lxr (k=2), lx(1−r)+(1−l)xr (k=1), (1−l)x(1−r) (k=0).
ExactMatrix peirce_project(const PartialIsometry& v, const ExactMatrix& x, int k);

/// Throws DimensionError on shape mismatch.
GridRelation classify_relation(const PartialIsometry& v, const PartialIsometry& w);

/// v w* v = 0 for each family member w ≠ v, and v v* v = v.
bool is_minimal_in_family(const PartialIsometry& v, const std::vector<PartialIsometry>& family);

/// a·b = a v* b.
ExactMatrix isotope_product(const PartialIsometry& v, const ExactMatrix& a, const ExactMatrix& b);

/// a♯ = v a* v.
ExactMatrix isotope_involution(const PartialIsometry& v, const ExactMatrix& a);

inline constexpr std::size_t kFamilyRankCap = 24;

/// Size of the largest pairwise orthogonal subfamily (exhaustive). Throws
/// CapacityError above kFamilyRankCap members and ArgumentError if a member is
/// not minimal in the family.
std::size_t family_rank(const std::vector<PartialIsometry>& family);

}  // namespace opgrid
