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

#include "opgrid/triple/triple.hpp"

#include <bit>
#include <cstdint>
#include <utility>

namespace opgrid {

namespace {

const ExactScalar& half() {
  static const ExactScalar h(mpq_class(1, 2));
  return h;
}

ExactMatrix gram_left(const ExactMatrix& v) { return mul<ExactScalar>(v, adjoint(v)); }
ExactMatrix gram_right(const ExactMatrix& v) { return mul<ExactScalar>(adjoint(v), v); }

}  // namespace

PartialIsometry::PartialIsometry(ExactMatrix m) : mat_(std::move(m)) {
  if (is_zero(mat_)) throw ConstructionError("partial isometry: zero matrix");
  if (!check(mat_)) throw ConstructionError("partial isometry: v v* v != v");
}

bool PartialIsometry::check(const ExactMatrix& m) { return ternary_product(m, m, m) == m; }

std::string_view to_string(GridRelation r) {
  switch (r) {
    case GridRelation::Orthogonal: return "orthogonal";
    case GridRelation::Colinear: return "colinear";
    case GridRelation::GovernsFirstOverSecond: return "governs-first-over-second";
    case GridRelation::GovernsSecondOverFirst: return "governs-second-over-first";
    case GridRelation::Equal: return "equal";
    case GridRelation::Unclassified: return "unclassified";
  }
  return "unclassified";
}

ExactMatrix ternary_product(const ExactMatrix& a, const ExactMatrix& b, const ExactMatrix& c) {
  return mul<ExactScalar>(mul<ExactScalar>(a, adjoint(b)), c);
}

ExactMatrix triple_product(const ExactMatrix& a, const ExactMatrix& b, const ExactMatrix& c) {
  ExactMatrix abc = ternary_product(a, b, c);
  ExactMatrix cba = ternary_product(c, b, a);
  return add<ExactScalar>(abc, cba) * half();
}

ExactMatrix peirce_project(const PartialIsometry& v, const ExactMatrix& x, int k) {
  detail::require_same_shape(v.matrix(), x, "peirce_project");
  if (k < 0 || k > 2) throw ArgumentError("peirce_project: k must be 0, 1 or 2");
  const ExactMatrix l = gram_left(v.matrix());
  const ExactMatrix r = gram_right(v.matrix());
  const ExactMatrix lc = identity<ExactScalar>(l.rows()) - l;
  const ExactMatrix rc = identity<ExactScalar>(r.rows()) - r;
  switch (k) {
    case 2: return mul<ExactScalar>(mul<ExactScalar>(l, x), r);
    case 1:
      return mul<ExactScalar>(mul<ExactScalar>(l, x), rc) + mul<ExactScalar>(mul<ExactScalar>(lc, x), r);
    default: return mul<ExactScalar>(mul<ExactScalar>(lc, x), rc);
  }
}

GridRelation classify_relation(const PartialIsometry& v, const PartialIsometry& w) {
  const ExactMatrix& a = v.matrix();
  const ExactMatrix& b = w.matrix();
  detail::require_same_shape(a, b, "classify_relation");
  if (a == b) return GridRelation::Equal;
  if (is_zero(mul<ExactScalar>(adjoint(a), b)) && is_zero(mul<ExactScalar>(a, adjoint(b)))) {
    return GridRelation::Orthogonal;
  }
  const ExactMatrix wwv = triple_product(b, b, a);
  const ExactMatrix vvw = triple_product(a, a, b);
  const ExactMatrix half_v = a * half();
  const ExactMatrix half_w = b * half();
  if (vvw == half_w) {
    if (wwv == half_v) return GridRelation::Colinear;
    if (wwv == a) return GridRelation::GovernsSecondOverFirst;
  }
  if (wwv == half_v && vvw == b) return GridRelation::GovernsFirstOverSecond;
  return GridRelation::Unclassified;
}

bool is_minimal_in_family(const PartialIsometry& v, const std::vector<PartialIsometry>& family) {
  const ExactMatrix& a = v.matrix();
  if (ternary_product(a, a, a) != a) return false;
  for (const auto& w : family) {
    if (w == v) continue;
    if (!is_zero(ternary_product(a, w.matrix(), a))) return false;
  }
  return true;
}

ExactMatrix isotope_product(const PartialIsometry& v, const ExactMatrix& a, const ExactMatrix& b) {
  detail::require_same_shape(v.matrix(), a, "isotope_product");
  detail::require_same_shape(v.matrix(), b, "isotope_product");
  return ternary_product(a, v.matrix(), b);
}

ExactMatrix isotope_involution(const PartialIsometry& v, const ExactMatrix& a) {
  detail::require_same_shape(v.matrix(), a, "isotope_involution");
  return ternary_product(v.matrix(), a, v.matrix());
}

std::size_t family_rank(const std::vector<PartialIsometry>& family) {
  if (family.size() > kFamilyRankCap) {
    throw CapacityError("family_rank: family of " + std::to_string(family.size()) + " exceeds cap of " +
                        std::to_string(kFamilyRankCap));
  }
  for (const auto& v : family) {
    if (!is_minimal_in_family(v, family)) throw ArgumentError("family_rank: member is not minimal");
  }
  const std::size_t n = family.size();
  std::vector<std::uint32_t> adj(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (classify_relation(family[i], family[j]) == GridRelation::Orthogonal) {
        adj[i] |= 1u << j;
        adj[j] |= 1u << i;
      }
    }
  }
  // Maximum clique in the orthogonality graph by branch and bound over bitmasks.
  std::size_t best = 0;
  auto grow = [&](auto&& self, std::uint32_t candidates, std::size_t size) -> void {
    if (candidates == 0) {
      best = std::max(best, size);
      return;
    }
    while (candidates != 0) {
      if (size + static_cast<std::size_t>(std::popcount(candidates)) <= best) return;
      const int v = std::countr_zero(candidates);
      candidates &= ~(1u << v);
      self(self, candidates & adj[static_cast<std::size_t>(v)], size + 1);
    }
  };
  grow(grow, n == 32 ? ~0u : ((1u << n) - 1u), 0);
  return best;
}

}  // namespace opgrid
