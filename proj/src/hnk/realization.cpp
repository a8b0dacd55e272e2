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

#include "opgrid/hnk/realization.hpp"

#include <utility>

#include "opgrid/errors.hpp"
#include "opgrid/triple/triple.hpp"

namespace opgrid {

RankOneRealization::RankOneRealization(std::vector<ExactMatrix> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw ConstructionError("rank-one realization: empty family");
  std::vector<PartialIsometry> family;
  for (const auto& e : elements_) {
    if (e.rows() != elements_.front().rows() || e.cols() != elements_.front().cols()) {
      throw ConstructionError("rank-one realization: unequal shapes");
    }
    if (is_zero(e) || !PartialIsometry::check(e)) {
      throw ConstructionError("rank-one realization: element is not a nonzero partial isometry");
    }
    family.emplace_back(e);
  }
  for (std::size_t a = 0; a < family.size(); ++a) {
    if (!is_minimal_in_family(family[a], family)) {
      throw ConstructionError("rank-one realization: u" + std::to_string(a + 1) + " is not minimal");
    }
    for (std::size_t b = a + 1; b < family.size(); ++b) {
      if (classify_relation(family[a], family[b]) != GridRelation::Colinear) {
        throw ConstructionError("rank-one realization: u" + std::to_string(a + 1) + ", u" +
                                std::to_string(b + 1) + " are not colinear");
      }
    }
  }
}

ExactMatrix support_product(const RankOneRealization& real, Side side, const Combination& S) {
  if (S.empty()) throw ArgumentError("support_product: empty index set");
  if (S.n() != real.n()) throw ArgumentError("support_product: index set ambient size differs from n");
  ExactMatrix r;
  bool first = true;
  for (int j : S.members()) {
    const ExactMatrix& u = real.u(j);
    ExactMatrix f = side == Side::Right ? mul<ExactScalar>(u, adjoint(u)) : mul<ExactScalar>(adjoint(u), u);
    r = first ? std::move(f) : mul<ExactScalar>(r, f);
    first = false;
  }
  return r;
}

Indices indices(const RankOneRealization& real) {
  const int n = real.n();
  if (n > kMaxIndicesN) throw CapacityError("indices: n exceeds " + std::to_string(kMaxIndicesN));
  Indices out;
  for (Side side : {Side::Right, Side::Left}) {
    int best = 0;
    for (int r = 1; r <= n; ++r) {
      if (is_zero(support_product(real, side, Combination::from_mask(n, (1u << r) - 1u)))) break;
      best = r;
    }
    (side == Side::Right ? out.right : out.left) = best;
  }
  return out;
}

}  // namespace opgrid
