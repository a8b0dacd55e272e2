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

#include <gtest/gtest.h>

#include "opgrid/errors.hpp"
#include "opgrid/grids/grid.hpp"
#include "opgrid/hnk/space.hpp"
#include "opgrid/numlin/span.hpp"
#include "opgrid/random.hpp"
#include "opgrid/triple/triple.hpp"
#include "support/oracles.hpp"

using namespace opgrid;
using oracle::E;

namespace {

ExactMatrix half(const ExactMatrix& x) { return x * ExactScalar::from_fractions(1, 2); }

std::vector<PartialIsometry> as_family(const std::vector<ExactMatrix>& ms) {
  std::vector<PartialIsometry> out;
  for (const auto& m : ms) out.emplace_back(m);
  return out;
}

/// j/2 with {w w v} = (j/2) v, or -1 when v is in no single Peirce space of w.
int peirce_membership(const ExactMatrix& w, const ExactMatrix& v) {
  const ExactMatrix t = triple_product(w, w, v);
  for (int j = 0; j <= 2; ++j) {
    if (t == ExactMatrix(v * ExactScalar::from_fractions(j, 2))) return j;
  }
  return -1;
}

}  // namespace

TEST(PartialIsometry, ValidatesAtConstruction) {
  EXPECT_NO_THROW(PartialIsometry(E(2, 3, 1, 2)));
  EXPECT_THROW(PartialIsometry(ExactMatrix::Zero(2, 2)), ConstructionError);
  EXPECT_THROW(PartialIsometry(ExactMatrix(E(2, 2, 1, 1) * ExactScalar(2))), ConstructionError);
  EXPECT_FALSE(PartialIsometry::check(ExactMatrix(E(2, 2, 1, 1) + E(2, 2, 1, 2))));
}

TEST(TripleProduct, Examples) {
  EXPECT_EQ(triple_product(E(2, 2, 1, 1), E(2, 2, 1, 1), E(2, 2, 1, 1)), E(2, 2, 1, 1));
  EXPECT_TRUE(is_zero(triple_product(E(2, 2, 1, 1), E(2, 2, 2, 2), E(2, 2, 1, 1))));
  // {u_jk u_jl u_il} = u_ik / 2 on matrix units.
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = 1; k <= 3; ++k)
        for (int l = 1; l <= 3; ++l) {
          if (i == j || k == l) continue;
          EXPECT_EQ(triple_product(E(3, 3, j, k), E(3, 3, j, l), E(3, 3, i, l)), half(E(3, 3, i, k)));
        }
}

TEST(TernaryProduct, Examples) {
  EXPECT_EQ(ternary_product(E(2, 2, 1, 2), E(2, 2, 1, 2), E(2, 2, 1, 2)), E(2, 2, 1, 2));
  EXPECT_TRUE(is_zero(ternary_product(E(2, 2, 1, 1), E(2, 2, 1, 2), E(2, 2, 1, 2))));
  // H_3^2 is not ternary closed: u_1 u_2* u_3 leaves the span.
  const HnkSpace h = build_hnk(3, 2);
  const ExactMatrix t = ternary_product(h.U(1), h.U(2), h.U(3));
  EXPECT_FALSE(is_zero(t));
  EXPECT_FALSE(in_span(h.basis, t));
}

TEST(Peirce, Examples) {
  const PartialIsometry v(E(2, 2, 1, 1));
  EXPECT_EQ(peirce_project(v, E(2, 2, 1, 2), 1), E(2, 2, 1, 2));
  EXPECT_TRUE(is_zero(peirce_project(v, E(2, 2, 1, 2), 2)));
  EXPECT_THROW(peirce_project(v, E(2, 2, 1, 2), 3), ArgumentError);
  // {M_2, M_0, M} = 0.
  Rng rng(5);
  for (int t = 0; t < 10; ++t) {
    const ExactMatrix a = peirce_project(v, random_exact(2, 2, rng), 2);
    const ExactMatrix b = peirce_project(v, random_exact(2, 2, rng), 0);
    EXPECT_TRUE(is_zero(triple_product(a, b, random_exact(2, 2, rng))));
  }
}

TEST(PeirceProperty, ProjectionsResolveIdentity) {
  Rng rng(6);
  const std::vector<ExactMatrix> vs = {E(3, 4, 1, 2), ExactMatrix(E(3, 4, 1, 1) + E(3, 4, 2, 3)),
                                       build_hnk(3, 2).U(1), ExactMatrix(E(3, 4, 3, 4) * ExactScalar::i())};
  for (const auto& m : vs) {
    const PartialIsometry v(m);
    for (int t = 0; t < 5; ++t) {
      const ExactMatrix x = random_exact(m.rows(), m.cols(), rng);
      ExactMatrix sum = ExactMatrix::Zero(m.rows(), m.cols());
      for (int k = 0; k <= 2; ++k) {
        const ExactMatrix pk = peirce_project(v, x, k);
        EXPECT_EQ(peirce_project(v, pk, k), pk);
        for (int j = 0; j <= 2; ++j) {
          EXPECT_TRUE(j == k || is_zero(peirce_project(v, pk, j)));
        }
        sum += pk;
      }
      EXPECT_EQ(sum, x);
    }
  }
}

TEST(TripleProperty, Polarization) {
  Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    const ExactMatrix a = random_exact(3, 4, rng);
    EXPECT_EQ(triple_product(a, a, a), oracle::naive_mul(oracle::naive_mul(a, oracle::naive_adjoint(a)), a));
  }
}

TEST(Relation, Examples) {
  const auto pi = [](const ExactMatrix& m) { return PartialIsometry(m); };
  EXPECT_EQ(classify_relation(pi(E(2, 2, 1, 1)), pi(E(2, 2, 2, 2))), GridRelation::Orthogonal);
  EXPECT_EQ(classify_relation(pi(E(2, 2, 1, 1)), pi(E(2, 2, 1, 2))), GridRelation::Colinear);
  EXPECT_EQ(triple_product(E(2, 2, 1, 2), E(2, 2, 1, 2), E(2, 2, 1, 1)), half(E(2, 2, 1, 1)));
  const Grid h = hermitian_grid(2);
  const ExactMatrix& u11 = h.elements[h.find(1, 1)].mat;
  const ExactMatrix& u12 = h.elements[h.find(1, 2)].mat;
  EXPECT_EQ(classify_relation(pi(u12), pi(u11)), GridRelation::GovernsFirstOverSecond);
  EXPECT_EQ(classify_relation(pi(u11), pi(u12)), GridRelation::GovernsSecondOverFirst);
  EXPECT_EQ(classify_relation(pi(u11), pi(u11)), GridRelation::Equal);
  EXPECT_EQ(classify_relation(pi(E(2, 2, 1, 1)), pi(identity<ExactScalar>(2))), GridRelation::Unclassified);
}

TEST(RelationProperty, MatchesPeirceMembershipOnCanonicalGrids) {
  for (const Grid& g : {rectangular_grid(3, 3), hermitian_grid(4), symplectic_grid(5), spin_grid(2, true)}) {
    for (const auto& a : g.elements) {
      for (const auto& b : g.elements) {
        if (&a == &b) continue;
        const GridRelation r = classify_relation(PartialIsometry(a.mat), PartialIsometry(b.mat));
        const int ab = peirce_membership(a.mat, b.mat);  // b in M_ab(a)
        const int ba = peirce_membership(b.mat, a.mat);
        switch (r) {
          case GridRelation::Orthogonal: EXPECT_TRUE(ab == 0 && ba == 0) << a.label << " " << b.label; break;
          case GridRelation::Colinear: EXPECT_TRUE(ab == 1 && ba == 1) << a.label << " " << b.label; break;
          case GridRelation::GovernsFirstOverSecond: EXPECT_TRUE(ab == 2 && ba == 1) << a.label << " " << b.label; break;
          case GridRelation::GovernsSecondOverFirst: EXPECT_TRUE(ab == 1 && ba == 2) << a.label << " " << b.label; break;
          default: ADD_FAILURE() << "unexpected relation for " << a.label << " " << b.label;
        }
      }
    }
  }
}

TEST(Minimality, Examples) {
  const auto fam = as_family({E(2, 2, 1, 1), E(2, 2, 2, 2)});
  EXPECT_TRUE(is_minimal_in_family(fam[0], fam));
  const Grid r = rectangular_grid(2, 3);
  const auto rf = as_family(r.matrices());
  for (const auto& v : rf) EXPECT_TRUE(is_minimal_in_family(v, rf));
  const Grid h = hermitian_grid(3);
  const auto hf = as_family(h.matrices());
  EXPECT_TRUE(is_minimal_in_family(hf[h.find(1, 1)], hf));
}

TEST(Isotope, Examples) {
  const PartialIsometry one(identity<ExactScalar>(3));
  Rng rng(8);
  const ExactMatrix a = random_exact(3, 3, rng);
  const ExactMatrix b = random_exact(3, 3, rng);
  EXPECT_EQ(isotope_product(one, a, b), mul(a, b));
  EXPECT_EQ(isotope_involution(one, a), adjoint(a));
  const PartialIsometry v(ExactMatrix(E(3, 3, 1, 2) + E(3, 3, 2, 3)));
  const ExactMatrix x = peirce_project(v, a, 2);
  EXPECT_EQ(isotope_product(v, v.matrix(), x), x);
  EXPECT_EQ(isotope_product(v, x, v.matrix()), x);
}

TEST(IsotopeProperty, AssociativeAndAntiMultiplicative) {
  Rng rng(9);
  const PartialIsometry v(ExactMatrix(E(4, 4, 1, 2) + E(4, 4, 2, 3) * ExactScalar::i()));
  for (int t = 0; t < 10; ++t) {
    const ExactMatrix a = peirce_project(v, random_exact(4, 4, rng), 2);
    const ExactMatrix b = peirce_project(v, random_exact(4, 4, rng), 2);
    const ExactMatrix c = peirce_project(v, random_exact(4, 4, rng), 2);
    EXPECT_EQ(isotope_product(v, isotope_product(v, a, b), c), isotope_product(v, a, isotope_product(v, b, c)));
    EXPECT_EQ(isotope_involution(v, isotope_product(v, a, b)),
              isotope_product(v, isotope_involution(v, b), isotope_involution(v, a)));
  }
}

TEST(FamilyRank, Examples) {
  EXPECT_EQ(family_rank(as_family(rectangular_grid(2, 2).matrices())), 2u);
  EXPECT_EQ(family_rank(as_family(spin_grid(2, false).matrices())), 2u);
  for (int n = 1; n <= 6; ++n)
    for (int k = 1; k <= n; ++k) EXPECT_EQ(family_rank(as_family(build_hnk(n, k).basis)), 1u) << n << "," << k;
  EXPECT_EQ(family_rank(as_family(rectangular_grid(3, 4).matrices())), 3u);
  EXPECT_THROW(family_rank(as_family(rectangular_grid(5, 5).matrices())), CapacityError);
}
