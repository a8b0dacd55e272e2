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
#include "opgrid/hnk/space.hpp"
#include "opgrid/hnk/split.hpp"
#include "opgrid/numlin/span.hpp"
#include "support/oracles.hpp"

using namespace opgrid;
using oracle::E;

TEST(DiagHnk, MatchesBlockDiagonal) {
  const RankOneRealization d = diag_hnk(3, {2, 1});
  const HnkSpace a = build_hnk(3, 2);
  const HnkSpace b = build_hnk(3, 1);
  for (int i = 1; i <= 3; ++i) EXPECT_EQ(d.u(i), block_diag<ExactScalar>({a.U(i), b.U(i)}));
  const RankOneRealization single = diag_hnk(4, {3});
  for (int i = 1; i <= 4; ++i) EXPECT_EQ(single.u(i), build_hnk(4, 3).U(i));
  EXPECT_THROW(diag_hnk(3, {1, 2}), ArgumentError);
  EXPECT_THROW(diag_hnk(3, {}), ArgumentError);
  EXPECT_THROW(diag_hnk(3, {4}), ArgumentError);
}

TEST(PeirceSplit, RecoversSummands) {
  const HnkSpace a = build_hnk(3, 2);
  const HnkSpace b = build_hnk(3, 1);
  const PeirceSplit s = peirce_split(diag_hnk(3, {2, 1}));
  EXPECT_TRUE(s.report.passed()) << s.report.summary();
  ASSERT_TRUE(s.q_part.has_value());
  const ExactMatrix za = ExactMatrix::Zero(a.U(1).rows(), a.U(1).cols());
  const ExactMatrix zb = ExactMatrix::Zero(b.U(1).rows(), b.U(1).cols());
  for (int i = 1; i <= 3; ++i) {
    EXPECT_EQ(s.p_part.u(i), block_diag<ExactScalar>({a.U(i), zb}));
    EXPECT_EQ(s.q_part->u(i), block_diag<ExactScalar>({za, b.U(i)}));
    for (int j = 1; j <= 3; ++j) {
      EXPECT_TRUE(is_zero(mul(s.p_part.u(i), adjoint(s.q_part->u(j)))));
      EXPECT_TRUE(is_zero(mul(adjoint(s.p_part.u(i)), s.q_part->u(j))));
    }
  }
  EXPECT_EQ(indices(s.p_part).right, 2);
  EXPECT_EQ(indices(*s.q_part).right, 1);
  EXPECT_EQ(mul(s.p, s.p), s.p);
}

TEST(PeirceSplit, StrictDropOnFourThreeOne) {
  const PeirceSplit s = peirce_split(diag_hnk(4, {3, 1}));
  EXPECT_TRUE(s.report.passed()) << s.report.summary();
  ASSERT_TRUE(s.q_part.has_value());
  EXPECT_GT(indices(s.p_part).right, indices(*s.q_part).right);
  EXPECT_TRUE(verify_grid(rank_one_grid(s.p_part.elements())).passed());
  EXPECT_TRUE(verify_grid(rank_one_grid(s.q_part->elements())).passed());
}

TEST(PeirceSplit, PureSpaceHasEmptyComplement) {
  for (int n = 1; n <= 5; ++n)
    for (int k = 1; k <= n; ++k) {
      const HnkSpace h = build_hnk(n, k);
      const PeirceSplit s = peirce_split(h.realization());
      EXPECT_TRUE(s.report.passed()) << n << "," << k << " " << s.report.summary();
      EXPECT_FALSE(s.q_part.has_value());
      for (int i = 1; i <= n; ++i) EXPECT_EQ(s.p_part.u(i), h.U(i));
    }
}

TEST(DiagRect, Construction) {
  const Grid g = diag_rect(2, 3);
  ASSERT_EQ(g.size(), 6u);
  EXPECT_EQ(g.elements[g.find(1, 2)].mat, block_diag<ExactScalar>({E(2, 3, 1, 2), E(3, 2, 2, 1)}));
  EXPECT_TRUE(verify_grid(g).passed());
  EXPECT_THROW(diag_rect(1, 3), ArgumentError);
}

TEST(RectangularSplit, TwoByTwoAndThreeByTwo) {
  for (auto [p, q] : {std::pair{2, 2}, std::pair{3, 2}}) {
    const Grid g = diag_rect(p, q);
    const RectangularSplit s = rectangular_split(g);
    EXPECT_TRUE(s.report.passed()) << s.report.summary();
    EXPECT_EQ(mul(s.p, s.p), s.p);
    const auto pm = s.p_part.matrices();
    for (const auto& a : s.p_part.elements) {
      for (const auto& b : s.p_part.elements) {
        EXPECT_TRUE(a.i != b.i || a.j == b.j || is_zero(mul(a.mat, adjoint(b.mat))));
        for (const auto& c : pm) EXPECT_TRUE(in_span(pm, ternary_product(a.mat, b.mat, c)));
      }
    }
    EXPECT_TRUE(verify_grid(s.p_part).passed());
    EXPECT_TRUE(verify_grid(s.q_part).passed());
  }
}

TEST(RectangularSplit, ReportsDegenerateInput) {
  // Plain matrix units have u_ik u_ij* = 0, so the non-degeneracy check fails.
  EXPECT_FALSE(rectangular_split(rectangular_grid(2, 2)).report.passed());
  EXPECT_THROW(rectangular_split(hermitian_grid(3)), ArgumentError);
}
