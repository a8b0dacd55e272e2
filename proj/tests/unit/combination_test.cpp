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

#include <algorithm>
#include <numeric>

#include "opgrid/errors.hpp"
#include "opgrid/hnk/combination.hpp"
#include "opgrid/random.hpp"
#include "support/oracles.hpp"

using namespace opgrid;

TEST(Combination, Basics) {
  const Combination c(5, {4, 1, 3});
  EXPECT_EQ(c.members(), (std::vector<int>{1, 3, 4}));
  EXPECT_EQ(c.size(), 3);
  EXPECT_EQ(c.to_string(), "{1,3,4}");
  EXPECT_EQ(c.complement(), Combination(5, {2, 5}));
  EXPECT_TRUE(c.disjoint(Combination(5, {2, 5})));
  EXPECT_EQ(c.with(2).without(4), Combination(5, {1, 2, 3}));
  EXPECT_EQ(Combination(3, {}).to_string(), "{}");
  EXPECT_THROW(Combination(3, {4}), ArgumentError);
  EXPECT_THROW(Combination(3, {1, 1}), ArgumentError);
}

TEST(Combination, LexicographicEnumeration) {
  const auto c31 = combinations(3, 1);
  ASSERT_EQ(c31.size(), 3u);
  EXPECT_EQ(c31[2], Combination(3, {3}));
  const auto c42 = combinations(4, 2);
  const std::vector<Combination> want = {Combination(4, {1, 2}), Combination(4, {1, 3}), Combination(4, {1, 4}),
                                         Combination(4, {2, 3}), Combination(4, {2, 4}), Combination(4, {3, 4})};
  EXPECT_EQ(c42, want);
  const auto c40 = combinations(4, 0);
  ASSERT_EQ(c40.size(), 1u);
  EXPECT_TRUE(c40[0].empty());
  EXPECT_THROW(combinations(3, 4), ArgumentError);
}

TEST(CombinationProperty, MatchesBruteForceAndRoundTrips) {
  for (int n = 0; n <= 10; ++n) {
    for (int r = 0; r <= n; ++r) {
      const auto got = combinations(n, r);
      const auto want = oracle::brute_combinations(n, r);
      ASSERT_EQ(got.size(), want.size());
      EXPECT_EQ(binomial(n, r), want.size());
      for (std::size_t i = 0; i < got.size(); ++i) {
        EXPECT_EQ(got[i].members(), want[i]);
        EXPECT_EQ(rank(got[i]), i);
        EXPECT_EQ(unrank(n, r, i), got[i]);
        EXPECT_TRUE(i == 0 || got[i - 1] < got[i]);
      }
    }
  }
  EXPECT_EQ(binomial(5, 7), 0u);
}

TEST(Signature, Examples) {
  EXPECT_EQ(signature_one(Combination(3, {2}), 3, Combination(3, {1})), 1);
  EXPECT_EQ(signature_one(Combination(3, {3}), 2, Combination(3, {1})), -1);
  EXPECT_EQ(signature_one(Combination(4, {3, 4}), 1, Combination(4, {2})), 1);
  EXPECT_THROW(signature_one(Combination(3, {1}), 1, Combination(3, {2, 3})), ArgumentError);
  EXPECT_THROW(signature_one(Combination(4, {1}), 2, Combination(4, {3})), ArgumentError);
}

TEST(SignatureProperty, AgreesWithInversionCount) {
  Rng rng(31);
  for (int t = 0; t < 300; ++t) {
    const int n = static_cast<int>(uniform_int(rng, 1, 9));
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    for (int i = n - 1; i > 0; --i) std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(uniform_int(rng, 0, i))]);
    EXPECT_EQ(permutation_sign(perm), oracle::inversion_sign(perm));
    const int c = perm.front();
    const int cut = static_cast<int>(uniform_int(rng, 0, n - 1));
    std::vector<int> rest(perm.begin() + 1, perm.end());
    const std::vector<int> i_part(rest.begin(), rest.begin() + cut);
    const std::vector<int> j_part(rest.begin() + cut, rest.end());
    const Combination I(n, i_part);
    const Combination J(n, j_part);
    std::vector<int> seq = I.members();
    seq.push_back(c);
    for (int x : J.members()) seq.push_back(x);
    EXPECT_EQ(signature_one(I, c, J), oracle::inversion_sign(seq));
  }
}
