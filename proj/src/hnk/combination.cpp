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

#include "opgrid/hnk/combination.hpp"

#include <algorithm>
#include <bit>

#include "opgrid/errors.hpp"

namespace opgrid {

namespace {

void check_n(int n) {
  if (n < 0 || n > kMaxCombinationN) throw ArgumentError("combination: n out of range");
}

}  // namespace

Combination::Combination(int n, std::initializer_list<int> members)
    : Combination(n, std::vector<int>(members)) {}

Combination::Combination(int n, const std::vector<int>& members) : n_(n) {
  check_n(n);
  for (int x : members) {
    if (x < 1 || x > n) throw ArgumentError("combination: member " + std::to_string(x) + " outside 1.." + std::to_string(n));
    const std::uint32_t bit = 1u << (x - 1);
    if ((mask_ & bit) != 0) throw ArgumentError("combination: repeated member " + std::to_string(x));
    mask_ |= bit;
  }
}

Combination Combination::from_mask(int n, std::uint32_t mask) {
  check_n(n);
  Combination c;
  c.n_ = n;
  c.mask_ = mask & (n == 0 ? 0u : (n == 32 ? ~0u : ((1u << n) - 1u)));
  return c;
}

int Combination::size() const { return std::popcount(mask_); }

std::vector<int> Combination::members() const {
  std::vector<int> out;
  for (int x = 1; x <= n_; ++x) {
    if (contains(x)) out.push_back(x);
  }
  return out;
}

Combination Combination::with(int x) const {
  if (x < 1 || x > n_) throw ArgumentError("combination: member out of range");
  return from_mask(n_, mask_ | (1u << (x - 1)));
}

Combination Combination::without(int x) const {
  if (x < 1 || x > n_) throw ArgumentError("combination: member out of range");
  return from_mask(n_, mask_ & ~(1u << (x - 1)));
}

std::string Combination::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int x : members()) {
    if (!first) out += ",";
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

bool operator<(const Combination& a, const Combination& b) {
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

std::uint64_t binomial(int n, int r) {
  if (r < 0 || n < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t b = 1;
  for (int i = 1; i <= r; ++i) b = b * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
  return b;
}

std::vector<Combination> combinations(int n, int r) {
  check_n(n);
  if (r < 0 || r > n) throw ArgumentError("combinations: need 0 <= r <= n");
  std::vector<Combination> out;
  out.reserve(binomial(n, r));
  std::vector<int> cur(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.emplace_back(n, cur);
    int i = r - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - r + i + 1) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::uint64_t rank(const Combination& c) {
  // Count combinations that precede c lexicographically, position by position.
  const int n = c.n();
  const int r = c.size();
  std::uint64_t idx = 0;
  int prev = 0;
  int pos = 0;
  for (int x : c.members()) {
    for (int y = prev + 1; y < x; ++y) idx += binomial(n - y, r - pos - 1);
    prev = x;
    ++pos;
  }
  return idx;
}

Combination unrank(int n, int r, std::uint64_t index) {
  check_n(n);
  if (r < 0 || r > n || index >= binomial(n, r)) throw ArgumentError("unrank: index out of range");
  std::vector<int> members;
  int y = 1;
  for (int pos = 0; pos < r; ++pos) {
    while (true) {
      const std::uint64_t block = binomial(n - y, r - pos - 1);
      if (index < block) break;
      index -= block;
      ++y;
    }
    members.push_back(y);
    ++y;
  }
  return Combination(n, members);
}

int permutation_sign(const std::vector<int>& seq) {
  int inversions = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) inversions += seq[i] > seq[j] ? 1 : 0;
  }
  return inversions % 2 == 0 ? 1 : -1;
}

int signature_one(const Combination& I, int c, const Combination& J) {
  const int n = I.n();
  if (J.n() != n || !I.disjoint(J) || c < 1 || c > n || I.contains(c) || J.contains(c) ||
      I.size() + J.size() + 1 != n) {
    throw ArgumentError("signature_one: " + I.to_string() + ", " + std::to_string(c) + ", " + J.to_string() +
                        " do not partition 1.." + std::to_string(n));
  }
  std::vector<int> seq = I.members();
  seq.push_back(c);
  for (int x : J.members()) seq.push_back(x);
  return permutation_sign(seq);
}

}  // namespace opgrid
