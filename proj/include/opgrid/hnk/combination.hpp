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
#include <initializer_list>
#include <string>
#include <vector>

namespace opgrid {

inline constexpr int kMaxCombinationN = 30;

/// Strictly increasing subset of {1..n}.
class Combination {
 public:
  Combination() = default;
  /// Throws ArgumentError unless all members lie in 1..n (duplicates rejected).
  Combination(int n, std::initializer_list<int> members);
  Combination(int n, const std::vector<int>& members);

  static Combination from_mask(int n, std::uint32_t mask);
  static Combination full(int n) { return from_mask(n, n == 0 ? 0u : ((1u << n) - 1u)); }

  int n() const { return n_; }
  int size() const;
  bool empty() const { return mask_ == 0; }
  bool contains(int x) const { return x >= 1 && x <= n_ && ((mask_ >> (x - 1)) & 1u) != 0; }
  std::vector<int> members() const;
  std::uint32_t mask() const { return mask_; }

  Combination unite(const Combination& o) const { return from_mask(n_, mask_ | o.mask_); }
  Combination intersect(const Combination& o) const { return from_mask(n_, mask_ & o.mask_); }
  Combination minus(const Combination& o) const { return from_mask(n_, mask_ & ~o.mask_); }
  Combination complement() const { return flip(); }
  Combination with(int x) const;
  Combination without(int x) const;
  bool disjoint(const Combination& o) const { return (mask_ & o.mask_) == 0; }

  /// "{1,3}" or "{}".
  std::string to_string() const;

  friend bool operator==(const Combination& a, const Combination& b) {
    return a.n_ == b.n_ && a.mask_ == b.mask_;
  }
  friend bool operator!=(const Combination& a, const Combination& b) { return !(a == b); }
  /// Lexicographic order of the member sequences (sizes may differ).
  friend bool operator<(const Combination& a, const Combination& b);

 private:
  Combination flip() const { return from_mask(n_, ~mask_ & full_mask()); }
  std::uint32_t full_mask() const { return n_ == 0 ? 0u : ((1u << n_) - 1u); }

  int n_ = 0;
  std::uint32_t mask_ = 0;
};

/// All C(n, r) combinations in lexicographic order. Throws ArgumentError if r > n or r < 0.
std::vector<Combination> combinations(int n, int r);

/// Binomial coefficient C(n, r); 0 outside 0 ≤ r ≤ n.
std::uint64_t binomial(int n, int r);

/// Position of c in combinations(c.n(), c.size()).
std::uint64_t rank(const Combination& c);

/// Inverse of rank.
Combination unrank(int n, int r, std::uint64_t index);

/// Parity of the permutation (I ascending, c, J ascending) of 1..n as ±1.
/// Throws ArgumentError unless I, {c}, J partition {1..n}.
int signature_one(const Combination& I, int c, const Combination& J);

/// Parity of an arbitrary sequence that is a permutation of 1..len, by inversion count.
int permutation_sign(const std::vector<int>& seq);

}  // namespace opgrid
