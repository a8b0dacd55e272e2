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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "opgrid/numlin/dense.hpp"
#include "opgrid/report.hpp"
#include "opgrid/triple/triple.hpp"

namespace opgrid {

enum class GridKind { Rectangular, Hermitian, Symplectic, Spin, RankOne };

std::string_view to_string(GridKind k);

/// Role of a spin grid element: u_j, ũ_j, or the odd-case u_0.
enum class SpinRole { Plain, Tilde, Center };

/// Index scheme per kind:
///   Rectangular  (i, j), 1 ≤ i ≤ p, 1 ≤ j ≤ q
///   Hermitian    (i, j), i ≤ j, the unordered pair {i, j}
///   Symplectic   (i, j), i < j; the reversed pair is the negated element
///   Spin         (j, role), j ≥ 1 for Plain/Tilde, j = 0 for Center
///   RankOne      (i, 0)
struct GridElement {
  std::string label;
  int i = 0;
  int j = 0;
  SpinRole role = SpinRole::Plain;
  ExactMatrix mat;
};

struct Grid {
  GridKind kind = GridKind::RankOne;
  int p = 0;          // Rectangular rows; Hermitian/Symplectic m; Spin r; RankOne n
  int q = 0;          // Rectangular columns
  bool odd = false;   // Spin: u_0 present
  std::vector<GridElement> elements;

  std::size_t size() const { return elements.size(); }
  std::vector<ExactMatrix> matrices() const;
  /// Index of the element with the given index pair; throws ArgumentError if absent.
  std::size_t find(int i, int j, SpinRole role = SpinRole::Plain) const;
};

/// E_ij in p×q.
Grid rectangular_grid(int p, int q);

/// U_ij = E_ij + E_ji (i < j), U_ii = E_ii in m×m.
Grid hermitian_grid(int m);

/// U_ij = E_ij − E_ji, i < j, in m×m. Requires m ≥ 4.
Grid symplectic_grid(int m);

/// The n partial isometries as an unordered rank-one family.
Grid rank_one_grid(const std::vector<ExactMatrix>& elements);

/// Pauli spin system s_1..s_k in M_{2^⌈k/2⌉}: s_{2n+1} = σ3^{⊗n}⊗σ1⊗I…,
/// s_{2n+2} = σ3^{⊗n}⊗σ2⊗I…. Throws CapacityError outside 2 ≤ k ≤ 12.
std::vector<ExactMatrix> spin_system(int k);

/// u_j = (s_{2j−1} − i s_{2j})/2, ũ_j = −(s_{2j−1} + i s_{2j})/2 and, when
/// `odd`, u_0 = phase·σ3^{⊗r}. The phase and tilde sign are chosen by a bounded
/// search using verify_grid as the oracle. Requires r ≥ 2; throws
/// CapacityError for r > 6 and ConstructionError if no candidate passes.
Grid spin_grid(int r, bool odd);

/// Pauli matrices σ1, σ2, σ3 (standard X, Y, Z).
ExactMatrix pauli(int which);

/// Relation the grid's table prescribes between elements a and b.
GridRelation expected_relation(const Grid& g, std::size_t a, std::size_t b);

/// Whether the grid's table requires element a to be minimal.
bool expected_minimal(const Grid& g, std::size_t a);

/// Exhaustive triple checks up to this many elements, sampling above.
inline constexpr std::size_t kExhaustiveTripleLimit = 20;
inline constexpr std::size_t kTripleSample = 500;

/// Checks partial isometries, minimality, every pairwise relation, every
/// nonzero triple product in the kind's table, and the required-zero triple
/// products (exhaustively or on a deterministic sample). Never throws for a
/// malformed family; failures are reported.
VerificationReport verify_grid(const Grid& g);

}  // namespace opgrid
