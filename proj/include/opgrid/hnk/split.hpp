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

#include <optional>

#include "opgrid/grids/grid.hpp"
#include "opgrid/hnk/realization.hpp"
#include "opgrid/report.hpp"

namespace opgrid {

struct PeirceSplit {
  ExactMatrix p;  // p_R = Σ_{|J| = i_R} (uu*)_J
  RankOneRealization p_part;
  std::optional<RankOneRealization> q_part;  // empty when every (1−p)u_j vanishes
  VerificationReport report;
};

/// Splits a rank-one realization by p_R into {p u_j} and {(1−p) u_j}. Checks
/// that p is a projection, that both parts pass verify_grid, and that all
/// cross products (p u_i)((1−p)u_j)* and (p u_i)*((1−p)u_j) vanish. Throws
/// ConstructionError if only some (1−p)u_j vanish.
PeirceSplit peirce_split(const RankOneRealization& real);

/// u_ij = block_diag(E_ij (p×q), E_ji (q×p)) realizing {(x, x^t)}. Requires p, q ≥ 2.
Grid diag_rect(int p, int q);

struct RectangularSplit {
  ExactMatrix p;  // Σ_i Π_k u_ik u_ik*
  Grid p_part;
  Grid q_part;
  VerificationReport report;
};

/// Projection split of a rectangular grid: checks the non-degeneracy
/// conditions u_ik u_ij* ≠ 0 and u_ik* u_ij ≠ 0 on the input, then that pY
/// satisfies u_ik u_ij* = 0 (j ≠ k), is ternary closed and is ternary
/// isomorphic to the p×q matrix units via u_ij ↦ E_ij, the mirrored facts for
/// (1−p)Y with u_ij ↦ E_ji (q×p), and pY ⊥ (1−p)Y.
RectangularSplit rectangular_split(const Grid& g);

}  // namespace opgrid
