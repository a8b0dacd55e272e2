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

#include <string>
#include <vector>

#include "opgrid/grids/grid.hpp"
#include "opgrid/report.hpp"
#include "opgrid/triple/triple.hpp"

namespace opgrid {

/// Result of turning a spin grid into a spin system of the isotope algebra.
struct SpinSystemResult {
  PartialIsometry v;
  std::vector<ExactMatrix> system;  // s_2..s_r, t_1..t_r, then u_0 if present
  std::vector<std::string> labels;
  VerificationReport report;
};

/// v = i(u_1 + ũ_1), s_j = u_j + ũ_j (j ≠ 1), t_j = i(u_j − ũ_j), plus u_0.
/// Checks Peirce-2 membership, self-adjointness under a ↦ v a* v, the unit law
/// a·v = v·a = a, isotope anticommutators a·b + b·a = 2δ·v among the system
/// elements and the span dimension. Throws TransformError naming the first failing identity.
SpinSystemResult spin_to_spin_system(const Grid& g);

/// Matrix units e_ij, 1 ≤ i, j ≤ m, stored row-major.
struct MatrixUnits {
  int m = 0;
  ExactMatrix v;  // Σ e_kk
  std::vector<ExactMatrix> e;
  VerificationReport report;

  const ExactMatrix& at(int i, int j) const {
    return e[static_cast<std::size_t>((i - 1) * m + (j - 1))];
  }
};

/// e_ii = u_ii, e_ij = u_ii v* u_ij with v = Σ u_ii. Checks e_ij♯ = e_ji,
/// e_ij·e_kl = δ_jk e_il, Σ e_ii = v, u_ij = e_ij + e_ji, u_ii·u_ij = u_ij·u_jj.
/// Throws TransformError on the first failing identity.
MatrixUnits hermitian_to_matrix_units(const Grid& g);

/// e_ii = u_ij u_jm* u_im (well-definedness checked over every admissible
/// choice of j, m), e_ij = e_ii e_ii* u_ij e_jj* e_jj. Checks u_ij = e_ij − e_ji,
/// e_ij v* e_lk = δ_jl e_ik, v e_ij* v = e_ji, e_ii* e_jj = e_ii e_jj* = 0 and the
/// auxiliary identities e_ii u_ij* e_ii = 0, {e_ii e_ii u_ij} = ½u_ij and
/// u_ij ⊥ e_kk. Requires m ≥ 5; throws TransformError otherwise or on failure.
MatrixUnits symplectic_to_matrix_units(const Grid& g);

}  // namespace opgrid
