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
#include <vector>

#include "opgrid/hnk/combination.hpp"
#include "opgrid/hnk/realization.hpp"
#include "opgrid/numlin/dense.hpp"
#include "opgrid/report.hpp"

namespace opgrid {

inline constexpr int kMaxHnkN = 8;

/// One signed matrix unit ε·E_{J,I} of an H_n^k basis element.
struct SignedUnit {
  Combination rowJ;
  Combination colI;
  int sign = 1;
};

/// H_n^k: rows indexed by J with |J| = n−k, columns by I with |I| = k−1, both
/// lexicographic; basis U_i = Σ ε(I,i,J)·E_{J,I} over disjoint (I, J) missing i.
struct HnkSpace {
  int n = 0;
  int k = 0;
  std::vector<Combination> rows;
  std::vector<Combination> cols;
  std::vector<ExactMatrix> basis;
  std::uint64_t multiplicity = 0;  // C(n−1, k−1)

  /// U_i, 1-based.
  const ExactMatrix& U(int i) const { return basis.at(static_cast<std::size_t>(i - 1)); }
  Eigen::Index row_of(const Combination& J) const;
  Eigen::Index col_of(const Combination& I) const;
  /// Matrix unit E_{J,I} in the ambient shape.
  ExactMatrix unit_at(const Combination& J, const Combination& I) const;
  /// The signed units composing U_i.
  std::vector<SignedUnit> units(int i) const;
  RankOneRealization realization() const { return RankOneRealization(basis); }
};

/// Builds and validates H_n^k (partial isometries with m entries ±1, family
/// rank 1, indices (k, n−k+1)). Throws ArgumentError unless 1 ≤ k ≤ n and
/// CapacityError for n > 8.
HnkSpace build_hnk(int n, int k);

/// P x = Σ_i tr(x U_i*)/m · U_i. Throws DimensionError on shape mismatch.
ApproxMatrix hnk_projection(const HnkSpace& space, const ApproxMatrix& x);

inline constexpr double kIdempotenceTolerance = 1e-12;
inline constexpr double kContractionTolerance = 1e-9;

/// Idempotence on `samples` seeded random inputs (≤ 1e−12), exact fixing of
/// each U_i, and ‖P x‖ ≤ ‖x‖(1 + 1e−9) in operator norm.
VerificationReport verify_projection(const HnkSpace& space, int samples, std::uint64_t seed);

struct TraceFormulaReport {
  double lhs = 0.0;            // trace norm of Σ a_i U_i (SVD)
  double rhs = 0.0;            // m·‖a‖₂
  double literal_value = 0.0;  // m^{1/2}·‖a‖₂
  double residual = 0.0;       // |lhs − rhs|
  bool literal_matches = false;  // |lhs − literal_value| ≤ 1e−9
  bool trace_identity = false;   // tr(x x*) = m Σ|a_i|², exact
  bool single_eigenvalue = false;  // (x x*)² = ‖a‖²·x x*, exact
  std::uint64_t multiplicity = 0;
  mpq_class eigenvalue;  // ‖a‖², exact
};

/// Compares trace_norm(Σ a_i U_i) with m‖a‖₂ and the literal m^{1/2}‖a‖₂.
/// Throws DimensionError unless a has n entries.
TraceFormulaReport trace_formula_check(const HnkSpace& space, const std::vector<ExactScalar>& a);

/// u_i = block_diag of U_i over build_hnk(n, k_j). Throws ArgumentError unless
/// ks is nonempty, strictly decreasing and within 1..n.
RankOneRealization diag_hnk(int n, const std::vector<int>& ks);

}  // namespace opgrid
