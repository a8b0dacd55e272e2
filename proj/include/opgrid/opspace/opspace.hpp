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

#include "opgrid/hnk/space.hpp"
#include "opgrid/numlin/dense.hpp"
#include "opgrid/report.hpp"

namespace opgrid {

/// Coefficient transport between two linearly independent bases of equal length.
class BasisMap {
 public:
  /// Throws ArgumentError on unequal lengths or dependent bases (exact rank).
  BasisMap(std::vector<ExactMatrix> domain, std::vector<ExactMatrix> codomain);

  static BasisMap identity(const std::vector<ExactMatrix>& basis) { return BasisMap(basis, basis); }

  const std::vector<ExactMatrix>& domain() const { return domain_; }
  const std::vector<ExactMatrix>& codomain() const { return codomain_; }
  BasisMap inverse() const { return BasisMap(codomain_, domain_); }

 private:
  std::vector<ExactMatrix> domain_;
  std::vector<ExactMatrix> codomain_;
};

/// Block array of coefficient vectors over a basis; block (r, c) stands for
/// Σ_i coeff(r, c)[i]·basis[i].
class AmplifiedElement {
 public:
  AmplifiedElement(int block_rows, int block_cols, std::size_t dim);

  int block_rows() const { return rows_; }
  int block_cols() const { return cols_; }
  std::size_t dim() const { return dim_; }
  std::vector<ExactScalar>& coeff(int r, int c) { return coeffs_[index(r, c)]; }
  const std::vector<ExactScalar>& coeff(int r, int c) const { return coeffs_[index(r, c)]; }

  /// Block matrix of shape (block_rows·rows) × (block_cols·cols).
  ExactMatrix materialize(const std::vector<ExactMatrix>& basis) const;

 private:
  std::size_t index(int r, int c) const;

  int rows_;
  int cols_;
  std::size_t dim_;
  std::vector<std::vector<ExactScalar>> coeffs_;
};

/// Operator norm of the materialized block matrix. Throws DimensionError if
/// the element's dimension differs from the basis length.
double level_norm(const std::vector<ExactMatrix>& basis, const AmplifiedElement& elem);

/// level_norm(codomain, elem) / level_norm(domain, elem), a certified lower
/// bound on the cb-norm of the transport. Throws DegenerateInputError when the
/// domain norm is below 1e−12.
double amplified_ratio(const BasisMap& map, const AmplifiedElement& elem);

/// 1×n block row [u_1 … u_n] and n×1 block column.
AmplifiedElement row_witness(const HnkSpace& space);
AmplifiedElement col_witness(const HnkSpace& space);

/// R_n as E_{1i} and C_n as E_{i1} inside n×n matrices.
std::vector<ExactMatrix> row_space_basis(int n);
std::vector<ExactMatrix> column_space_basis(int n);

struct CbSeparationReport {
  int n = 0;
  int k = 0;
  double row_norm = 0.0;        // ‖[u_1 … u_n]‖ in H_n^k
  double row_image_norm = 0.0;  // image in R_n
  double row_ratio = 0.0;
  double col_norm = 0.0;
  double col_image_norm = 0.0;  // image in C_n
  double col_ratio = 0.0;
  bool separates_from_rows = false;
  bool separates_from_columns = false;
  VerificationReport report;
};

/// Witness norms against the closed forms √k, √(n−k+1), √n after proving the
/// support sums exactly. Throws ArgumentError unless 1 ≤ k ≤ n ≤ 6.
CbSeparationReport cb_separation_report(int n, int k);

}  // namespace opgrid
