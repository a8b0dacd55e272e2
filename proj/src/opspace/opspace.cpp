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

#include "opgrid/opspace/opspace.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "opgrid/errors.hpp"
#include "opgrid/hnk/uij.hpp"
#include "opgrid/numlin/span.hpp"
#include "opgrid/numlin/spectral.hpp"

namespace opgrid {

namespace {

constexpr double kNormTolerance = 1e-9;

std::string fixed(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

}  // namespace

BasisMap::BasisMap(std::vector<ExactMatrix> domain, std::vector<ExactMatrix> codomain)
    : domain_(std::move(domain)), codomain_(std::move(codomain)) {
  if (domain_.size() != codomain_.size()) throw ArgumentError("BasisMap: bases of unequal length");
  if (exact_rank(domain_) != domain_.size()) throw ArgumentError("BasisMap: domain basis is dependent");
  if (exact_rank(codomain_) != codomain_.size()) throw ArgumentError("BasisMap: codomain basis is dependent");
}

AmplifiedElement::AmplifiedElement(int block_rows, int block_cols, std::size_t dim)
    : rows_(block_rows), cols_(block_cols), dim_(dim) {
  if (block_rows < 1 || block_cols < 1) throw ArgumentError("AmplifiedElement: empty block array");
  coeffs_.assign(static_cast<std::size_t>(block_rows * block_cols), std::vector<ExactScalar>(dim));
}

std::size_t AmplifiedElement::index(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw ArgumentError("AmplifiedElement: block index out of range");
  return static_cast<std::size_t>(r * cols_ + c);
}

ExactMatrix AmplifiedElement::materialize(const std::vector<ExactMatrix>& basis) const {
  if (basis.size() != dim_) throw DimensionError("AmplifiedElement: basis length differs from coefficient length");
  std::vector<std::vector<ExactMatrix>> blocks(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      ExactMatrix b = ExactMatrix::Zero(basis.front().rows(), basis.front().cols());
      const auto& co = coeff(r, c);
      for (std::size_t i = 0; i < dim_; ++i) {
        if (!co[i].is_zero()) b += basis[i] * co[i];
      }
      blocks[static_cast<std::size_t>(r)].push_back(std::move(b));
    }
  }
  return block_grid(blocks);
}

double level_norm(const std::vector<ExactMatrix>& basis, const AmplifiedElement& elem) {
  return operator_norm(elem.materialize(basis));
}

double amplified_ratio(const BasisMap& map, const AmplifiedElement& elem) {
  const double below = level_norm(map.domain(), elem);
  if (below < 1e-12) throw DegenerateInputError("amplified_ratio: domain element is numerically zero");
  return level_norm(map.codomain(), elem) / below;
}

AmplifiedElement row_witness(const HnkSpace& space) {
  AmplifiedElement e(1, space.n, static_cast<std::size_t>(space.n));
  for (int i = 0; i < space.n; ++i) e.coeff(0, i)[static_cast<std::size_t>(i)] = 1;
  return e;
}

AmplifiedElement col_witness(const HnkSpace& space) {
  AmplifiedElement e(space.n, 1, static_cast<std::size_t>(space.n));
  for (int i = 0; i < space.n; ++i) e.coeff(i, 0)[static_cast<std::size_t>(i)] = 1;
  return e;
}

std::vector<ExactMatrix> row_space_basis(int n) {
  std::vector<ExactMatrix> out;
  for (int i = 0; i < n; ++i) out.push_back(unit<ExactScalar>(n, n, 0, i));
  return out;
}

std::vector<ExactMatrix> column_space_basis(int n) {
  std::vector<ExactMatrix> out;
  for (int i = 0; i < n; ++i) out.push_back(unit<ExactScalar>(n, n, i, 0));
  return out;
}

CbSeparationReport cb_separation_report(int n, int k) {
  if (n < 1 || n > 6 || k < 1 || k > n) throw ArgumentError("cb_separation_report: need 1 <= k <= n <= 6");
  const HnkSpace space = build_hnk(n, k);
  CbSeparationReport out;
  out.n = n;
  out.k = k;
  out.report = VerificationReport("cb separation of H_" + std::to_string(n) + "^" + std::to_string(k));
  const VerificationReport sums = verify_support_sums(space);
  out.report.merge(sums);

  const BasisMap to_rows(space.basis, row_space_basis(n));
  const BasisMap to_cols(space.basis, column_space_basis(n));
  const AmplifiedElement row = row_witness(space);
  const AmplifiedElement col = col_witness(space);
  out.row_norm = level_norm(space.basis, row);
  out.row_image_norm = level_norm(to_rows.codomain(), row);
  out.row_ratio = amplified_ratio(to_rows, row);
  out.col_norm = level_norm(space.basis, col);
  out.col_image_norm = level_norm(to_cols.codomain(), col);
  out.col_ratio = amplified_ratio(to_cols, col);

  const double want_row = std::sqrt(static_cast<double>(k));
  const double want_col = std::sqrt(static_cast<double>(n - k + 1));
  const double want_image = std::sqrt(static_cast<double>(n));
  auto near = [&](const char* name, double got, double want) {
    const double r = std::abs(got - want);
    out.report.require(r <= kNormTolerance, name, fixed(got) + " vs " + fixed(want), r);
  };
  near("row witness norm = sqrt(k)", out.row_norm, want_row);
  near("row image norm in R_n = sqrt(n)", out.row_image_norm, want_image);
  near("column witness norm = sqrt(n-k+1)", out.col_norm, want_col);
  near("column image norm in C_n = sqrt(n)", out.col_image_norm, want_image);

  out.separates_from_rows = sums.passed() && out.row_ratio > 1.0 + kNormTolerance;
  out.separates_from_columns = sums.passed() && out.col_ratio > 1.0 + kNormTolerance;
  out.report.pass("transport to R_n", out.separates_from_rows
                                          ? "ratio " + fixed(out.row_ratio) + " > 1: no isometric transport onto R_n is completely contractive"
                                          : "ratio " + fixed(out.row_ratio) + ": no separation");
  out.report.pass("transport to C_n", out.separates_from_columns
                                          ? "ratio " + fixed(out.col_ratio) + " > 1: no isometric transport onto C_n is completely contractive"
                                          : "ratio " + fixed(out.col_ratio) + ": no separation");
  return out;
}

}  // namespace opgrid
