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

#include "opgrid/numlin/span.hpp"

#include <utility>

namespace opgrid {

namespace {

using Row = std::vector<ExactScalar>;

// Rows of the linear system Σ c_i·family[i] = x, one per matrix entry, with
// x appended as the last column. All-zero rows are dropped.
std::vector<Row> system_rows(const std::vector<ExactMatrix>& family, const ExactMatrix* x) {
  std::vector<Row> rows;
  if (family.empty()) return rows;
  const Eigen::Index r = family.front().rows();
  const Eigen::Index c = family.front().cols();
  for (const auto& f : family) detail::require_same_shape(f, family.front(), "span");
  if (x != nullptr) detail::require_same_shape(*x, family.front(), "span");
  const std::size_t width = family.size() + (x != nullptr ? 1 : 0);
  for (Eigen::Index j = 0; j < c; ++j) {
    for (Eigen::Index i = 0; i < r; ++i) {
      Row row(width);
      bool any = false;
      for (std::size_t f = 0; f < family.size(); ++f) {
        row[f] = family[f](i, j);
        any = any || !row[f].is_zero();
      }
      if (x != nullptr) {
        row.back() = (*x)(i, j);
        any = any || !row.back().is_zero();
      }
      if (any) rows.push_back(std::move(row));
    }
  }
  return rows;
}

// Reduced row echelon form over the first `vars` columns; returns pivot columns.
std::vector<std::size_t> reduce(std::vector<Row>& rows, std::size_t vars) {
  std::vector<std::size_t> pivots;
  std::size_t top = 0;
  for (std::size_t col = 0; col < vars && top < rows.size(); ++col) {
    std::size_t piv = top;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[top], rows[piv]);
    const ExactScalar inv = ExactScalar(1) / rows[top][col];
    for (auto& v : rows[top]) v *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == top || rows[r][col].is_zero()) continue;
      const ExactScalar f = rows[r][col];
      for (std::size_t k = col; k < rows[r].size(); ++k) {
        if (!rows[top][k].is_zero()) rows[r][k] -= f * rows[top][k];
      }
    }
    pivots.push_back(col);
    ++top;
  }
  return pivots;
}

}  // namespace

std::size_t exact_rank(const std::vector<ExactMatrix>& family) {
  auto rows = system_rows(family, nullptr);
  return reduce(rows, family.size()).size();
}

std::optional<std::vector<ExactScalar>> span_coordinates(const std::vector<ExactMatrix>& family,
                                                         const ExactMatrix& x) {
  if (family.empty()) {
    if (is_zero(x)) return std::vector<ExactScalar>{};
    return std::nullopt;
  }
  auto rows = system_rows(family, &x);
  const auto pivots = reduce(rows, family.size());
  for (std::size_t r = pivots.size(); r < rows.size(); ++r) {
    if (!rows[r].back().is_zero()) return std::nullopt;
  }
  std::vector<ExactScalar> coords(family.size());
  for (std::size_t r = 0; r < pivots.size(); ++r) coords[pivots[r]] = rows[r].back();
  return coords;
}

}  // namespace opgrid
