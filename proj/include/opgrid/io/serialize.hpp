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

#include <nlohmann/json.hpp>

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "opgrid/grids/grid.hpp"
#include "opgrid/hnk/combination.hpp"
#include "opgrid/numlin/dense.hpp"
#include "opgrid/report.hpp"

namespace opgrid::io {

using Json = nlohmann::ordered_json;

/// {"re": {"num": "1", "den": "2"}, "im": {...}} with decimal integer strings.
Json to_json(const ExactScalar& x);
/// Throws ArgumentError on a malformed or zero-denominator entry.
ExactScalar scalar_from_json(const Json& j);

/// {"rows": r, "cols": c, "entries": row-major nested arrays}.
Json to_json(const ExactMatrix& m);
/// Throws ArgumentError on malformed input or ragged rows.
ExactMatrix matrix_from_json(const Json& j);

/// Members as a 1-based array.
Json to_json(const Combination& c);

/// One labelled matrix of a construction, with its grid index when it has one.
struct NamedMatrix {
  std::string label;
  ExactMatrix mat;
  std::optional<GridElement> index;  // label, i, j, role; mat unused
};

/// Constructor output: the matrices, the grid they form (if any) and, for
/// H_n^k, the row and column combinations.
struct Construction {
  std::string kind;
  Json params = Json::object();
  std::optional<GridKind> grid_kind;
  int grid_p = 0;
  int grid_q = 0;
  bool grid_odd = false;
  std::vector<NamedMatrix> matrices;
  std::vector<Combination> rows;
  std::vector<Combination> cols;
};

Construction from_grid(std::string kind, Json params, const Grid& g);
Json to_json(const Construction& c);
Construction construction_from_json(const Json& j);
/// Rebuilds the grid. Throws ArgumentError when the construction is not a grid.
Grid to_grid(const Construction& c);

/// Long form "matrix,row,col,re,im" with 1-based indices and 17 significant digits.
void write_csv(std::ostream& out, const Construction& c);
/// Labelled, column-aligned exact rendering.
void write_pretty(std::ostream& out, const Construction& c);
std::string pretty(const ExactMatrix& m, const std::string& indent = "  ");

/// Shortest decimal with 17 significant digits.
std::string format_double(double x);

Json to_json(const VerificationReport& r, bool timing);
std::string render_text(const VerificationReport& r, bool timing);

}  // namespace opgrid::io
