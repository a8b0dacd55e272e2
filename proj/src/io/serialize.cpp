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

#include "opgrid/io/serialize.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "opgrid/errors.hpp"

namespace opgrid::io {

namespace {

Json rational_to_json(const mpq_class& q) {
  Json j = Json::object();
  j["num"] = q.get_num().get_str();
  j["den"] = q.get_den().get_str();
  return j;
}

mpq_class rational_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw ArgumentError("rational entry needs \"num\" and \"den\"");
  }
  const auto text = [](const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw ArgumentError("rational part must be an integer string");
  };
  mpz_class num;
  mpz_class den;
  if (num.set_str(text(j["num"]), 10) != 0 || den.set_str(text(j["den"]), 10) != 0) {
    throw ArgumentError("rational part is not a decimal integer");
  }
  if (den == 0) throw ArgumentError("rational entry has zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

std::string_view role_name(SpinRole r) {
  switch (r) {
    case SpinRole::Plain: return "plain";
    case SpinRole::Tilde: return "tilde";
    case SpinRole::Center: return "center";
  }
  return "plain";
}

SpinRole role_from_name(const std::string& s) {
  if (s == "plain") return SpinRole::Plain;
  if (s == "tilde") return SpinRole::Tilde;
  if (s == "center") return SpinRole::Center;
  throw ArgumentError("unknown spin role \"" + s + "\"");
}

GridKind kind_from_name(const std::string& s) {
  for (GridKind k : {GridKind::Rectangular, GridKind::Hermitian, GridKind::Symplectic, GridKind::Spin,
                     GridKind::RankOne}) {
    if (to_string(k) == s) return k;
  }
  throw ArgumentError("unknown grid kind \"" + s + "\"");
}

Combination combination_from_json(int n, const Json& j) {
  if (!j.is_array()) throw ArgumentError("combination must be an array");
  std::vector<int> members;
  for (const auto& m : j) members.push_back(m.get<int>());
  return Combination(n, members);
}

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ArgumentError(std::string("missing field \"") + key + "\"");
  try {
    return j[key].get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ArgumentError(std::string("field \"") + key + "\" has the wrong type");
  }
}

}  // namespace

Json to_json(const ExactScalar& x) {
  Json j = Json::object();
  j["re"] = rational_to_json(x.real());
  j["im"] = rational_to_json(x.imag());
  return j;
}

ExactScalar scalar_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("re") || !j.contains("im")) {
    throw ArgumentError("scalar entry needs \"re\" and \"im\"");
  }
  return ExactScalar(rational_from_json(j["re"]), rational_from_json(j["im"]));
}

Json to_json(const ExactMatrix& m) {
  Json j = Json::object();
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  Json entries = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

ExactMatrix matrix_from_json(const Json& j) {
  const auto rows = field<Eigen::Index>(j, "rows");
  const auto cols = field<Eigen::Index>(j, "cols");
  const Json& entries = j["entries"];
  if (rows < 0 || cols < 0 || !entries.is_array() || static_cast<Eigen::Index>(entries.size()) != rows) {
    throw ArgumentError("matrix entries do not match rows");
  }
  ExactMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Json& row = entries[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw ArgumentError("matrix row " + std::to_string(r + 1) + " does not match cols");
    }
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = scalar_from_json(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

Json to_json(const Combination& c) {
  Json j = Json::array();
  for (int m : c.members()) j.push_back(m);
  return j;
}

Construction from_grid(std::string kind, Json params, const Grid& g) {
  Construction c;
  c.kind = std::move(kind);
  c.params = std::move(params);
  c.grid_kind = g.kind;
  c.grid_p = g.p;
  c.grid_q = g.q;
  c.grid_odd = g.odd;
  for (const auto& e : g.elements) {
    GridElement idx{e.label, e.i, e.j, e.role, {}};
    c.matrices.push_back({e.label, e.mat, std::move(idx)});
  }
  return c;
}

Json to_json(const Construction& c) {
  Json j = Json::object();
  j["kind"] = c.kind;
  j["params"] = c.params;
  if (c.grid_kind) {
    Json g = Json::object();
    g["kind"] = std::string(to_string(*c.grid_kind));
    g["p"] = c.grid_p;
    g["q"] = c.grid_q;
    g["odd"] = c.grid_odd;
    j["grid"] = std::move(g);
  }
  if (!c.rows.empty()) {
    Json rows = Json::array();
    for (const auto& r : c.rows) rows.push_back(to_json(r));
    Json cols = Json::array();
    for (const auto& col : c.cols) cols.push_back(to_json(col));
    j["row_combinations"] = std::move(rows);
    j["col_combinations"] = std::move(cols);
  }
  Json elems = Json::array();
  for (const auto& m : c.matrices) {
    Json e = Json::object();
    e["label"] = m.label;
    if (m.index) {
      e["i"] = m.index->i;
      e["j"] = m.index->j;
      e["role"] = std::string(role_name(m.index->role));
    }
    e["matrix"] = to_json(m.mat);
    elems.push_back(std::move(e));
  }
  j["matrices"] = std::move(elems);
  return j;
}

Construction construction_from_json(const Json& j) {
  Construction c;
  c.kind = field<std::string>(j, "kind");
  if (j.contains("params")) c.params = j["params"];
  if (j.contains("grid")) {
    const Json& g = j["grid"];
    c.grid_kind = kind_from_name(field<std::string>(g, "kind"));
    c.grid_p = field<int>(g, "p");
    c.grid_q = field<int>(g, "q");
    c.grid_odd = field<bool>(g, "odd");
  }
  if (j.contains("row_combinations")) {
    const int n = c.params.value("n", 0);
    for (const auto& r : j["row_combinations"]) c.rows.push_back(combination_from_json(n, r));
    for (const auto& col : j["col_combinations"]) c.cols.push_back(combination_from_json(n, col));
  }
  if (!j.contains("matrices") || !j["matrices"].is_array()) throw ArgumentError("missing \"matrices\" array");
  for (const auto& e : j["matrices"]) {
    NamedMatrix m{field<std::string>(e, "label"), matrix_from_json(e["matrix"]), std::nullopt};
    if (e.contains("i")) {
      m.index = GridElement{m.label, field<int>(e, "i"), field<int>(e, "j"),
                            role_from_name(field<std::string>(e, "role")), {}};
    }
    c.matrices.push_back(std::move(m));
  }
  return c;
}

Grid to_grid(const Construction& c) {
  if (!c.grid_kind) throw ArgumentError("construction \"" + c.kind + "\" is not a grid");
  Grid g;
  g.kind = *c.grid_kind;
  g.p = c.grid_p;
  g.q = c.grid_q;
  g.odd = c.grid_odd;
  for (const auto& m : c.matrices) {
    if (!m.index) throw ArgumentError("grid element \"" + m.label + "\" has no index");
    g.elements.push_back({m.label, m.index->i, m.index->j, m.index->role, m.mat});
  }
  return g;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_csv(std::ostream& out, const Construction& c) {
  out << "matrix,row,col,re,im\n";
  for (const auto& m : c.matrices) {
    for (Eigen::Index r = 0; r < m.mat.rows(); ++r) {
      for (Eigen::Index col = 0; col < m.mat.cols(); ++col) {
        const auto z = m.mat(r, col).to_complex();
        out << m.label << ',' << r + 1 << ',' << col + 1 << ',' << format_double(z.real()) << ','
            << format_double(z.imag()) << '\n';
      }
    }
  }
}

std::string pretty(const ExactMatrix& m, const std::string& indent) {
  std::vector<std::string> cells(static_cast<std::size_t>(m.rows() * m.cols()));
  std::size_t width = 1;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      auto& s = cells[static_cast<std::size_t>(r * m.cols() + c)];
      s = m(r, c).to_string();
      width = std::max(width, s.size());
    }
  }
  std::ostringstream out;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    out << indent << '[';
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const auto& s = cells[static_cast<std::size_t>(r * m.cols() + c)];
      out << ' ' << std::string(width - s.size(), ' ') << s;
    }
    out << " ]\n";
  }
  return out.str();
}

void write_pretty(std::ostream& out, const Construction& c) {
  out << c.kind;
  for (const auto& [key, value] : c.params.items()) out << ' ' << key << '=' << value.dump();
  out << '\n';
  const auto list = [&out](const char* name, const std::vector<Combination>& v) {
    out << name << ':';
    for (const auto& x : v) out << ' ' << x.to_string();
    out << '\n';
  };
  if (!c.rows.empty()) {
    list("rows", c.rows);
    list("cols", c.cols);
  }
  for (const auto& m : c.matrices) {
    out << '\n' << m.label << " (" << m.mat.rows() << 'x' << m.mat.cols() << ")\n" << pretty(m.mat);
  }
}

Json to_json(const VerificationReport& r, bool timing) {
  Json j = Json::object();
  j["subject"] = r.subject();
  j["status"] = r.passed() ? "pass" : "fail";
  j["pass"] = r.count(CheckStatus::Pass);
  j["fail"] = r.count(CheckStatus::Fail);
  j["flagged"] = r.count(CheckStatus::Flagged);
  j["max_residual"] = r.max_residual();
  if (timing) j["elapsed_ms"] = r.elapsed_ms();
  Json checks = Json::array();
  for (const auto& c : r.checks()) {
    Json e = Json::object();
    e["name"] = c.name;
    e["status"] = std::string(to_string(c.status));
    e["residual"] = c.residual;
    e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  return j;
}

std::string render_text(const VerificationReport& r, bool timing) {
  std::ostringstream out;
  out << r.subject() << '\n';
  for (const auto& c : r.checks()) {
    std::string status = "[" + std::string(to_string(c.status)) + "]";
    status.resize(10, ' ');
    out << "  " << status << c.name;
    if (c.residual != 0.0) out << "  residual " << format_double(c.residual);
    if (!c.detail.empty()) out << "  (" << c.detail << ')';
    out << '\n';
  }
  out << (r.passed() ? "PASS" : "FAIL") << ": " << r.count(CheckStatus::Pass) << " passed, "
      << r.count(CheckStatus::Fail) << " failed, " << r.count(CheckStatus::Flagged) << " flagged, max residual "
      << format_double(r.max_residual()) << '\n';
  if (timing) out << "elapsed " << format_double(r.elapsed_ms()) << " ms\n";
  return out.str();
}

}  // namespace opgrid::io
