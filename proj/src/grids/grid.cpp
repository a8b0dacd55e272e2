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

#include "opgrid/grids/grid.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <tuple>
#include <utility>

namespace opgrid {

namespace {

const ExactScalar kHalf(mpq_class(1, 2));

std::string pair_label(const char* stem, int i, int j) {
  return std::string(stem) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

// Expected value of a triple product as a combination of grid elements.
struct Expected {
  std::vector<std::pair<std::size_t, ExactScalar>> terms;
  bool ambiguous = false;
  std::string note;

  bool zero() const { return terms.empty() && !ambiguous; }
};

Expected single(std::size_t index, ExactScalar coeff) {
  Expected e;
  e.terms.emplace_back(index, std::move(coeff));
  return e;
}

// Merges candidate values from several pattern matches.
Expected agree(const std::vector<Expected>& candidates, const std::string& note) {
  if (candidates.empty()) return {};
  for (const auto& c : candidates) {
    if (c.terms != candidates.front().terms) {
      Expected e;
      e.ambiguous = true;
      e.note = note;
      return e;
    }
  }
  return candidates.front();
}

// Oriented view of a hermitian or symplectic element: (x, y) with the sign that
// relates the element's matrix to u_xy.
struct Oriented {
  int x;
  int y;
  int sign;
};

std::vector<Oriented> orientations(const GridElement& e, GridKind kind) {
  if (e.i == e.j) return {{e.i, e.j, 1}};
  const int back = kind == GridKind::Symplectic ? -1 : 1;
  return {{e.i, e.j, 1}, {e.j, e.i, back}};
}

class GridIndex {
 public:
  explicit GridIndex(const Grid& g) {
    for (std::size_t n = 0; n < g.elements.size(); ++n) {
      const auto& e = g.elements[n];
      index_.emplace(std::make_tuple(e.i, e.j, e.role), n);
    }
  }

  std::optional<std::size_t> find(int i, int j, SpinRole role = SpinRole::Plain) const {
    auto it = index_.find(std::make_tuple(i, j, role));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  // Unordered pair lookup for hermitian/symplectic grids, with the sign of u_ij
  // relative to the stored element.
  std::optional<std::pair<std::size_t, int>> find_pair(int i, int j, GridKind kind) const {
    if (auto n = find(std::min(i, j), std::max(i, j))) {
      const int sign = (kind == GridKind::Symplectic && i > j) ? -1 : 1;
      return std::make_pair(*n, sign);
    }
    return std::nullopt;
  }

 private:
  std::map<std::tuple<int, int, SpinRole>, std::size_t> index_;
};

std::optional<std::size_t> spin_partner(const Grid& g, const GridIndex& idx, std::size_t b) {
  const auto& e = g.elements[b];
  switch (e.role) {
    case SpinRole::Plain: return idx.find(e.i, 0, SpinRole::Tilde);
    case SpinRole::Tilde: return idx.find(e.i, 0, SpinRole::Plain);
    case SpinRole::Center: return b;
  }
  return std::nullopt;
}

// Rules for products not fixed by the generic relation calculus.
Expected kind_rule(const Grid& g, const GridIndex& idx, std::size_t a, std::size_t b, std::size_t c) {
  const auto& A = g.elements[a];
  const auto& B = g.elements[b];
  const auto& C = g.elements[c];
  switch (g.kind) {
    case GridKind::Rectangular: {
      // {u_jk u_jl u_il} = u_ik / 2 for i ≠ j, k ≠ l, in either outer order.
      std::vector<Expected> found;
      for (const auto& [x, z] : {std::pair{&A, &C}, std::pair{&C, &A}}) {
        if (x->i == B.i && z->j == B.j && z->i != x->i && x->j != B.j) {
          if (auto n = idx.find(z->i, x->j)) found.push_back(single(*n, kHalf));
        }
      }
      return agree(found, "rectangular quadrangle matches disagree");
    }
    case GridKind::Hermitian: {
      // Chain rule {u_ij u_jk u_kl} = u_il/2 (i ≠ l) or u_ii (i = l).
      std::vector<Expected> found;
      for (const auto& oa : orientations(A, g.kind)) {
        for (const auto& ob : orientations(B, g.kind)) {
          if (ob.x != oa.y) continue;
          for (const auto& oc : orientations(C, g.kind)) {
            if (oc.x != ob.y) continue;
            if (auto n = idx.find_pair(oa.x, oc.y, g.kind)) {
              found.push_back(single(n->first, oa.x == oc.y ? ExactScalar(1) : kHalf));
            }
          }
        }
      }
      return agree(found, "hermitian chain orientations disagree");
    }
    case GridKind::Symplectic: {
      // 2{u_ij u_il u_kl} = u_kj for distinct i, j, k, l.
      std::vector<Expected> found;
      for (const auto& oa : orientations(A, g.kind)) {
        for (const auto& ob : orientations(B, g.kind)) {
          if (ob.x != oa.x) continue;
          for (const auto& oc : orientations(C, g.kind)) {
            if (oc.y != ob.y) continue;
            const std::set<int> distinct{oa.x, oa.y, oc.x, oc.y};
            if (distinct.size() != 4) continue;
            if (auto n = idx.find_pair(oc.x, oa.y, g.kind)) {
              const int sign = oa.sign * ob.sign * oc.sign * n->second;
              found.push_back(single(n->first, kHalf * ExactScalar(sign)));
            }
          }
        }
      }
      return agree(found, "symplectic quadrangle orientations disagree");
    }
    case GridKind::Spin: {
      if (a == c && A.role == SpinRole::Center) {
        // {u_0 u_i u_0} = −ũ_i, {u_0 ũ_i u_0} = −u_i.
        if (auto p = spin_partner(g, idx, b)) return single(*p, ExactScalar(-1));
        return {};
      }
      const bool pair = A.role != SpinRole::Center && C.role != SpinRole::Center && A.i == C.i &&
                        A.role != C.role;
      if (pair && b != a && b != c) {
        if (auto p = spin_partner(g, idx, b)) return single(*p, -kHalf);
      }
      return {};
    }
    case GridKind::RankOne: return {};
  }
  return {};
}

Expected expected_triple(const Grid& g, const GridIndex& idx, std::size_t a, std::size_t b, std::size_t c) {
  if (a == b && b == c) return single(a, ExactScalar(1));
  if (a == b || b == c) {
    // {x x y} with y the remaining element.
    const std::size_t x = b;
    const std::size_t y = a == b ? c : a;
    switch (expected_relation(g, x, y)) {
      case GridRelation::Orthogonal: return {};
      case GridRelation::Colinear: return single(y, kHalf);
      case GridRelation::GovernsFirstOverSecond: return single(y, ExactScalar(1));
      case GridRelation::GovernsSecondOverFirst: return single(y, kHalf);
      default: return {};
    }
  }
  if (a == c && expected_minimal(g, a)) return {};
  return kind_rule(g, idx, a, b, c);
}

ExactMatrix materialize(const Grid& g, const Expected& e) {
  const auto& shape = g.elements.front().mat;
  ExactMatrix r = ExactMatrix::Zero(shape.rows(), shape.cols());
  for (const auto& [n, coeff] : e.terms) r += g.elements[n].mat * coeff;
  return r;
}

}  // namespace

std::string_view to_string(GridKind k) {
  switch (k) {
    case GridKind::Rectangular: return "rectangular";
    case GridKind::Hermitian: return "hermitian";
    case GridKind::Symplectic: return "symplectic";
    case GridKind::Spin: return "spin";
    case GridKind::RankOne: return "rank-one";
  }
  return "rank-one";
}

std::vector<ExactMatrix> Grid::matrices() const {
  std::vector<ExactMatrix> out;
  out.reserve(elements.size());
  for (const auto& e : elements) out.push_back(e.mat);
  return out;
}

std::size_t Grid::find(int i, int j, SpinRole role) const {
  for (std::size_t n = 0; n < elements.size(); ++n) {
    if (elements[n].i == i && elements[n].j == j && elements[n].role == role) return n;
  }
  throw ArgumentError("grid has no element " + pair_label("", i, j));
}

Grid rectangular_grid(int p, int q) {
  if (p < 1 || q < 1) throw ArgumentError("rectangular_grid: p, q must be positive");
  Grid g;
  g.kind = GridKind::Rectangular;
  g.p = p;
  g.q = q;
  for (int i = 1; i <= p; ++i) {
    for (int j = 1; j <= q; ++j) {
      g.elements.push_back({pair_label("u", i, j), i, j, SpinRole::Plain, unit<ExactScalar>(p, q, i - 1, j - 1)});
    }
  }
  return g;
}

Grid hermitian_grid(int m) {
  if (m < 2) throw ArgumentError("hermitian_grid: m must be at least 2");
  Grid g;
  g.kind = GridKind::Hermitian;
  g.p = m;
  for (int i = 1; i <= m; ++i) {
    for (int j = i; j <= m; ++j) {
      ExactMatrix u = unit<ExactScalar>(m, m, i - 1, j - 1);
      if (i != j) u += unit<ExactScalar>(m, m, j - 1, i - 1);
      g.elements.push_back({pair_label("U", i, j), i, j, SpinRole::Plain, std::move(u)});
    }
  }
  return g;
}

Grid symplectic_grid(int m) {
  if (m < 4) throw ArgumentError("symplectic_grid: m must be at least 4");
  Grid g;
  g.kind = GridKind::Symplectic;
  g.p = m;
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 1; j <= m; ++j) {
      ExactMatrix u = unit<ExactScalar>(m, m, i - 1, j - 1) - unit<ExactScalar>(m, m, j - 1, i - 1);
      g.elements.push_back({pair_label("U", i, j), i, j, SpinRole::Plain, std::move(u)});
    }
  }
  return g;
}

Grid rank_one_grid(const std::vector<ExactMatrix>& elements) {
  Grid g;
  g.kind = GridKind::RankOne;
  g.p = static_cast<int>(elements.size());
  for (std::size_t n = 0; n < elements.size(); ++n) {
    const int i = static_cast<int>(n) + 1;
    g.elements.push_back({"u" + std::to_string(i), i, 0, SpinRole::Plain, elements[n]});
  }
  return g;
}

ExactMatrix pauli(int which) {
  ExactMatrix s = ExactMatrix::Zero(2, 2);
  switch (which) {
    case 1:
      s(0, 1) = 1;
      s(1, 0) = 1;
      break;
    case 2:
      s(0, 1) = -ExactScalar::i();
      s(1, 0) = ExactScalar::i();
      break;
    case 3:
      s(0, 0) = 1;
      s(1, 1) = -1;
      break;
    default: throw ArgumentError("pauli: index must be 1, 2 or 3");
  }
  return s;
}

namespace {

// σ3^{⊗n} ⊗ mid ⊗ I^{⊗(factors−n−1)}.
ExactMatrix chain(int n, const ExactMatrix& mid, int factors) {
  ExactMatrix r = identity<ExactScalar>(1);
  for (int f = 0; f < n; ++f) r = kron<ExactScalar>(r, pauli(3));
  r = kron<ExactScalar>(r, mid);
  for (int f = n + 1; f < factors; ++f) r = kron<ExactScalar>(r, identity<ExactScalar>(2));
  return r;
}

ExactMatrix sigma3_chain(int factors) {
  ExactMatrix r = identity<ExactScalar>(1);
  for (int f = 0; f < factors; ++f) r = kron<ExactScalar>(r, pauli(3));
  return r;
}

}  // namespace

std::vector<ExactMatrix> spin_system(int k) {
  if (k < 2 || k > 12) throw CapacityError("spin_system: k must lie in 2..12");
  const int factors = (k + 1) / 2;
  std::vector<ExactMatrix> s;
  for (int idx = 0; idx < k; ++idx) s.push_back(chain(idx / 2, pauli(idx % 2 == 0 ? 1 : 2), factors));
  return s;
}

Grid spin_grid(int r, bool odd) {
  if (r < 2) throw ArgumentError("spin_grid: r must be at least 2");
  if (r > 6) throw CapacityError("spin_grid: r must be at most 6");
  const auto s = spin_system(2 * r);
  const ExactScalar i = ExactScalar::i();
  const std::vector<ExactScalar> phases = odd ? std::vector<ExactScalar>{i, ExactScalar(1), -i, ExactScalar(-1)}
                                              : std::vector<ExactScalar>{ExactScalar(1)};
  for (const int tilde_sign : {1, -1}) {
    for (const auto& phase : phases) {
      Grid g;
      g.kind = GridKind::Spin;
      g.p = r;
      g.odd = odd;
      for (int j = 1; j <= r; ++j) {
        const ExactMatrix& a = s[static_cast<std::size_t>(2 * j - 2)];
        const ExactMatrix& b = s[static_cast<std::size_t>(2 * j - 1)];
        ExactMatrix u = (a - b * i) * kHalf;
        ExactMatrix ut = (a + b * i) * (kHalf * ExactScalar(-tilde_sign));
        g.elements.push_back({"u" + std::to_string(j), j, 0, SpinRole::Plain, std::move(u)});
        g.elements.push_back({"~u" + std::to_string(j), j, 0, SpinRole::Tilde, std::move(ut)});
      }
      if (odd) g.elements.push_back({"u0", 0, 0, SpinRole::Center, sigma3_chain(r) * phase});
      if (verify_grid(g).passed()) return g;
    }
  }
  throw ConstructionError("spin_grid: no sign choice satisfies the spin grid table");
}

GridRelation expected_relation(const Grid& g, std::size_t a, std::size_t b) {
  if (a == b) return GridRelation::Equal;
  const auto& A = g.elements[a];
  const auto& B = g.elements[b];
  switch (g.kind) {
    case GridKind::Rectangular:
      return (A.i != B.i && A.j != B.j) ? GridRelation::Orthogonal : GridRelation::Colinear;
    case GridKind::Hermitian: {
      const std::set<int> sa{A.i, A.j};
      const std::set<int> sb{B.i, B.j};
      std::vector<int> common;
      std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
      if (common.empty()) return GridRelation::Orthogonal;
      if (sa.size() == 2 && sb.size() == 1) return GridRelation::GovernsFirstOverSecond;
      if (sa.size() == 1 && sb.size() == 2) return GridRelation::GovernsSecondOverFirst;
      return GridRelation::Colinear;
    }
    case GridKind::Symplectic: {
      const bool share = A.i == B.i || A.i == B.j || A.j == B.i || A.j == B.j;
      return share ? GridRelation::Colinear : GridRelation::Orthogonal;
    }
    case GridKind::Spin:
      if (A.role == SpinRole::Center) return GridRelation::GovernsFirstOverSecond;
      if (B.role == SpinRole::Center) return GridRelation::GovernsSecondOverFirst;
      return A.i == B.i ? GridRelation::Orthogonal : GridRelation::Colinear;
    case GridKind::RankOne: return GridRelation::Colinear;
  }
  return GridRelation::Unclassified;
}

bool expected_minimal(const Grid& g, std::size_t a) {
  const auto& e = g.elements[a];
  switch (g.kind) {
    case GridKind::Hermitian: return e.i == e.j;
    case GridKind::Spin: return e.role != SpinRole::Center;
    default: return true;
  }
}

VerificationReport verify_grid(const Grid& g) {
  VerificationReport report(std::string(to_string(g.kind)) + " grid (" + std::to_string(g.size()) +
                            " elements)");
  const std::size_t n = g.size();
  if (n == 0) {
    report.pass("empty family", "vacuous");
    return report;
  }

  bool shapes_ok = true;
  for (const auto& e : g.elements) {
    shapes_ok = shapes_ok && e.mat.rows() == g.elements.front().mat.rows() &&
                e.mat.cols() == g.elements.front().mat.cols();
  }
  report.require(shapes_ok, "common shape");
  if (!shapes_ok) return report;

  std::vector<bool> isometric(n);
  std::vector<std::optional<PartialIsometry>> family(n);
  IdentityTally pis("partial isometry");
  for (std::size_t a = 0; a < n; ++a) {
    const auto& e = g.elements[a];
    isometric[a] = !is_zero(e.mat) && PartialIsometry::check(e.mat);
    pis.record(isometric[a], e.label);
    if (isometric[a]) family[a].emplace(e.mat);
  }
  pis.finish(report);

  std::vector<PartialIsometry> members;
  for (const auto& f : family) {
    if (f) members.push_back(*f);
  }
  IdentityTally minimal("minimality");
  for (std::size_t a = 0; a < n; ++a) {
    if (!expected_minimal(g, a)) continue;
    minimal.record(family[a] && is_minimal_in_family(*family[a], members), g.elements[a].label);
  }
  minimal.finish(report);

  IdentityTally relations("pairwise relation");
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const std::string inst = g.elements[a].label + " vs " + g.elements[b].label;
      if (!family[a] || !family[b]) {
        relations.record(false, inst + ": not partial isometries");
        continue;
      }
      const GridRelation want = expected_relation(g, a, b);
      const GridRelation got = classify_relation(*family[a], *family[b]);
      relations.record(got == want, inst + ": expected " + std::string(to_string(want)) + ", got " +
                                        std::string(to_string(got)));
    }
  }
  relations.finish(report);

  const GridIndex idx(g);
  IdentityTally nonzero("nonzero triple products");
  IdentityTally zero("vanishing triple products");
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> zero_triples;
  auto label = [&](std::size_t a, std::size_t b, std::size_t c) {
    return "{" + g.elements[a].label + " " + g.elements[b].label + " " + g.elements[c].label + "}";
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = a; c < n; ++c) {
        const Expected want = expected_triple(g, idx, a, b, c);
        if (want.ambiguous) {
          nonzero.flag(label(a, b, c) + ": " + want.note);
        } else if (want.zero()) {
          zero_triples.emplace_back(a, b, c);
        } else {
          nonzero.record_equal(triple_product(g.elements[a].mat, g.elements[b].mat, g.elements[c].mat),
                               materialize(g, want), label(a, b, c));
        }
      }
    }
  }
  if (n > kExhaustiveTripleLimit && zero_triples.size() > kTripleSample) {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    for (std::size_t t = 0; t < kTripleSample; ++t) {
      const std::size_t pick = t + static_cast<std::size_t>(rng() % (zero_triples.size() - t));
      std::swap(zero_triples[t], zero_triples[pick]);
    }
    zero_triples.resize(kTripleSample);
  }
  for (const auto& [a, b, c] : zero_triples) {
    zero.record(is_zero(triple_product(g.elements[a].mat, g.elements[b].mat, g.elements[c].mat)), label(a, b, c));
  }
  nonzero.finish(report);
  zero.finish(report);
  return report;
}

}  // namespace opgrid
