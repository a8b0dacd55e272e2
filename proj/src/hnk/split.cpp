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

#include "opgrid/hnk/split.hpp"

#include <utility>

#include "opgrid/errors.hpp"
#include "opgrid/numlin/span.hpp"
#include "opgrid/triple/triple.hpp"

namespace opgrid {

namespace {

ExactMatrix mm(const ExactMatrix& a, const ExactMatrix& b) { return mul<ExactScalar>(a, b); }

void check_projection(VerificationReport& report, const ExactMatrix& p) {
  report.require(mm(p, p) == p && adjoint(p) == p, "p is an orthogonal projection");
}

// Cross orthogonality of two equally indexed families.
void check_cross(VerificationReport& report, const std::vector<ExactMatrix>& a, const std::vector<ExactMatrix>& b,
                 const std::vector<std::string>& labels) {
  IdentityTally tally("cross orthogonality (p u_i)((1-p) u_j)* = 0 and (p u_i)*((1-p) u_j) = 0");
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      tally.record(is_zero(mm(a[i], adjoint(b[j]))) && is_zero(mm(adjoint(a[i]), b[j])), labels[i] + "," + labels[j]);
    }
  }
  tally.finish(report);
}

// Exact check that u_a ↦ e_a extends to a ternary isomorphism of the spans:
// both families independent, span(u) ternary closed, and the ternary product
// coordinates transported to e agree with e_a e_b* e_c.
void check_ternary_isomorphism(VerificationReport& report, const std::string& name, const std::vector<ExactMatrix>& u,
                               const std::vector<ExactMatrix>& e) {
  report.require(exact_rank(u) == u.size() && exact_rank(e) == e.size(), name + ": both families independent");
  IdentityTally closed(name + ": ternary closure a b* c in span");
  IdentityTally iso(name + ": ternary products transported");
  for (std::size_t a = 0; a < u.size(); ++a) {
    for (std::size_t b = 0; b < u.size(); ++b) {
      for (std::size_t c = 0; c < u.size(); ++c) {
        const std::string inst = std::to_string(a + 1) + "," + std::to_string(b + 1) + "," + std::to_string(c + 1);
        const auto coords = span_coordinates(u, ternary_product(u[a], u[b], u[c]));
        closed.record(coords.has_value(), inst);
        if (!coords) continue;
        ExactMatrix image = ExactMatrix::Zero(e.front().rows(), e.front().cols());
        for (std::size_t t = 0; t < e.size(); ++t) {
          if (!(*coords)[t].is_zero()) image += e[t] * (*coords)[t];
        }
        iso.record_equal(image, ternary_product(e[a], e[b], e[c]), inst);
      }
    }
  }
  closed.finish(report);
  iso.finish(report);
}

Grid relabel(const Grid& g, std::vector<ExactMatrix> mats) {
  Grid out = g;
  for (std::size_t t = 0; t < mats.size(); ++t) out.elements[t].mat = std::move(mats[t]);
  return out;
}

}  // namespace

PeirceSplit peirce_split(const RankOneRealization& real) {
  const int n = real.n();
  const Indices ind = indices(real);
  ExactMatrix p = ExactMatrix::Zero(real.rows(), real.rows());
  for (const auto& J : combinations(n, ind.right)) p += support_product(real, Side::Right, J);
  const ExactMatrix q = identity<ExactScalar>(real.rows()) - p;

  std::vector<ExactMatrix> pu;
  std::vector<ExactMatrix> qu;
  std::vector<std::string> labels;
  std::size_t vanishing = 0;
  for (int j = 1; j <= n; ++j) {
    pu.push_back(mm(p, real.u(j)));
    qu.push_back(mm(q, real.u(j)));
    vanishing += is_zero(qu.back()) ? 1 : 0;
    labels.push_back("u" + std::to_string(j));
  }
  if (vanishing != 0 && vanishing != qu.size()) {
    throw ConstructionError("peirce_split: (1-p)u_j vanishes for some but not all j");
  }

  VerificationReport report("Peirce split by p_R (n=" + std::to_string(n) + ")");
  check_projection(report, p);
  RankOneRealization p_part(pu);
  const Indices pi = indices(p_part);
  report.merge(verify_grid(rank_one_grid(pu)), "pY: ");
  report.pass("pY indices", "(" + std::to_string(pi.right) + "," + std::to_string(pi.left) + ")");
  std::optional<RankOneRealization> q_part;
  if (vanishing == 0) {
    q_part.emplace(qu);
    const Indices qi = indices(*q_part);
    report.merge(verify_grid(rank_one_grid(qu)), "(1-p)Y: ");
    report.require(qi.right < pi.right, "i_R strictly drops on (1-p)Y",
                   "(" + std::to_string(qi.right) + "," + std::to_string(qi.left) + ")");
    check_cross(report, pu, qu, labels);
  } else {
    report.pass("(1-p)Y", "empty");
  }
  return {std::move(p), std::move(p_part), std::move(q_part), std::move(report)};
}

Grid diag_rect(int p, int q) {
  if (p < 2 || q < 2) throw ArgumentError("diag_rect: p, q must be at least 2");
  Grid g = rectangular_grid(p, q);
  for (auto& e : g.elements) {
    e.mat = block_diag<ExactScalar>({unit<ExactScalar>(p, q, e.i - 1, e.j - 1), unit<ExactScalar>(q, p, e.j - 1, e.i - 1)});
  }
  return g;
}

RectangularSplit rectangular_split(const Grid& g) {
  if (g.kind != GridKind::Rectangular || g.p < 2 || g.q < 2) {
    throw ArgumentError("rectangular_split: needs a rectangular grid with p, q >= 2");
  }
  const int P = g.p;
  const int Q = g.q;
  auto u = [&](int i, int j) -> const ExactMatrix& { return g.elements[g.find(i, j)].mat; };
  const Eigen::Index dim = u(1, 1).rows();

  VerificationReport report("rectangular split (" + std::to_string(P) + "x" + std::to_string(Q) + ")");
  report.merge(verify_grid(g), "Y: ");

  IdentityTally nondeg("non-degeneracy u_ik u_ij* != 0 and u_ik* u_ij != 0");
  for (int i = 1; i <= P; ++i) {
    for (int j = 1; j <= Q; ++j) {
      for (int k = 1; k <= Q; ++k) {
        if (j == k) continue;
        nondeg.record(!is_zero(mm(u(i, k), adjoint(u(i, j)))) && !is_zero(mm(adjoint(u(i, k)), u(i, j))),
                      "i=" + std::to_string(i) + " j=" + std::to_string(j) + " k=" + std::to_string(k));
      }
    }
  }
  nondeg.finish(report);

  ExactMatrix p = ExactMatrix::Zero(dim, dim);
  for (int i = 1; i <= P; ++i) {
    ExactMatrix prod = identity<ExactScalar>(dim);
    for (int k = 1; k <= Q; ++k) prod = mm(prod, mm(u(i, k), adjoint(u(i, k))));
    p += prod;
  }
  check_projection(report, p);
  const ExactMatrix q = identity<ExactScalar>(dim) - p;

  std::vector<ExactMatrix> pu;
  std::vector<ExactMatrix> qu;
  std::vector<ExactMatrix> e_pq;
  std::vector<ExactMatrix> e_qp;
  std::vector<std::string> labels;
  for (const auto& e : g.elements) {
    pu.push_back(mm(p, e.mat));
    qu.push_back(mm(q, e.mat));
    e_pq.push_back(unit<ExactScalar>(P, Q, e.i - 1, e.j - 1));
    e_qp.push_back(unit<ExactScalar>(Q, P, e.j - 1, e.i - 1));
    labels.push_back(e.label);
  }
  Grid p_part = relabel(g, pu);
  Grid q_part = relabel(g, qu);
  report.merge(verify_grid(p_part), "pY: ");
  report.merge(verify_grid(q_part), "(1-p)Y: ");

  IdentityTally p_assoc("pY: u_ik u_ij* = 0 for j != k");
  IdentityTally q_assoc("(1-p)Y: u_ik* u_ij = 0 for j != k");
  for (int i = 1; i <= P; ++i) {
    for (int j = 1; j <= Q; ++j) {
      for (int k = 1; k <= Q; ++k) {
        if (j == k) continue;
        const std::size_t a = g.find(i, k);
        const std::size_t b = g.find(i, j);
        const std::string inst = "i=" + std::to_string(i) + " j=" + std::to_string(j) + " k=" + std::to_string(k);
        p_assoc.record(is_zero(mm(pu[a], adjoint(pu[b]))), inst);
        q_assoc.record(is_zero(mm(adjoint(qu[a]), qu[b])), inst);
      }
    }
  }
  p_assoc.finish(report);
  q_assoc.finish(report);
  check_ternary_isomorphism(report, "pY -> E_ij (p x q)", pu, e_pq);
  check_ternary_isomorphism(report, "(1-p)Y -> E_ji (q x p)", qu, e_qp);
  check_cross(report, pu, qu, labels);
  return {std::move(p), std::move(p_part), std::move(q_part), std::move(report)};
}

}  // namespace opgrid
