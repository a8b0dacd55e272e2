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

#include "opgrid/grids/transforms.hpp"

#include <utility>

#include "opgrid/numlin/span.hpp"

namespace opgrid {

namespace {

const ExactScalar kHalf(mpq_class(1, 2));

std::string idx(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

void throw_on_failure(const VerificationReport& report, const char* what) {
  for (const auto& c : report.checks()) {
    if (c.status == CheckStatus::Fail) {
      throw TransformError(std::string(what) + ": identity failed: " + c.name +
                           (c.detail.empty() ? "" : " " + c.detail));
    }
  }
}

void require_kind(const Grid& g, GridKind kind, const char* what) {
  if (g.kind != kind) throw TransformError(std::string(what) + ": wrong grid kind");
  const auto r = verify_grid(g);
  if (!r.passed()) throw TransformError(std::string(what) + ": grid fails its table: " + r.summary());
}

ExactMatrix mm(const ExactMatrix& a, const ExactMatrix& b) { return mul<ExactScalar>(a, b); }

}  // namespace

SpinSystemResult spin_to_spin_system(const Grid& g) {
  require_kind(g, GridKind::Spin, "spin_to_spin_system");
  const ExactScalar i = ExactScalar::i();
  auto u = [&](int j) -> const ExactMatrix& { return g.elements[g.find(j, 0, SpinRole::Plain)].mat; };
  auto ut = [&](int j) -> const ExactMatrix& { return g.elements[g.find(j, 0, SpinRole::Tilde)].mat; };

  const PartialIsometry v((u(1) + ut(1)) * i);
  std::vector<ExactMatrix> system;
  std::vector<std::string> labels;
  for (int j = 2; j <= g.p; ++j) {
    system.push_back(u(j) + ut(j));
    labels.push_back("s" + std::to_string(j));
  }
  for (int j = 1; j <= g.p; ++j) {
    system.push_back((u(j) - ut(j)) * i);
    labels.push_back("t" + std::to_string(j));
  }
  if (g.odd) {
    system.push_back(g.elements[g.find(0, 0, SpinRole::Center)].mat);
    labels.push_back("u0");
  }

  VerificationReport report("spin grid to spin system (r=" + std::to_string(g.p) + (g.odd ? ", odd)" : ")"));
  std::vector<ExactMatrix> all = system;
  std::vector<std::string> all_labels = labels;
  all.push_back(v.matrix());
  all_labels.push_back("v");

  IdentityTally peirce("Peirce-2 membership P2(v)a = a");
  IdentityTally selfadj("isotope self-adjoint v a* v = a");
  IdentityTally unit_law("isotope unit a.v = v.a = a");
  IdentityTally anti("isotope anticommutator a.b + b.a = 2 delta v");
  const ExactMatrix zero = ExactMatrix::Zero(v.rows(), v.cols());
  for (std::size_t a = 0; a < all.size(); ++a) {
    peirce.record_equal(peirce_project(v, all[a], 2), all[a], all_labels[a]);
    selfadj.record_equal(isotope_involution(v, all[a]), all[a], all_labels[a]);
    unit_law.record(isotope_product(v, all[a], v.matrix()) == all[a] &&
                        isotope_product(v, v.matrix(), all[a]) == all[a],
                    all_labels[a]);
    for (std::size_t b = a; b < system.size(); ++b) {
      const ExactMatrix sum = isotope_product(v, all[a], all[b]) + isotope_product(v, all[b], all[a]);
      anti.record_equal(sum, a == b ? ExactMatrix(v.matrix() * ExactScalar(2)) : zero,
                        all_labels[a] + "." + all_labels[b]);
    }
  }
  peirce.finish(report);
  selfadj.finish(report);
  unit_law.finish(report);
  anti.finish(report);
  const std::size_t want_dim = static_cast<std::size_t>(2 * g.p + (g.odd ? 1 : 0));
  const std::size_t dim = exact_rank(all);
  report.require(dim == want_dim, "span dimension",
                 "rank " + std::to_string(dim) + ", expected " + std::to_string(want_dim));
  throw_on_failure(report, "spin_to_spin_system");
  return {v, std::move(system), std::move(labels), std::move(report)};
}

MatrixUnits hermitian_to_matrix_units(const Grid& g) {
  require_kind(g, GridKind::Hermitian, "hermitian_to_matrix_units");
  const int m = g.p;
  auto u = [&](int i, int j) -> const ExactMatrix& {
    return g.elements[g.find(std::min(i, j), std::max(i, j))].mat;
  };
  ExactMatrix vm = ExactMatrix::Zero(u(1, 1).rows(), u(1, 1).cols());
  for (int i = 1; i <= m; ++i) vm += u(i, i);
  const PartialIsometry v(vm);

  MatrixUnits out;
  out.m = m;
  out.v = vm;
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) out.e.push_back(i == j ? u(i, i) : isotope_product(v, u(i, i), u(i, j)));
  }

  VerificationReport report("hermitian grid to matrix units (m=" + std::to_string(m) + ")");
  IdentityTally sharp("e_ij# = e_ji");
  IdentityTally prod("e_ij.e_kl = delta_jk e_il");
  IdentityTally recon("u_ij = e_ij + e_ji");
  IdentityTally intertwine("u_ii.u_ij = u_ij.u_jj");
  const ExactMatrix zero = ExactMatrix::Zero(vm.rows(), vm.cols());
  ExactMatrix diag_sum = zero;
  for (int i = 1; i <= m; ++i) {
    diag_sum += out.at(i, i);
    for (int j = 1; j <= m; ++j) {
      sharp.record_equal(isotope_involution(v, out.at(i, j)), out.at(j, i), idx(i, j));
      if (i != j) {
        recon.record_equal(out.at(i, j) + out.at(j, i), u(i, j), idx(i, j));
        intertwine.record_equal(isotope_product(v, u(i, i), u(i, j)), isotope_product(v, u(i, j), u(j, j)),
                                idx(i, j));
      }
      for (int k = 1; k <= m; ++k) {
        for (int l = 1; l <= m; ++l) {
          prod.record_equal(isotope_product(v, out.at(i, j), out.at(k, l)), j == k ? out.at(i, l) : zero,
                            idx(i, j) + idx(k, l));
        }
      }
    }
  }
  sharp.finish(report);
  prod.finish(report);
  report.require_equal("sum e_ii = v", diag_sum, vm);
  recon.finish(report);
  intertwine.finish(report);
  throw_on_failure(report, "hermitian_to_matrix_units");
  out.report = std::move(report);
  return out;
}

MatrixUnits symplectic_to_matrix_units(const Grid& g) {
  if (g.kind == GridKind::Symplectic && g.p < 5) {
    throw TransformError("symplectic_to_matrix_units: requires m >= 5");
  }
  require_kind(g, GridKind::Symplectic, "symplectic_to_matrix_units");
  const int m = g.p;
  // u_ij for any ordered pair of distinct indices.
  auto u = [&](int i, int j) -> ExactMatrix {
    const ExactMatrix& s = g.elements[g.find(std::min(i, j), std::max(i, j))].mat;
    return i < j ? s : ExactMatrix(-s);
  };

  VerificationReport report("symplectic grid to matrix units (m=" + std::to_string(m) + ")");
  std::vector<ExactMatrix> diag;
  IdentityTally well_defined("e_ii independent of the admissible pair (j, m)");
  for (int i = 1; i <= m; ++i) {
    std::optional<ExactMatrix> first;
    for (int j = 1; j <= m; ++j) {
      for (int k = 1; k <= m; ++k) {
        if (j == i || k == i || j == k) continue;
        ExactMatrix e = ternary_product(u(i, j), u(j, k), u(i, k));
        if (!first) {
          first = std::move(e);
        } else {
          well_defined.record_equal(e, *first, "i=" + std::to_string(i) + " via " + idx(j, k));
        }
      }
    }
    diag.push_back(*first);
  }
  well_defined.finish(report);
  throw_on_failure(report, "symplectic_to_matrix_units");

  MatrixUnits out;
  out.m = m;
  out.v = ExactMatrix::Zero(diag.front().rows(), diag.front().cols());
  for (const auto& e : diag) out.v += e;
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      const ExactMatrix& ei = diag[static_cast<std::size_t>(i - 1)];
      const ExactMatrix& ej = diag[static_cast<std::size_t>(j - 1)];
      if (i == j) {
        out.e.push_back(ei);
      } else {
        out.e.push_back(mm(mm(mm(mm(ei, adjoint(ei)), u(i, j)), adjoint(ej)), ej));
      }
    }
  }

  const ExactMatrix& v = out.v;
  const ExactMatrix zero = ExactMatrix::Zero(v.rows(), v.cols());
  IdentityTally recon("u_ij = e_ij - e_ji");
  IdentityTally prod("e_ij v* e_lk = delta_jl e_ik");
  IdentityTally invol("v e_ij* v = e_ji");
  IdentityTally orth("e_ii* e_jj = 0 and e_ii e_jj* = 0");
  IdentityTally kill("e_ii u_ij* e_ii = 0");
  IdentityTally half("{e_ii e_ii u_ij} = u_ij / 2");
  IdentityTally perp("u_ij orthogonal to e_kk");
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      const ExactMatrix& eij = out.at(i, j);
      invol.record_equal(ternary_product(v, eij, v), out.at(j, i), idx(i, j));
      for (int l = 1; l <= m; ++l) {
        for (int k = 1; k <= m; ++k) {
          prod.record_equal(ternary_product(eij, v, out.at(l, k)), j == l ? out.at(i, k) : zero,
                            idx(i, j) + idx(l, k));
        }
      }
      if (i == j) continue;
      const ExactMatrix uij = u(i, j);
      const ExactMatrix& eii = out.at(i, i);
      recon.record_equal(eij - out.at(j, i), uij, idx(i, j));
      orth.record(is_zero(mm(adjoint(eii), out.at(j, j))) && is_zero(mm(eii, adjoint(out.at(j, j)))), idx(i, j));
      kill.record(is_zero(ternary_product(eii, uij, eii)), idx(i, j));
      half.record_equal(triple_product(eii, eii, uij), uij * kHalf, idx(i, j));
      for (int k = 1; k <= m; ++k) {
        if (k == i || k == j) continue;
        const ExactMatrix& ekk = out.at(k, k);
        perp.record(is_zero(mm(adjoint(uij), ekk)) && is_zero(mm(uij, adjoint(ekk))), idx(i, j) + " k=" + std::to_string(k));
      }
    }
  }
  recon.finish(report);
  prod.finish(report);
  invol.finish(report);
  orth.finish(report);
  kill.finish(report);
  half.finish(report);
  perp.finish(report);
  throw_on_failure(report, "symplectic_to_matrix_units");
  out.report = std::move(report);
  return out;
}

}  // namespace opgrid
