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

#include "opgrid/hnk/uij.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "opgrid/errors.hpp"
#include "opgrid/triple/triple.hpp"

namespace opgrid {

namespace {

const ExactScalar kHalf(mpq_class(1, 2));

ExactMatrix mm(const ExactMatrix& a, const ExactMatrix& b) { return mul<ExactScalar>(a, b); }

Indices require_balanced(const RankOneRealization& real, const Combination& I, const Combination& J) {
  const Indices ind = indices(real);
  const int n = real.n();
  if (ind.right + ind.left != n + 1) {
    throw DimensionError("u_IJ: requires i_R + i_L = n + 1, got " + std::to_string(ind.right) + " + " +
                         std::to_string(ind.left));
  }
  if (I.n() != n || J.n() != n || I.size() != ind.right - 1 || J.size() != ind.left - 1) {
    throw DimensionError("u_IJ: need |I| = " + std::to_string(ind.right - 1) + " and |J| = " +
                         std::to_string(ind.left - 1) + " over 1.." + std::to_string(n));
  }
  return ind;
}

void require_permutation(const std::vector<int>& order, const Combination& set, const char* what) {
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != set.members()) throw ArgumentError(std::string("u_IJ: ") + what + " order is not a permutation of " + set.to_string());
}

std::string pair_name(const Combination& I, const Combination& J) { return "(" + I.to_string() + "," + J.to_string() + ")"; }

}  // namespace

ExactMatrix build_one(const RankOneRealization& real, const Combination& I, int c, const Combination& J) {
  ExactMatrix r = real.u(c);
  if (!I.empty()) r = mm(support_product(real, Side::Right, I), r);
  if (!J.empty()) r = mm(r, support_product(real, Side::Left, J));
  return r;
}

ExactMatrix build_uIJ(const RankOneRealization& real, const Combination& I, const Combination& J,
                      const std::vector<int>& c_order, const std::vector<int>& d_order) {
  require_balanced(real, I, J);
  const Combination C = I.unite(J).complement();
  const Combination D = I.intersect(J);
  require_permutation(c_order, C, "c");
  require_permutation(d_order, D, "d");
  ExactMatrix r = real.u(c_order.front());
  for (std::size_t t = 0; t < d_order.size(); ++t) {
    r = mm(mm(r, adjoint(real.u(d_order[t]))), real.u(c_order[t + 1]));
  }
  const Combination left = I.minus(J);
  const Combination right = J.minus(I);
  if (!left.empty()) r = mm(support_product(real, Side::Right, left), r);
  if (!right.empty()) r = mm(r, support_product(real, Side::Left, right));
  return r;
}

ExactMatrix build_uIJ(const RankOneRealization& real, const Combination& I, const Combination& J) {
  return build_uIJ(real, I, J, I.unite(J).complement().members(), I.intersect(J).members());
}

ExactMatrix product_of_ones(const RankOneRealization& real, const std::vector<OneFactor>& ones) {
  ExactMatrix r;
  bool first = true;
  for (const auto& f : ones) {
    ExactMatrix m = build_one(real, f.I, f.c, f.J);
    if (f.starred) m = adjoint(m);
    r = first ? std::move(m) : mm(r, m);
    first = false;
  }
  return r;
}

std::vector<OneFactor> decompose_into_ones(const RankOneRealization& real, const Combination& I,
                                           const Combination& J, const std::vector<int>& c_order,
                                           const std::vector<int>& d_order) {
  require_balanced(real, I, J);
  const Combination C = I.unite(J).complement();
  const Combination D = I.intersect(J);
  require_permutation(c_order, C, "c");
  require_permutation(d_order, D, "d");

  std::vector<OneFactor> ones;
  Combination Jt = J;
  for (std::size_t t = 0; t < c_order.size(); ++t) {
    const int c = c_order[t];
    if (Jt.contains(c)) throw DecompositionError("decompose_into_ones: c_" + std::to_string(t + 1) + " lies in J_t");
    const Combination It = Jt.with(c).complement();
    ones.push_back({It, c, Jt, false, signature_one(It, c, Jt)});
    if (t == d_order.size()) break;
    const int d = d_order[t];
    if (It.contains(d)) throw DecompositionError("decompose_into_ones: d_" + std::to_string(t + 1) + " lies in K_t");
    const Combination L = Jt.with(c).without(d);
    ones.push_back({It, d, L, true, signature_one(It, d, L)});
    Jt = L;
  }
  if (ones.back().I != I) {
    throw DecompositionError("decompose_into_ones: final I_{s+1} = " + ones.back().I.to_string() + " differs from I = " +
                             I.to_string());
  }
  for (const auto& f : ones) {
    if (is_zero(build_one(real, f.I, f.c, f.J))) {
      throw DecompositionError("decompose_into_ones: factor " + pair_name(f.I, f.J) + " with middle " +
                               std::to_string(f.c) + " vanishes");
    }
  }
  if (product_of_ones(real, ones) != build_uIJ(real, I, J, c_order, d_order)) {
    throw DecompositionError("decompose_into_ones: product of ones differs from u_IJ");
  }
  return ones;
}

int signature_general(const RankOneRealization& real, const Combination& I, const Combination& J) {
  const auto ones =
      decompose_into_ones(real, I, J, I.unite(J).complement().members(), I.intersect(J).members());
  int sign = 1;
  for (const auto& f : ones) sign *= f.sign;
  return sign;
}

VerificationReport verify_uIJ_grid(const RankOneRealization& real) {
  const int n = real.n();
  if (n > kMaxUijN) throw CapacityError("verify_uIJ_grid: n exceeds " + std::to_string(kMaxUijN));
  const Indices ind = indices(real);
  if (ind.right + ind.left != n + 1) throw ArgumentError("verify_uIJ_grid: requires i_R + i_L = n + 1");
  VerificationReport report("u_IJ grid (n=" + std::to_string(n) + ", i_R=" + std::to_string(ind.right) +
                            ", i_L=" + std::to_string(ind.left) + ")");

  const auto Is = combinations(n, ind.right - 1);
  const auto Js = combinations(n, ind.left - 1);
  const std::size_t nI = Is.size();
  const std::size_t nJ = Js.size();
  std::vector<ExactMatrix> u(nI * nJ);
  std::vector<ExactMatrix> w(nI * nJ);
  std::vector<int> eps(nI * nJ, 1);
  auto at = [&](std::size_t i, std::size_t j) { return i * nJ + j; };

  IdentityTally decomp("decomposition into ones reproduces u_IJ");
  for (std::size_t i = 0; i < nI; ++i) {
    for (std::size_t j = 0; j < nJ; ++j) {
      const Combination& I = Is[i];
      const Combination& J = Js[j];
      u[at(i, j)] = build_uIJ(real, I, J);
      try {
        const auto c_order = I.unite(J).complement().members();
        const auto d_order = I.intersect(J).members();
        const auto ones = decompose_into_ones(real, I, J, c_order, d_order);
        const auto again = decompose_into_ones(real, I, J, c_order, d_order);
        bool same = ones.size() == again.size();
        for (std::size_t t = 0; same && t < ones.size(); ++t) {
          same = ones[t].I == again[t].I && ones[t].J == again[t].J && ones[t].c == again[t].c;
        }
        bool linked = ones.front().J == J;
        for (std::size_t t = 1; t + 1 < ones.size(); t += 2) {
          linked = linked && ones[t].I == ones[t - 1].I && ones[t + 1].J == ones[t].J &&
                   ones[t].J == ones[t - 1].J.with(ones[t - 1].c).without(ones[t].c);
        }
        decomp.record(same && linked, pair_name(I, J) + (same ? "" : " not unique") + (linked ? "" : " constraints violated"));
        int sign = 1;
        for (const auto& f : ones) sign *= f.sign;
        eps[at(i, j)] = sign;
      } catch (const Error& e) {
        decomp.record(false, pair_name(I, J) + ": " + e.what());
      }
      w[at(i, j)] = u[at(i, j)] * ExactScalar(eps[at(i, j)]);
    }
  }
  decomp.finish(report);

  IdentityTally pis("u_IJ is a nonzero partial isometry");
  IdentityTally minimal("minimality u_IJ u_I'J'* u_IJ = 0");
  IdentityTally orth("orthogonality for I != I' and J != J'");
  IdentityTally colin("colinearity when exactly one index agrees");
  IdentityTally assoc("associative orthogonality");
  for (std::size_t a = 0; a < u.size(); ++a) {
    const ExactMatrix& x = u[a];
    const std::string xa = pair_name(Is[a / nJ], Js[a % nJ]);
    pis.record(!is_zero(x) && ternary_product(x, x, x) == x, xa);
    for (std::size_t b = 0; b < u.size(); ++b) {
      if (a == b) continue;
      const ExactMatrix& y = u[b];
      const std::string xy = xa + " vs " + pair_name(Is[b / nJ], Js[b % nJ]);
      const bool sameI = a / nJ == b / nJ;
      const bool sameJ = a % nJ == b % nJ;
      minimal.record(is_zero(ternary_product(x, y, x)), xy);
      const bool left_zero = is_zero(mm(x, adjoint(y)));
      const bool right_zero = is_zero(mm(adjoint(x), y));
      if (!sameI && !sameJ) orth.record(left_zero && right_zero, xy);
      if (sameI != sameJ && a < b) {
        colin.record(triple_product(x, x, y) == y * kHalf && triple_product(y, y, x) == x * kHalf, xy);
      }
      if (!sameI) assoc.record(left_zero, xy + " (u u'* = 0)");
      if (!sameJ) assoc.record(right_zero, xy + " (u* u' = 0)");
    }
  }
  pis.finish(report);
  minimal.finish(report);
  orth.finish(report);
  colin.finish(report);
  assoc.finish(report);

  IdentityTally weak("weak quadrangle u_IJ u_IJ'* u_I'J' = +-u_I'J");
  IdentityTally signed_q("signed quadrangle identity");
  for (std::size_t i = 0; i < nI; ++i) {
    for (std::size_t i2 = 0; i2 < nI; ++i2) {
      for (std::size_t j = 0; j < nJ; ++j) {
        for (std::size_t j2 = 0; j2 < nJ; ++j2) {
          const std::string inst = "I=" + Is[i].to_string() + " I'=" + Is[i2].to_string() + " J=" + Js[j].to_string() +
                                   " J'=" + Js[j2].to_string();
          const ExactMatrix p = ternary_product(u[at(i, j)], u[at(i, j2)], u[at(i2, j2)]);
          const ExactMatrix& target = u[at(i2, j)];
          weak.record(p == target || p == ExactMatrix(-target), inst);
          const ExactMatrix q = ternary_product(w[at(i, j)], w[at(i, j2)], w[at(i2, j2)]);
          if (q == w[at(i2, j)]) {
            signed_q.record(true, inst);
          } else {
            const bool ones_only = Is[i].disjoint(Js[j]) && Is[i].disjoint(Js[j2]) && Is[i2].disjoint(Js[j2]);
            if (ones_only) {
              signed_q.record(false, inst, residual(q, w[at(i2, j)]));
            } else {
              signed_q.flag(inst + " (outside the ones-triple derivation)", residual(q, w[at(i2, j)]));
            }
          }
        }
      }
    }
  }
  weak.finish(report);
  signed_q.finish(report);

  IdentityTally sum("u_c = sum of u_IJ over disjoint I, J avoiding c");
  for (int c = 1; c <= n; ++c) {
    ExactMatrix total = ExactMatrix::Zero(real.rows(), real.cols());
    for (std::size_t i = 0; i < nI; ++i) {
      for (std::size_t j = 0; j < nJ; ++j) {
        if (Is[i].disjoint(Js[j]) && !Is[i].contains(c) && !Js[j].contains(c)) total += u[at(i, j)];
      }
    }
    sum.record_equal(total, real.u(c), "c=" + std::to_string(c));
  }
  sum.finish(report);
  return report;
}

VerificationReport verify_hnk_signatures(const HnkSpace& space) {
  VerificationReport report("signatures of H_" + std::to_string(space.n) + "^" + std::to_string(space.k));
  const RankOneRealization real = space.realization();
  IdentityTally tally("eps(IJ) u_IJ = E_JI");
  for (const auto& I : space.cols) {
    for (const auto& J : space.rows) {
      try {
        const ExactMatrix x = build_uIJ(real, I, J) * ExactScalar(signature_general(real, I, J));
        tally.record_equal(x, space.unit_at(J, I), pair_name(I, J));
      } catch (const Error& e) {
        tally.record(false, pair_name(I, J) + ": " + e.what());
      }
    }
  }
  tally.finish(report);
  return report;
}

VerificationReport verify_signature_coherence(const RankOneRealization& real) {
  const int n = real.n();
  const Indices ind = indices(real);
  if (ind.right + ind.left != n + 1) throw ArgumentError("verify_signature_coherence: requires i_R + i_L = n + 1");
  VerificationReport report("signature coherence (n=" + std::to_string(n) + ")");
  IdentityTally unsigned_rel("u_IJ' u_IJ* u_I'J = -u_I''J' u_I''J''* u_I'J''");
  IdentityTally sign_rel("eps(IJ')eps(IJ)eps(I'J) = -eps(I''J')eps(I''J'')eps(I'J'')");
  IdentityTally signed_rel("signed ones-triple equality");
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::pair<ExactMatrix, int>> cache;
  auto get = [&](const Combination& I, const Combination& J) -> const std::pair<ExactMatrix, int>& {
    auto key = std::make_pair(I.mask(), J.mask());
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, std::make_pair(build_uIJ(real, I, J), signature_general(real, I, J))).first;
    return it->second;
  };
  for (const auto& I : combinations(n, ind.right - 1)) {
    for (const auto& J : combinations(n, ind.left - 1)) {
      if (!I.disjoint(J)) continue;
      const int b = I.unite(J).complement().members().front();
      for (int a : I.members()) {
        for (int c : J.members()) {
          const Combination I1 = I.without(a).with(b);
          const Combination J1 = J.without(c).with(b);
          const Combination I2 = I.with(c).without(a);
          const Combination J2 = J.with(a).without(c);
          const std::string inst = "I=" + I.to_string() + " J=" + J.to_string() + " a=" + std::to_string(a) +
                                   " b=" + std::to_string(b) + " c=" + std::to_string(c);
          const auto& [uIJ1, eIJ1] = get(I, J1);
          const auto& [uIJ, eIJ] = get(I, J);
          const auto& [uI1J, eI1J] = get(I1, J);
          const auto& [uI2J1, eI2J1] = get(I2, J1);
          const auto& [uI2J2, eI2J2] = get(I2, J2);
          const auto& [uI1J2, eI1J2] = get(I1, J2);
          const ExactMatrix lhs = ternary_product(uIJ1, uIJ, uI1J);
          const ExactMatrix rhs = ternary_product(uI2J1, uI2J2, uI1J2);
          unsigned_rel.record_equal(lhs, ExactMatrix(-rhs), inst);
          sign_rel.record(eIJ1 * eIJ * eI1J == -(eI2J1 * eI2J2 * eI1J2), inst);
          signed_rel.record_equal(lhs * ExactScalar(eIJ1 * eIJ * eI1J), rhs * ExactScalar(eI2J1 * eI2J2 * eI1J2), inst);
        }
      }
    }
  }
  unsigned_rel.finish(report);
  sign_rel.finish(report);
  signed_rel.finish(report);
  return report;
}

VerificationReport verify_support_sums(const HnkSpace& space) {
  VerificationReport report("support sums of H_" + std::to_string(space.n) + "^" + std::to_string(space.k));
  const auto R = static_cast<Eigen::Index>(space.rows.size());
  const auto C = static_cast<Eigen::Index>(space.cols.size());
  ExactMatrix left = ExactMatrix::Zero(R, R);
  ExactMatrix right = ExactMatrix::Zero(C, C);
  for (const auto& u : space.basis) {
    left += mm(u, adjoint(u));
    right += mm(adjoint(u), u);
  }
  report.require_equal("sum u_i u_i* = k I", left, identity<ExactScalar>(R) * ExactScalar(space.k));
  report.require_equal("sum u_i* u_i = (n-k+1) I", right, identity<ExactScalar>(C) * ExactScalar(space.n - space.k + 1));
  return report;
}

}  // namespace opgrid
