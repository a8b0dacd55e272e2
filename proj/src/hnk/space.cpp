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

#include "opgrid/hnk/space.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "opgrid/errors.hpp"
#include "opgrid/numlin/spectral.hpp"
#include "opgrid/random.hpp"
#include "opgrid/triple/triple.hpp"

namespace opgrid {

namespace {

Eigen::Index position(const std::vector<Combination>& list, const Combination& c) {
  auto it = std::lower_bound(list.begin(), list.end(), c);
  if (it == list.end() || *it != c) throw ArgumentError("combination " + c.to_string() + " does not index this space");
  return static_cast<Eigen::Index>(it - list.begin());
}

}  // namespace

Eigen::Index HnkSpace::row_of(const Combination& J) const { return position(rows, J); }
Eigen::Index HnkSpace::col_of(const Combination& I) const { return position(cols, I); }

ExactMatrix HnkSpace::unit_at(const Combination& J, const Combination& I) const {
  return unit<ExactScalar>(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()),
                           row_of(J), col_of(I));
}

std::vector<SignedUnit> HnkSpace::units(int i) const {
  std::vector<SignedUnit> out;
  const ExactMatrix& u = U(i);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const auto& z = u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
      if (!z.is_zero()) out.push_back({rows[r], cols[c], z == ExactScalar(1) ? 1 : -1});
    }
  }
  return out;
}

HnkSpace build_hnk(int n, int k) {
  if (n < 1 || k < 1 || k > n) throw ArgumentError("build_hnk: need 1 <= k <= n");
  if (n > kMaxHnkN) throw CapacityError("build_hnk: n exceeds " + std::to_string(kMaxHnkN));
  HnkSpace s;
  s.n = n;
  s.k = k;
  s.rows = combinations(n, n - k);
  s.cols = combinations(n, k - 1);
  s.multiplicity = binomial(n - 1, k - 1);
  const auto R = static_cast<Eigen::Index>(s.rows.size());
  const auto C = static_cast<Eigen::Index>(s.cols.size());
  for (int i = 1; i <= n; ++i) {
    ExactMatrix u = ExactMatrix::Zero(R, C);
    for (Eigen::Index r = 0; r < R; ++r) {
      const Combination& J = s.rows[static_cast<std::size_t>(r)];
      if (J.contains(i)) continue;
      const Combination I = J.with(i).complement();
      u(r, s.col_of(I)) = signature_one(I, i, J);
    }
    s.basis.push_back(std::move(u));
  }

  std::vector<PartialIsometry> family;
  for (const auto& u : s.basis) {
    if (nonzeros(u) != static_cast<Eigen::Index>(s.multiplicity)) {
      throw ConstructionError("build_hnk: basis element without m unit entries");
    }
    family.emplace_back(u);
  }
  if (n <= static_cast<int>(kFamilyRankCap) && family_rank(family) != 1) {
    throw ConstructionError("build_hnk: family rank is not 1");
  }
  const Indices ind = indices(s.realization());
  if (ind != Indices{k, n - k + 1}) throw ConstructionError("build_hnk: unexpected indices");
  return s;
}

ApproxMatrix hnk_projection(const HnkSpace& space, const ApproxMatrix& x) {
  const auto R = static_cast<Eigen::Index>(space.rows.size());
  const auto C = static_cast<Eigen::Index>(space.cols.size());
  if (x.rows() != R || x.cols() != C) throw DimensionError("hnk_projection: input shape does not match the space");
  ApproxMatrix out = ApproxMatrix::Zero(R, C);
  const double m = static_cast<double>(space.multiplicity);
  for (const auto& u : space.basis) {
    const ApproxMatrix ua = to_approx(u);
    const std::complex<double> pairing = (x * ua.adjoint()).trace();
    out += ua * (pairing / m);
  }
  return out;
}

VerificationReport verify_projection(const HnkSpace& space, int samples, std::uint64_t seed) {
  VerificationReport report("projection onto H_" + std::to_string(space.n) + "^" + std::to_string(space.k) + " (" +
                            std::to_string(samples) + " samples, seed " + std::to_string(seed) + ")");
  IdentityTally fixes("P U_i = U_i");
  for (int i = 1; i <= space.n; ++i) {
    const ApproxMatrix u = to_approx(space.U(i));
    const double r = (hnk_projection(space, u) - u).cwiseAbs().maxCoeff();
    fixes.record(r == 0.0, "U" + std::to_string(i), r);
  }
  fixes.finish(report);

  Rng rng(seed);
  double worst_idem = 0.0;
  double worst_ratio = 0.0;
  const auto R = static_cast<Eigen::Index>(space.rows.size());
  const auto C = static_cast<Eigen::Index>(space.cols.size());
  for (int t = 0; t < samples; ++t) {
    const ApproxMatrix x = random_approx(R, C, rng);
    const ApproxMatrix px = hnk_projection(space, x);
    worst_idem = std::max(worst_idem, (hnk_projection(space, px) - px).cwiseAbs().maxCoeff());
    worst_ratio = std::max(worst_ratio, operator_norm(px) / operator_norm(x));
  }
  std::ostringstream ratio;
  ratio.precision(17);
  ratio << "max |Px|/|x| = " << worst_ratio;
  std::ostringstream idem;
  idem.precision(17);
  idem << "max entry residual " << worst_idem;
  report.require(worst_idem <= kIdempotenceTolerance, "P(Px) = Px", idem.str(), worst_idem);
  report.require(worst_ratio <= 1.0 + kContractionTolerance, "|Px| <= |x| (1 + 1e-9)", ratio.str(),
                 std::max(0.0, worst_ratio - 1.0));
  return report;
}

TraceFormulaReport trace_formula_check(const HnkSpace& space, const std::vector<ExactScalar>& a) {
  if (static_cast<int>(a.size()) != space.n) throw DimensionError("trace_formula_check: need n coefficients");
  ExactMatrix x = ExactMatrix::Zero(static_cast<Eigen::Index>(space.rows.size()),
                                    static_cast<Eigen::Index>(space.cols.size()));
  mpq_class norm2 = 0;
  for (int i = 1; i <= space.n; ++i) {
    const auto& ai = a[static_cast<std::size_t>(i - 1)];
    if (!ai.is_zero()) x += space.U(i) * ai;
    norm2 += ai.norm2();
  }
  TraceFormulaReport r;
  r.multiplicity = space.multiplicity;
  r.eigenvalue = norm2;
  const ExactMatrix xx = mul<ExactScalar>(x, adjoint(x));
  const mpq_class m(static_cast<unsigned long>(space.multiplicity));
  r.trace_identity = trace(xx) == ExactScalar(mpq_class(m * norm2));
  r.single_eigenvalue = mul<ExactScalar>(xx, xx) == xx * ExactScalar(norm2);
  const double norm = std::sqrt(norm2.get_d());
  r.lhs = trace_norm(x);
  r.rhs = static_cast<double>(space.multiplicity) * norm;
  r.literal_value = std::sqrt(static_cast<double>(space.multiplicity)) * norm;
  r.residual = std::abs(r.lhs - r.rhs);
  r.literal_matches = std::abs(r.lhs - r.literal_value) <= 1e-9;
  return r;
}

RankOneRealization diag_hnk(int n, const std::vector<int>& ks) {
  if (ks.empty()) throw ArgumentError("diag_hnk: empty k list");
  for (std::size_t j = 0; j < ks.size(); ++j) {
    if (ks[j] < 1 || ks[j] > n) throw ArgumentError("diag_hnk: k outside 1..n");
    if (j > 0 && ks[j] >= ks[j - 1]) throw ArgumentError("diag_hnk: ks must be strictly decreasing");
  }
  std::vector<HnkSpace> spaces;
  for (int k : ks) spaces.push_back(build_hnk(n, k));
  std::vector<ExactMatrix> elements;
  for (int i = 1; i <= n; ++i) {
    std::vector<ExactMatrix> blocks;
    for (const auto& s : spaces) blocks.push_back(s.U(i));
    elements.push_back(block_diag(blocks));
  }
  return RankOneRealization(std::move(elements));
}

}  // namespace opgrid
