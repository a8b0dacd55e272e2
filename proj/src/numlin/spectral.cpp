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

#include "opgrid/numlin/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "opgrid/errors.hpp"

namespace opgrid {

namespace {

void require_finite(const ApproxMatrix& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (!std::isfinite(a(i, j).real()) || !std::isfinite(a(i, j).imag())) {
        throw NumericError("non-finite matrix entry");
      }
    }
  }
}

double off_mass(const ApproxMatrix& a) {
  double s = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < j; ++i) s += std::norm(a(i, j));
  }
  return std::sqrt(2.0 * s);
}

}  // namespace

HermitianEigen jacobi_eigen(const ApproxMatrix& in, double tol, int max_sweeps) {
  if (in.rows() != in.cols()) throw DimensionError("jacobi_eigen: matrix not square");
  require_finite(in);
  const Eigen::Index n = in.rows();

  ApproxMatrix a = in.triangularView<Eigen::Upper>();
  a.triangularView<Eigen::StrictlyLower>() = a.adjoint();
  for (Eigen::Index i = 0; i < n; ++i) a(i, i) = a(i, i).real();

  HermitianEigen out;
  out.vectors = ApproxMatrix::Identity(n, n);
  const double scale = std::max(a.norm(), 1.0);

  while (off_mass(a) > tol * scale) {
    if (out.sweeps == max_sweeps) throw NumericError("jacobi_eigen: no convergence");
    ++out.sweeps;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const std::complex<double> apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        // Phase-rotate to a real symmetric 2x2 problem, then a classical rotation.
        const std::complex<double> phase = apq / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // Columns p, q of the unitary G.
        const std::complex<double> gpp = c;
        const std::complex<double> gqp = -s * std::conj(phase);
        const std::complex<double> gpq = s;
        const std::complex<double> gqq = c * std::conj(phase);

        for (Eigen::Index i = 0; i < n; ++i) {  // a <- a G
          const std::complex<double> xp = a(i, p);
          const std::complex<double> xq = a(i, q);
          a(i, p) = xp * gpp + xq * gqp;
          a(i, q) = xp * gpq + xq * gqq;
        }
        for (Eigen::Index j = 0; j < n; ++j) {  // a <- G* a
          const std::complex<double> xp = a(p, j);
          const std::complex<double> xq = a(q, j);
          a(p, j) = std::conj(gpp) * xp + std::conj(gqp) * xq;
          a(q, j) = std::conj(gpq) * xp + std::conj(gqq) * xq;
        }
        for (Eigen::Index i = 0; i < n; ++i) {  // V <- V G
          const std::complex<double> xp = out.vectors(i, p);
          const std::complex<double> xq = out.vectors(i, q);
          out.vectors(i, p) = xp * gpp + xq * gqp;
          out.vectors(i, q) = xp * gpq + xq * gqq;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index x, Eigen::Index y) { return a(x, x).real() > a(y, y).real(); });
  out.values.resize(n);
  ApproxMatrix sorted(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values(i) = a(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(i)]).real();
    sorted.col(i) = out.vectors.col(order[static_cast<std::size_t>(i)]);
  }
  out.vectors = std::move(sorted);
  return out;
}

Eigen::VectorXd singular_values(const ApproxMatrix& x) {
  require_finite(x);
  const bool wide = x.rows() <= x.cols();
  const ApproxMatrix gram = wide ? ApproxMatrix(x * x.adjoint()) : ApproxMatrix(x.adjoint() * x);
  const HermitianEigen eig = jacobi_eigen(gram);
  Eigen::VectorXd sv(eig.values.size());
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    sv(i) = wide ? (x.adjoint() * eig.vectors.col(i)).norm() : (x * eig.vectors.col(i)).norm();
  }
  std::sort(sv.data(), sv.data() + sv.size(), std::greater<>());
  return sv;
}

double operator_norm(const ApproxMatrix& x) {
  if (x.size() == 0) return 0.0;
  return singular_values(x)(0);
}

double trace_norm(const ApproxMatrix& x) {
  if (x.size() == 0) return 0.0;
  return singular_values(x).sum();
}

}  // namespace opgrid
