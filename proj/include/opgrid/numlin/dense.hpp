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

#include <complex>
#include <cstddef>
#include <string>
#include <type_traits>
#include <vector>

#include <Eigen/Core>

#include "opgrid/errors.hpp"
#include "opgrid/numlin/gaussian_rational.hpp"

namespace opgrid {

template <typename Scalar>
using Dense = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using ExactScalar = GaussianRational;
using ApproxScalar = std::complex<double>;
using ExactMatrix = Dense<ExactScalar>;
using ApproxMatrix = Dense<ApproxScalar>;

namespace detail {

inline bool scalar_is_zero(const GaussianRational& z) { return z.is_zero(); }
inline bool scalar_is_zero(const std::complex<double>& z) { return z == 0.0; }
inline bool scalar_is_zero(double z) { return z == 0.0; }

inline std::string shape(Eigen::Index r, Eigen::Index c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

template <typename A, typename B>
void require_same_shape(const A& a, const B& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(op) + ": shape " + shape(a.rows(), a.cols()) + " vs " +
                         shape(b.rows(), b.cols()));
  }
}

}  // namespace detail

template <typename Scalar>
Dense<Scalar> zeros(Eigen::Index rows, Eigen::Index cols) {
  return Dense<Scalar>::Zero(rows, cols);
}

template <typename Scalar>
Dense<Scalar> identity(Eigen::Index n) {
  return Dense<Scalar>::Identity(n, n);
}

/// Matrix unit with a single 1 at zero-based (i, j).
template <typename Scalar>
Dense<Scalar> unit(Eigen::Index rows, Eigen::Index cols, Eigen::Index i, Eigen::Index j) {
  Dense<Scalar> e = Dense<Scalar>::Zero(rows, cols);
  e(i, j) = Scalar(1);
  return e;
}

template <typename Scalar>
Dense<Scalar> add(const Dense<Scalar>& a, const Dense<Scalar>& b) {
  detail::require_same_shape(a, b, "add");
  return a + b;
}

template <typename Scalar>
Dense<Scalar> sub(const Dense<Scalar>& a, const Dense<Scalar>& b) {
  detail::require_same_shape(a, b, "sub");
  return a - b;
}

template <typename Scalar>
Dense<Scalar> scale(const Scalar& s, const Dense<Scalar>& a) {
  return a * s;
}

/// Checked product. Exact operands use a zero-skipping kernel.
template <typename Scalar>
Dense<Scalar> mul(const Dense<Scalar>& a, const Dense<Scalar>& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("mul: " + detail::shape(a.rows(), a.cols()) + " times " +
                         detail::shape(b.rows(), b.cols()));
  }
  if constexpr (std::is_same_v<Scalar, GaussianRational>) {
    Dense<Scalar> r = Dense<Scalar>::Zero(a.rows(), b.cols());
    for (Eigen::Index l = 0; l < a.cols(); ++l) {
      for (Eigen::Index i = 0; i < a.rows(); ++i) {
        if (detail::scalar_is_zero(a(i, l))) continue;
        for (Eigen::Index j = 0; j < b.cols(); ++j) {
          if (detail::scalar_is_zero(b(l, j))) continue;
          r(i, j) += a(i, l) * b(l, j);
        }
      }
    }
    return r;
  } else {
    return a * b;
  }
}

template <typename Scalar>
Dense<Scalar> adjoint(const Dense<Scalar>& a) {
  return a.adjoint();
}

/// (a⊗b)(i·b.rows + p, j·b.cols + q) = a(i, j)·b(p, q), zero-based.
template <typename Scalar>
Dense<Scalar> kron(const Dense<Scalar>& a, const Dense<Scalar>& b) {
  Dense<Scalar> r = Dense<Scalar>::Zero(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (detail::scalar_is_zero(a(i, j))) continue;
      r.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = b * a(i, j);
    }
  }
  return r;
}

template <typename Scalar>
Dense<Scalar> block_row(const std::vector<Dense<Scalar>>& parts) {
  if (parts.empty()) throw DimensionError("block_row: no parts");
  Eigen::Index cols = 0;
  for (const auto& p : parts) {
    if (p.rows() != parts.front().rows()) throw DimensionError("block_row: unequal row counts");
    cols += p.cols();
  }
  Dense<Scalar> r(parts.front().rows(), cols);
  Eigen::Index at = 0;
  for (const auto& p : parts) {
    r.middleCols(at, p.cols()) = p;
    at += p.cols();
  }
  return r;
}

template <typename Scalar>
Dense<Scalar> block_col(const std::vector<Dense<Scalar>>& parts) {
  if (parts.empty()) throw DimensionError("block_col: no parts");
  Eigen::Index rows = 0;
  for (const auto& p : parts) {
    if (p.cols() != parts.front().cols()) throw DimensionError("block_col: unequal column counts");
    rows += p.rows();
  }
  Dense<Scalar> r(rows, parts.front().cols());
  Eigen::Index at = 0;
  for (const auto& p : parts) {
    r.middleRows(at, p.rows()) = p;
    at += p.rows();
  }
  return r;
}

template <typename Scalar>
Dense<Scalar> block_diag(const std::vector<Dense<Scalar>>& parts) {
  Eigen::Index rows = 0;
  Eigen::Index cols = 0;
  for (const auto& p : parts) {
    rows += p.rows();
    cols += p.cols();
  }
  Dense<Scalar> r = Dense<Scalar>::Zero(rows, cols);
  Eigen::Index ri = 0;
  Eigen::Index ci = 0;
  for (const auto& p : parts) {
    r.block(ri, ci, p.rows(), p.cols()) = p;
    ri += p.rows();
    ci += p.cols();
  }
  return r;
}

/// Assembles a rectangular array of equally shaped blocks.
template <typename Scalar>
Dense<Scalar> block_grid(const std::vector<std::vector<Dense<Scalar>>>& blocks) {
  if (blocks.empty() || blocks.front().empty()) throw DimensionError("block_grid: empty");
  const Eigen::Index br = blocks.front().front().rows();
  const Eigen::Index bc = blocks.front().front().cols();
  const std::size_t ncols = blocks.front().size();
  Dense<Scalar> r(br * static_cast<Eigen::Index>(blocks.size()), bc * static_cast<Eigen::Index>(ncols));
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].size() != ncols) throw DimensionError("block_grid: ragged block rows");
    for (std::size_t j = 0; j < ncols; ++j) {
      const auto& b = blocks[i][j];
      if (b.rows() != br || b.cols() != bc) throw DimensionError("block_grid: unequal block shapes");
      r.block(static_cast<Eigen::Index>(i) * br, static_cast<Eigen::Index>(j) * bc, br, bc) = b;
    }
  }
  return r;
}

template <typename Scalar>
bool is_zero(const Dense<Scalar>& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (!detail::scalar_is_zero(a(i, j))) return false;
    }
  }
  return true;
}

/// One rounding per entry.
ApproxMatrix to_approx(const ExactMatrix& a);

/// Largest entrywise modulus of a − b, as a double; 0 iff equal.
double residual(const ExactMatrix& a, const ExactMatrix& b);

/// Largest entrywise modulus.
double max_abs(const ExactMatrix& a);

/// Number of nonzero entries.
Eigen::Index nonzeros(const ExactMatrix& a);

/// Exact trace of a.
ExactScalar trace(const ExactMatrix& a);

}  // namespace opgrid
