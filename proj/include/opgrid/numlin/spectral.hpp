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

#include <vector>

#include <Eigen/Core>

#include "opgrid/numlin/dense.hpp"

namespace opgrid {

/// Eigen decomposition of a Hermitian matrix: a = V·diag(values)·V*.
struct HermitianEigen {
  Eigen::VectorXd values;  // descending
  ApproxMatrix vectors;    // columns, matching values
  int sweeps = 0;
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius mass is at most
/// tol·‖a‖_F. Only the upper triangle of `a` is read. Throws NumericError on
/// non-finite input or when `max_sweeps` is exhausted.
HermitianEigen jacobi_eigen(const ApproxMatrix& a, double tol = 1e-14, int max_sweeps = 100);

/// Singular values, descending, min(rows, cols) of them. Computed from the
/// Jacobi decomposition of the smaller Gram matrix; each value is taken as
/// ‖x* v‖ (or ‖x v‖) on its eigenvector so that tiny values keep full accuracy.
Eigen::VectorXd singular_values(const ApproxMatrix& x);

double operator_norm(const ApproxMatrix& x);
double trace_norm(const ApproxMatrix& x);

inline double operator_norm(const ExactMatrix& x) { return operator_norm(to_approx(x)); }
inline double trace_norm(const ExactMatrix& x) { return trace_norm(to_approx(x)); }

}  // namespace opgrid
