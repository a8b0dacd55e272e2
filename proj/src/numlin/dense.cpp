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

#include "opgrid/numlin/dense.hpp"

#include <algorithm>
#include <cmath>

namespace opgrid {

ApproxMatrix to_approx(const ExactMatrix& a) {
  ApproxMatrix r(a.rows(), a.cols());
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) r(i, j) = a(i, j).to_complex();
  }
  return r;
}

double max_abs(const ExactMatrix& a) {
  double best = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (!a(i, j).is_zero()) best = std::max(best, std::sqrt(a(i, j).norm2().get_d()));
    }
  }
  return best;
}

double residual(const ExactMatrix& a, const ExactMatrix& b) {
  detail::require_same_shape(a, b, "residual");
  return max_abs(a - b);
}

Eigen::Index nonzeros(const ExactMatrix& a) {
  Eigen::Index n = 0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) n += a(i, j).is_zero() ? 0 : 1;
  }
  return n;
}

ExactScalar trace(const ExactMatrix& a) {
  ExactScalar t;
  for (Eigen::Index i = 0; i < std::min(a.rows(), a.cols()); ++i) t += a(i, i);
  return t;
}

}  // namespace opgrid
