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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "opgrid/errors.hpp"
#include "opgrid/grids/grid.hpp"
#include "opgrid/numlin/dense.hpp"
#include "opgrid/numlin/gaussian_rational.hpp"
#include "opgrid/numlin/span.hpp"
#include "opgrid/numlin/spectral.hpp"
#include "opgrid/random.hpp"
#include "support/oracles.hpp"

using namespace opgrid;
using oracle::E;
using oracle::mat;

namespace {

const ExactScalar kI = ExactScalar::i();

}  // namespace

TEST(GaussianRational, LowestTermsPositiveDenominator) {
  const ExactScalar x = ExactScalar::from_fractions(6, -4, 10, 15);
  EXPECT_EQ(x.real(), mpq_class(-3, 2));
  EXPECT_EQ(x.imag(), mpq_class(2, 3));
  EXPECT_GT(x.real().get_den(), 0);
  EXPECT_EQ(x.real().get_den(), 2);
}

TEST(GaussianRational, FieldIdentities) {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const ExactScalar a = random_scalar(rng, 9);
    const ExactScalar b = random_scalar(rng, 9);
    const ExactScalar c = random_scalar(rng, 9);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ((a * b).conjugate(), a.conjugate() * b.conjugate());
    EXPECT_EQ((a * a.conjugate()).real(), a.norm2());
    if (!b.is_zero()) {
      EXPECT_EQ((a / b) * b, a);
    }
  }
  EXPECT_EQ(kI * kI, ExactScalar(-1));
}

TEST(GaussianRational, DivisionByZeroThrows) {
  EXPECT_THROW(ExactScalar(1) / ExactScalar(0), ArgumentError);
  EXPECT_THROW(ExactScalar::from_fractions(1, 0), ArgumentError);
}

TEST(GaussianRational, Rendering) {
  EXPECT_EQ(ExactScalar::from_fractions(1, 2).to_string(), "1/2");
  EXPECT_EQ(kI.to_string(), "i");
  EXPECT_EQ(ExactScalar::from_fractions(0, 1, -1, 2).to_string(), "-i/2");
  EXPECT_EQ((ExactScalar(1) + kI).to_string(), "1+i");
  EXPECT_EQ(ExactScalar(0).to_string(), "0");
  EXPECT_EQ(ExactScalar(-3).to_string(), "-3");
}

TEST(Dense, AddAndShapeErrors) {
  Rng rng(1);
  const ExactMatrix x = random_exact(3, 4, rng);
  EXPECT_EQ(add(zeros<ExactScalar>(3, 4), x), x);
  EXPECT_EQ(add(E(2, 2, 1, 1), E(2, 2, 2, 2)), identity<ExactScalar>(2));
  // M_2 spin grid u_1 + ~u_1 with u_1 = E_21, ~u_1 = -E_12.
  EXPECT_EQ(add(E(2, 2, 2, 1), ExactMatrix(-E(2, 2, 1, 2))), mat({{0, -1}, {1, 0}}));
  EXPECT_THROW(add(x, random_exact(4, 3, rng)), DimensionError);
  EXPECT_THROW(sub(x, random_exact(3, 3, rng)), DimensionError);
  EXPECT_THROW(mul(x, random_exact(3, 3, rng)), DimensionError);
}

TEST(Dense, MatrixUnitProducts) {
  EXPECT_EQ(mul(E(2, 2, 1, 2), E(2, 2, 2, 1)), E(2, 2, 1, 1));
  EXPECT_TRUE(is_zero(mul(E(2, 2, 1, 2), E(2, 2, 1, 2))));
  EXPECT_EQ(mul(pauli(1), pauli(2)), ExactMatrix(pauli(3) * kI));
}

TEST(Dense, Adjoint) {
  EXPECT_EQ(adjoint(E(2, 2, 1, 2)), E(2, 2, 2, 1));
  EXPECT_EQ(adjoint(ExactMatrix(E(2, 2, 1, 1) * kI)), ExactMatrix(E(2, 2, 1, 1) * -kI));
  Rng rng(2);
  for (int t = 0; t < 20; ++t) {
    const ExactMatrix x = random_exact(3, 5, rng);
    EXPECT_EQ(adjoint(adjoint(x)), x);
    EXPECT_EQ(adjoint(x), oracle::naive_adjoint(x));
  }
}

TEST(Dense, Kronecker) {
  EXPECT_EQ(kron(identity<ExactScalar>(2), identity<ExactScalar>(2)), identity<ExactScalar>(4));
  const ExactMatrix s1 = pauli(1);
  const ExactMatrix want = block_diag<ExactScalar>({s1, ExactMatrix(-s1)});
  EXPECT_EQ(kron(pauli(3), s1), want);
  Rng rng(3);
  const ExactMatrix k = kron(random_exact(2, 2, rng), random_exact(4, 6, rng));
  EXPECT_EQ(k.rows(), 8);
  EXPECT_EQ(k.cols(), 12);
}

TEST(Dense, BlockAssembly) {
  const ExactMatrix d = block_diag<ExactScalar>({E(2, 2, 1, 1), E(2, 2, 1, 1)});
  EXPECT_EQ(d, ExactMatrix(E(4, 4, 1, 1) + E(4, 4, 3, 3)));
  Rng rng(4);
  const ExactMatrix x = random_exact(2, 3, rng);
  EXPECT_EQ(block_grid<ExactScalar>({{x}}), x);
  EXPECT_THROW(block_row<ExactScalar>({x, random_exact(3, 3, rng)}), DimensionError);
  EXPECT_THROW(block_col<ExactScalar>({x, random_exact(2, 2, rng)}), DimensionError);
}

// Random exact algebra at dimensions up to 12, checked against naive loops.
TEST(DenseProperty, ExactAssociativityAdjointAndMixedProduct) {
  Rng rng(20260101);
  for (int t = 0; t < 25; ++t) {
    const auto d = [&rng] { return static_cast<Eigen::Index>(uniform_int(rng, 1, 12)); };
    const Eigen::Index p = d(), q = d(), r = d(), s = d();
    const ExactMatrix a = random_exact(p, q, rng);
    const ExactMatrix b = random_exact(q, r, rng);
    const ExactMatrix c = random_exact(r, s, rng);
    EXPECT_EQ(mul(mul(a, b), c), mul(a, mul(b, c)));
    EXPECT_EQ(mul(a, b), oracle::naive_mul(a, b));
    EXPECT_EQ(adjoint(mul(a, b)), mul(adjoint(b), adjoint(a)));
  }
  for (int t = 0; t < 10; ++t) {
    const auto d = [&rng] { return static_cast<Eigen::Index>(uniform_int(rng, 1, 3)); };
    const Eigen::Index p = d(), q = d(), r = d(), s = d(), u = d(), w = d();
    const ExactMatrix a = random_exact(p, q, rng);
    const ExactMatrix b = random_exact(r, s, rng);
    const ExactMatrix c = random_exact(q, u, rng);
    const ExactMatrix e = random_exact(s, w, rng);
    EXPECT_EQ(kron(a, b), oracle::naive_kron(a, b));
    EXPECT_EQ(mul(kron(a, b), kron(c, e)), kron(mul(a, c), mul(b, e)));
  }
}

TEST(Spectral, BasicNorms) {
  EXPECT_NEAR(operator_norm(E(3, 3, 1, 1)), 1.0, 1e-12);
  EXPECT_NEAR(trace_norm(E(3, 3, 1, 1)), 1.0, 1e-12);
  const ExactMatrix u1 = mat({{0, 0, 0}, {0, 0, 1}, {0, -1, 0}});
  EXPECT_NEAR(trace_norm(u1), 2.0, 1e-12);
  EXPECT_NEAR(oracle::svd_values(to_approx(u1)).sum(), 2.0, 1e-12);
  EXPECT_DOUBLE_EQ(operator_norm(zeros<ExactScalar>(2, 3)), 0.0);
}

TEST(Spectral, WitnessMatricesFromTheThreeByNineDisplay) {
  const ExactMatrix a = mat({{0, -1, 0, 0, 0, -1, 0, 0, 0}, {1, 0, 0, 0, 0, 0, 0, 0, 1}, {0, 0, 0, 1, 0, 0, 0, -1, 0}});
  const ExactMatrix b = mat({{1, 0, 0, 0, 1, 0, 0, 0, 1}, {0, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 0}});
  EXPECT_NEAR(operator_norm(a), std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(operator_norm(b), std::sqrt(3.0), 1e-12);
}

TEST(Spectral, NonFiniteInputThrows) {
  ApproxMatrix x = ApproxMatrix::Zero(2, 2);
  x(0, 1) = {std::numeric_limits<double>::quiet_NaN(), 0.0};
  EXPECT_THROW(operator_norm(x), NumericError);
  x(0, 1) = {0.0, std::numeric_limits<double>::infinity()};
  EXPECT_THROW(trace_norm(x), NumericError);
  EXPECT_THROW(jacobi_eigen(x), NumericError);
}

TEST(SpectralProperty, AgreesWithEigenAndPowerIteration) {
  Rng rng(77);
  for (int t = 0; t < 40; ++t) {
    const auto rows = static_cast<Eigen::Index>(uniform_int(rng, 1, 16));
    const auto cols = static_cast<Eigen::Index>(uniform_int(rng, 1, 16));
    const ApproxMatrix x = random_approx(rows, cols, rng);
    const Eigen::VectorXd got = singular_values(x);
    const Eigen::VectorXd want = oracle::svd_values(x);
    ASSERT_EQ(got.size(), want.size());
    for (Eigen::Index i = 0; i < got.size(); ++i) EXPECT_NEAR(got(i), want(i), 1e-10);
    EXPECT_NEAR(operator_norm(x), oracle::eig_norm(x), 1e-10);
    EXPECT_NEAR(trace_norm(x), want.sum(), 1e-9);
    EXPECT_GE(trace_norm(x) + 1e-12, operator_norm(x));
  }
  for (Eigen::Index n : {32, 64}) {
    const ApproxMatrix x = random_approx(n, n, rng);
    EXPECT_NEAR(operator_norm(x), oracle::eig_norm(x), 1e-10);
    EXPECT_NEAR(operator_norm(x), oracle::power_norm(x), 1e-8);
  }
}

TEST(SpectralProperty, RankOneTraceNormEqualsOperatorNorm) {
  Rng rng(78);
  for (int t = 0; t < 30; ++t) {
    const ApproxMatrix u = random_approx(static_cast<Eigen::Index>(uniform_int(rng, 1, 8)), 1, rng);
    const ApproxMatrix v = random_approx(static_cast<Eigen::Index>(uniform_int(rng, 1, 8)), 1, rng);
    const ApproxMatrix x = u * v.adjoint();
    EXPECT_NEAR(trace_norm(x), operator_norm(x), 1e-10);
    EXPECT_NEAR(operator_norm(x), u.norm() * v.norm(), 1e-10);
    const ApproxMatrix y = x + random_approx(x.rows(), x.cols(), rng);
    if (std::min(y.rows(), y.cols()) > 1) {
      EXPECT_GT(trace_norm(y), operator_norm(y) + 1e-6);
    }
  }
}

TEST(SpectralProperty, TraceNormHomogeneous) {
  Rng rng(79);
  for (int t = 0; t < 20; ++t) {
    const ApproxMatrix x = random_approx(4, 5, rng);
    const std::complex<double> c(2.0 * uniform_unit(rng) - 1.0, 3.0 * uniform_unit(rng));
    EXPECT_NEAR(trace_norm(ApproxMatrix(c * x)), std::abs(c) * trace_norm(x), 1e-9);
  }
}

TEST(Span, RankAndCoordinates) {
  const std::vector<ExactMatrix> family = {E(2, 2, 1, 1), E(2, 2, 1, 2), ExactMatrix(E(2, 2, 1, 1) + E(2, 2, 1, 2))};
  EXPECT_EQ(exact_rank(family), 2u);
  const auto coords = span_coordinates({E(2, 2, 1, 1), E(2, 2, 1, 2)}, ExactMatrix(E(2, 2, 1, 1) * kI - E(2, 2, 1, 2)));
  ASSERT_TRUE(coords.has_value());
  EXPECT_EQ((*coords)[0], kI);
  EXPECT_EQ((*coords)[1], ExactScalar(-1));
  EXPECT_FALSE(in_span(family, E(2, 2, 2, 1)));
}
