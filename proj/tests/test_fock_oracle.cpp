// Copyright 2026 The sympdd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <complex>

#include <Eigen/Eigenvalues>

#include "doctest.h"
#include "oracles.hpp"
#include "sympdd/error.hpp"
#include "sympdd/fock_oracle.hpp"

using namespace sympdd;
using C = std::complex<double>;

namespace {

ComplexMatrix annihilation(int d) {
  ComplexMatrix a = ComplexMatrix::Zero(d, d);
  for (int k = 1; k < d; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  return a;
}

// a (x) 1 and 1 (x) a on d^2 states.
ComplexMatrix kron(const ComplexMatrix& x, const ComplexMatrix& y) {
  ComplexMatrix out(x.rows() * y.rows(), x.cols() * y.cols());
  for (Eigen::Index r = 0; r < x.rows(); ++r) {
    for (Eigen::Index c = 0; c < x.cols(); ++c) {
      out.block(r * y.rows(), c * y.cols(), y.rows(), y.cols()) = x(r, c) * y;
    }
  }
  return out;
}

// Largest entry of m on states with every occupation below `limit`.
double low_block_max(const ComplexMatrix& m, int d, int limit, int modes) {
  double worst = 0.0;
  const auto low = [&](Eigen::Index idx) {
    return modes == 1 ? idx < limit : (idx / d < limit && idx % d < limit);
  };
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (low(r) && low(c)) worst = std::max(worst, std::abs(m(r, c)));
    }
  }
  return worst;
}

}  // namespace

TEST_CASE("ladder and quadratures") {
  const ComplexMatrix a2 = ladder_operator(2);
  CHECK(a2(0, 1) == C(1.0, 0.0));
  CHECK(a2(1, 0) == C(0.0, 0.0));
  CHECK(a2(0, 0) == C(0.0, 0.0));
  CHECK((ladder_operator(6) - annihilation(6)).norm() == 0.0);

  const TruncatedMode q = build_quadratures(1, 20);
  CHECK(q.dim() == 20);
  CHECK((q.x[0] - q.x[0].adjoint()).norm() == 0.0);
  CHECK((q.p[0] - q.p[0].adjoint()).norm() < 1e-15);
  // <0|x^2|0> = <0|p^2|0> = 1/2.
  CHECK(std::abs((q.x[0] * q.x[0])(0, 0) - 0.5) < 1e-15);
  CHECK(std::abs((q.p[0] * q.p[0])(0, 0) - 0.5) < 1e-15);
  CHECK(commutator_defect(q) < 1e-10);
  CHECK(commutator_defect(build_quadratures(2, 10)) < 1e-10);

  // Mode 0 is the most significant tensor factor.
  const TruncatedMode q2 = build_quadratures(2, 5);
  const ComplexMatrix x1 = (annihilation(5) + annihilation(5).adjoint()) / std::sqrt(2.0);
  CHECK((q2.x[0] - kron(x1, ComplexMatrix::Identity(5, 5))).norm() < 1e-15);
  CHECK((q2.x[1] - kron(ComplexMatrix::Identity(5, 5), x1)).norm() < 1e-15);
  CHECK(&q2.quadrature(3) == &q2.p[1]);
  CHECK_THROWS_AS(q2.quadrature(4), InvalidDimension);
}

TEST_CASE("size limits") {
  CHECK_THROWS_AS(ladder_operator(0), InvalidDimension);
  CHECK_THROWS_AS(build_quadratures(1, 3), InvalidDimension);
  CHECK_THROWS_AS(build_quadratures(3, 4), InvalidDimension);
  CHECK_THROWS_AS(build_quadratures(2, 65), SizeLimitError);
  CHECK_NOTHROW(build_quadratures(2, 64));
  CHECK_THROWS_AS(heisenberg_check(Matrix::Identity(3, 3), 1.0, 10), InvalidDimension);
}

TEST_CASE("free evolution") {
  const auto r = heisenberg_check(Matrix::Zero(2, 2), 1.0, 10);
  CHECK(r.defect < 1e-14);
  CHECK(r.unitarity_defect < 1e-14);
  CHECK(r.top_level_leakage < 1e-14);
}

TEST_CASE("oscillator against the closed form") {
  // H = w (n + 1/2) is diagonal in the Fock basis, so U is a phase per level
  // and x(t) = x cos(wt) + p sin(wt).
  const double w = 0.8;
  const double t = 1.3;
  const int d = 20;
  const ComplexMatrix a = annihilation(d);
  const ComplexMatrix x = (a + a.adjoint()) / std::sqrt(2.0);
  const ComplexMatrix p = C(0.0, -1.0) * (a - a.adjoint()) / std::sqrt(2.0);
  Eigen::VectorXcd phase(d);
  for (int k = 0; k < d; ++k) phase(k) = std::exp(C(0.0, -w * t * (k + 0.5)));
  const ComplexMatrix u = phase.asDiagonal();
  const ComplexMatrix lhs = u.adjoint() * x * u;
  const ComplexMatrix rhs = std::cos(w * t) * x + std::sin(w * t) * p;
  CHECK(low_block_max(lhs - rhs, d, d, 1) < 1e-13);

  const auto r = heisenberg_check(w * Matrix::Identity(2, 2), t, d);
  CHECK(r.defect < 1e-10);
  CHECK(r.unitarity_defect < 1e-12);
}

TEST_CASE("beamsplitter against the mode-mixing formula") {
  const double g = 0.7;
  const double t = 0.9;
  const int d = 12;
  const ComplexMatrix a1 = annihilation(d);
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  const ComplexMatrix a = kron(a1, id);
  const ComplexMatrix b = kron(id, a1);
  // g (x1 x2 + p1 p2) = g (a^dag b + a b^dag).
  const ComplexMatrix h = g * (a.adjoint() * b + a * b.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(h);
  Eigen::VectorXcd phase(d * d);
  for (int k = 0; k < d * d; ++k) phase(k) = std::exp(C(0.0, -t * eig.eigenvalues()(k)));
  const ComplexMatrix u = eig.eigenvectors() * phase.asDiagonal() * eig.eigenvectors().adjoint();
  const ComplexMatrix lhs = u.adjoint() * a * u;
  const ComplexMatrix rhs = std::cos(g * t) * a - C(0.0, 1.0) * std::sin(g * t) * b;
  CHECK(low_block_max(lhs - rhs, d, d / 2, 2) < 1e-12);

  const auto r = heisenberg_check(beamsplitter_preset(g), t, d);
  CHECK(r.defect < 1e-10);
  CHECK(r.unitarity_defect < 1e-12);
  // Number conserving: nothing reaches the top level from below d/2.
  CHECK(r.top_level_leakage < 1e-20);
}

TEST_CASE("squeezing converges with the cutoff") {
  Matrix a = Matrix::Zero(2, 2);
  a(0, 0) = 0.1;
  a(1, 1) = -0.1;
  double prev = 1e300;
  for (int d : {10, 20, 40}) {
    const auto r = heisenberg_check(a, 0.5, d);
    CHECK(r.defect < prev);
    prev = r.defect;
  }
  CHECK(prev < 1e-10);
}

TEST_CASE("environment preset") {
  const auto pm = vitali_preset(1.0, {0.5, 2.0}, {0.1, -0.2});
  CHECK(pm.n_s() == 1);
  CHECK(pm.n_e() == 2);
  CHECK(pm.k() == doctest::Approx(0.2));
  const Matrix a = pm.a();
  CHECK(a(0, 0) == 1.0);
  CHECK(a(3, 3) == 0.5);
  CHECK(a(4, 4) == 2.0);
  CHECK(a(1, 3) == 0.1);
  CHECK(a(0, 4) == -0.2);
  CHECK(a == a.transpose());
  CHECK_THROWS_AS(vitali_preset(1.0, {0.5}, {}), InvalidDimension);
}
