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

#include "sympdd/fock_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

#include "sympdd/error.hpp"

namespace sympdd {

namespace {

using Complex = std::complex<double>;

int ipow(int base, int exp) {
  int out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

// Occupation of `mode` in tensor index `idx`.
int occupation(int idx, int mode, int modes, int d) {
  return (idx / ipow(d, modes - 1 - mode)) % d;
}

ComplexMatrix embed(const ComplexMatrix& op, int mode, int modes, int d) {
  const int left = ipow(d, mode);
  const int right = ipow(d, modes - 1 - mode);
  const ComplexMatrix l = ComplexMatrix::Identity(left, left);
  const ComplexMatrix r = ComplexMatrix::Identity(right, right);
  return Eigen::kroneckerProduct(l, Eigen::kroneckerProduct(op, r).eval()).eval();
}

// Indices whose every occupation is below `limit`.
std::vector<int> low_states(int modes, int d, int limit) {
  std::vector<int> out;
  const int dim = ipow(d, modes);
  for (int idx = 0; idx < dim; ++idx) {
    bool keep = true;
    for (int m = 0; m < modes; ++m) keep = keep && occupation(idx, m, modes, d) < limit;
    if (keep) out.push_back(idx);
  }
  return out;
}

ComplexMatrix restrict(const ComplexMatrix& m, const std::vector<int>& idx) {
  const auto k = static_cast<Eigen::Index>(idx.size());
  ComplexMatrix out(k, k);
  for (Eigen::Index r = 0; r < k; ++r) {
    for (Eigen::Index c = 0; c < k; ++c) out(r, c) = m(idx[r], idx[c]);
  }
  return out;
}

}  // namespace

ComplexMatrix ladder_operator(int cutoff) {
  if (cutoff < 1) throw InvalidDimension("Fock cutoff must be positive");
  ComplexMatrix a = ComplexMatrix::Zero(cutoff, cutoff);
  for (int k = 1; k < cutoff; ++k) a(k - 1, k) = std::sqrt(static_cast<double>(k));
  return a;
}

int TruncatedMode::dim() const { return ipow(cutoff, modes); }

const ComplexMatrix& TruncatedMode::quadrature(int index) const {
  if (index < 0 || index >= 2 * modes) throw InvalidDimension("quadrature index out of range");
  return index < modes ? x[static_cast<std::size_t>(index)]
                       : p[static_cast<std::size_t>(index - modes)];
}

TruncatedMode build_quadratures(int modes, int cutoff) {
  if (modes < 1 || modes > 2) throw InvalidDimension("Fock oracle supports 1 or 2 modes");
  if (cutoff < 4) throw InvalidDimension("Fock cutoff must be at least 4");
  if (std::pow(static_cast<double>(cutoff), modes) > kMaxFockDimension) {
    throw SizeLimitError("Fock space of dimension " + std::to_string(cutoff) + "^" +
                         std::to_string(modes) + " exceeds 4096");
  }
  const ComplexMatrix a = ladder_operator(cutoff);
  const ComplexMatrix ad = a.adjoint();
  const double r2 = std::sqrt(2.0);
  const ComplexMatrix x1 = (a + ad) / r2;
  const ComplexMatrix p1 = Complex(0.0, -1.0) * (a - ad) / r2;

  TruncatedMode out;
  out.modes = modes;
  out.cutoff = cutoff;
  for (int m = 0; m < modes; ++m) {
    out.x.push_back(embed(x1, m, modes, cutoff));
    out.p.push_back(embed(p1, m, modes, cutoff));
  }
  return out;
}

double commutator_defect(const TruncatedMode& mode) {
  const auto idx = low_states(mode.modes, mode.cutoff, mode.cutoff - 2);
  const auto dim = mode.dim();
  double worst = 0.0;
  for (int i = 0; i < mode.modes; ++i) {
    for (int j = 0; j < mode.modes; ++j) {
      const auto& xi = mode.x[static_cast<std::size_t>(i)];
      const auto& pj = mode.p[static_cast<std::size_t>(j)];
      ComplexMatrix c = xi * pj - pj * xi;
      if (i == j) c -= Complex(0.0, 1.0) * ComplexMatrix::Identity(dim, dim);
      worst = std::max(worst, restrict(c, idx).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

HeisenbergCheck heisenberg_check(const Matrix& a, double t, int cutoff) {
  if (a.rows() != a.cols() || a.rows() % 2 != 0 || a.rows() == 0) {
    throw InvalidDimension("A must be 2n x 2n");
  }
  const int modes = static_cast<int>(a.rows() / 2);
  const TruncatedMode q = build_quadratures(modes, cutoff);
  const int dim = q.dim();
  const int nr = 2 * modes;

  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  for (int i = 0; i < nr; ++i) {
    for (int j = 0; j < nr; ++j) {
      if (a(i, j) != 0.0) h += (0.5 * a(i, j)) * (q.quadrature(i) * q.quadrature(j));
    }
  }
  h = (0.5 * (h + h.adjoint())).eval();

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(h);
  const ComplexMatrix& v = eig.eigenvectors();
  Eigen::VectorXcd phase(dim);
  for (int k = 0; k < dim; ++k) phase(k) = std::exp(Complex(0.0, -t * eig.eigenvalues()(k)));
  const ComplexMatrix u = v * phase.asDiagonal() * v.adjoint();

  HeisenbergCheck out;
  out.unitarity_defect =
      (u.adjoint() * u - ComplexMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff();

  const Matrix s = evolution_matrix(a, symplectic_form(modes, Basis::block).matrix, t);
  const auto idx = low_states(modes, cutoff, cutoff / 2);
  for (int j = 0; j < nr; ++j) {
    ComplexMatrix diff = u.adjoint() * q.quadrature(j) * u;
    for (int k = 0; k < nr; ++k) diff -= s(k, j) * q.quadrature(k);
    // P diff P is Hermitian, so its operator norm is the largest |eigenvalue|.
    const ComplexMatrix block = restrict(diff, idx);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> be(0.5 * (block + block.adjoint()),
                                                    Eigen::EigenvaluesOnly);
    out.defect = std::max(out.defect, be.eigenvalues().cwiseAbs().maxCoeff());
  }

  for (int src : idx) {
    double top = 0.0;
    for (int r = 0; r < dim; ++r) {
      bool at_top = false;
      for (int m = 0; m < modes; ++m) at_top = at_top || occupation(r, m, modes, cutoff) == cutoff - 1;
      if (at_top) top += std::norm(u(r, src));
    }
    out.top_level_leakage = std::max(out.top_level_leakage, top);
  }
  return out;
}

Matrix beamsplitter_preset(double g) {
  Matrix a = Matrix::Zero(4, 4);
  a(0, 1) = a(1, 0) = g;
  a(2, 3) = a(3, 2) = g;
  return a;
}

PartitionedModel vitali_preset(double omega_s, const std::vector<double>& omega_e,
                               const std::vector<double>& couplings) {
  if (omega_e.size() != couplings.size()) {
    throw InvalidDimension("need one coupling per environment oscillator");
  }
  const int n_e = static_cast<int>(omega_e.size());
  const int n = 1 + n_e;
  Matrix a = Matrix::Zero(2 * n, 2 * n);
  a(0, 0) = a(1, 1) = omega_s;
  for (int k = 0; k < n_e; ++k) {
    const int e = 2 * (k + 1);
    a(e, e) = a(e + 1, e + 1) = omega_e[static_cast<std::size_t>(k)];
    const double g = couplings[static_cast<std::size_t>(k)];
    a(0, e) = a(e, 0) = g;
    a(1, e + 1) = a(e + 1, 1) = g;
  }
  return PartitionedModel(1, n_e, a);
}

}  // namespace sympdd
