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

#include "sympdd/symplectic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "sympdd/error.hpp"

namespace sympdd {

namespace {

void require_modes(int n) {
  if (n < 1) {
    throw InvalidDimension("number of modes must be positive, got " +
                           std::to_string(n));
  }
}

int modes_of(const Matrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0 || m.rows() % 2 != 0) {
    throw InvalidDimension(std::string(what) + " must be a non-empty 2n x 2n matrix, got " +
                           std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
  return static_cast<int>(m.rows() / 2);
}

}  // namespace

const char* to_string(Basis basis) {
  return basis == Basis::block ? "block" : "interleaved";
}

IntMatrix symplectic_form_int(int n, Basis basis) {
  require_modes(n);
  IntMatrix j = IntMatrix::Zero(2 * n, 2 * n);
  if (basis == Basis::block) {
    for (int i = 0; i < n; ++i) {
      j(i, n + i) = 1;
      j(n + i, i) = -1;
    }
  } else {
    for (int i = 0; i < n; ++i) {
      j(2 * i, 2 * i + 1) = 1;
      j(2 * i + 1, 2 * i) = -1;
    }
  }
  return j;
}

SymplecticForm symplectic_form(int n, Basis basis) {
  return SymplecticForm{n, basis, symplectic_form_int(n, basis).cast<double>()};
}

std::vector<int> basis_permutation(int n) {
  require_modes(n);
  std::vector<int> perm(2 * n);
  for (int i = 0; i < n; ++i) {
    perm[2 * i] = i;
    perm[2 * i + 1] = n + i;
  }
  return perm;
}

Matrix basis_permutation_matrix(int n) {
  const auto perm = basis_permutation(n);
  Matrix p = Matrix::Zero(2 * n, 2 * n);
  for (int i = 0; i < 2 * n; ++i) p(i, perm[i]) = 1.0;
  return p;
}

Matrix change_basis(const Matrix& m, Basis from, Basis to) {
  const int n = modes_of(m, "matrix");
  if (from == to) return m;
  const auto perm = basis_permutation(n);
  Matrix out(2 * n, 2 * n);
  // Pure index shuffles, so the conversion is exact.
  for (int i = 0; i < 2 * n; ++i) {
    for (int k = 0; k < 2 * n; ++k) {
      if (from == Basis::block) {
        out(i, k) = m(perm[i], perm[k]);
      } else {
        out(perm[i], perm[k]) = m(i, k);
      }
    }
  }
  return out;
}

QuadraticModel::QuadraticModel(Matrix a, Basis basis) : basis_(basis) {
  n_ = modes_of(a, "A");
  if (!a.allFinite()) throw NumericInputError("A has non-finite entries");
  const double asym = (a - a.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12) {
    throw InputError("A is not symmetric (max |A - A^T| = " + std::to_string(asym) + ")");
  }
  if (asym > 0.0) a = (0.5 * (a + a.transpose())).eval();
  a_ = std::move(a);
}

QuadraticModel QuadraticModel::in_basis(Basis basis) const {
  return QuadraticModel(change_basis(a_, basis_, basis), basis);
}

SymplecticMatrix::SymplecticMatrix(Matrix s, Basis basis) : basis_(basis) {
  n_ = modes_of(s, "S");
  if (!s.allFinite()) throw NumericInputError("S has non-finite entries");
  const Matrix j = symplectic_form(n_, basis).matrix;
  const double defect = symplectic_defect(s, j);
  if (defect > symplectic_tolerance(s)) {
    throw NumericInputError("matrix is not symplectic: ||S J S^T - J|| = " +
                            std::to_string(defect));
  }
  s_ = std::move(s);
}

Matrix expm_real(const Matrix& m) {
  if (m.rows() != m.cols()) throw InvalidDimension("expm_real needs a square matrix");
  if (!m.allFinite()) throw NumericInputError("expm_real: non-finite entries");
  if (m.size() == 0) return m;
  return m.exp();
}

Matrix evolution_matrix(const Matrix& a, const Matrix& j, double t) {
  return expm_real(-t * (a * j));
}

SymplecticMatrix evolve(const QuadraticModel& model, double t) {
  if (!std::isfinite(t)) throw NumericInputError("evolve: non-finite time");
  const Matrix j = symplectic_form(model.n(), model.basis()).matrix;
  return SymplecticMatrix(evolution_matrix(model.a(), j, t), model.basis());
}

SymplecticMatrix evolve(const QuadraticModel& model, const SymplecticForm& form, double t) {
  if (form.basis != model.basis() || form.n != model.n()) {
    throw BasisError(std::string("evolve: A is in ") + to_string(model.basis()) +
                     " layout with n=" + std::to_string(model.n()) + " but J is " +
                     to_string(form.basis) + " with n=" + std::to_string(form.n));
  }
  return evolve(model, t);
}

double hs_norm_sq(const Matrix& m) { return m.squaredNorm(); }

double op_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  if (m.rows() <= 16 && m.cols() <= 16) {
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues()(0);
  }
  Eigen::BDCSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

double symplectic_defect(const Matrix& s, const Matrix& j) {
  return op_norm(s * j * s.transpose() - j);
}

double symplectic_tolerance(const Matrix& s) {
  const double norm = op_norm(s);
  return 1e-9 * std::max(1.0, norm * norm);
}

bool is_symplectic(const Matrix& s, Basis basis) {
  const int n = modes_of(s, "S");
  return symplectic_defect(s, symplectic_form(n, basis).matrix) <= symplectic_tolerance(s);
}

}  // namespace sympdd
