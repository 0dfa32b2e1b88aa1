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

#pragma once

#include <vector>

#include <Eigen/Dense>

namespace sympdd {

using Matrix = Eigen::MatrixXd;
using IntMatrix = Eigen::MatrixXi;
using ComplexMatrix = Eigen::MatrixXcd;

/// Ordering of the phase-space coordinates.
///   block:       (x_1, ..., x_n, p_1, ..., p_n)
///   interleaved: (x_1, p_1, ..., x_n, p_n)
enum class Basis { block, interleaved };

const char* to_string(Basis basis);

/**
 * The symplectic form J of n modes in a given coordinate layout.
 *
 * Block layout: J = [[0, 1_n], [-1_n, 0]]. Interleaved layout: n copies of
 * [[0, 1], [-1, 0]] along the diagonal. In both cases J^2 = -1 and
 * J^T = -J = J^{-1}; entries are integers so these identities hold exactly.
 */
struct SymplecticForm {
  int n = 0;
  Basis basis = Basis::block;
  Matrix matrix;
};

SymplecticForm symplectic_form(int n, Basis basis = Basis::block);

/// Integer version of J, used for exact group arithmetic.
IntMatrix symplectic_form_int(int n, Basis basis = Basis::block);

/**
 * Coordinate permutation from the block to the interleaved layout.
 *
 * Entry i names the block-layout coordinate that lands at interleaved
 * position i, so for n = 2 this is (0, 2, 1, 3). With P the matching
 * permutation matrix, P J_block P^T = J_interleaved.
 */
std::vector<int> basis_permutation(int n);

/// P with (P v)_i = v_{perm[i]}; maps block coordinates to interleaved ones.
Matrix basis_permutation_matrix(int n);

/// Re-express a 2n x 2n matrix given in `from` layout in the `to` layout.
Matrix change_basis(const Matrix& m, Basis from, Basis to);

/// A real symmetric 2n x 2n matrix A defining H = 1/2 R^T A R.
class QuadraticModel {
 public:
  /// Rejects asymmetry above 1e-12 (max-entry); smaller asymmetry is
  /// removed by symmetrizing.
  QuadraticModel(Matrix a, Basis basis = Basis::block);

  int n() const { return n_; }
  Basis basis() const { return basis_; }
  const Matrix& a() const { return a_; }

  QuadraticModel in_basis(Basis basis) const;

 private:
  int n_;
  Basis basis_;
  Matrix a_;
};

/// A 2n x 2n matrix that passed the symplecticity check.
class SymplecticMatrix {
 public:
  /// Throws NumericInputError if S J S^T deviates from J beyond
  /// symplectic_tolerance(S).
  SymplecticMatrix(Matrix s, Basis basis = Basis::block);

  int n() const { return n_; }
  Basis basis() const { return basis_; }
  const Matrix& matrix() const { return s_; }

 private:
  int n_;
  Basis basis_;
  Matrix s_;
};

/// e^M by scaling and squaring with a degree-13 diagonal Padé approximant.
Matrix expm_real(const Matrix& m);

/// S(t) = exp(-t A J).
SymplecticMatrix evolve(const QuadraticModel& model, double t);

/// Variant with an explicit J; throws BasisError when its layout or size
/// does not match the model.
SymplecticMatrix evolve(const QuadraticModel& model, const SymplecticForm& form, double t);

/// Same exponential without the symplecticity check, for hot loops.
Matrix evolution_matrix(const Matrix& a, const Matrix& j, double t);

double hs_norm_sq(const Matrix& m);
double op_norm(const Matrix& m);

/// Operator norm of S J S^T - J.
double symplectic_defect(const Matrix& s, const Matrix& j);

/// 1e-9 * max(1, ||S||_inf^2).
double symplectic_tolerance(const Matrix& s);

bool is_symplectic(const Matrix& s, Basis basis = Basis::block);

}  // namespace sympdd
