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

#include <cstdint>
#include <vector>

#include "sympdd/groups.hpp"
#include "sympdd/symplectic.hpp"

namespace sympdd {

/**
 * A = [[A_S, I], [I^T, A_E]] in the interleaved layout, system modes first.
 * k is the largest |I_ij|, recomputed from the matrix on construction.
 */
class PartitionedModel {
 public:
  PartitionedModel(int n_s, int n_e, Matrix a);

  static PartitionedModel from_blocks(const Matrix& a_s, const Matrix& a_e,
                                      const Matrix& coupling);

  int n_s() const { return n_s_; }
  int n_e() const { return n_e_; }
  int n() const { return n_s_ + n_e_; }
  double k() const { return k_; }
  const Matrix& a() const { return a_; }

  Matrix a_s() const;
  Matrix a_e() const;
  /// The 2n_S x 2n_E block I.
  Matrix coupling() const;

 private:
  int n_s_;
  int n_e_;
  Matrix a_;
  double k_;
};

/**
 * A finite decoupling group acting on 2n-dimensional phase space, with every
 * element a signed permutation of coordinates.
 *
 *   trivial:        {1}
 *   homogenization: <1_2 (x) O(n, Z), J>, in either layout
 *   suppression:    {+-1_2nS (+) 1_2nE}, interleaved layout, system first
 */
class DecouplingGroup {
 public:
  enum class Kind { trivial, homogenization, suppression };

  static DecouplingGroup trivial(int n, Basis basis = Basis::block);
  static DecouplingGroup homogenization(int n, Basis basis = Basis::block);
  static DecouplingGroup suppression(int n_s, int n_e);

  Kind kind() const { return kind_; }
  Basis basis() const { return basis_; }
  int modes() const { return n_; }
  int dim() const { return 2 * n_; }
  int n_s() const { return n_s_; }
  int n_e() const { return n_ - n_s_; }

  std::uint64_t order() const;
  bool enumerable() const;

  /// Phase-space actions of all elements, identity first.
  std::vector<SignedPermutation> elements() const;
  SignedPermutation sample(Rng& rng) const;

  /// The group average (1/|G|) sum_g g A g^T, computed in closed form:
  /// A, (tr A / 2n) 1, or A_S (+) A_E respectively.
  Matrix average(const Matrix& a) const;

 private:
  DecouplingGroup(Kind kind, int n, int n_s, Basis basis)
      : kind_(kind), n_(n), n_s_(n_s), basis_(basis) {}

  Kind kind_;
  int n_;
  int n_s_;
  Basis basis_;
};

/// (1/|G|) sum_g g A g^T over an explicit list of elements.
Matrix group_average(const Matrix& a, const std::vector<SignedPermutation>& elements);

/// Pi(A) by enumerating the homogenization group (n <= 6).
Matrix pi_map(const Matrix& a, const std::vector<GroupElement>& group,
              Basis basis = Basis::block);

/// Pi(A) = (tr A / 2n) 1_2n, valid for any n.
Matrix pi_map_closed_form(const Matrix& a);

/// (1/|V|) sum_v v^dagger x v.
ComplexMatrix pi0_map(const ComplexMatrix& x, const std::vector<UnitaryDecouplingElement>& set);

/// Pi-tilde with the suppression group {+-1_2nS}: A_S (+) A_E.
Matrix tilde_pi(const PartitionedModel& pm);

/// Pi-tilde for an arbitrary group acting on the system block only:
/// [[avg g A_S g^T, avg g I], [(avg g I)^T, A_E]].
Matrix tilde_pi(const PartitionedModel& pm, const std::vector<SignedPermutation>& system_group);

/**
 * min over real lambda of ||Pi(A) - lambda J||_2 for positive-definite A.
 * Pi(A) is symmetric and J antisymmetric, so they are HS-orthogonal and the
 * minimum sits at lambda = 0; the value is bounded below by the smallest
 * eigenvalue of Pi(A). Throws InputError if A is not positive definite.
 */
double tentative_condition_defect(const Matrix& a, const std::vector<SignedPermutation>& group,
                                  Basis basis = Basis::block);

}  // namespace sympdd
