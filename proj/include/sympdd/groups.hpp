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

#include <complex>
#include <cstdint>
#include <vector>

#include "sympdd/rng.hpp"
#include "sympdd/symplectic.hpp"

namespace sympdd {

/// Largest n for which the homogenization group is listed in full
/// (2 * 2^6 * 6! = 92160 elements).
inline constexpr int kMaxEnumeratedModes = 6;

/// Largest n for which U(n, {0, +-1, +-i}) is listed (4^3 * 3! = 384).
inline constexpr int kMaxUnitaryDecouplingModes = 3;

/**
 * A signed permutation matrix M with M(i, perm[i]) = signs[i] and zeros
 * elsewhere. Used both for O(n, Z) acting on mode indices and for the
 * 2n x 2n phase-space action of group elements.
 */
struct SignedPermutation {
  std::vector<int> perm;
  std::vector<int> signs;

  static SignedPermutation identity(int size);

  int size() const { return static_cast<int>(perm.size()); }
  bool valid() const;

  /// Matrix product (*this) * other.
  SignedPermutation compose(const SignedPermutation& other) const;
  SignedPermutation inverse() const;

  IntMatrix matrix() const;

  /// M X M^T in O(size^2).
  Matrix conjugate(const Matrix& x) const;
  /// M X in O(size^2).
  Matrix apply_left(const Matrix& x) const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
};

/**
 * Element (1_2 (x) O) J^j_power of G = <1_2 (x) O(n, Z), J>, stored
 * structurally. Since J^2 = -1_2n = 1_2 (x) (-1_n) and J commutes with
 * 1_2 (x) O, every element has this form with j_power in {0, 1}.
 */
struct GroupElement {
  SignedPermutation sp;
  int j_power = 0;

  static GroupElement identity(int n);

  int modes() const { return sp.size(); }

  GroupElement compose(const GroupElement& other) const;
  GroupElement inverse() const;

  /// The equivalent signed permutation of the 2n phase-space coordinates.
  SignedPermutation phase_space_action(Basis basis = Basis::block) const;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// Exact integer realization; entries in {-1, 0, 1}.
IntMatrix element_matrix(const GroupElement& g, Basis basis = Basis::block);

/// Full group, identity first. Throws EnumerationTooLarge for n > 6.
std::vector<GroupElement> enumerate_homogenization_group(int n);

/// Order of the homogenization group, 2 * 2^n * n!.
std::uint64_t homogenization_group_order(int n);

/// Uniform draw: Fisher-Yates permutation, independent signs, independent
/// j_power.
GroupElement sample_group_element(int n, Rng& rng);

/// {1_2nS, -1_2nS}, the system-only suppression group before embedding.
std::vector<IntMatrix> suppression_group(int n_s);

/// g (+) 1_2nE, with the system block first (interleaved layout).
IntMatrix embed_system_operation(const IntMatrix& g, int n_e);

/// Element of U(n, {0, +-1, +-i}): V(i, perm[i]) = i^phase[i].
struct UnitaryDecouplingElement {
  std::vector<int> perm;
  std::vector<int> phases;  // Z_4 exponents

  ComplexMatrix matrix() const;
};

/// All 4^n * n! elements. Throws EnumerationTooLarge for n > 3.
std::vector<UnitaryDecouplingElement> enumerate_unitary_decoupling_set(int n);

}  // namespace sympdd
