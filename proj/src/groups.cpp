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

#include "sympdd/groups.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "sympdd/error.hpp"

namespace sympdd {

SignedPermutation SignedPermutation::identity(int size) {
  SignedPermutation s;
  s.perm.resize(size);
  std::iota(s.perm.begin(), s.perm.end(), 0);
  s.signs.assign(size, 1);
  return s;
}

bool SignedPermutation::valid() const {
  if (perm.size() != signs.size()) return false;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    const int p = perm[i];
    if (p < 0 || p >= size() || seen[p]) return false;
    seen[p] = true;
    if (signs[i] != 1 && signs[i] != -1) return false;
  }
  return true;
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& other) const {
  SignedPermutation out;
  out.perm.resize(perm.size());
  out.signs.resize(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    out.perm[i] = other.perm[perm[i]];
    out.signs[i] = signs[i] * other.signs[perm[i]];
  }
  return out;
}

SignedPermutation SignedPermutation::inverse() const {
  SignedPermutation out;
  out.perm.resize(perm.size());
  out.signs.resize(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    out.perm[perm[i]] = static_cast<int>(i);
    out.signs[perm[i]] = signs[i];
  }
  return out;
}

IntMatrix SignedPermutation::matrix() const {
  IntMatrix m = IntMatrix::Zero(size(), size());
  for (int i = 0; i < size(); ++i) m(i, perm[i]) = signs[i];
  return m;
}

Matrix SignedPermutation::conjugate(const Matrix& x) const {
  const int d = size();
  Matrix out(d, d);
  for (int b = 0; b < d; ++b) {
    for (int a = 0; a < d; ++a) {
      const double v = x(perm[a], perm[b]);
      out(a, b) = signs[a] * signs[b] == 1 ? v : -v;
    }
  }
  return out;
}

Matrix SignedPermutation::apply_left(const Matrix& x) const {
  Matrix out(x.rows(), x.cols());
  for (int a = 0; a < size(); ++a) {
    if (signs[a] == 1) {
      out.row(a) = x.row(perm[a]);
    } else {
      out.row(a) = -x.row(perm[a]);
    }
  }
  return out;
}

GroupElement GroupElement::identity(int n) {
  return GroupElement{SignedPermutation::identity(n), 0};
}

GroupElement GroupElement::compose(const GroupElement& other) const {
  GroupElement out{sp.compose(other.sp), j_power + other.j_power};
  if (out.j_power == 2) {
    // J^2 = 1_2 (x) (-1_n)
    for (int& s : out.sp.signs) s = -s;
    out.j_power = 0;
  }
  return out;
}

GroupElement GroupElement::inverse() const {
  GroupElement out{sp.inverse(), j_power};
  if (j_power == 1) {
    // (D J)^{-1} = J^{-1} D^{-1} = (-D^{-1}) J
    for (int& s : out.sp.signs) s = -s;
  }
  return out;
}

SignedPermutation GroupElement::phase_space_action(Basis basis) const {
  const int n = modes();
  SignedPermutation d;
  d.perm.resize(2 * n);
  d.signs.resize(2 * n);
  for (int i = 0; i < n; ++i) {
    d.perm[i] = sp.perm[i];
    d.perm[n + i] = n + sp.perm[i];
    d.signs[i] = d.signs[n + i] = sp.signs[i];
  }
  if (j_power == 1) {
    SignedPermutation j;
    j.perm.resize(2 * n);
    j.signs.resize(2 * n);
    for (int i = 0; i < n; ++i) {
      j.perm[i] = n + i;
      j.signs[i] = 1;
      j.perm[n + i] = i;
      j.signs[n + i] = -1;
    }
    d = d.compose(j);
  }
  if (basis == Basis::block) return d;

  const auto bp = basis_permutation(n);
  std::vector<int> bp_inv(2 * n);
  for (int i = 0; i < 2 * n; ++i) bp_inv[bp[i]] = i;
  SignedPermutation out;
  out.perm.resize(2 * n);
  out.signs.resize(2 * n);
  for (int i = 0; i < 2 * n; ++i) {
    out.perm[i] = bp_inv[d.perm[bp[i]]];
    out.signs[i] = d.signs[bp[i]];
  }
  return out;
}

IntMatrix element_matrix(const GroupElement& g, Basis basis) {
  return g.phase_space_action(basis).matrix();
}

std::uint64_t homogenization_group_order(int n) {
  std::uint64_t order = 2;
  for (int i = 1; i <= n; ++i) order *= 2 * static_cast<std::uint64_t>(i);
  return order;
}

std::vector<GroupElement> enumerate_homogenization_group(int n) {
  if (n < 1) throw InvalidDimension("homogenization group needs n >= 1");
  if (n > kMaxEnumeratedModes) {
    throw EnumerationTooLarge("homogenization group for n=" + std::to_string(n) + " has " +
                              std::to_string(homogenization_group_order(n)) +
                              " elements; use sample_group_element instead");
  }
  std::vector<GroupElement> out;
  out.reserve(homogenization_group_order(n));
  for (int j = 0; j < 2; ++j) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        GroupElement g;
        g.sp.perm = perm;
        g.sp.signs.resize(n);
        for (int i = 0; i < n; ++i) g.sp.signs[i] = (mask >> i) & 1u ? -1 : 1;
        g.j_power = j;
        out.push_back(std::move(g));
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

GroupElement sample_group_element(int n, Rng& rng) {
  if (n < 1) throw InvalidDimension("sample_group_element needs n >= 1");
  GroupElement g = GroupElement::identity(n);
  for (int i = n - 1; i > 0; --i) {
    const auto k = static_cast<int>(rng.uniform_index(static_cast<std::uint64_t>(i) + 1));
    std::swap(g.sp.perm[i], g.sp.perm[k]);
  }
  for (int i = 0; i < n; ++i) g.sp.signs[i] = rng.coin() ? -1 : 1;
  g.j_power = rng.coin() ? 1 : 0;
  return g;
}

std::vector<IntMatrix> suppression_group(int n_s) {
  if (n_s < 1) throw InvalidDimension("suppression group needs n_S >= 1");
  const IntMatrix id = IntMatrix::Identity(2 * n_s, 2 * n_s);
  return {id, -id};
}

IntMatrix embed_system_operation(const IntMatrix& g, int n_e) {
  if (n_e < 0) throw InvalidDimension("n_E must be non-negative");
  const auto ds = g.rows();
  const auto d = ds + 2 * n_e;
  IntMatrix out = IntMatrix::Identity(d, d);
  out.topLeftCorner(ds, ds) = g;
  return out;
}

ComplexMatrix UnitaryDecouplingElement::matrix() const {
  static const std::complex<double> kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const auto n = static_cast<Eigen::Index>(perm.size());
  ComplexMatrix v = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) v(i, perm[i]) = kPhase[phases[i] & 3];
  return v;
}

std::vector<UnitaryDecouplingElement> enumerate_unitary_decoupling_set(int n) {
  if (n < 1) throw InvalidDimension("decoupling set needs n >= 1");
  if (n > kMaxUnitaryDecouplingModes) {
    throw EnumerationTooLarge("U(n, {0, +-1, +-i}) is only enumerated for n <= 3, got n=" +
                              std::to_string(n));
  }
  std::vector<UnitaryDecouplingElement> out;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const unsigned combos = 1u << (2 * n);
  do {
    for (unsigned code = 0; code < combos; ++code) {
      UnitaryDecouplingElement v;
      v.perm = perm;
      v.phases.resize(n);
      for (int i = 0; i < n; ++i) v.phases[i] = static_cast<int>((code >> (2 * i)) & 3u);
      out.push_back(std::move(v));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace sympdd
