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

#include "sympdd/averaging.hpp"

#include <cmath>
#include <string>

#include "sympdd/error.hpp"

namespace sympdd {

namespace {

void require_symmetric(const Matrix& a) {
  if (a.rows() != a.cols() || a.rows() % 2 != 0 || a.rows() == 0) {
    throw InvalidDimension("expected a non-empty 2n x 2n matrix");
  }
  if (!a.allFinite()) throw NumericInputError("matrix has non-finite entries");
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw InputError("matrix is not symmetric");
  }
}

}  // namespace

PartitionedModel::PartitionedModel(int n_s, int n_e, Matrix a) : n_s_(n_s), n_e_(n_e) {
  if (n_s < 1 || n_e < 0) throw InvalidDimension("need n_S >= 1 and n_E >= 0");
  if (a.rows() != 2 * (n_s + n_e) || a.cols() != a.rows()) {
    throw InvalidDimension("A must be 2(n_S + n_E) square, got " + std::to_string(a.rows()) +
                           "x" + std::to_string(a.cols()));
  }
  a_ = QuadraticModel(std::move(a), Basis::interleaved).a();
  k_ = n_e == 0 ? 0.0 : coupling().cwiseAbs().maxCoeff();
}

PartitionedModel PartitionedModel::from_blocks(const Matrix& a_s, const Matrix& a_e,
                                               const Matrix& coupling) {
  const auto ds = a_s.rows();
  const auto de = a_e.rows();
  if (coupling.rows() != ds || coupling.cols() != de) {
    throw InvalidDimension("coupling block must be 2n_S x 2n_E");
  }
  Matrix a(ds + de, ds + de);
  a.topLeftCorner(ds, ds) = a_s;
  a.bottomRightCorner(de, de) = a_e;
  a.topRightCorner(ds, de) = coupling;
  a.bottomLeftCorner(de, ds) = coupling.transpose();
  return PartitionedModel(static_cast<int>(ds / 2), static_cast<int>(de / 2), std::move(a));
}

Matrix PartitionedModel::a_s() const { return a_.topLeftCorner(2 * n_s_, 2 * n_s_); }
Matrix PartitionedModel::a_e() const { return a_.bottomRightCorner(2 * n_e_, 2 * n_e_); }
Matrix PartitionedModel::coupling() const { return a_.topRightCorner(2 * n_s_, 2 * n_e_); }

DecouplingGroup DecouplingGroup::trivial(int n, Basis basis) {
  if (n < 1) throw InvalidDimension("group needs n >= 1");
  return DecouplingGroup(Kind::trivial, n, n, basis);
}

DecouplingGroup DecouplingGroup::homogenization(int n, Basis basis) {
  if (n < 1) throw InvalidDimension("group needs n >= 1");
  return DecouplingGroup(Kind::homogenization, n, n, basis);
}

DecouplingGroup DecouplingGroup::suppression(int n_s, int n_e) {
  if (n_s < 1 || n_e < 0) throw InvalidDimension("need n_S >= 1 and n_E >= 0");
  return DecouplingGroup(Kind::suppression, n_s + n_e, n_s, Basis::interleaved);
}

std::uint64_t DecouplingGroup::order() const {
  switch (kind_) {
    case Kind::trivial:
      return 1;
    case Kind::suppression:
      return 2;
    case Kind::homogenization:
      break;
  }
  return homogenization_group_order(n_);
}

bool DecouplingGroup::enumerable() const {
  return kind_ != Kind::homogenization || n_ <= kMaxEnumeratedModes;
}

std::vector<SignedPermutation> DecouplingGroup::elements() const {
  switch (kind_) {
    case Kind::trivial:
      return {SignedPermutation::identity(dim())};
    case Kind::suppression: {
      SignedPermutation flip = SignedPermutation::identity(dim());
      for (int i = 0; i < 2 * n_s_; ++i) flip.signs[i] = -1;
      return {SignedPermutation::identity(dim()), flip};
    }
    case Kind::homogenization:
      break;
  }
  std::vector<SignedPermutation> out;
  for (const auto& g : enumerate_homogenization_group(n_)) {
    out.push_back(g.phase_space_action(basis_));
  }
  return out;
}

SignedPermutation DecouplingGroup::sample(Rng& rng) const {
  switch (kind_) {
    case Kind::trivial:
      return SignedPermutation::identity(dim());
    case Kind::suppression: {
      SignedPermutation g = SignedPermutation::identity(dim());
      if (rng.coin()) {
        for (int i = 0; i < 2 * n_s_; ++i) g.signs[i] = -1;
      }
      return g;
    }
    case Kind::homogenization:
      break;
  }
  return sample_group_element(n_, rng).phase_space_action(basis_);
}

Matrix DecouplingGroup::average(const Matrix& a) const {
  require_symmetric(a);
  if (a.rows() != dim()) throw InvalidDimension("A does not match the group dimension");
  switch (kind_) {
    case Kind::trivial:
      return a;
    case Kind::suppression:
      return tilde_pi(PartitionedModel(n_s_, n_ - n_s_, a));
    case Kind::homogenization:
      break;
  }
  return pi_map_closed_form(a);
}

Matrix group_average(const Matrix& a, const std::vector<SignedPermutation>& elements) {
  if (elements.empty()) throw InputError("group_average: empty group");
  Matrix sum = Matrix::Zero(a.rows(), a.cols());
  for (const auto& g : elements) sum += g.conjugate(a);
  return sum / static_cast<double>(elements.size());
}

Matrix pi_map(const Matrix& a, const std::vector<GroupElement>& group, Basis basis) {
  require_symmetric(a);
  if (group.empty()) throw InputError("pi_map: empty group");
  if (2 * group.front().modes() != a.rows()) {
    throw InvalidDimension("pi_map: group and matrix sizes differ");
  }
  Matrix sum = Matrix::Zero(a.rows(), a.cols());
  for (const auto& g : group) sum += g.phase_space_action(basis).conjugate(a);
  return sum / static_cast<double>(group.size());
}

Matrix pi_map_closed_form(const Matrix& a) {
  require_symmetric(a);
  const auto d = a.rows();
  return (a.trace() / static_cast<double>(d)) * Matrix::Identity(d, d);
}

ComplexMatrix pi0_map(const ComplexMatrix& x, const std::vector<UnitaryDecouplingElement>& set) {
  if (set.empty()) throw InputError("pi0_map: empty decoupling set");
  if (x.rows() != x.cols() || x.rows() != static_cast<Eigen::Index>(set.front().perm.size())) {
    throw InvalidDimension("pi0_map: x must be n x n for the given set");
  }
  ComplexMatrix sum = ComplexMatrix::Zero(x.rows(), x.cols());
  for (const auto& v : set) {
    const ComplexMatrix m = v.matrix();
    sum += m.adjoint() * x * m;
  }
  return sum / static_cast<double>(set.size());
}

Matrix tilde_pi(const PartitionedModel& pm) {
  return tilde_pi(pm, DecouplingGroup::suppression(pm.n_s(), 0).elements());
}

Matrix tilde_pi(const PartitionedModel& pm, const std::vector<SignedPermutation>& system_group) {
  if (system_group.empty()) throw InputError("tilde_pi: empty group");
  const int ds = 2 * pm.n_s();
  const int de = 2 * pm.n_e();
  if (system_group.front().size() != ds) {
    throw InvalidDimension("tilde_pi: group must act on the 2n_S system coordinates");
  }
  const Matrix a_s = pm.a_s();
  const Matrix coupling = pm.coupling();
  Matrix sys = Matrix::Zero(ds, ds);
  Matrix cross = Matrix::Zero(ds, de);
  for (const auto& g : system_group) {
    sys += g.conjugate(a_s);
    cross += g.apply_left(coupling);
  }
  const double inv = 1.0 / static_cast<double>(system_group.size());
  Matrix out(ds + de, ds + de);
  out.topLeftCorner(ds, ds) = sys * inv;
  out.topRightCorner(ds, de) = cross * inv;
  out.bottomLeftCorner(de, ds) = (cross * inv).transpose();
  out.bottomRightCorner(de, de) = pm.a_e();
  return out;
}

double tentative_condition_defect(const Matrix& a, const std::vector<SignedPermutation>& group,
                                  Basis basis) {
  require_symmetric(a);
  Eigen::LLT<Matrix> llt(a);
  if (llt.info() != Eigen::Success) {
    throw InputError("tentative_condition_defect: A is not positive definite");
  }
  const int n = static_cast<int>(a.rows() / 2);
  const Matrix avg = group_average(a, group);
  const Matrix j = symplectic_form(n, basis).matrix;
  const double lambda = (avg.cwiseProduct(j)).sum() / j.squaredNorm();
  return std::sqrt(hs_norm_sq(avg - lambda * j));
}

}  // namespace sympdd
