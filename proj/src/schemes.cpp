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

#include "sympdd/schemes.hpp"

#include <cmath>
#include <string>

#include "sympdd/error.hpp"

namespace sympdd {

const char* to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::random:
      return "random";
    case Scheme::deterministic_cycle:
      return "deterministic_cycle";
    case Scheme::eulerian:
      return "eulerian";
  }
  return "?";
}

void TrajectoryConfig::validate() const {
  if (!(tau > 0.0) || !std::isfinite(tau)) throw InputError("tau must be positive and finite");
  if (steps < 1) throw InputError("steps must be positive");
  if (!std::isfinite(total_time())) throw InputError("total time is not finite");
}

namespace {

Matrix j_for(const DecouplingGroup& group) {
  return symplectic_form(group.modes(), group.basis()).matrix;
}

void require_dim(const Matrix& a, const DecouplingGroup& group) {
  if (a.rows() != group.dim() || a.cols() != group.dim()) {
    throw InvalidDimension("A is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                           " but the group acts on dimension " + std::to_string(group.dim()));
  }
}

}  // namespace

SymplecticMatrix target_evolution(const Matrix& a, const DecouplingGroup& group, double t) {
  require_dim(a, group);
  if (!(t >= 0.0) || !std::isfinite(t)) throw InputError("target_evolution needs finite t >= 0");
  return SymplecticMatrix(evolution_matrix(group.average(a), j_for(group), t), group.basis());
}

SymplecticMatrix deterministic_cycle(const Matrix& a, const DecouplingGroup& group, double t,
                                     int repetitions) {
  require_dim(a, group);
  if (repetitions < 1) throw InputError("deterministic_cycle needs N >= 1");
  if (!group.enumerable()) {
    throw EnumerationTooLarge("deterministic_cycle needs an enumerable group");
  }
  const auto elements = group.elements();
  const double dt = t / (static_cast<double>(elements.size()) * repetitions);
  const Matrix step = evolution_matrix(a, j_for(group), dt);
  Matrix cycle = Matrix::Identity(a.rows(), a.cols());
  for (const auto& g : elements) cycle = g.conjugate(step) * cycle;
  Matrix out = cycle;
  for (int r = 1; r < repetitions; ++r) out = cycle * out;
  return SymplecticMatrix(std::move(out), group.basis());
}

Matrix trajectory_product(const Matrix& step, const DecouplingGroup& group,
                          const TrajectoryConfig& cfg) {
  Matrix s = Matrix::Identity(step.rows(), step.cols());
  Matrix scratch(step.rows(), step.cols());
  switch (cfg.scheme) {
    case Scheme::random: {
      Rng rng(cfg.seed);
      for (std::int64_t j = 0; j < cfg.steps; ++j) {
        const SignedPermutation g = group.sample(rng);
        scratch.noalias() = g.conjugate(step) * s;
        s.swap(scratch);
      }
      return s;
    }
    case Scheme::deterministic_cycle: {
      const auto elements = group.elements();
      std::vector<Matrix> conjugated;
      conjugated.reserve(elements.size());
      for (const auto& g : elements) conjugated.push_back(g.conjugate(step));
      for (std::int64_t j = 0; j < cfg.steps; ++j) {
        scratch.noalias() = conjugated[static_cast<std::size_t>(j) % conjugated.size()] * s;
        s.swap(scratch);
      }
      return s;
    }
    case Scheme::eulerian:
      break;
  }
  throw InputError("Eulerian schedules need a Cayley graph; use eulerian_evolution");
}

SymplecticMatrix random_trajectory(const Matrix& a, const DecouplingGroup& group,
                                   const TrajectoryConfig& cfg) {
  require_dim(a, group);
  cfg.validate();
  const Matrix step = evolution_matrix(a, j_for(group), cfg.tau);
  return SymplecticMatrix(trajectory_product(step, group, cfg), group.basis());
}

}  // namespace sympdd
