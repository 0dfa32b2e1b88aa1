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

#include "sympdd/averaging.hpp"
#include "sympdd/symplectic.hpp"

namespace sympdd {

// Products of evolution factors are written with the earliest factor
// rightmost: the step applied first multiplies the state first.

enum class Scheme { random, deterministic_cycle, eulerian };

const char* to_string(Scheme scheme);

struct TrajectoryConfig {
  double tau = 1e-3;
  std::int64_t steps = 1;
  std::uint64_t seed = 0;
  Scheme scheme = Scheme::random;

  double total_time() const { return tau * static_cast<double>(steps); }
  void validate() const;
};

/// S_0(t) = exp(-t Pi(A) J), with Pi the group's closed-form average.
SymplecticMatrix target_evolution(const Matrix& a, const DecouplingGroup& group, double t);

/**
 * N repetitions of the fixed cycle through every element of G (enumeration
 * order, identity first), each factor g_k exp(-t/(|G|N) A J) g_k^{-1}.
 * Throws EnumerationTooLarge when G cannot be listed.
 */
SymplecticMatrix deterministic_cycle(const Matrix& a, const DecouplingGroup& group, double t,
                                     int repetitions);

/**
 * One trajectory of cfg.steps pulses spaced cfg.tau apart:
 *   S = prod_j g_j exp(-tau A J) g_j^{-1},
 * with g_j drawn i.i.d. uniformly (Scheme::random, seeded by cfg.seed) or
 * cycling through the enumerated group (Scheme::deterministic_cycle).
 * The exponential is computed once; each step costs one signed-permutation
 * conjugation and one matrix product.
 */
SymplecticMatrix random_trajectory(const Matrix& a, const DecouplingGroup& group,
                                   const TrajectoryConfig& cfg);

/// Unchecked variant of random_trajectory with a precomputed exp(-tau A J),
/// used inside Monte Carlo loops.
Matrix trajectory_product(const Matrix& step, const DecouplingGroup& group,
                          const TrajectoryConfig& cfg);

}  // namespace sympdd
