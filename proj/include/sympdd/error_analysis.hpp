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
#include <string>

#include "sympdd/averaging.hpp"
#include "sympdd/symplectic.hpp"

namespace sympdd {

/// Monte Carlo estimate of E[eps(t)] with its standard error.
struct ErrorEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  int trials = 0;
  double tau = 0.0;
  double t = 0.0;           // requested total time
  double realized_t = 0.0;  // steps * tau
  std::int64_t steps = 0;
  /// Set when t / tau was not an integer to 1e-9 relative.
  std::string warning;
};

/// eps = ||S0 - S||_2^2 (squared Hilbert-Schmidt norm).
double gate_error(const Matrix& s0, const Matrix& s);

/// Number of pulses round(t / tau); throws InputError if it is below 1.
std::int64_t pulse_count(double tau, double t);

/**
 * Mean gate error between target_evolution and random_trajectory over
 * `trials` trajectories. Trial i is seeded with derive_seed(master_seed, i);
 * trials run on up to `threads` threads (0 = hardware concurrency) and are
 * reduced in trial order, so the result is bit-identical for any thread
 * count.
 */
ErrorEstimate monte_carlo_expected_error(const Matrix& a, const DecouplingGroup& group, double tau,
                                         double t, int trials, std::uint64_t master_seed,
                                         unsigned threads = 0);

/// 2 tau t ||A - Pi(A)||_2^2, with Pi the group's average.
double analytic_approximation(const Matrix& a, const DecouplingGroup& group, double tau, double t);

/// 16 tau t n ||A||_inf^2.
double upper_bound_homogenization(double tau, double t, int n, double a_norm);

/// 16 tau t n_S n_E k^2.
double upper_bound_suppression(double tau, double t, int n_s, int n_e, double k);

/// Diffusion coefficient multiplying sum_g (g(A - Pi(A))J g^{-1})^2 in the
/// generators.
enum class DiffusionScale {
  /// tau / |G| as in the published diffusion generator.
  published,
  /// tau / (2|G|): the second-order term of a walk whose steps have
  /// covariance tau^2 per pulse. Matches the Monte Carlo walk.
  walk,
};

const char* to_string(DiffusionScale scale);

/**
 * First- and second-moment generators of the diffusion limit:
 *   lhat  = -Pi(A)J + c sum_g X_g^2,               X_g = g(A - Pi(A))J g^{-1}
 *   lhat2 = lhat (x) 1 + 1 (x) lhat + 2c sum_g X_g (x) X_g
 * so that E[S] = exp(t lhat) and E[S (x) S] = exp(t lhat2), with c fixed by
 * the DiffusionScale.
 */
struct GeneratorPair {
  Matrix lhat;
  Matrix lhat2;
};

GeneratorPair build_generators(const Matrix& a, const DecouplingGroup& group, double tau,
                               DiffusionScale scale = DiffusionScale::published);

/// Largest 2n for which the (2n)^2 second-moment generator is exponentiated.
inline constexpr int kMaxExactDimension = 64;

/**
 * E[eps(t)] from the generators:
 *   sum_kl E[S_kl^2] + ||S0||_2^2 - 2 sum_kl E[S]_kl S0_kl.
 * Throws SizeLimitError when (2n)^2 > 4096 and EnumerationTooLarge when the
 * group cannot be listed.
 */
double exact_expected_error(const Matrix& a, const DecouplingGroup& group, double tau, double t,
                            DiffusionScale scale = DiffusionScale::published);

}  // namespace sympdd
