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

#include "sympdd/error_analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include <unsupported/Eigen/KroneckerProduct>

#include "sympdd/error.hpp"
#include "sympdd/rng.hpp"
#include "sympdd/schemes.hpp"

namespace sympdd {

double gate_error(const Matrix& s0, const Matrix& s) {
  if (s0.rows() != s.rows() || s0.cols() != s.cols()) {
    throw InvalidDimension("gate_error: dimension mismatch");
  }
  return hs_norm_sq(s0 - s);
}

std::int64_t pulse_count(double tau, double t) {
  if (!(tau > 0.0) || !std::isfinite(tau) || !std::isfinite(t)) {
    throw InputError("need finite tau > 0 and finite t");
  }
  const auto steps = static_cast<std::int64_t>(std::llround(t / tau));
  if (steps < 1) throw InputError("t / tau rounds to zero pulses");
  return steps;
}

ErrorEstimate monte_carlo_expected_error(const Matrix& a, const DecouplingGroup& group, double tau,
                                         double t, int trials, std::uint64_t master_seed,
                                         unsigned threads) {
  if (trials < 1) throw InputError("need at least one trial");
  ErrorEstimate est;
  est.trials = trials;
  est.tau = tau;
  est.t = t;
  est.steps = pulse_count(tau, t);
  est.realized_t = static_cast<double>(est.steps) * tau;
  const double ratio = t / tau;
  if (std::abs(ratio - static_cast<double>(est.steps)) > 1e-9 * std::abs(ratio)) {
    est.warning = "t/tau is not an integer; using " + std::to_string(est.steps) +
                  " pulses (realized t differs from requested t)";
  }

  const Matrix s0 = target_evolution(a, group, est.realized_t).matrix();
  const Matrix step = evolution_matrix(a, symplectic_form(group.modes(), group.basis()).matrix, tau);

  std::vector<double> errors(static_cast<std::size_t>(trials));
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    try {
      for (int i = next++; i < trials; i = next++) {
        TrajectoryConfig cfg{tau, est.steps, derive_seed(master_seed, static_cast<std::uint64_t>(i)),
                             Scheme::random};
        errors[static_cast<std::size_t>(i)] = gate_error(s0, trajectory_product(step, group, cfg));
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(trials));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  double sum = 0.0;
  for (double e : errors) sum += e;
  est.mean = sum / trials;
  if (trials > 1) {
    double sq = 0.0;
    for (double e : errors) sq += (e - est.mean) * (e - est.mean);
    est.std_error = std::sqrt(sq / (trials - 1)) / std::sqrt(static_cast<double>(trials));
  }
  return est;
}

double analytic_approximation(const Matrix& a, const DecouplingGroup& group, double tau, double t) {
  return 2.0 * tau * t * hs_norm_sq(a - group.average(a));
}

double upper_bound_homogenization(double tau, double t, int n, double a_norm) {
  return 16.0 * tau * t * n * a_norm * a_norm;
}

double upper_bound_suppression(double tau, double t, int n_s, int n_e, double k) {
  return 16.0 * tau * t * n_s * n_e * k * k;
}

const char* to_string(DiffusionScale scale) {
  return scale == DiffusionScale::published ? "published" : "walk";
}

GeneratorPair build_generators(const Matrix& a, const DecouplingGroup& group, double tau,
                               DiffusionScale scale) {
  if (a.rows() != group.dim()) throw InvalidDimension("A does not match the group dimension");
  if (!group.enumerable()) {
    throw EnumerationTooLarge("generators need an enumerable group; use Monte Carlo instead");
  }
  const auto d = a.rows();
  if (d > kMaxExactDimension) {
    throw SizeLimitError("second-moment generator would be " + std::to_string(d * d) +
                         " dimensional (limit 4096); use Monte Carlo instead");
  }
  const Matrix j = symplectic_form(group.modes(), group.basis()).matrix;
  const Matrix avg = group.average(a);
  const Matrix fluct_j = (a - avg) * j;
  const auto elements = group.elements();
  const double c = (scale == DiffusionScale::published ? tau : 0.5 * tau) /
                   static_cast<double>(elements.size());

  Matrix sq = Matrix::Zero(d, d);
  Matrix cross = Matrix::Zero(d * d, d * d);
  for (const auto& g : elements) {
    // g M g^{-1} = g M g^T for signed permutations.
    const Matrix x = g.conjugate(fluct_j);
    sq.noalias() += x * x;
    cross += Eigen::kroneckerProduct(x, x);
  }

  GeneratorPair out;
  out.lhat = -avg * j + c * sq;
  const Matrix id = Matrix::Identity(d, d);
  out.lhat2 = Eigen::kroneckerProduct(out.lhat, id).eval() +
              Eigen::kroneckerProduct(id, out.lhat).eval() + (2.0 * c) * cross;
  return out;
}

double exact_expected_error(const Matrix& a, const DecouplingGroup& group, double tau, double t,
                            DiffusionScale scale) {
  const GeneratorPair gen = build_generators(a, group, tau, scale);
  const auto d = a.rows();
  const Matrix first = expm_real(t * gen.lhat);
  const Matrix second = expm_real(t * gen.lhat2);
  const Matrix s0 = target_evolution(a, group, t).matrix();

  // E[S (x) S] at row (k,k), column (l,l) is E[S_kl^2].
  double moment2 = 0.0;
  for (Eigen::Index k = 0; k < d; ++k) {
    for (Eigen::Index l = 0; l < d; ++l) moment2 += second(k * d + k, l * d + l);
  }
  return moment2 + hs_norm_sq(s0) - 2.0 * first.cwiseProduct(s0).sum();
}

}  // namespace sympdd
