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

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "sympdd/symplectic.hpp"

namespace sympdd {

/// Default number of midpoint sub-steps per pulse segment.
inline constexpr int kDefaultSubsteps = 16;

/**
 * Cayley graph C(G, Gamma) of a finite matrix group: vertices are the group
 * elements, and every vertex g has one outgoing edge g -> gamma g per
 * generator gamma.
 */
struct CayleyGraph {
  std::vector<IntMatrix> vertices;
  std::vector<IntMatrix> generators;
  /// successor[v][c] is the index of generators[c] * vertices[v].
  std::vector<std::vector<int>> successor;

  std::size_t edge_count() const { return vertices.size() * generators.size(); }
  int identity_index() const;
  std::vector<int> in_degrees() const;
};

/// Throws GenerationError unless the generators generate exactly `group`.
CayleyGraph build_cayley_graph(std::vector<IntMatrix> group, std::vector<IntMatrix> generators);

/**
 * Closed walk h_1 -> h_2 -> ... -> h_K -> h_1 using every edge once, with
 * h_{k+1} = generators[labels[k]] * h_k.
 *
 * The pulse schedule uses the frames g_k = h_k^{-1}. Then
 * g_{k+1}^{-1} g_k = h_{k+1} h_k^{-1} = generators[labels[k]], so every pulse
 * is a generator while the frames still run over each group element |Gamma|
 * times.
 */
struct EulerianCycle {
  std::vector<int> vertices;
  std::vector<int> labels;

  std::size_t length() const { return vertices.size(); }
};

/// Hierholzer's algorithm from `start` (identity by default). Deterministic
/// for a fixed graph. Throws StructuralError for non-Eulerian graphs.
EulerianCycle find_eulerian_cycle(const CayleyGraph& graph, int start = -1);

/// True if the cycle walks every edge of the graph exactly once and closes.
bool is_eulerian_cycle(const CayleyGraph& graph, const EulerianCycle& cycle);

/**
 * gamma = exp(tau/2 X) exp(tau/2 Y) from the symplectic polar decomposition
 * gamma = U P: X = (2/tau) log U with U orthogonal-symplectic (principal
 * branch, eigenvalue -1 taken at angle +pi), Y = (2/tau) log P with P
 * symmetric positive definite.
 */
struct SplitGenerator {
  Matrix target;
  Matrix x;
  Matrix y;
  double tau = 0.0;
  Basis basis = Basis::block;
  double reconstruction_error = 0.0;
};

/// Throws NumericInputError if gamma is not symplectic or the reconstruction
/// misses gamma by more than 1e-9.
SplitGenerator split_generator(const Matrix& gamma, double tau, Basis basis = Basis::block);

/// The continuous path: exp(s Y) on [0, tau/2], then
/// exp((s - tau/2) X) exp(tau/2 Y) up to gamma at s = tau.
Matrix path_point(const SplitGenerator& split, double s);
Matrix path_point_inverse(const SplitGenerator& split, double s);

/// Midpoint rule for int_0^tau path(s)^{-1} A J path(s) ds with m nodes.
Matrix segment_integral(const Matrix& a, const SplitGenerator& split, int substeps);

/// gamma * V where V is the time-ordered exp(-int path^{-1} A J path ds),
/// approximated by a product of m midpoint exponentials.
Matrix segment_propagator(const Matrix& a, const SplitGenerator& split, int substeps);

/// Splits of every generator of the graph for segment length tau.
std::vector<SplitGenerator> split_generators(const CayleyGraph& graph, double tau,
                                             Basis basis = Basis::block);

/**
 * Averaged first-order generator
 *   K = 1/(tau |G| |Gamma|) sum_g g (sum_gamma int path^{-1} A J path ds) g^{-1}.
 * For a homogenization set K = lambda J.
 */
Matrix first_order_generator(const Matrix& a, const CayleyGraph& graph,
                             const std::vector<SplitGenerator>& splits, int substeps);

/// Projection coefficient <K, J> / <J, J>.
double fit_rotation_rate(const Matrix& k, Basis basis = Basis::block);

struct EulerianRun {
  SymplecticMatrix evolution;
  double tau;
  std::size_t cycle_length;
};

/**
 * Finite-energy evolution over total time t: N passes over an Eulerian cycle
 * with tau = t / (N |G| |Gamma|), each segment applying the continuous pulse
 * path while the drift acts. Returns g_1 (prod_k gamma_k V_k)^N g_1^{-1}.
 */
EulerianRun eulerian_evolution(const Matrix& a, const CayleyGraph& graph, double t,
                               int repetitions, int substeps = kDefaultSubsteps,
                               Basis basis = Basis::block);

/// Writes one cycle as lines `time_index,segment,entries...` where segment is
/// Y (first half) or X (second half) and entries are the generator in
/// row-major order.
void write_pulse_schedule(std::ostream& out, const EulerianCycle& cycle,
                          const std::vector<SplitGenerator>& splits);

}  // namespace sympdd
