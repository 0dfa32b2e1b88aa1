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

#include "sympdd/eulerian.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <deque>
#include <map>
#include <numbers>
#include <ostream>
#include <string>
#include <utility>

#include <Eigen/Eigenvalues>

#include "sympdd/error.hpp"
#include "sympdd/format.hpp"

namespace sympdd {

namespace {

using Key = std::vector<int>;

Key key_of(const IntMatrix& m) { return Key(m.data(), m.data() + m.size()); }

int modes_of(const Matrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0 || m.rows() % 2 != 0) {
    throw InvalidDimension("expected a non-empty 2n x 2n matrix");
  }
  return static_cast<int>(m.rows() / 2);
}

/// S^{-1} = -J S^T J for symplectic S; exact on integer matrices.
IntMatrix symplectic_inverse(const IntMatrix& s, const IntMatrix& j) {
  return -(j * s.transpose() * j);
}

/// Principal logarithm of an orthogonal matrix commuting with block J,
/// via its complex n x n counterpart u = a - i b for U = [[a, b], [-b, a]].
Matrix log_orthosymplectic(const Matrix& u_real) {
  const int n = modes_of(u_real);
  const Matrix a = u_real.topLeftCorner(n, n);
  const Matrix b = u_real.topRightCorner(n, n);
  const ComplexMatrix u = a.cast<std::complex<double>>() -
                          std::complex<double>(0.0, 1.0) * b.cast<std::complex<double>>();
  Eigen::ComplexSchur<ComplexMatrix> schur(u);
  const ComplexMatrix& q = schur.matrixU();
  const ComplexMatrix& t = schur.matrixT();
  Eigen::VectorXcd log_diag(n);
  for (int i = 0; i < n; ++i) {
    double angle = std::arg(t(i, i));
    // Eigenvalue -1: both branches are valid; pick +pi.
    if (angle < -std::numbers::pi + 1e-9) angle = std::numbers::pi;
    log_diag(i) = std::complex<double>(0.0, angle);
  }
  const ComplexMatrix log_u = q * log_diag.asDiagonal() * q.adjoint();
  // Skew-Hermitian up to rounding; enforce it so the realification is exactly
  // skew-symmetric.
  const ComplexMatrix skew = 0.5 * (log_u - log_u.adjoint());
  const Matrix re = skew.real();
  const Matrix im = skew.imag();
  Matrix out(2 * n, 2 * n);
  out << re, -im, im, re;
  return out;
}

}  // namespace

int CayleyGraph::identity_index() const {
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (vertices[v].isIdentity()) return static_cast<int>(v);
  }
  return -1;
}

std::vector<int> CayleyGraph::in_degrees() const {
  std::vector<int> deg(vertices.size(), 0);
  for (const auto& row : successor) {
    for (int w : row) ++deg[w];
  }
  return deg;
}

CayleyGraph build_cayley_graph(std::vector<IntMatrix> group, std::vector<IntMatrix> generators) {
  if (group.empty()) throw GenerationError("empty group");
  if (generators.empty()) throw GenerationError("empty generating set");
  std::map<Key, int> index;
  for (std::size_t v = 0; v < group.size(); ++v) {
    if (!index.emplace(key_of(group[v]), static_cast<int>(v)).second) {
      throw GenerationError("group list contains a duplicate element");
    }
  }
  CayleyGraph graph{std::move(group), std::move(generators), {}};
  const int id = graph.identity_index();
  if (id < 0) throw GenerationError("group list does not contain the identity");

  graph.successor.assign(graph.vertices.size(), std::vector<int>(graph.generators.size(), -1));
  for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
    for (std::size_t c = 0; c < graph.generators.size(); ++c) {
      const IntMatrix& gamma = graph.generators[c];
      if (gamma.rows() != graph.vertices[v].rows() || gamma.cols() != graph.vertices[v].cols()) {
        throw GenerationError("generator size does not match the group");
      }
      const auto it = index.find(key_of(gamma * graph.vertices[v]));
      if (it == index.end()) {
        throw GenerationError("generator " + std::to_string(c) + " leads outside the group");
      }
      graph.successor[v][c] = it->second;
    }
  }

  // The subgroup generated by Gamma is the orbit of the identity.
  std::vector<bool> reached(graph.vertices.size(), false);
  std::deque<int> queue{id};
  reached[id] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : graph.successor[v]) {
      if (!reached[w]) {
        reached[w] = true;
        ++count;
        queue.push_back(w);
      }
    }
  }
  if (count != graph.vertices.size()) {
    throw GenerationError("generators reach only " + std::to_string(count) + " of " +
                          std::to_string(graph.vertices.size()) + " group elements");
  }
  return graph;
}

EulerianCycle find_eulerian_cycle(const CayleyGraph& graph, int start) {
  const auto n_vertices = graph.vertices.size();
  if (n_vertices == 0) throw StructuralError("empty graph");
  if (graph.successor.size() != n_vertices) throw StructuralError("malformed adjacency");
  const auto in_deg = graph.in_degrees();
  for (std::size_t v = 0; v < n_vertices; ++v) {
    if (static_cast<std::size_t>(in_deg[v]) != graph.successor[v].size()) {
      throw StructuralError("vertex " + std::to_string(v) +
                            " has in-degree != out-degree; graph is not Eulerian");
    }
  }
  if (start < 0) start = std::max(graph.identity_index(), 0);

  std::size_t edges = 0;
  for (const auto& row : graph.successor) edges += row.size();

  std::vector<std::size_t> next(n_vertices, 0);
  std::vector<std::pair<int, int>> stack{{start, -1}};
  std::vector<std::pair<int, int>> circuit;
  circuit.reserve(edges + 1);
  while (!stack.empty()) {
    const int v = stack.back().first;
    if (next[v] < graph.successor[v].size()) {
      const auto c = static_cast<int>(next[v]++);
      stack.emplace_back(graph.successor[v][c], c);
    } else {
      circuit.push_back(stack.back());
      stack.pop_back();
    }
  }
  if (circuit.size() != edges + 1) {
    throw StructuralError("graph is not connected; no Eulerian cycle");
  }
  std::reverse(circuit.begin(), circuit.end());

  EulerianCycle cycle;
  cycle.vertices.reserve(edges);
  cycle.labels.reserve(edges);
  for (std::size_t k = 0; k < edges; ++k) {
    cycle.vertices.push_back(circuit[k].first);
    cycle.labels.push_back(circuit[k + 1].second);
  }
  return cycle;
}

bool is_eulerian_cycle(const CayleyGraph& graph, const EulerianCycle& cycle) {
  if (cycle.vertices.size() != graph.edge_count() || cycle.labels.size() != cycle.vertices.size()) {
    return false;
  }
  std::vector<std::vector<bool>> used(graph.vertices.size(),
                                      std::vector<bool>(graph.generators.size(), false));
  const auto k_len = cycle.vertices.size();
  for (std::size_t k = 0; k < k_len; ++k) {
    const int v = cycle.vertices[k];
    const int c = cycle.labels[k];
    if (v < 0 || static_cast<std::size_t>(v) >= graph.vertices.size()) return false;
    if (c < 0 || static_cast<std::size_t>(c) >= graph.generators.size()) return false;
    if (used[v][c]) return false;
    used[v][c] = true;
    if (graph.successor[v][c] != cycle.vertices[(k + 1) % k_len]) return false;
  }
  return true;
}

SplitGenerator split_generator(const Matrix& gamma, double tau, Basis basis) {
  modes_of(gamma);
  if (!(tau > 0.0)) throw InputError("split_generator needs tau > 0");
  if (!gamma.allFinite()) throw NumericInputError("split_generator: non-finite entries");
  if (!is_symplectic(gamma, basis)) throw NumericInputError("split_generator: gamma is not symplectic");

  const Matrix g = change_basis(gamma, basis, Basis::block);
  Eigen::SelfAdjointEigenSolver<Matrix> eig(g.transpose() * g);
  const Eigen::VectorXd lambda = eig.eigenvalues();
  if (lambda.minCoeff() <= 0.0) throw NumericInputError("split_generator: singular gamma");
  const Matrix& v = eig.eigenvectors();
  const Matrix p_inv = v * lambda.cwiseSqrt().cwiseInverse().asDiagonal() * v.transpose();
  const Matrix log_p = v * (0.5 * lambda.array().log()).matrix().asDiagonal() * v.transpose();
  const Matrix u = g * p_inv;

  SplitGenerator out;
  out.target = gamma;
  out.tau = tau;
  out.basis = basis;
  out.x = change_basis((2.0 / tau) * log_orthosymplectic(u), Basis::block, basis);
  out.y = change_basis((2.0 / tau) * log_p, Basis::block, basis);
  const Matrix rebuilt = expm_real(0.5 * tau * out.x) * expm_real(0.5 * tau * out.y);
  out.reconstruction_error = (rebuilt - gamma).cwiseAbs().maxCoeff();
  if (out.reconstruction_error > 1e-9) {
    throw NumericInputError("split_generator: reconstruction error " +
                            std::to_string(out.reconstruction_error) + " exceeds 1e-9");
  }
  return out;
}

Matrix path_point(const SplitGenerator& split, double s) {
  const double half = 0.5 * split.tau;
  if (s <= half) return expm_real(s * split.y);
  return expm_real((s - half) * split.x) * expm_real(half * split.y);
}

Matrix path_point_inverse(const SplitGenerator& split, double s) {
  const double half = 0.5 * split.tau;
  if (s <= half) return expm_real(-s * split.y);
  return expm_real(-half * split.y) * expm_real(-(s - half) * split.x);
}

namespace {

template <typename Visit>
void for_each_midpoint(const Matrix& a, const SplitGenerator& split, int substeps, Visit visit) {
  if (substeps < 1) throw InputError("need at least one sub-step");
  const int n = modes_of(a);
  const Matrix aj = a * symplectic_form(n, split.basis).matrix;
  const double h = split.tau / substeps;
  for (int i = 0; i < substeps; ++i) {
    const double s = (i + 0.5) * h;
    visit(h, Matrix(path_point_inverse(split, s) * aj * path_point(split, s)));
  }
}

}  // namespace

Matrix segment_integral(const Matrix& a, const SplitGenerator& split, int substeps) {
  Matrix sum = Matrix::Zero(a.rows(), a.cols());
  for_each_midpoint(a, split, substeps, [&](double h, const Matrix& f) { sum += h * f; });
  return sum;
}

Matrix segment_propagator(const Matrix& a, const SplitGenerator& split, int substeps) {
  Matrix v = Matrix::Identity(a.rows(), a.cols());
  for_each_midpoint(a, split, substeps,
                    [&](double h, const Matrix& f) { v = expm_real(-h * f) * v; });
  return split.target * v;
}

std::vector<SplitGenerator> split_generators(const CayleyGraph& graph, double tau, Basis basis) {
  std::vector<SplitGenerator> out;
  out.reserve(graph.generators.size());
  for (const auto& gamma : graph.generators) {
    out.push_back(split_generator(gamma.cast<double>(), tau, basis));
  }
  return out;
}

Matrix first_order_generator(const Matrix& a, const CayleyGraph& graph,
                             const std::vector<SplitGenerator>& splits, int substeps) {
  if (splits.size() != graph.generators.size()) {
    throw InputError("need one split per generator");
  }
  const int n = modes_of(a);
  const double tau = splits.front().tau;
  const Basis basis = splits.front().basis;
  const IntMatrix j = symplectic_form_int(n, basis);

  Matrix inner = Matrix::Zero(a.rows(), a.cols());
  for (const auto& split : splits) inner += segment_integral(a, split, substeps);

  Matrix sum = Matrix::Zero(a.rows(), a.cols());
  for (const auto& g : graph.vertices) {
    sum += g.cast<double>() * inner * symplectic_inverse(g, j).cast<double>();
  }
  return sum / (tau * static_cast<double>(graph.vertices.size() * graph.generators.size()));
}

double fit_rotation_rate(const Matrix& k, Basis basis) {
  const Matrix j = symplectic_form(modes_of(k), basis).matrix;
  return k.cwiseProduct(j).sum() / j.squaredNorm();
}

EulerianRun eulerian_evolution(const Matrix& a, const CayleyGraph& graph, double t,
                               int repetitions, int substeps, Basis basis) {
  const int n = modes_of(a);
  if (repetitions < 1) throw InputError("eulerian_evolution needs N >= 1");
  if (!(t > 0.0) || !std::isfinite(t)) throw InputError("eulerian_evolution needs finite t > 0");
  const EulerianCycle cycle = find_eulerian_cycle(graph);
  const double tau = t / (static_cast<double>(repetitions) * static_cast<double>(cycle.length()));
  const auto splits = split_generators(graph, tau, basis);

  std::vector<Matrix> segment;
  segment.reserve(splits.size());
  for (const auto& split : splits) segment.push_back(segment_propagator(a, split, substeps));

  Matrix pass = Matrix::Identity(2 * n, 2 * n);
  for (int label : cycle.labels) pass = segment[label] * pass;
  Matrix total = pass;
  for (int r = 1; r < repetitions; ++r) total = pass * total;

  // Frame g_1 = h_1^{-1}.
  const IntMatrix j = symplectic_form_int(n, basis);
  const IntMatrix& h1 = graph.vertices[cycle.vertices.front()];
  const Matrix g1 = symplectic_inverse(h1, j).cast<double>();
  const Matrix g1_inv = h1.cast<double>();
  return EulerianRun{SymplecticMatrix(g1 * total * g1_inv, basis), tau, cycle.length()};
}

void write_pulse_schedule(std::ostream& out, const EulerianCycle& cycle,
                          const std::vector<SplitGenerator>& splits) {
  auto write_row = [&](std::size_t k, char segment, const Matrix& m) {
    out << k << ',' << segment;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) out << ',' << format_double(m(r, c));
    }
    out << '\n';
  };
  for (std::size_t k = 0; k < cycle.length(); ++k) {
    const auto& split = splits.at(cycle.labels[k]);
    write_row(k, 'Y', split.y);
    write_row(k, 'X', split.x);
  }
}

}  // namespace sympdd
