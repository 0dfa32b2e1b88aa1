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

#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "sympdd/averaging.hpp"
#include "sympdd/error.hpp"
#include "sympdd/eulerian.hpp"
#include "sympdd/experiments.hpp"
#include "sympdd/groups.hpp"
#include "sympdd/schemes.hpp"

using namespace sympdd;

namespace {

CayleyGraph n1_graph() {
  std::vector<IntMatrix> vertices;
  for (const auto& g : enumerate_homogenization_group(1)) vertices.push_back(element_matrix(g));
  const IntMatrix j = oracle::j_block(1).cast<int>();
  return build_cayley_graph(vertices, {j, IntMatrix(-IntMatrix::Identity(2, 2))});
}

Matrix positive_random(int dim, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) m(i, j) = u(gen);
  }
  return 0.5 * (m + m.transpose());
}

}  // namespace

TEST_CASE("Z2 Cayley graph") {
  const IntMatrix id = IntMatrix::Identity(2, 2);
  const CayleyGraph g = build_cayley_graph({id, IntMatrix(-id)}, {IntMatrix(-id)});
  CHECK(g.vertices.size() == 2);
  CHECK(g.edge_count() == 2);
  const auto cycle = find_eulerian_cycle(g);
  CHECK(cycle.vertices == std::vector<int>{0, 1});
  CHECK(cycle.labels == std::vector<int>{0, 0});
  CHECK(is_eulerian_cycle(g, cycle));
}

TEST_CASE("homogenization graph for one mode") {
  const CayleyGraph g = n1_graph();
  CHECK(g.edge_count() == 8);
  for (int d : g.in_degrees()) CHECK(d == 2);
  for (const auto& row : g.successor) CHECK(row.size() == 2);

  const auto cycle = find_eulerian_cycle(g);
  REQUIRE(cycle.length() == 8);
  CHECK(is_eulerian_cycle(g, cycle));
  CHECK(g.vertices[cycle.vertices.front()].isIdentity());

  // Traversed (vertex, generator) pairs are exactly the edge set, and every
  // step lands where the generator sends it.
  std::map<std::pair<int, int>, int> used;
  for (std::size_t k = 0; k < cycle.length(); ++k) {
    const int v = cycle.vertices[k];
    const int c = cycle.labels[k];
    ++used[{v, c}];
    const int w = cycle.vertices[(k + 1) % cycle.length()];
    CHECK(g.vertices[w] == g.generators[c] * g.vertices[v]);
  }
  CHECK(used.size() == 8);
  for (const auto& [edge, count] : used) CHECK(count == 1);

  // With frames g_k = h_k^{-1}, g_{k+1}^{-1} g_k is the generator used.
  for (std::size_t k = 0; k < cycle.length(); ++k) {
    const IntMatrix hk = g.vertices[cycle.vertices[k]];
    const IntMatrix hk1 = g.vertices[cycle.vertices[(k + 1) % cycle.length()]];
    const IntMatrix gk = hk.transpose();  // orthogonal, so inverse = transpose
    const IntMatrix gk1 = hk1.transpose();
    CHECK(gk1.transpose() * gk == g.generators[cycle.labels[k]]);
  }
}

TEST_CASE("graph errors") {
  std::vector<IntMatrix> vertices;
  for (const auto& g : enumerate_homogenization_group(1)) vertices.push_back(element_matrix(g));
  CHECK_THROWS_AS(build_cayley_graph(vertices, {IntMatrix(-IntMatrix::Identity(2, 2))}),
                  GenerationError);
  IntMatrix outside = IntMatrix::Identity(2, 2);
  outside(0, 0) = 2;
  CHECK_THROWS_AS(build_cayley_graph(vertices, {outside}), GenerationError);

  CayleyGraph broken;
  broken.vertices = {IntMatrix::Identity(2, 2), IntMatrix(-IntMatrix::Identity(2, 2))};
  broken.generators = {IntMatrix(-IntMatrix::Identity(2, 2))};
  broken.successor = {{1}, {1}};
  CHECK_THROWS_AS(find_eulerian_cycle(broken), StructuralError);
}

TEST_CASE("larger homogenization graphs are Eulerian") {
  for (int n = 2; n <= 3; ++n) {
    std::vector<IntMatrix> vertices;
    for (const auto& g : enumerate_homogenization_group(n)) vertices.push_back(element_matrix(g));
    const CayleyGraph g = build_cayley_graph(vertices, homogenization_generators(n));
    const auto cycle = find_eulerian_cycle(g);
    CHECK(cycle.length() == g.edge_count());
    CHECK(is_eulerian_cycle(g, cycle));
  }
}

TEST_CASE("split generator closed forms") {
  const double tau = 0.2;
  const auto id = split_generator(Matrix::Identity(2, 2), tau);
  CHECK(id.x.cwiseAbs().maxCoeff() < 1e-14);
  CHECK(id.y.cwiseAbs().maxCoeff() < 1e-14);

  const Matrix j = oracle::j_block(1);
  // J is the rotation by -pi/2 and exp((pi/2) J) = J.
  const auto sj = split_generator(j, tau);
  CHECK(sj.y.cwiseAbs().maxCoeff() < 1e-13);
  CHECK((sj.x - (std::numbers::pi / tau) * j).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((oracle::taylor_expm(0.5 * tau * sj.x) - j).cwiseAbs().maxCoeff() < 1e-12);

  // -1 is a rotation by pi; the branch is fixed at +pi.
  const auto sm = split_generator(-Matrix::Identity(2, 2), tau);
  CHECK(sm.y.cwiseAbs().maxCoeff() < 1e-13);
  CHECK((sm.x + (2.0 * std::numbers::pi / tau) * j).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((oracle::taylor_expm(0.5 * tau * sm.x) + Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() <
        1e-12);

  Matrix squeeze = Matrix::Zero(2, 2);
  squeeze(0, 0) = 2.0;
  squeeze(1, 1) = 0.5;
  const auto ss = split_generator(squeeze, tau);
  CHECK(ss.x.cwiseAbs().maxCoeff() < 1e-12);
  CHECK(ss.y(0, 0) == doctest::Approx(2.0 / tau * std::log(2.0)));
  CHECK(ss.y(1, 1) == doctest::Approx(-2.0 / tau * std::log(2.0)));

  CHECK_THROWS_AS(split_generator(2.0 * Matrix::Identity(2, 2), tau), NumericInputError);
}

TEST_CASE("split generator on random symplectic matrices") {
  std::mt19937_64 gen(4);
  for (int n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const Matrix h = oracle::random_symmetric(2 * n, 1.0, gen);
      const Matrix gamma = oracle::taylor_expm(h * oracle::j_block(n));
      const auto s = split_generator(gamma, 0.1);
      CHECK(s.reconstruction_error < 1e-10);
      CHECK((s.x + s.x.transpose()).cwiseAbs().maxCoeff() < 1e-10);
      CHECK((s.y - s.y.transpose()).cwiseAbs().maxCoeff() < 1e-10);
      CHECK((path_point(s, 0.0) - Matrix::Identity(2 * n, 2 * n)).cwiseAbs().maxCoeff() < 1e-14);
      CHECK((path_point(s, 0.1) - gamma).cwiseAbs().maxCoeff() < 1e-9);
      for (double t : {0.01, 0.05, 0.07}) {
        CHECK((path_point_inverse(s, t) * path_point(s, t) - Matrix::Identity(2 * n, 2 * n))
                  .cwiseAbs()
                  .maxCoeff() < 1e-12);
        CHECK(is_symplectic(path_point(s, t)));
      }
      // Interleaved layout gives the same generators re-indexed.
      const auto si = split_generator(change_basis(gamma, Basis::block, Basis::interleaved), 0.1,
                                      Basis::interleaved);
      CHECK((change_basis(s.x, Basis::block, Basis::interleaved) - si.x).cwiseAbs().maxCoeff() <
            1e-9);
    }
  }
}

TEST_CASE("segment integral quadrature converges") {
  std::mt19937_64 gen(6);
  const Matrix a = positive_random(2, gen);
  const auto split = split_generator(oracle::j_block(1), 0.1);
  const Matrix ref = segment_integral(a, split, 1024);
  const double e16 = (segment_integral(a, split, 16) - ref).norm();
  const double e32 = (segment_integral(a, split, 32) - ref).norm();
  CHECK(e32 < 0.5 * e16);
  // Midpoint rule: second order.
  CHECK(e16 / e32 == doctest::Approx(4.0).epsilon(0.1));
}

TEST_CASE("first-order generator is a rotation") {
  std::mt19937_64 gen(9);
  const CayleyGraph g = n1_graph();
  for (int trial = 0; trial < 5; ++trial) {
    const Matrix a = positive_random(2, gen);
    const auto splits = split_generators(g, 0.01);
    const Matrix k = first_order_generator(a, g, splits, kDefaultSubsteps);
    const double lambda = a.trace() / 2.0;
    CHECK(fit_rotation_rate(k) == doctest::Approx(lambda).epsilon(1e-12));
    CHECK((k - lambda * oracle::j_block(1)).norm() <= 1e-3 * a.norm());
  }
}

TEST_CASE("eulerian evolution") {
  const CayleyGraph g = n1_graph();
  // Without drift the pulses multiply to the identity around the cycle.
  const auto run0 = eulerian_evolution(Matrix::Zero(2, 2), g, 1.0, 3);
  CHECK((run0.evolution.matrix() - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(run0.cycle_length == 8);
  CHECK(run0.tau == doctest::Approx(1.0 / 24.0));

  std::mt19937_64 gen(10);
  const Matrix a = positive_random(2, gen);
  const auto group = DecouplingGroup::homogenization(1);
  const Matrix target = target_evolution(a, group, 1.0).matrix();
  double prev = 0.0;
  for (int n : {4, 8, 16, 32}) {
    const double dev = op_norm(eulerian_evolution(a, g, 1.0, n).evolution.matrix() - target);
    if (n > 4) CHECK(prev / dev == doctest::Approx(2.0).epsilon(0.25));
    prev = dev;
  }
  CHECK_THROWS_AS(eulerian_evolution(a, g, 1.0, 0), InputError);
}

TEST_CASE("pulse schedule") {
  const CayleyGraph g = n1_graph();
  const auto cycle = find_eulerian_cycle(g);
  std::ostringstream out;
  write_pulse_schedule(out, cycle, split_generators(g, 0.5));
  std::istringstream in(out.str());
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    const std::string expect = std::to_string(rows / 2) + (rows % 2 == 0 ? ",Y," : ",X,");
    CHECK(line.rfind(expect, 0) == 0);
    CHECK(std::count(line.begin(), line.end(), ',') == 5);
    ++rows;
  }
  CHECK(rows == 16);
}
