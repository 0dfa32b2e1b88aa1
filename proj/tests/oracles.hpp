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

// Reference computations for the tests. Nothing here calls into the library
// beyond its matrix typedefs.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <deque>
#include <random>
#include <set>
#include <vector>

#include "sympdd/symplectic.hpp"

namespace oracle {

using sympdd::ComplexMatrix;
using sympdd::IntMatrix;
using sympdd::Matrix;

// Plain power series after scaling by 2^-s, then s squarings.
inline Matrix taylor_expm(const Matrix& m) {
  const double norm = m.cwiseAbs().rowwise().sum().maxCoeff();
  int s = 0;
  while (std::ldexp(norm, -s) > 0.25) ++s;
  const Matrix x = std::ldexp(1.0, -s) * m;
  Matrix term = Matrix::Identity(m.rows(), m.cols());
  Matrix sum = term;
  for (int k = 1; k <= 30; ++k) {
    term = (term * x) / static_cast<double>(k);
    sum += term;
  }
  for (int i = 0; i < s; ++i) sum = sum * sum;
  return sum;
}

inline Matrix rotation(double angle) {
  Matrix r(2, 2);
  r << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
  return r;
}

inline Matrix j_block(int n) {
  Matrix j = Matrix::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    j(i, n + i) = 1.0;
    j(n + i, i) = -1.0;
  }
  return j;
}

inline Matrix j_interleaved(int n) {
  Matrix j = Matrix::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    j(2 * i, 2 * i + 1) = 1.0;
    j(2 * i + 1, 2 * i) = -1.0;
  }
  return j;
}

struct IntMatrixLess {
  bool operator()(const IntMatrix& a, const IntMatrix& b) const {
    return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(),
                                        b.data() + b.size());
  }
};

// Every product of generator words, by breadth-first search.
inline std::set<IntMatrix, IntMatrixLess> closure(const std::vector<IntMatrix>& gens) {
  std::set<IntMatrix, IntMatrixLess> seen;
  std::deque<IntMatrix> queue;
  const IntMatrix id = IntMatrix::Identity(gens.front().rows(), gens.front().cols());
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    const IntMatrix g = queue.front();
    queue.pop_front();
    for (const auto& h : gens) {
      IntMatrix p = h * g;
      if (seen.insert(p).second) queue.push_back(p);
    }
  }
  return seen;
}

template <typename M>
struct ComplexLess {
  bool operator()(const M& a, const M& b) const {
    for (Eigen::Index i = 0; i < a.size(); ++i) {
      const auto x = a.data()[i];
      const auto y = b.data()[i];
      if (x.real() != y.real()) return x.real() < y.real();
      if (x.imag() != y.imag()) return x.imag() < y.imag();
    }
    return false;
  }
};

inline std::set<ComplexMatrix, ComplexLess<ComplexMatrix>> closure(
    const std::vector<ComplexMatrix>& gens) {
  std::set<ComplexMatrix, ComplexLess<ComplexMatrix>> seen;
  std::deque<ComplexMatrix> queue;
  const ComplexMatrix id = ComplexMatrix::Identity(gens.front().rows(), gens.front().cols());
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    const ComplexMatrix g = queue.front();
    queue.pop_front();
    for (const auto& h : gens) {
      ComplexMatrix p = h * g;
      if (seen.insert(p).second) queue.push_back(p);
    }
  }
  return seen;
}

// Largest singular value of a 2x2 matrix from the closed-form eigenvalues of
// M^T M.
inline double op_norm_2x2(const Matrix& m) {
  const Matrix g = m.transpose() * m;
  const double tr = g.trace();
  const double det = g.determinant();
  return std::sqrt(0.5 * (tr + std::sqrt(std::max(0.0, tr * tr - 4.0 * det))));
}

inline Matrix random_symmetric(int dim, double scale, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(-scale, scale);
  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) m(i, j) = u(gen);
  }
  return 0.5 * (m + m.transpose());
}

}  // namespace oracle
