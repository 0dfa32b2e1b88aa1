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

// Truncated Fock-space cross-check of the symplectic picture. Independent of
// everything else in the library except evolve(), which it validates.

#pragma once

#include <vector>

#include "sympdd/averaging.hpp"
#include "sympdd/symplectic.hpp"

namespace sympdd {

inline constexpr int kMaxFockDimension = 4096;

/// Defects below this are rounding noise, which grows slowly with d; cutoff
/// monotonicity is only meaningful above it.
inline constexpr double kFockRoundoffFloor = 1e-10;

/// Annihilation operator on levels 0..d-1: a(k-1, k) = sqrt(k).
ComplexMatrix ladder_operator(int cutoff);

/// Quadratures x = (a + a^dag)/sqrt2, p = -i (a - a^dag)/sqrt2 for each
/// mode, embedded in the tensor product of `modes` truncated oscillators
/// (mode 0 is the most significant tensor factor).
struct TruncatedMode {
  int modes = 0;
  int cutoff = 0;
  std::vector<ComplexMatrix> x;
  std::vector<ComplexMatrix> p;

  int dim() const;
  /// R = (x_1, ..., x_n, p_1, ..., p_n), the block layout.
  const ComplexMatrix& quadrature(int index) const;
};

/// Requires modes in {1, 2} and d >= 4; throws SizeLimitError when
/// d^modes > 4096.
TruncatedMode build_quadratures(int modes, int cutoff);

/// Largest |entry| of [x_i, p_j] - i delta_ij on states with every
/// occupation below d - 2.
double commutator_defect(const TruncatedMode& mode);

struct HeisenbergCheck {
  /// max_j || P (U^dag R_j U - sum_k S^T_jk R_k) P ||_inf
  double defect = 0.0;
  /// || U^dag U - 1 ||, max-abs entry.
  double unitarity_defect = 0.0;
  /// Largest population reaching the top Fock level from a projected basis
  /// state.
  double top_level_leakage = 0.0;
};

/**
 * Builds H = 1/2 sum_ij A_ij R_i R_j (A in block layout), U = exp(-iHt) by
 * Hermitian eigendecomposition, and compares the Heisenberg-evolved
 * quadratures with the symplectic prediction on Fock levels below d/2.
 *
 * For U = exp(-iHt), dR/dt = J A R, so U^dag R U = S(t)^T R with
 * S(t) = exp(-tAJ) from evolve().
 */
HeisenbergCheck heisenberg_check(const Matrix& a, double t, int cutoff);

/// Two-mode beamsplitter H = g (a b^dag + a^dag b) = g (x_a x_b + p_a p_b),
/// block layout.
Matrix beamsplitter_preset(double g);

/// One system oscillator coupled to n_E environment oscillators by
/// sum_k g_k (a b_k^dag + a^dag b_k), plus free terms omega (x^2 + p^2)/2
/// per mode. Interleaved layout, system first.
PartitionedModel vitali_preset(double omega_s, const std::vector<double>& omega_e,
                               const std::vector<double>& couplings);

}  // namespace sympdd
