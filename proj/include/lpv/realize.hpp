// Copyright 2026 The lpvssa Authors
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

#include "lpv/hankel.hpp"
#include "lpv/markov.hpp"
#include "lpv/model.hpp"

namespace lpv {

inline constexpr double kDefaultIsoTol = 1e-8;

struct HoKalmanResult {
  LpvSsa model;
  Vector x0;
  /// Singular values of H(n, n+1).
  Vector singular_values;
  /// Rank of H(n, n+1) (the recovered state dimension) and of its H(n, n) part.
  int rank = 0;
  int rank_square = 0;
  /// Set when the two ranks differ; the H(n, n+1) truncation is used anyway.
  bool rank_mismatch = false;
};

/// Ho-Kalman realization from H(n, n+1):
///   H = U S V^T (truncated at rel_tol),  O^ = U S^1/2,  R^ = S^1/2 V^T,
///   [x0 B_0 ... B_np] = leading block of R^,  [C_0; ...; C_np] = leading block of O^,
///   A_i = R~_i pinv(R_bar),
/// where R_bar collects the blocks of R^ for every word v with |v| <= n and
/// R~_i the blocks for the words v.i.
HoKalmanResult ho_kalman(const HankelFinite& H, double rel_tol = kDefaultRankTol,
                         TimeDomain domain = TimeDomain::kDiscrete);

struct PartialRealizationReport {
  double max_deviation = 0.0;
  Word worst_word{0};
  bool pass = false;
};

/// Compares sub_markov(model, x0, s) with theta(s) for every |s| <= n.
PartialRealizationReport partial_realization_check(const LpvSsa& model, const Vector& x0,
                                                   const ThetaOracle& theta, int n,
                                                   double tol = 1e-8);

struct RankStabilization {
  int rank_nn = 0;
  int rank_n1n = 0;
  int rank_nn1 = 0;
  bool stabilized = false;
};

/// Ranks of H(n, n), H(n+1, n) and H(n, n+1); needs theta on |s| <= 2n+2.
RankStabilization rank_stabilization(const ThetaOracle& theta, int np, int nu, int ny, int n,
                                     double rel_tol = kDefaultRankTol);

/// State-space isomorphism x2 = T x1 between two models.
struct Isomorphism {
  Matrix T;
  double residual_A = 0.0;  // max_i |A2_i T - T A1_i|
  double residual_B = 0.0;  // max_i |B2_i - T B1_i|
  double residual_C = 0.0;  // max_i |C2_i T - C1_i|
  double residual_D = 0.0;  // max_i |D2_i - D1_i|
  double residual_x0 = 0.0; // |T x1 - x2|
  double condition = 0.0;   // 2-norm condition number of T
  bool success = false;

  double max_residual() const;
};

/// T = R2 pinv(R1) with R_k the (nx-1)-step extended reachability matrices.
/// Success requires every residual <= tol and T numerically invertible.
/// Non-minimal inputs show up as failure, not as an exception.
Isomorphism find_isomorphism(const LpvSsa& m1, const Vector& x1, const LpvSsa& m2,
                             const Vector& x2, double tol = kDefaultIsoTol,
                             double rel_tol = kDefaultRankTol);

/// Residuals of the isomorphism equations for a given T.
Isomorphism check_isomorphism(const LpvSsa& m1, const Vector& x1, const LpvSsa& m2,
                              const Vector& x2, const Matrix& T, double tol = kDefaultIsoTol);

}  // namespace lpv
