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

#include "lpv/model.hpp"

namespace lpv {

struct MinimalityReport {
  int reach_rank = 0;  // rank R_{nx-1}
  int obs_rank = 0;    // rank O_{nx-1}
  bool reachable = false;
  bool observable = false;
  bool minimal = false;
};

MinimalityReport minimality_test(const LpvSsa& model, const Vector& x0,
                                 double rel_tol = kDefaultRankTol);

/// Reduced model together with the orthonormal basis used to build it. The
/// reduced state is basis^T x; the reduction maps are x_red = basis^T x and,
/// on the relevant subspace, x = basis x_red.
struct Reduction {
  LpvSsa model;
  Vector x0;
  /// nx x nx orthonormal basis [b_1 ... b_nx] (columns) of the source state space.
  Matrix basis;
  int dim = 0;
};

/// Restriction to Im R_{nx-1}: the first `dim` basis vectors span the reachable
/// subspace, so the transformed A_i are block upper triangular.
Reduction reach_reduce(const LpvSsa& model, const Vector& x0, double rel_tol = kDefaultRankTol);

/// Quotient by Ker O_{nx-1}: the last nx - dim basis vectors span the
/// unobservable subspace, so the transformed C_i vanish on it.
Reduction obs_reduce(const LpvSsa& model, const Vector& x0, double rel_tol = kDefaultRankTol);

struct MinimizeResult {
  LpvSsa model;
  Vector x0;
};

/// reach_reduce followed by obs_reduce.
MinimizeResult minimize(const LpvSsa& model, const Vector& x0, double rel_tol = kDefaultRankTol);

/// Kalman decomposition. In the basis b (x_hat = T x, T = b^T), with block
/// sizes r_m, r - r_m, nx - r:
///
///   A^_i = [Am  0  *]    B^_i = [Bm]    C^_i = [Cm 0 *]    x^0 = [xm]
///          [ *  *  *]           [ *]                              [ *]
///          [ 0  0  *]           [ 0]                              [ 0]
struct KalmanDecomposition {
  Matrix T;
  Matrix T_inv;
  LpvSsa hat_model;
  Vector hat_x0;
  int r = 0;
  int r_m = 0;
  LpvSsa minimal_part;
  Vector minimal_x0;
  /// max-abs over every entry the block pattern above requires to be zero.
  double pattern_residual = 0.0;
};

KalmanDecomposition kalman_decompose(const LpvSsa& model, const Vector& x0,
                                     double rel_tol = kDefaultRankTol);

/// max-abs of the entries that must vanish in a Kalman-decomposed model with
/// block sizes (r_m, r, nx).
double kalman_pattern_residual(const LpvSsa& hat_model, const Vector& hat_x0, int r_m, int r);

}  // namespace lpv
