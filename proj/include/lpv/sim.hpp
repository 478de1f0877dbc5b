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

#include <vector>

#include "lpv/markov.hpp"
#include "lpv/model.hpp"
#include "lpv/signal.hpp"

namespace lpv {

/// Aligned samples (t, u, p, x, y). DT grids are 0, 1, ..., T-1.
struct Trajectory {
  std::vector<double> t;
  std::vector<Vector> u;
  std::vector<Vector> p;
  std::vector<Vector> x;
  std::vector<Vector> y;
};

/// x(0) = x0, x(t+1) = A(p(t)) x(t) + B(p(t)) u(t), y(t) = C(p(t)) x(t) + D(p(t)) u(t).
Trajectory simulate_dt(const LpvSsa& model, const Vector& x0, const std::vector<Vector>& u,
                       const std::vector<Vector>& p);

/// DT fundamental matrix Phi_p(t, tau) = A(p(t-1)) ... A(p(tau)); identity for t = tau.
Matrix transition_dt(const LpvSsa& model, const std::vector<Vector>& p, int t, int tau);

/// y(t) from the impulse-response sums
///   y(t) = sum_{i,s} eta_i(s) p_i(t) (w_s <> p)(t-1, 0)
///        + sum_{delta<t} sum_{i,j,s} theta_ij(s) p_i(t) p_j(delta) (w_s <> p)(t-1, delta+1) u(delta)
///        + D(p(t)) u(t).
/// All sums are finite in discrete time.
Vector iir_eval_dt(const LpvSsa& model, const Vector& x0, const std::vector<Vector>& u,
                   const std::vector<Vector>& p, int t);

/// Classical RK4 with fixed step h on dx/dt = A(p(t)) x + B(p(t)) u(t), from
/// t = 0 to the largest multiple of h not beyond `horizon`. u and p are read
/// by piecewise-linear interpolation.
Trajectory simulate_ct(const LpvSsa& model, const Vector& x0, const SampledSignal& u,
                       const SampledSignal& p, double h, double horizon);

struct TruncatedIir {
  Vector y;
  /// Certified bound on the contribution of every word longer than max_len.
  double tail_bound = 0.0;
};

/// Sum of the continuous-time impulse-response series over words |s| <= max_len,
/// with iterated integrals by composite trapezoid on a grid of spacing <= quad_step.
/// Adds D(p(t)) u(t). The tail bound is
///   rho K (1 + rho |u|_inf t) sum_{k > max_len} (R rho t)^k / k!,
/// rho = 1 + sup_t sum_i |p_i(t)|, with (K, R) from growth_bound.
TruncatedIir iir_eval_ct_truncated(const LpvSsa& model, const Vector& x0, const SampledSignal& u,
                                   const SampledSignal& p, double t, int max_len,
                                   double quad_step);

/// The tail bound used by iir_eval_ct_truncated.
double ct_tail_bound(const GrowthBound& bound, double rho, double u_max, double t, int max_len);

/// Smallest max_len whose certified tail falls below `tol` (capped at `limit`).
int ct_words_for_tolerance(const LpvSsa& model, const Vector& x0, const SampledSignal& u,
                           const SampledSignal& p, double t, double tol, int limit = 200);

}  // namespace lpv
