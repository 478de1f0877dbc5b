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

#include "lpv/reduce.hpp"

#include "lpv/hankel.hpp"
#include "lpv/linalg.hpp"

namespace lpv {

namespace {

double max_abs(const Matrix& M) { return M.size() == 0 ? 0.0 : M.cwiseAbs().maxCoeff(); }

int depth(const LpvSsa& model) { return std::max(model.nx - 1, 0); }

Reduction project(const LpvSsa& model, const Vector& x0, Matrix basis, int dim) {
  Reduction out;
  const Matrix keep = basis.leftCols(dim);
  out.model = transform(model, keep.transpose(), keep);
  out.x0 = keep.transpose() * x0;
  out.basis = std::move(basis);
  out.dim = dim;
  return out;
}

}  // namespace

MinimalityReport minimality_test(const LpvSsa& model, const Vector& x0, double rel_tol) {
  require_valid(model);
  require_state(model, x0);
  MinimalityReport report;
  report.reach_rank = numeric_rank(reach_factor(model, x0, depth(model)), rel_tol).rank;
  report.obs_rank = numeric_rank(obs_factor(model, depth(model)), rel_tol).rank;
  report.reachable = report.reach_rank == model.nx;
  report.observable = report.obs_rank == model.nx;
  report.minimal = report.reachable && report.observable;
  return report;
}

Reduction reach_reduce(const LpvSsa& model, const Vector& x0, double rel_tol) {
  require_valid(model);
  require_state(model, x0);
  const ThinSvd svd = full_svd(reach_factor(model, x0, depth(model)));
  const int r = rank_from_singular_values(svd.S, rel_tol);
  return project(model, x0, svd.U, r);
}

Reduction obs_reduce(const LpvSsa& model, const Vector& x0, double rel_tol) {
  require_valid(model);
  require_state(model, x0);
  const ThinSvd svd = full_svd(obs_factor(model, depth(model)));
  const int o = rank_from_singular_values(svd.S, rel_tol);
  return project(model, x0, svd.V, o);
}

MinimizeResult minimize(const LpvSsa& model, const Vector& x0, double rel_tol) {
  const Reduction reach = reach_reduce(model, x0, rel_tol);
  const Reduction obs = obs_reduce(reach.model, reach.x0, rel_tol);
  return {obs.model, obs.x0};
}

KalmanDecomposition kalman_decompose(const LpvSsa& model, const Vector& x0, double rel_tol) {
  require_valid(model);
  require_state(model, x0);
  const int nx = model.nx;

  const ThinSvd reach = full_svd(reach_factor(model, x0, depth(model)));
  const int r = rank_from_singular_values(reach.S, rel_tol);
  const Matrix Q_reach = reach.U.leftCols(r);

  // Im R ∩ Ker O = Q_reach * Ker(O Q_reach).
  const Matrix restricted = obs_factor(model, depth(model)) * Q_reach;
  const ThinSvd inner = full_svd(restricted);
  const int r_m = rank_from_singular_values(inner.S, rel_tol);

  Matrix basis(nx, nx);
  basis.leftCols(r) = Q_reach * inner.V;
  basis.rightCols(nx - r) = reach.U.rightCols(nx - r);

  KalmanDecomposition out;
  out.T = basis.transpose();
  out.T_inv = basis;
  out.r = r;
  out.r_m = r_m;
  out.hat_model = transform(model, out.T, out.T_inv);
  out.hat_x0 = out.T * x0;
  const Matrix keep = basis.leftCols(r_m);
  out.minimal_part = transform(model, keep.transpose(), keep);
  out.minimal_x0 = keep.transpose() * x0;
  out.pattern_residual = kalman_pattern_residual(out.hat_model, out.hat_x0, r_m, r);
  return out;
}

double kalman_pattern_residual(const LpvSsa& hat_model, const Vector& hat_x0, int r_m, int r) {
  const int nx = hat_model.nx;
  const int rest = nx - r;
  const int mid = r - r_m;
  double res = 0.0;
  for (int i = 0; i <= hat_model.np; ++i) {
    const Matrix& A = hat_model.A[i];
    res = std::max(res, max_abs(A.bottomLeftCorner(rest, r)));
    res = std::max(res, max_abs(A.block(0, r_m, r_m, mid)));
    res = std::max(res, max_abs(hat_model.B[i].bottomRows(rest)));
    res = std::max(res, max_abs(hat_model.C[i].middleCols(r_m, mid)));
  }
  res = std::max(res, max_abs(hat_x0.tail(rest)));
  return res;
}

}  // namespace lpv
