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

#include <Eigen/Dense>

namespace lpv {

struct RankResult {
  int rank = 0;
  Eigen::VectorXd singular_values;
};

/// Numerical rank: number of singular values above rel_tol * sigma_max.
/// A zero (or empty) matrix has rank 0.
RankResult numeric_rank(const Eigen::MatrixXd& M, double rel_tol);

/// Number of entries of sv (sorted decreasing) above rel_tol * sv(0).
int rank_from_singular_values(const Eigen::VectorXd& sv, double rel_tol);

/// Moore-Penrose pseudo-inverse with the same relative cutoff.
Eigen::MatrixXd pinv(const Eigen::MatrixXd& M, double rel_tol);

/// Thin SVD with both factors; deterministic for fixed input.
struct ThinSvd {
  Eigen::MatrixXd U;
  Eigen::VectorXd S;
  Eigen::MatrixXd V;
};
ThinSvd thin_svd(const Eigen::MatrixXd& M);

/// Full SVD (square U and V).
ThinSvd full_svd(const Eigen::MatrixXd& M);

}  // namespace lpv
