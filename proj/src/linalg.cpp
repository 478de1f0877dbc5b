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

#include "lpv/linalg.hpp"

#include <stdexcept>

namespace lpv {

namespace {

// Jacobi is more accurate on small matrices; BDC is the only practical choice
// for the wide Hankel blocks.
constexpr Eigen::Index kJacobiLimit = 64;

template <int Options>
ThinSvd run_svd(const Eigen::MatrixXd& M) {
  ThinSvd out;
  if (M.size() == 0) {
    out.U = Eigen::MatrixXd::Identity(M.rows(), (Options & Eigen::ComputeFullU) ? M.rows() : 0);
    out.V = Eigen::MatrixXd::Identity(M.cols(), (Options & Eigen::ComputeFullV) ? M.cols() : 0);
    out.S.resize(0);
    return out;
  }
  if (std::min(M.rows(), M.cols()) <= kJacobiLimit && std::max(M.rows(), M.cols()) <= 4 * kJacobiLimit) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Options);
    out.U = svd.matrixU();
    out.S = svd.singularValues();
    out.V = svd.matrixV();
  } else {
    Eigen::BDCSVD<Eigen::MatrixXd> svd(M, Options);
    out.U = svd.matrixU();
    out.S = svd.singularValues();
    out.V = svd.matrixV();
  }
  return out;
}

}  // namespace

int rank_from_singular_values(const Eigen::VectorXd& sv, double rel_tol) {
  if (sv.size() == 0 || sv(0) <= 0.0) return 0;
  const double cut = rel_tol * sv(0);
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cut) ++r;
  }
  return r;
}

RankResult numeric_rank(const Eigen::MatrixXd& M, double rel_tol) {
  if (!(rel_tol > 0.0 && rel_tol < 1.0)) {
    throw std::invalid_argument("rel_tol must lie in (0, 1)");
  }
  RankResult out;
  if (M.size() == 0) {
    out.singular_values.resize(0);
    return out;
  }
  if (std::min(M.rows(), M.cols()) <= kJacobiLimit && std::max(M.rows(), M.cols()) <= 4 * kJacobiLimit) {
    out.singular_values = Eigen::JacobiSVD<Eigen::MatrixXd>(M).singularValues();
  } else {
    out.singular_values = Eigen::BDCSVD<Eigen::MatrixXd>(M).singularValues();
  }
  out.rank = rank_from_singular_values(out.singular_values, rel_tol);
  return out;
}

ThinSvd thin_svd(const Eigen::MatrixXd& M) {
  return run_svd<Eigen::ComputeThinU | Eigen::ComputeThinV>(M);
}

ThinSvd full_svd(const Eigen::MatrixXd& M) {
  return run_svd<Eigen::ComputeFullU | Eigen::ComputeFullV>(M);
}

Eigen::MatrixXd pinv(const Eigen::MatrixXd& M, double rel_tol) {
  const ThinSvd svd = thin_svd(M);
  const int r = rank_from_singular_values(svd.S, rel_tol);
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(M.cols(), M.rows());
  for (int k = 0; k < r; ++k) {
    out.noalias() += svd.V.col(k) * (svd.U.col(k).transpose() / svd.S(k));
  }
  return out;
}

}  // namespace lpv
