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

// Shared quadrature kernel for iterated integrals over a uniform grid.

#pragma once

#include <cmath>

#include <Eigen/Dense>

#include "lpv/signal.hpp"

namespace lpv::detail {

inline int trapezoid_intervals(double span, double step) {
  if (span <= 0.0) return 0;
  return std::max(1, static_cast<int>(std::ceil(span / step - 1e-9)));
}

/// (np+1) x (N+1) table of channel values on tau + k*h; row 0 is p_0 = 1.
inline Eigen::MatrixXd channel_grid(const SampledSignal& p, double tau, int intervals, double h) {
  Eigen::MatrixXd grid(p.dim() + 1, intervals + 1);
  for (int k = 0; k <= intervals; ++k) {
    grid(0, k) = 1.0;
    grid.col(k).tail(p.dim()) = p.at(tau + h * k);
  }
  return grid;
}

/// out(:, k) = int_{grid 0}^{grid k} weight(d) * f(:, d) dd, by trapezoid rule.
inline void cumulative_trapezoid(const Eigen::MatrixXd& f, const Eigen::RowVectorXd& weight,
                                 double h, Eigen::MatrixXd& out) {
  out.resize(f.rows(), f.cols());
  out.col(0).setZero();
  for (Eigen::Index k = 1; k < f.cols(); ++k) {
    out.col(k) = out.col(k - 1) + 0.5 * h * (weight(k - 1) * f.col(k - 1) + weight(k) * f.col(k));
  }
}

}  // namespace lpv::detail
