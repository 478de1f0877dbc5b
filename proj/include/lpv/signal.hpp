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

#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace lpv {

/// Vector signal sampled on a uniform grid t0 + k*step, read back by
/// piecewise-linear interpolation and held constant outside the grid.
class SampledSignal {
 public:
  SampledSignal(double t0, double step, std::vector<Eigen::VectorXd> samples);

  /// Builds from explicit time stamps; throws if they are not uniform.
  static SampledSignal from_times(const std::vector<double>& times,
                                  std::vector<Eigen::VectorXd> samples);

  /// Samples f on t0, t0+step, ..., up to and including t_end.
  static SampledSignal from_function(const std::function<Eigen::VectorXd(double)>& f,
                                     double t0, double t_end, double step);

  Eigen::VectorXd at(double t) const;

  double t0() const { return t0_; }
  double step() const { return step_; }
  double t_end() const { return t0_ + step_ * static_cast<double>(samples_.size() - 1); }
  int dim() const { return static_cast<int>(samples_.front().size()); }
  const std::vector<Eigen::VectorXd>& samples() const { return samples_; }

  /// max_t sum_i |s_i(t)| over the samples (exact for PWL interpolation).
  double sup_l1() const;
  /// max_t ||s(t)||_2 over the samples (exact for PWL interpolation).
  double sup_l2() const;

 private:
  double t0_;
  double step_;
  std::vector<Eigen::VectorXd> samples_;
};

}  // namespace lpv
