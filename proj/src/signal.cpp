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

#include "lpv/signal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lpv {

SampledSignal::SampledSignal(double t0, double step, std::vector<Eigen::VectorXd> samples)
    : t0_(t0), step_(step), samples_(std::move(samples)) {
  if (samples_.empty()) throw std::invalid_argument("signal needs at least one sample");
  if (!(step_ > 0.0) || !std::isfinite(step_)) {
    throw std::invalid_argument("signal step must be positive");
  }
  const auto dim = samples_.front().size();
  for (const auto& s : samples_) {
    if (s.size() != dim) throw std::invalid_argument("signal samples differ in length");
  }
}

SampledSignal SampledSignal::from_times(const std::vector<double>& times,
                                        std::vector<Eigen::VectorXd> samples) {
  if (times.size() != samples.size()) {
    throw std::invalid_argument("time grid and samples differ in length");
  }
  if (times.size() < 2) return SampledSignal(times.empty() ? 0.0 : times[0], 1.0, std::move(samples));
  const double step = times[1] - times[0];
  for (std::size_t k = 1; k < times.size(); ++k) {
    const double expected = times[0] + step * static_cast<double>(k);
    if (std::abs(times[k] - expected) > 1e-9 * std::max(1.0, std::abs(expected))) {
      throw std::invalid_argument("time grid is not uniform");
    }
  }
  return SampledSignal(times[0], step, std::move(samples));
}

SampledSignal SampledSignal::from_function(const std::function<Eigen::VectorXd(double)>& f,
                                           double t0, double t_end, double step) {
  const auto n = static_cast<std::size_t>(std::llround((t_end - t0) / step));
  std::vector<Eigen::VectorXd> samples;
  samples.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) samples.push_back(f(t0 + step * static_cast<double>(k)));
  return SampledSignal(t0, step, std::move(samples));
}

Eigen::VectorXd SampledSignal::at(double t) const {
  const double pos = (t - t0_) / step_;
  if (pos <= 0.0) return samples_.front();
  const auto last = static_cast<double>(samples_.size() - 1);
  if (pos >= last) return samples_.back();
  const double k = std::floor(pos);
  const double frac = pos - k;
  const auto i = static_cast<std::size_t>(k);
  if (frac == 0.0) return samples_[i];
  return (1.0 - frac) * samples_[i] + frac * samples_[i + 1];
}

double SampledSignal::sup_l1() const {
  double out = 0.0;
  for (const auto& s : samples_) out = std::max(out, s.cwiseAbs().sum());
  return out;
}

double SampledSignal::sup_l2() const {
  double out = 0.0;
  for (const auto& s : samples_) out = std::max(out, s.norm());
  return out;
}

}  // namespace lpv
