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

#include "lpv/markov.hpp"

#include <cmath>
#include <stdexcept>

#include "iterated.hpp"

namespace lpv {

namespace {

void check_alphabet(const LpvSsa& model, const Word& s) {
  if (s.np() != model.np) throw std::invalid_argument("word alphabet differs from model np");
}

// [x0 | B_0 | ... | B_np]
Matrix input_stack(const LpvSsa& model, const Vector& x0) {
  Matrix out(model.nx, SubMarkovBlock::cols(model.np, model.nu));
  out.col(0) = x0;
  for (int j = 0; j <= model.np; ++j) out.middleCols(1 + j * model.nu, model.nu) = model.B[j];
  return out;
}

// [C_0; ...; C_np]
Matrix output_stack(const LpvSsa& model) {
  Matrix out(SubMarkovBlock::rows(model.np, model.ny), model.nx);
  for (int i = 0; i <= model.np; ++i) out.middleRows(i * model.ny, model.ny) = model.C[i];
  return out;
}

}  // namespace

SubMarkovBlock::SubMarkovBlock(int np, int nu, int ny)
    : SubMarkovBlock(np, nu, ny, Matrix::Zero(rows(np, ny), cols(np, nu))) {}

SubMarkovBlock::SubMarkovBlock(int np, int nu, int ny, Matrix theta)
    : np_(np), nu_(nu), ny_(ny), theta_(std::move(theta)) {
  if (theta_.rows() != rows(np, ny) || theta_.cols() != cols(np, nu)) {
    throw std::invalid_argument("sub-Markov block has wrong size");
  }
}

Matrix SubMarkovBlock::eta(int i) const { return theta_.block(i * ny_, 0, ny_, 1); }

Matrix SubMarkovBlock::theta(int i, int j) const {
  return theta_.block(i * ny_, 1 + j * nu_, ny_, nu_);
}

Matrix word_matrix(const LpvSsa& model, const Word& s) {
  require_valid(model);
  check_alphabet(model, s);
  Matrix out = Matrix::Identity(model.nx, model.nx);
  for (int sym : s.symbols()) out = model.A[sym] * out;
  return out;
}

SubMarkovBlock sub_markov(const LpvSsa& model, const Vector& x0, const Word& s) {
  require_valid(model);
  require_state(model, x0);
  check_alphabet(model, s);
  Matrix X = input_stack(model, x0);
  for (int sym : s.symbols()) X = model.A[sym] * X;
  return SubMarkovBlock(model.np, model.nu, model.ny, output_stack(model) * X);
}

std::vector<SubMarkovBlock> sub_markov_table(const LpvSsa& model, const Vector& x0, int max_len) {
  require_valid(model);
  require_state(model, x0);
  if (max_len < 0) throw std::invalid_argument("max_len must be >= 0");
  const Matrix Cs = output_stack(model);
  std::vector<SubMarkovBlock> out;
  out.reserve(static_cast<std::size_t>(car(model.np, max_len)));

  std::vector<Matrix> layer{input_stack(model, x0)};
  out.emplace_back(model.np, model.nu, model.ny, Cs * layer[0]);
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Matrix> next;
    next.reserve(layer.size() * static_cast<std::size_t>(model.channels()));
    for (const Matrix& X : layer) {
      for (int sym = 0; sym <= model.np; ++sym) {
        next.push_back(model.A[sym] * X);
        out.emplace_back(model.np, model.nu, model.ny, Cs * next.back());
      }
    }
    layer = std::move(next);
  }
  return out;
}

ThetaOracle model_oracle(const LpvSsa& model, const Vector& x0) {
  require_valid(model);
  require_state(model, x0);
  return [model, x0](const Word& s) { return sub_markov(model, x0, s); };
}

GrowthBound growth_bound(const LpvSsa& model, const Vector& x0) {
  require_valid(model);
  require_state(model, x0);
  double c2 = 0.0;
  double b2 = x0.squaredNorm();
  GrowthBound out;
  for (int q = 0; q <= model.np; ++q) {
    c2 += model.C[q].squaredNorm();
    b2 += model.B[q].squaredNorm();
    out.R = std::max(out.R, model.A[q].norm());
  }
  out.K = std::sqrt(c2 * b2);
  return out;
}

double w_dt(const Word& s, const std::vector<Vector>& p, int t, int tau) {
  if (s.empty()) return tau == t + 1 ? 1.0 : 0.0;
  if (static_cast<long>(s.size()) != static_cast<long>(t) - tau + 1) return 0.0;
  double out = 1.0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const int sym = s[k];
    if (sym == 0) continue;
    const long time = static_cast<long>(tau) + static_cast<long>(k);
    if (time < 0 || time >= static_cast<long>(p.size())) {
      throw std::out_of_range("scheduling sample " + std::to_string(time) + " not available");
    }
    const Vector& pk = p[static_cast<std::size_t>(time)];
    if (pk.size() < sym) throw std::invalid_argument("scheduling sample too short for word");
    out *= pk(sym - 1);
  }
  return out;
}

double w_ct(const Word& s, const SampledSignal& p, double t, double tau, double step) {
  if (tau > t) throw std::invalid_argument("w_ct requires tau <= t");
  if (s.empty()) return 1.0;
  if (p.dim() < s.np()) throw std::invalid_argument("scheduling signal too short for alphabet");
  const double span = t - tau;
  if (span == 0.0) return 0.0;
  if (step <= 0.0) step = 1e-3 * span;
  const int intervals = detail::trapezoid_intervals(span, step);
  const double h = span / intervals;
  const Eigen::MatrixXd grid = detail::channel_grid(p, tau, intervals, h);

  Eigen::MatrixXd f = Eigen::MatrixXd::Ones(1, intervals + 1);
  Eigen::MatrixXd next;
  for (int sym : s.symbols()) {
    detail::cumulative_trapezoid(f, grid.row(sym), h, next);
    f.swap(next);
  }
  return f(0, intervals);
}

}  // namespace lpv
