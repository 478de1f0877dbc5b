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

#include "lpv/sim.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "iterated.hpp"

namespace lpv {

namespace {

void check_samples(const std::vector<Vector>& samples, Eigen::Index dim, const char* what) {
  for (std::size_t k = 0; k < samples.size(); ++k) {
    if (samples[k].size() != dim) {
      throw std::invalid_argument(std::string(what) + " sample " + std::to_string(k) +
                                  " has length " + std::to_string(samples[k].size()) +
                                  ", expected " + std::to_string(dim));
    }
  }
}

void check_dt_signals(const LpvSsa& model, const std::vector<Vector>& u,
                      const std::vector<Vector>& p) {
  if (u.size() != p.size()) throw std::invalid_argument("u and p differ in length");
  check_samples(u, model.nu, "u");
  check_samples(p, model.np, "p");
}

// p_i at sample k, with the constant channel p_0 = 1.
double channel(const std::vector<Vector>& p, int k, int i) {
  return i == 0 ? 1.0 : p[static_cast<std::size_t>(k)](i - 1);
}

Matrix input_stack(const LpvSsa& model, const Vector& x0) {
  Matrix out(model.nx, SubMarkovBlock::cols(model.np, model.nu));
  out.col(0) = x0;
  for (int j = 0; j <= model.np; ++j) out.middleCols(1 + j * model.nu, model.nu) = model.B[j];
  return out;
}

Matrix output_stack(const LpvSsa& model) {
  Matrix out(SubMarkovBlock::rows(model.np, model.ny), model.nx);
  for (int i = 0; i <= model.np; ++i) out.middleRows(i * model.ny, model.ny) = model.C[i];
  return out;
}

}  // namespace

Trajectory simulate_dt(const LpvSsa& model, const Vector& x0, const std::vector<Vector>& u,
                       const std::vector<Vector>& p) {
  require_valid(model);
  require_state(model, x0);
  check_dt_signals(model, u, p);
  Trajectory out;
  out.u = u;
  out.p = p;
  Vector x = x0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    const FrozenMatrices f = eval_at(model, p[k]);
    out.t.push_back(static_cast<double>(k));
    out.x.push_back(x);
    out.y.push_back(f.C * x + f.D * u[k]);
    x = f.A * x + f.B * u[k];
  }
  return out;
}

Matrix transition_dt(const LpvSsa& model, const std::vector<Vector>& p, int t, int tau) {
  require_valid(model);
  if (tau > t) throw std::invalid_argument("transition needs tau <= t");
  if (tau < 0 || t > static_cast<int>(p.size())) {
    throw std::out_of_range("transition interval exceeds the scheduling samples");
  }
  check_samples(p, model.np, "p");
  Matrix phi = Matrix::Identity(model.nx, model.nx);
  for (int k = tau; k < t; ++k) phi = eval_at(model, p[static_cast<std::size_t>(k)]).A * phi;
  return phi;
}

Vector iir_eval_dt(const LpvSsa& model, const Vector& x0, const std::vector<Vector>& u,
                   const std::vector<Vector>& p, int t) {
  require_valid(model);
  require_state(model, x0);
  check_dt_signals(model, u, p);
  if (t < 0 || t >= static_cast<int>(u.size())) {
    throw std::out_of_range("time " + std::to_string(t) + " outside the sample range");
  }
  const Matrix Cs = output_stack(model);
  const Matrix R0 = input_stack(model, x0);
  const int ny = model.ny;
  const int nu = model.nu;

  // theta(s) contracted with the output channel weights p_i(t).
  auto contract_rows = [&](const Matrix& theta) {
    Matrix out = Matrix::Zero(ny, theta.cols());
    for (int i = 0; i <= model.np; ++i) out += channel(p, t, i) * theta.middleRows(i * ny, ny);
    return out;
  };

  Vector y = eval_at(model, p[static_cast<std::size_t>(t)]).D * u[static_cast<std::size_t>(t)];

  // start = 0 collects the free response (words of length t, coefficient
  // w_s(t-1, 0)); start = delta + 1 collects the response to u(delta) (words of
  // length t-1-delta, coefficient w_s(t-1, delta+1)).
  for (int start = 0; start <= t; ++start) {
    const int length = t - start;
    const int delta = start - 1;
    std::function<void(const Matrix&, double, int)> visit = [&](const Matrix& X, double w, int depth) {
      if (depth == length) {
        const Matrix row = contract_rows(Cs * X);
        if (delta < 0) {
          y += w * row.col(0);
        } else {
          for (int j = 0; j <= model.np; ++j) {
            y += w * channel(p, delta, j) * row.middleCols(1 + j * nu, nu) *
                 u[static_cast<std::size_t>(delta)];
          }
        }
        return;
      }
      for (int sym = 0; sym <= model.np; ++sym) {
        const double ws = w * channel(p, start + depth, sym);
        if (ws == 0.0) continue;
        visit(model.A[sym] * X, ws, depth + 1);
      }
    };
    visit(R0, 1.0, 0);
  }
  return y;
}

Trajectory simulate_ct(const LpvSsa& model, const Vector& x0, const SampledSignal& u,
                       const SampledSignal& p, double h, double horizon) {
  require_valid(model);
  require_state(model, x0);
  if (!(h > 0.0)) throw std::invalid_argument("integration step must be positive");
  if (u.dim() != model.nu) throw std::invalid_argument("u has wrong dimension");
  if (p.dim() != model.np) throw std::invalid_argument("p has wrong dimension");
  const auto steps = static_cast<long>(std::floor(horizon / h + 1e-9));

  auto rhs = [&](double t, const Vector& x) {
    const FrozenMatrices f = eval_at(model, p.at(t));
    return Vector(f.A * x + f.B * u.at(t));
  };

  Trajectory out;
  Vector x = x0;
  for (long k = 0; k <= steps; ++k) {
    const double t = h * static_cast<double>(k);
    const Vector uk = u.at(t);
    const Vector pk = p.at(t);
    const FrozenMatrices f = eval_at(model, pk);
    out.t.push_back(t);
    out.u.push_back(uk);
    out.p.push_back(pk);
    out.x.push_back(x);
    out.y.push_back(f.C * x + f.D * uk);
    if (k == steps) break;
    const Vector k1 = rhs(t, x);
    const Vector k2 = rhs(t + 0.5 * h, x + 0.5 * h * k1);
    const Vector k3 = rhs(t + 0.5 * h, x + 0.5 * h * k2);
    const Vector k4 = rhs(t + h, x + h * k3);
    x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return out;
}

double ct_tail_bound(const GrowthBound& bound, double rho, double u_max, double t, int max_len) {
  const double x = bound.R * rho * t;
  if (bound.K == 0.0 || x == 0.0) return 0.0;
  // sum_{k > max_len} x^k / k!, terms evaluated in log space.
  double sum = 0.0;
  const double log_x = std::log(x);
  for (long k = max_len + 1;; ++k) {
    const double term = std::exp(static_cast<double>(k) * log_x - std::lgamma(static_cast<double>(k) + 1.0));
    sum += term;
    if (static_cast<double>(k) > x && term <= 1e-17 * sum) break;
    if (k > max_len + 100000) break;
  }
  return rho * bound.K * (1.0 + rho * u_max * t) * sum;
}

TruncatedIir iir_eval_ct_truncated(const LpvSsa& model, const Vector& x0, const SampledSignal& u,
                                   const SampledSignal& p, double t, int max_len,
                                   double quad_step) {
  require_valid(model);
  require_state(model, x0);
  if (u.dim() != model.nu) throw std::invalid_argument("u has wrong dimension");
  if (p.dim() != model.np) throw std::invalid_argument("p has wrong dimension");
  if (t < 0.0) throw std::invalid_argument("evaluation time must be >= 0");
  if (max_len < 0) throw std::invalid_argument("max_len must be >= 0");
  if (!(quad_step > 0.0)) throw std::invalid_argument("quadrature step must be positive");

  const int nu = model.nu;
  const int intervals = detail::trapezoid_intervals(t, quad_step);
  const double h = intervals > 0 ? t / intervals : 0.0;
  const Eigen::MatrixXd grid = detail::channel_grid(p, 0.0, intervals, h);
  Eigen::MatrixXd u_grid(nu, intervals + 1);
  for (int k = 0; k <= intervals; ++k) u_grid.col(k) = u.at(h * k);

  // Z_eps(d) = [1; int_0^d p_0 u; ...; int_0^d p_np u] and
  // Z_{s.i}(d) = int_0^d p_i Z_s; then y(t) = sum_s C(p(t)) A_s R0 Z_s(t).
  const int width = SubMarkovBlock::cols(model.np, nu);
  Eigen::MatrixXd z_root(width, intervals + 1);
  z_root.row(0).setOnes();
  Eigen::MatrixXd tmp;
  for (int j = 0; j <= model.np; ++j) {
    detail::cumulative_trapezoid(u_grid, grid.row(j), h, tmp);
    z_root.middleRows(1 + j * nu, nu) = tmp;
  }

  const FrozenMatrices at_t = eval_at(model, p.at(t));
  Vector state_sum = Vector::Zero(model.nx);
  std::function<void(const Matrix&, const Eigen::MatrixXd&, int)> visit =
      [&](const Matrix& X, const Eigen::MatrixXd& Z, int depth) {
        state_sum += X * Z.col(intervals);
        if (depth == max_len) return;
        Eigen::MatrixXd child;
        for (int sym = 0; sym <= model.np; ++sym) {
          detail::cumulative_trapezoid(Z, grid.row(sym), h, child);
          visit(model.A[sym] * X, child, depth + 1);
        }
      };
  visit(input_stack(model, x0), z_root, 0);

  TruncatedIir out;
  out.y = at_t.C * state_sum + at_t.D * u.at(t);
  const double rho = 1.0 + p.sup_l1();
  out.tail_bound = ct_tail_bound(growth_bound(model, x0), rho, u.sup_l2(), t, max_len);
  return out;
}

int ct_words_for_tolerance(const LpvSsa& model, const Vector& x0, const SampledSignal& u,
                           const SampledSignal& p, double t, double tol, int limit) {
  const GrowthBound bound = growth_bound(model, x0);
  const double rho = 1.0 + p.sup_l1();
  const double u_max = u.sup_l2();
  for (int len = 0; len < limit; ++len) {
    if (ct_tail_bound(bound, rho, u_max, t, len) < tol) return len;
  }
  return limit;
}

}  // namespace lpv
