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

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace lpv {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Relative singular-value cutoff used for every rank decision and pseudo-inverse.
inline constexpr double kDefaultRankTol = 1e-9;

enum class TimeDomain { kDiscrete, kContinuous };

/// Affine LPV state-space model
///
///   xi x = A(p) x + B(p) u,   y = C(p) x + D(p) u,
///   M(p) = M_0 + sum_i M_i p_i  for M in {A, B, C, D},
///
/// where xi is the forward shift (DT) or d/dt (CT). Each family holds np+1
/// matrices indexed by the scheduling channel, channel 0 being the constant
/// term. D is carried for simulation only; realization routines ignore it.
struct LpvSsa {
  int np = 0;
  int nx = 0;
  int nu = 0;
  int ny = 0;
  std::vector<Matrix> A;
  std::vector<Matrix> B;
  std::vector<Matrix> C;
  std::vector<Matrix> D;
  TimeDomain time_domain = TimeDomain::kDiscrete;
  /// Points of the scheduling set. Only their affine hull matters.
  std::optional<std::vector<Vector>> scheduling_set;

  /// Zero model with all matrix families allocated.
  static LpvSsa zeros(int np, int nx, int nu, int ny,
                      TimeDomain domain = TimeDomain::kDiscrete);

  int channels() const { return np + 1; }
};

struct ValidationReport {
  std::vector<std::string> errors;
  /// Unset when the model carries no scheduling set.
  std::optional<bool> affine_span_ok;
  bool feedthrough_zero = true;
  std::vector<std::string> notes;

  bool ok() const { return errors.empty() && affine_span_ok.value_or(true); }
};

ValidationReport validate(const LpvSsa& model);

/// Throws std::invalid_argument carrying the first dimension error, if any.
void require_valid(const LpvSsa& model);
/// Throws std::invalid_argument unless x0 has model.nx entries.
void require_state(const LpvSsa& model, const Vector& x0);

/// True if the points affinely span R^dim (rank of differences to the first point).
bool affinely_spans(const std::vector<Vector>& points, int dim,
                    double rel_tol = kDefaultRankTol);

struct FrozenMatrices {
  Matrix A;
  Matrix B;
  Matrix C;
  Matrix D;
};

/// Matrices of the model frozen at scheduling value p.
FrozenMatrices eval_at(const LpvSsa& model, const Vector& p);

/// The same matrix families restricted to the vertex scheduling set
/// {0, e_1, ..., e_np}, with D dropped.
struct SwitchedModel {
  LpvSsa model;

  static std::vector<Vector> vertex_set(int np);
};

SwitchedModel to_switched(const LpvSsa& model);
LpvSsa from_switched(const SwitchedModel& sw, const std::vector<Vector>& scheduling_set);

/// Copy of the model with all D matrices set to zero.
LpvSsa without_feedthrough(const LpvSsa& model);

/// Change of state basis x' = T x:
/// A'_i = T A_i T^-1, B'_i = T B_i, C'_i = C_i T^-1, D'_i = D_i.
LpvSsa transform(const LpvSsa& model, const Matrix& T, const Matrix& T_inv);

}  // namespace lpv
