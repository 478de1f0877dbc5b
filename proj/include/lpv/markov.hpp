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

#include "lpv/model.hpp"
#include "lpv/signal.hpp"
#include "lpv/words.hpp"

namespace lpv {

/// Sub-Markov parameter theta(s) of an input-output map, laid out as
///
///   [ eta_0(s)   theta_00(s)  ...  theta_0np(s) ]
///   [   ...          ...              ...       ]
///   [ eta_np(s)  theta_np0(s) ...  theta_npnp(s)]
///
/// i.e. (np+1)*ny rows and 1 + nu*(np+1) columns. Row block i belongs to the
/// output channel p_i(t); column block j to the input channel p_j(tau).
class SubMarkovBlock {
 public:
  SubMarkovBlock(int np, int nu, int ny);
  SubMarkovBlock(int np, int nu, int ny, Matrix theta);

  static int rows(int np, int ny) { return (np + 1) * ny; }
  static int cols(int np, int nu) { return nu * (np + 1) + 1; }

  int np() const { return np_; }
  int nu() const { return nu_; }
  int ny() const { return ny_; }
  const Matrix& matrix() const { return theta_; }

  /// ny x 1 free-response coefficient of output channel i.
  Matrix eta(int i) const;
  /// ny x nu forced-response coefficient for channels (i, j).
  Matrix theta(int i, int j) const;

 private:
  int np_;
  int nu_;
  int ny_;
  Matrix theta_;
};

/// Any source of sub-Markov parameters: a model, a table read from disk, ...
using ThetaOracle = std::function<SubMarkovBlock(const Word&)>;

/// A_s = A_{s_n} ... A_{s_1}; the identity for the empty word.
Matrix word_matrix(const LpvSsa& model, const Word& s);

/// eta_i(s) = C_i A_s x0 and theta_ij(s) = C_i A_s B_j. D is ignored.
SubMarkovBlock sub_markov(const LpvSsa& model, const Vector& x0, const Word& s);

/// sub_markov for every word of enumerate_up_to(np, max_len), in that order.
/// Shares prefixes, so it costs one product per word.
std::vector<SubMarkovBlock> sub_markov_table(const LpvSsa& model, const Vector& x0, int max_len);

/// Oracle backed by sub_markov on a copy of (model, x0).
ThetaOracle model_oracle(const LpvSsa& model, const Vector& x0);

/// Constants with ||theta(s)||_F <= K * R^|s| for every word s.
struct GrowthBound {
  double K = 0.0;
  double R = 0.0;
};

/// R = max_q ||A_q||_F and
/// K = sqrt(sum_i ||C_i||_F^2 * (||x0||^2 + sum_j ||B_j||_F^2)).
GrowthBound growth_bound(const LpvSsa& model, const Vector& x0);

/// Discrete-time word coefficient
///   (w_s <> p)(t, tau) = p_{s_1}(tau) p_{s_2}(tau+1) ... p_{s_n}(t)   if |s| = t - tau + 1,
/// with p_0 = 1. The empty word gives 1 exactly when tau = t + 1. Everything
/// else is 0. p[k] is the scheduling vector at time k.
double w_dt(const Word& s, const std::vector<Vector>& p, int t, int tau);

/// Continuous-time iterated integral
///   (w_s <> p)(t, tau) = int_tau^t p_{s_n}(d) (w_{s_1..s_{n-1}} <> p)(d, tau) dd,
/// evaluated by composite trapezoid on a uniform grid no coarser than `step`
/// (step <= 0 selects 1e-3 * (t - tau)).
double w_ct(const Word& s, const SampledSignal& p, double t, double tau, double step = 0.0);

}  // namespace lpv
