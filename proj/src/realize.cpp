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

#include "lpv/realize.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "lpv/linalg.hpp"

namespace lpv {

namespace {

// Condition numbers above this make T unusable as a change of basis.
constexpr double kMaxCondition = 1e12;

// Columns A_v [x0 B_0 ... B_np] for every word |v| <= n, in lexicographic
// order. Same column space as the extended reachability matrix R_n, without
// its repeated blocks.
Matrix distinct_reach_columns(const LpvSsa& model, const Vector& x0, int n) {
  const int bw = SubMarkovBlock::cols(model.np, model.nu);
  Matrix out(model.nx, car(model.np, n) * bw);
  Matrix R0(model.nx, bw);
  R0.col(0) = x0;
  for (int j = 0; j <= model.np; ++j) R0.middleCols(1 + j * model.nu, model.nu) = model.B[j];
  out.leftCols(bw) = R0;
  Eigen::Index layer_begin = 0;
  Eigen::Index layer_end = 1;
  Eigen::Index next = 1;
  for (int len = 1; len <= n; ++len) {
    for (Eigen::Index b = layer_begin; b < layer_end; ++b) {
      for (int i = 0; i <= model.np; ++i) {
        out.middleCols(next * bw, bw) = model.A[i] * out.middleCols(b * bw, bw);
        ++next;
      }
    }
    layer_begin = layer_end;
    layer_end = next;
  }
  return out;
}

double max_abs(const Matrix& M) { return M.size() == 0 ? 0.0 : M.cwiseAbs().maxCoeff(); }

void check_same_shape(const LpvSsa& a, const LpvSsa& b) {
  if (a.np != b.np || a.nx != b.nx || a.nu != b.nu || a.ny != b.ny) {
    throw std::invalid_argument("models have different dimensions");
  }
}

}  // namespace

HoKalmanResult ho_kalman(const HankelFinite& H, double rel_tol, TimeDomain domain) {
  if (H.m != H.n + 1) {
    throw std::invalid_argument("Ho-Kalman needs H(n, m) with m = n + 1, got n = " +
                                std::to_string(H.n) + ", m = " + std::to_string(H.m));
  }
  const int bw = H.block_width();
  const ThinSvd svd = thin_svd(H.blocks);
  const int r = rank_from_singular_values(svd.S, rel_tol);

  HoKalmanResult out;
  out.singular_values = svd.S;
  out.rank = r;
  out.rank_square = numeric_rank(H.leading(H.n, H.n), rel_tol).rank;
  out.rank_mismatch = out.rank != out.rank_square;
  out.model = LpvSsa::zeros(H.np, r, H.nu, H.ny, domain);
  out.x0 = Vector::Zero(r);
  if (r == 0) return out;

  const Vector root_s = svd.S.head(r).cwiseSqrt();
  const Matrix O_hat = svd.U.leftCols(r) * root_s.asDiagonal();
  const Matrix R_hat = root_s.asDiagonal() * svd.V.leftCols(r).transpose();

  out.x0 = R_hat.col(0);
  for (int j = 0; j <= H.np; ++j) out.model.B[j] = R_hat.middleCols(1 + j * H.nu, H.nu);
  for (int i = 0; i <= H.np; ++i) out.model.C[i] = O_hat.middleRows(i * H.ny, H.ny);

  const Eigen::Index shift_blocks = car(H.np, H.n);
  const Matrix R_bar = R_hat.leftCols(shift_blocks * bw);
  const Matrix R_bar_pinv = pinv(R_bar, rel_tol);
  for (int i = 0; i <= H.np; ++i) {
    Matrix R_tilde(r, shift_blocks * bw);
    for (Eigen::Index k = 0; k < shift_blocks; ++k) {
      const Word shifted = H.col_words[static_cast<std::size_t>(k)].appended(i);
      const Eigen::Index src = index_of(shifted, H.m);
      R_tilde.middleCols(k * bw, bw) = R_hat.middleCols(src * bw, bw);
    }
    out.model.A[i] = R_tilde * R_bar_pinv;
  }
  return out;
}

PartialRealizationReport partial_realization_check(const LpvSsa& model, const Vector& x0,
                                                   const ThetaOracle& theta, int n, double tol) {
  PartialRealizationReport report;
  report.worst_word = Word(model.np);
  const std::vector<SubMarkovBlock> own = sub_markov_table(model, x0, n);
  const std::vector<Word> words = enumerate_up_to(model.np, n);
  for (std::size_t k = 0; k < words.size(); ++k) {
    const SubMarkovBlock ref = theta(words[k]);
    if (ref.matrix().rows() != own[k].matrix().rows() || ref.matrix().cols() != own[k].matrix().cols()) {
      throw std::invalid_argument("oracle block dimensions differ from the model");
    }
    const double d = max_abs(own[k].matrix() - ref.matrix());
    if (d > report.max_deviation || std::isnan(d)) {
      report.max_deviation = std::isnan(d) ? std::numeric_limits<double>::infinity() : d;
      report.worst_word = words[k];
    }
  }
  report.pass = report.max_deviation <= tol;
  return report;
}

RankStabilization rank_stabilization(const ThetaOracle& theta, int np, int nu, int ny, int n,
                                     double rel_tol) {
  const HankelFinite H = build_hankel(theta, np, nu, ny, n + 1, n + 1);
  RankStabilization out;
  out.rank_nn = numeric_rank(H.leading(n, n), rel_tol).rank;
  out.rank_n1n = numeric_rank(H.leading(n + 1, n), rel_tol).rank;
  out.rank_nn1 = numeric_rank(H.leading(n, n + 1), rel_tol).rank;
  out.stabilized = out.rank_nn == out.rank_n1n && out.rank_nn == out.rank_nn1;
  return out;
}

double Isomorphism::max_residual() const {
  return std::max({residual_A, residual_B, residual_C, residual_D, residual_x0});
}

Isomorphism check_isomorphism(const LpvSsa& m1, const Vector& x1, const LpvSsa& m2,
                              const Vector& x2, const Matrix& T, double tol) {
  require_valid(m1);
  require_valid(m2);
  require_state(m1, x1);
  require_state(m2, x2);
  check_same_shape(m1, m2);
  if (T.rows() != m1.nx || T.cols() != m1.nx) throw std::invalid_argument("T must be nx x nx");

  Isomorphism iso;
  iso.T = T;
  for (int i = 0; i <= m1.np; ++i) {
    iso.residual_A = std::max(iso.residual_A, max_abs(m2.A[i] * T - T * m1.A[i]));
    iso.residual_B = std::max(iso.residual_B, max_abs(m2.B[i] - T * m1.B[i]));
    iso.residual_C = std::max(iso.residual_C, max_abs(m2.C[i] * T - m1.C[i]));
    iso.residual_D = std::max(iso.residual_D, max_abs(m2.D[i] - m1.D[i]));
  }
  iso.residual_x0 = max_abs(T * x1 - x2);

  if (m1.nx == 0) {
    iso.condition = 1.0;
  } else {
    const Vector sv = thin_svd(T).S;
    const double smin = sv(sv.size() - 1);
    iso.condition = smin > 0.0 ? sv(0) / smin : std::numeric_limits<double>::infinity();
  }
  iso.success = std::isfinite(iso.condition) && iso.condition < kMaxCondition &&
                iso.max_residual() <= tol;
  return iso;
}

Isomorphism find_isomorphism(const LpvSsa& m1, const Vector& x1, const LpvSsa& m2,
                             const Vector& x2, double tol, double rel_tol) {
  require_valid(m1);
  require_valid(m2);
  require_state(m1, x1);
  require_state(m2, x2);
  check_same_shape(m1, m2);
  const int depth = std::max(m1.nx - 1, 0);
  const Matrix R1 = distinct_reach_columns(m1, x1, depth);
  const Matrix R2 = distinct_reach_columns(m2, x2, depth);
  const Matrix T = R2 * pinv(R1, rel_tol);
  return check_isomorphism(m1, x1, m2, x2, T, tol);
}

}  // namespace lpv
