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

#include "lpv/reduce.hpp"

#include <gtest/gtest.h>

#include "lpv/hankel.hpp"
#include "lpv/markov.hpp"
#include "lpv/realize.hpp"
#include "test_support.hpp"

namespace lpv {
namespace {

using testing::Rng;

double table_gap(const LpvSsa& a, const Vector& xa, const LpvSsa& b, const Vector& xb, int len) {
  double worst = 0.0;
  for (const auto& s : testing::naive_words(a.np, len)) {
    worst = std::max(worst, testing::max_abs(testing::naive_theta(a, xa, s) - testing::naive_theta(b, xb, s)));
  }
  return worst;
}

TEST(MinimalityTest, ScalarModel) {
  LpvSsa m = LpvSsa::zeros(1, 1, 1, 1);
  m.C[0] << 1.0;
  const MinimalityReport r = minimality_test(m, Vector::Constant(1, 2.0));
  EXPECT_TRUE(r.minimal);
  EXPECT_EQ(r.reach_rank, 1);
  EXPECT_EQ(r.obs_rank, 1);
}

TEST(MinimalityTest, BlockTriangularIsNotReachable) {
  Rng rng(1);
  Vector x0;
  const LpvSsa live = testing::random_minimal_model(rng, 2, 2, 1, 1, x0);
  Vector xe;
  const LpvSsa m = testing::embed_dead_states(rng, live, x0, 2, xe);
  const MinimalityReport r = minimality_test(m, xe);
  EXPECT_FALSE(r.reachable);
  EXPECT_LE(r.reach_rank, 2);
  EXPECT_FALSE(r.minimal);
}

TEST(MinimalityTest, RandomDenseModelsAgreeWithHankelRank) {
  Rng rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const int np = testing::uniform_int(rng, 0, 2);
    const int nx = testing::uniform_int(rng, 1, 4);
    const LpvSsa m = testing::random_model(rng, np, nx, 1, 1);
    const Vector x0 = testing::gaussian_vector(rng, nx);
    const MinimalityReport r = minimality_test(m, x0);
    EXPECT_EQ(r.reach_rank, testing::oracle_rank(testing::naive_reach_span(m, x0)));
    EXPECT_EQ(r.obs_rank, testing::oracle_rank(testing::naive_obs_span(m)));
    const int hr = testing::oracle_rank(build_hankel(m, x0, nx, nx).blocks);
    EXPECT_EQ(r.minimal, hr == nx);
  }
}

TEST(ReachReduceTest, ReachableModelKeepsDimension) {
  Rng rng(3);
  Vector x0;
  const LpvSsa m = testing::random_minimal_model(rng, 1, 3, 1, 1, x0);
  const Reduction r = reach_reduce(m, x0);
  EXPECT_EQ(r.dim, 3);
  EXPECT_TRUE(find_isomorphism(m, x0, r.model, r.x0).success);
}

TEST(ReachReduceTest, DropsDeadStates) {
  Rng rng(4);
  for (int trial = 0; trial < 5; ++trial) {
    Vector x0;
    const LpvSsa live = testing::random_minimal_model(rng, 2, 2, 2, 1, x0);
    Vector xe;
    const LpvSsa hidden = testing::embed_dead_states(rng, live, x0, 2, xe);
    const Matrix T = testing::random_invertible(rng, 4);
    const LpvSsa m = testing::change_basis(hidden, T);
    const Reduction r = reach_reduce(m, T * xe);
    EXPECT_EQ(r.model.nx, 2);
    EXPECT_LT(table_gap(m, T * xe, r.model, r.x0, 4), 1e-10);
  }
}

TEST(ReachReduceTest, InitialStateLiesInReachableSpan) {
  Rng rng(5);
  Vector x0;
  const LpvSsa live = testing::random_minimal_model(rng, 1, 2, 1, 1, x0);
  Vector xe;
  const LpvSsa m = testing::embed_dead_states(rng, live, x0, 2, xe);
  const Reduction r = reach_reduce(m, xe);
  const Matrix Q = r.basis.leftCols(r.dim);
  EXPECT_LT(testing::max_abs(Q * (Q.transpose() * xe) - xe), 1e-12);
}

TEST(ObsReduceTest, ObservableModelKeepsDimension) {
  Rng rng(6);
  Vector x0;
  const LpvSsa m = testing::random_minimal_model(rng, 1, 3, 1, 1, x0);
  EXPECT_EQ(obs_reduce(m, x0).dim, 3);
}

TEST(ObsReduceTest, ClonedStateIsMerged) {
  Vector x0;
  const LpvSsa ref = testing::reference_model(x0);
  // x = (a, b, b'): everything reads b and b' through their mean, so b - b'
  // is invisible and b = b' reproduces the reference model.
  LpvSsa m = LpvSsa::zeros(1, 3, 1, 1);
  for (int i = 0; i <= 1; ++i) {
    const Matrix& A = ref.A[i];
    m.A[i] << A(0, 0), 0.5 * A(0, 1), 0.5 * A(0, 1),
              A(1, 0), 0.5 * A(1, 1), 0.5 * A(1, 1),
              A(1, 0), 0.5 * A(1, 1), 0.5 * A(1, 1);
    m.B[i] << ref.B[i](0), ref.B[i](1), ref.B[i](1);
    m.C[i] << ref.C[i](0), 0.5 * ref.C[i](1), 0.5 * ref.C[i](1);
  }
  Vector xe(3);
  xe << x0(0), x0(1), x0(1);
  const Reduction r = obs_reduce(m, xe);
  EXPECT_EQ(r.dim, 2);
  EXPECT_LT(table_gap(m, xe, r.model, r.x0, 4), 1e-12);
  EXPECT_LT(table_gap(ref, x0, r.model, r.x0, 4), 1e-12);
}

TEST(ObsReduceTest, ZeroOutputCollapses) {
  Rng rng(7);
  LpvSsa m = testing::random_model(rng, 1, 3, 1, 2);
  for (auto& C : m.C) C.setZero();
  const Reduction r = obs_reduce(m, testing::gaussian_vector(rng, 3));
  EXPECT_EQ(r.dim, 0);
  EXPECT_EQ(r.model.nx, 0);
  const SubMarkovBlock b = sub_markov(r.model, r.x0, Word(1, {1}));
  EXPECT_EQ(b.matrix(), Matrix::Zero(4, 3));
}

TEST(MinimizeTest, MinimalInputKeepsDimension) {
  Rng rng(8);
  Vector x0;
  const LpvSsa m = testing::random_minimal_model(rng, 2, 3, 1, 1, x0);
  EXPECT_EQ(minimize(m, x0).model.nx, 3);
}

TEST(MinimizeTest, RecoversKalmanCore) {
  Rng rng(9);
  for (int trial = 0; trial < 5; ++trial) {
    const auto inst = testing::random_kalman_instance(rng, 1, 2, 3, 5, 1, 1);
    const MinimizeResult r = minimize(inst.model, inst.x0);
    EXPECT_EQ(r.model.nx, inst.r_m);
    EXPECT_LT(table_gap(inst.model, inst.x0, r.model, r.x0, 4), 1e-9);
    const MinimizeResult again = minimize(r.model, r.x0);
    EXPECT_EQ(again.model.nx, r.model.nx);
  }
}

TEST(KalmanTest, MinimalModelIsTrivial) {
  Rng rng(10);
  Vector x0;
  const LpvSsa m = testing::random_minimal_model(rng, 1, 3, 1, 1, x0);
  const KalmanDecomposition kd = kalman_decompose(m, x0);
  EXPECT_EQ(kd.r, 3);
  EXPECT_EQ(kd.r_m, 3);
  EXPECT_LT(kd.pattern_residual, 1e-10);
}

TEST(KalmanTest, RecoversKnownBlockSizes) {
  Rng rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const auto inst = testing::random_kalman_instance(rng, 1, 1, 2, 3, 1, 1);
    const KalmanDecomposition kd = kalman_decompose(inst.model, inst.x0);
    EXPECT_EQ(kd.r_m, 1);
    EXPECT_EQ(kd.r, 2);
    EXPECT_LT(kd.pattern_residual, 1e-10);
    EXPECT_LT(testing::max_abs(kd.T * kd.T_inv - Matrix::Identity(3, 3)), 1e-12);
  }
}

TEST(KalmanTest, PatternResidualOnRandomModels) {
  Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const int nx = testing::uniform_int(rng, 1, 5);
    const int r = testing::uniform_int(rng, 1, nx);
    const int r_m = testing::uniform_int(rng, 1, r);
    const int np = testing::uniform_int(rng, 0, 2);
    const auto inst = testing::random_kalman_instance(rng, np, r_m, r, nx, 1, 1);
    const KalmanDecomposition kd = kalman_decompose(inst.model, inst.x0);
    EXPECT_LT(kd.pattern_residual, 1e-10);
    EXPECT_LT(kalman_pattern_residual(kd.hat_model, kd.hat_x0, kd.r_m, kd.r), 1e-10);
    EXPECT_EQ(kd.r_m, inst.r_m);
    EXPECT_EQ(kd.r, inst.r);
  }
}

TEST(KalmanTest, ResidualSeesViolations) {
  Rng rng(13);
  LpvSsa hat = testing::random_model(rng, 1, 3, 1, 1);
  EXPECT_GT(kalman_pattern_residual(hat, testing::gaussian_vector(rng, 3), 1, 2), 1e-3);
}

}  // namespace
}  // namespace lpv
