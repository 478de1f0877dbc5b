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

#include "lpv/hankel.hpp"

#include <gtest/gtest.h>

#include <set>

#include "test_support.hpp"

namespace lpv {
namespace {

using testing::Rng;

TEST(HankelTest, ZeroBoundsGiveEmptyWordBlock) {
  Vector x0;
  const LpvSsa m = testing::reference_model(x0);
  const HankelFinite H = build_hankel(m, x0, 0, 0);
  EXPECT_EQ(H.blocks, sub_markov(m, x0, Word(1)).matrix());
  EXPECT_EQ(hankel_block_count(1, 0, 0), 1);
}

TEST(HankelTest, BlockUsesColumnWordThenRowWord) {
  Vector x0;
  const LpvSsa m = testing::reference_model(x0);
  const HankelFinite H = build_hankel(m, x0, 1, 1);
  EXPECT_EQ(H.row_words[1], Word(1, {0}));
  EXPECT_EQ(H.col_words[2], Word(1, {1}));
  const Matrix block = H.blocks.block(1 * 2, 2 * 3, 2, 3);
  EXPECT_EQ(block, sub_markov(m, x0, Word::parse("10", 1)).matrix());
  EXPECT_NE(block, sub_markov(m, x0, Word::parse("01", 1)).matrix());
}

TEST(HankelTest, ReferenceMatchesDoubleLoop) {
  Vector x0;
  const LpvSsa m = testing::reference_model(x0);
  for (auto [n, mm] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{1, 3}}) {
    const HankelFinite H = build_hankel(m, x0, n, mm);
    const auto rows = testing::naive_words(1, n);
    const auto cols = testing::naive_words(1, mm);
    ASSERT_EQ(H.blocks.rows(), static_cast<Eigen::Index>(rows.size()) * 2);
    ASSERT_EQ(H.blocks.cols(), static_cast<Eigen::Index>(cols.size()) * 3);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < cols.size(); ++j) {
        const Matrix ref = testing::naive_theta(m, x0, testing::concat(cols[j], rows[i]));
        EXPECT_LT(testing::max_abs(H.blocks.block(i * 2, j * 3, 2, 3) - ref), 1e-15);
      }
    }
    // Oracle and model paths agree.
    EXPECT_LT(testing::max_abs(build_hankel(model_oracle(m, x0), 1, 1, 1, n, mm).blocks - H.blocks),
              1e-15);
  }
}

TEST(HankelTest, LeadingSubmatrix) {
  Rng rng(1);
  const LpvSsa m = testing::random_model(rng, 2, 3, 1, 2);
  const Vector x0 = testing::gaussian_vector(rng, 3);
  const HankelFinite H = build_hankel(m, x0, 2, 2);
  EXPECT_EQ(H.leading(1, 2), build_hankel(m, x0, 1, 2).blocks);
  EXPECT_EQ(H.leading(2, 0), build_hankel(m, x0, 2, 0).blocks);
}

TEST(HankelTest, RankOfMinimalModelIsStateDimension) {
  Rng rng(2);
  for (int trial = 0; trial < 10; ++trial) {
    const int np = testing::uniform_int(rng, 0, 2);
    const int nx = testing::uniform_int(rng, 1, 4);
    Vector x0;
    const LpvSsa m = testing::random_minimal_model(rng, np, nx, 1, 1, x0);
    for (int n = nx; n <= nx + 1; ++n) {
      EXPECT_EQ(numeric_rank(build_hankel(m, x0, n, n).blocks, 1e-9).rank, nx);
    }
  }
}

TEST(ExtendedReachTest, BaseCase) {
  Rng rng(3);
  const LpvSsa m = testing::random_model(rng, 2, 3, 2, 1);
  const Vector x0 = testing::gaussian_vector(rng, 3);
  const ExtendedReach R = extended_reach(m, x0, 0);
  Matrix ref(3, 7);
  ref << x0, m.B[0], m.B[1], m.B[2];
  EXPECT_EQ(R.R, ref);
  ASSERT_EQ(R.block_words.size(), 1u);
  EXPECT_TRUE(R.block_words[0].empty());

  LpvSsa z = LpvSsa::zeros(2, 3, 2, 1);
  EXPECT_EQ(extended_reach(z, Vector::Zero(3), 0).R, Matrix::Zero(3, 7));
}

TEST(ExtendedReachTest, BlocksAreWordProducts) {
  Rng rng(4);
  const LpvSsa m = testing::random_model(rng, 1, 3, 1, 1);
  const Vector x0 = testing::gaussian_vector(rng, 3);
  const ExtendedReach R = extended_reach(m, x0, 2);
  const Matrix R0 = extended_reach(m, x0, 0).R;
  for (std::size_t b = 0; b < R.block_words.size(); ++b) {
    const Matrix ref = testing::naive_word_matrix(m, R.block_words[b].symbols()) * R0;
    EXPECT_LT(testing::max_abs(R.R.middleCols(b * R0.cols(), R0.cols()) - ref), 1e-14);
  }
  const ExtendedObs O = extended_obs(m, 2);
  const Matrix O0 = extended_obs(m, 0).O;
  for (std::size_t b = 0; b < O.block_words.size(); ++b) {
    const Matrix ref = O0 * testing::naive_word_matrix(m, O.block_words[b].symbols());
    EXPECT_LT(testing::max_abs(O.O.middleRows(b * O0.rows(), O0.rows()) - ref), 1e-14);
  }
}

TEST(ExtendedReachTest, ImageStabilizes) {
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const int nx = testing::uniform_int(rng, 2, 4);
    Vector x0;
    const LpvSsa live = testing::random_minimal_model(rng, 1, nx - 1, 1, 1, x0);
    Vector xe;
    const LpvSsa m = testing::embed_dead_states(rng, live, x0, 1, xe);
    const Matrix a = extended_reach(m, xe, nx - 1).R;
    const Matrix b = extended_reach(m, xe, nx).R;
    const int ra = testing::oracle_rank(a);
    EXPECT_EQ(ra, nx - 1);
    EXPECT_EQ(testing::oracle_rank(b), ra);
    Matrix both(nx, a.cols() + b.cols());
    both << a, b;
    EXPECT_EQ(testing::oracle_rank(both), ra);
  }
}

TEST(CompressedFactorTest, SameRankAndGram) {
  Rng rng(6);
  const LpvSsa m = testing::random_model(rng, 2, 4, 1, 1);
  const Vector x0 = testing::gaussian_vector(rng, 4);
  const Matrix R = extended_reach(m, x0, 3).R;
  const Matrix F = reach_factor(m, x0, 3);
  EXPECT_LT(testing::max_abs(F * F.transpose() - R * R.transpose()), 1e-10 * R.squaredNorm());
  const Matrix O = extended_obs(m, 3).O;
  const Matrix G = obs_factor(m, 3);
  EXPECT_LT(testing::max_abs(G.transpose() * G - O.transpose() * O), 1e-10 * O.squaredNorm());
}

TEST(HankelFactorTest, ScalarCaseUsesIdentityMaps) {
  LpvSsa m = LpvSsa::zeros(0, 1, 1, 1);
  m.A[0] << 0.5;
  m.B[0] << 1.0;
  m.C[0] << 2.0;
  // One step of the recursion produces no repeated words yet.
  const HankelFactorCheck c = hankel_vs_OR(m, Vector::Constant(1, 1.0), 1, 1);
  for (std::size_t k = 0; k < c.row_map.size(); ++k) EXPECT_EQ(c.row_map[k], static_cast<Eigen::Index>(k));
  for (std::size_t k = 0; k < c.col_map.size(); ++k) EXPECT_EQ(c.col_map[k], static_cast<Eigen::Index>(k));
  EXPECT_EQ(c.residual, 0.0);
}

TEST(HankelFactorTest, SelectionMapsAreInjective) {
  Rng rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    const LpvSsa m = testing::random_model(rng, 2, 3, 2, 1);
    const Vector x0 = testing::gaussian_vector(rng, 3);
    const HankelFactorCheck c = hankel_vs_OR(m, x0, 2, 2);
    const HankelFinite H = build_hankel(m, x0, 2, 2);
    ASSERT_EQ(c.row_map.size(), static_cast<std::size_t>(H.blocks.rows()));
    ASSERT_EQ(c.col_map.size(), static_cast<std::size_t>(H.blocks.cols()));
    EXPECT_EQ(std::set<Eigen::Index>(c.row_map.begin(), c.row_map.end()).size(), c.row_map.size());
    EXPECT_EQ(std::set<Eigen::Index>(c.col_map.begin(), c.col_map.end()).size(), c.col_map.size());
    EXPECT_LT(c.residual, 1e-12);
    EXPECT_LT(c.duplicate_residual, 1e-12);
  }
}

TEST(HankelFactorTest, ReferenceModel) {
  Vector x0;
  const LpvSsa m = testing::reference_model(x0);
  // Independent assembly: rows C_i A_v, columns A_w [x0 B], block (v, w) = row * column.
  const auto words = testing::naive_words(1, 1);
  double worst = 0.0;
  for (const auto& v : words) {
    for (const auto& w : words) {
      Matrix o(2, 2), r(2, 3);
      const Matrix Av = testing::naive_word_matrix(m, v);
      const Matrix Aw = testing::naive_word_matrix(m, w);
      o << m.C[0] * Av, m.C[1] * Av;
      r << Aw * x0, Aw * m.B[0], Aw * m.B[1];
      worst = std::max(worst, testing::max_abs(o * r - testing::naive_theta(m, x0, testing::concat(w, v))));
    }
  }
  EXPECT_LT(worst, 1e-15);
  EXPECT_LT(hankel_vs_OR(m, x0, 1, 1).residual, 1e-12);
}

}  // namespace
}  // namespace lpv
