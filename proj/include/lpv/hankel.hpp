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

#include <cstdint>
#include <vector>

#include "lpv/linalg.hpp"
#include "lpv/markov.hpp"
#include "lpv/model.hpp"
#include "lpv/words.hpp"

namespace lpv {

/// Finite Hankel matrix H(n, m). Block (i, j) is theta(col_words[j] . row_words[i]);
/// the column word comes first in the concatenation.
struct HankelFinite {
  int np = 0;
  int nu = 0;
  int ny = 0;
  int n = 0;
  int m = 0;
  Matrix blocks;
  std::vector<Word> row_words;
  std::vector<Word> col_words;

  int block_height() const { return SubMarkovBlock::rows(np, ny); }
  int block_width() const { return SubMarkovBlock::cols(np, nu); }
  /// Leading sub-matrix H(n', m') for n' <= n, m' <= m.
  Matrix leading(int n_rows, int m_cols) const;
};

/// Number of blocks car(n) * car(m) of H(n, m).
std::int64_t hankel_block_count(int np, int n, int m);

HankelFinite build_hankel(const ThetaOracle& theta, int np, int nu, int ny, int n, int m);

/// Same matrix as build_hankel(model_oracle(model, x0), ...), computed from a
/// shared sub-Markov table.
HankelFinite build_hankel(const LpvSsa& model, const Vector& x0, int n, int m);

/// n-step extended reachability matrix from x0:
///   R_0 = [x0 B_0 ... B_np],  R_{k+1} = [R_k  A_0 R_k ... A_np R_k].
/// block_words[b] is the word v with column block b equal to A_v R_0.
struct ExtendedReach {
  Matrix R;
  std::vector<Word> block_words;
};

/// n-step extended observability matrix:
///   O_0 = [C_0; ...; C_np],  O_{k+1} = [O_k; O_k A_0; ...; O_k A_np].
/// block_words[b] is the word w with row block b equal to O_0 A_w.
struct ExtendedObs {
  Matrix O;
  std::vector<Word> block_words;
};

ExtendedReach extended_reach(const LpvSsa& model, const Vector& x0, int n);
ExtendedObs extended_obs(const LpvSsa& model, int n);

/// nx x nx factor L with L L^T = R_n R_n^T, built without forming R_n.
/// Its singular values and left singular vectors coincide with those of R_n.
Matrix reach_factor(const LpvSsa& model, const Vector& x0, int n);
/// nx x nx factor F with F^T F = O_n^T O_n (same singular values and right
/// singular vectors as O_n).
Matrix obs_factor(const LpvSsa& model, int n);

/// H(n, m) as a row/column selection of O_n R_m. Def.-style extended
/// matrices repeat words, so the maps are injective rather than square:
/// H(a, b) = (O_n R_m)(row_map[a], col_map[b]).
struct HankelFactorCheck {
  std::vector<Eigen::Index> row_map;
  std::vector<Eigen::Index> col_map;
  /// max |H - selected(O_n R_m)|
  double residual = 0.0;
  /// max deviation between a repeated row/column of O_n R_m and its selected copy.
  double duplicate_residual = 0.0;
};

HankelFactorCheck hankel_vs_OR(const LpvSsa& model, const Vector& x0, int n, int m);

}  // namespace lpv
