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

#include <map>
#include <stdexcept>

namespace lpv {

namespace {

void check_bounds(int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("Hankel bounds must be >= 0");
}

HankelFinite empty_hankel(int np, int nu, int ny, int n, int m) {
  HankelFinite H;
  H.np = np;
  H.nu = nu;
  H.ny = ny;
  H.n = n;
  H.m = m;
  H.row_words = enumerate_up_to(np, n);
  H.col_words = enumerate_up_to(np, m);
  H.blocks.resize(static_cast<Eigen::Index>(H.row_words.size()) * H.block_height(),
                  static_cast<Eigen::Index>(H.col_words.size()) * H.block_width());
  return H;
}

// Thin SVD compression M -> U * S (left factor with the same Gram matrix M M^T).
Matrix compress_columns(const Matrix& M) {
  const ThinSvd svd = thin_svd(M);
  Matrix out = Matrix::Zero(M.rows(), M.rows());
  const Eigen::Index k = svd.S.size();
  out.leftCols(k) = svd.U * svd.S.asDiagonal();
  return out;
}

std::map<std::vector<int>, Eigen::Index> first_occurrence(const std::vector<Word>& words) {
  std::map<std::vector<int>, Eigen::Index> out;
  for (std::size_t b = 0; b < words.size(); ++b) {
    out.emplace(words[b].symbols(), static_cast<Eigen::Index>(b));
  }
  return out;
}

}  // namespace

Matrix HankelFinite::leading(int n_rows, int m_cols) const {
  if (n_rows > n || m_cols > m || n_rows < 0 || m_cols < 0) {
    throw std::invalid_argument("leading Hankel bounds exceed the stored matrix");
  }
  return blocks.topLeftCorner(car(np, n_rows) * block_height(), car(np, m_cols) * block_width());
}

std::int64_t hankel_block_count(int np, int n, int m) { return car(np, n) * car(np, m); }

HankelFinite build_hankel(const ThetaOracle& theta, int np, int nu, int ny, int n, int m) {
  check_bounds(n, m);
  HankelFinite H = empty_hankel(np, nu, ny, n, m);
  const int bh = H.block_height();
  const int bw = H.block_width();
  for (std::size_t i = 0; i < H.row_words.size(); ++i) {
    for (std::size_t j = 0; j < H.col_words.size(); ++j) {
      const SubMarkovBlock block = theta(H.col_words[j].concat(H.row_words[i]));
      if (block.np() != np || block.nu() != nu || block.ny() != ny) {
        throw std::invalid_argument("oracle block dimensions differ from the Hankel layout");
      }
      H.blocks.block(static_cast<Eigen::Index>(i) * bh, static_cast<Eigen::Index>(j) * bw, bh, bw) =
          block.matrix();
    }
  }
  return H;
}

HankelFinite build_hankel(const LpvSsa& model, const Vector& x0, int n, int m) {
  check_bounds(n, m);
  const std::vector<SubMarkovBlock> table = sub_markov_table(model, x0, n + m);
  HankelFinite H = empty_hankel(model.np, model.nu, model.ny, n, m);
  const int bh = H.block_height();
  const int bw = H.block_width();
  for (std::size_t i = 0; i < H.row_words.size(); ++i) {
    for (std::size_t j = 0; j < H.col_words.size(); ++j) {
      const Word s = H.col_words[j].concat(H.row_words[i]);
      H.blocks.block(static_cast<Eigen::Index>(i) * bh, static_cast<Eigen::Index>(j) * bw, bh, bw) =
          table[static_cast<std::size_t>(index_of(s, n + m))].matrix();
    }
  }
  return H;
}

ExtendedReach extended_reach(const LpvSsa& model, const Vector& x0, int n) {
  require_valid(model);
  require_state(model, x0);
  if (n < 0) throw std::invalid_argument("extended matrix index must be >= 0");
  const int bw = SubMarkovBlock::cols(model.np, model.nu);
  ExtendedReach out;
  out.R.resize(model.nx, bw);
  out.R.col(0) = x0;
  for (int j = 0; j <= model.np; ++j) out.R.middleCols(1 + j * model.nu, model.nu) = model.B[j];
  out.block_words = {Word(model.np)};
  for (int k = 0; k < n; ++k) {
    const Eigen::Index w = out.R.cols();
    Matrix next(model.nx, w * model.channels() + w);
    next.leftCols(w) = out.R;
    std::vector<Word> words = out.block_words;
    for (int i = 0; i <= model.np; ++i) {
      next.middleCols(w * (i + 1), w) = model.A[i] * out.R;
      for (const Word& v : out.block_words) words.push_back(v.appended(i));
    }
    out.R = std::move(next);
    out.block_words = std::move(words);
  }
  return out;
}

ExtendedObs extended_obs(const LpvSsa& model, int n) {
  require_valid(model);
  if (n < 0) throw std::invalid_argument("extended matrix index must be >= 0");
  const int bh = SubMarkovBlock::rows(model.np, model.ny);
  ExtendedObs out;
  out.O.resize(bh, model.nx);
  for (int i = 0; i <= model.np; ++i) out.O.middleRows(i * model.ny, model.ny) = model.C[i];
  out.block_words = {Word(model.np)};
  for (int k = 0; k < n; ++k) {
    const Eigen::Index h = out.O.rows();
    Matrix next(h * model.channels() + h, model.nx);
    next.topRows(h) = out.O;
    std::vector<Word> words = out.block_words;
    for (int i = 0; i <= model.np; ++i) {
      next.middleRows(h * (i + 1), h) = out.O * model.A[i];
      for (const Word& w : out.block_words) {
        std::vector<int> symbols{i};
        symbols.insert(symbols.end(), w.symbols().begin(), w.symbols().end());
        words.emplace_back(model.np, std::move(symbols));
      }
    }
    out.O = std::move(next);
    out.block_words = std::move(words);
  }
  return out;
}

Matrix reach_factor(const LpvSsa& model, const Vector& x0, int n) {
  require_valid(model);
  require_state(model, x0);
  if (n < 0) throw std::invalid_argument("extended matrix index must be >= 0");
  Matrix R0(model.nx, SubMarkovBlock::cols(model.np, model.nu));
  R0.col(0) = x0;
  for (int j = 0; j <= model.np; ++j) R0.middleCols(1 + j * model.nu, model.nu) = model.B[j];
  Matrix L = compress_columns(R0);
  for (int k = 0; k < n; ++k) {
    Matrix next(model.nx, L.cols() * (model.channels() + 1));
    next.leftCols(L.cols()) = L;
    for (int i = 0; i <= model.np; ++i) next.middleCols(L.cols() * (i + 1), L.cols()) = model.A[i] * L;
    L = compress_columns(next);
  }
  return L;
}

Matrix obs_factor(const LpvSsa& model, int n) {
  require_valid(model);
  if (n < 0) throw std::invalid_argument("extended matrix index must be >= 0");
  // Observability of (A_i, C_i) is reachability of the transposed family.
  LpvSsa dual = LpvSsa::zeros(model.np, model.nx, model.ny, model.nu);
  for (int i = 0; i <= model.np; ++i) {
    dual.A[i] = model.A[i].transpose();
    dual.B[i] = model.C[i].transpose();
  }
  // The x0 column is zero and contributes nothing to the Gram matrix.
  const Matrix L = reach_factor(dual, Vector::Zero(model.nx), n);
  return L.transpose();
}

HankelFactorCheck hankel_vs_OR(const LpvSsa& model, const Vector& x0, int n, int m) {
  const HankelFinite H = build_hankel(model_oracle(model, x0), model.np, model.nu, model.ny, n, m);
  const ExtendedObs O = extended_obs(model, n);
  const ExtendedReach R = extended_reach(model, x0, m);
  const Matrix OR = O.O * R.R;
  const int bh = H.block_height();
  const int bw = H.block_width();

  const auto row_first = first_occurrence(O.block_words);
  const auto col_first = first_occurrence(R.block_words);

  HankelFactorCheck out;
  for (const Word& w : H.row_words) {
    const Eigen::Index b = row_first.at(w.symbols());
    for (int r = 0; r < bh; ++r) out.row_map.push_back(b * bh + r);
  }
  for (const Word& v : H.col_words) {
    const Eigen::Index b = col_first.at(v.symbols());
    for (int c = 0; c < bw; ++c) out.col_map.push_back(b * bw + c);
  }
  if (out.row_map.size() != static_cast<std::size_t>(H.blocks.rows()) ||
      out.col_map.size() != static_cast<std::size_t>(H.blocks.cols()) ||
      row_first.size() != H.row_words.size() || col_first.size() != H.col_words.size()) {
    throw std::logic_error("extended matrices do not cover the Hankel word sets");
  }

  for (Eigen::Index a = 0; a < H.blocks.rows(); ++a) {
    for (Eigen::Index b = 0; b < H.blocks.cols(); ++b) {
      out.residual = std::max(out.residual,
                              std::abs(H.blocks(a, b) - OR(out.row_map[a], out.col_map[b])));
    }
  }
  for (std::size_t b = 0; b < O.block_words.size(); ++b) {
    const Eigen::Index sel = row_first.at(O.block_words[b].symbols());
    const double d = (OR.middleRows(static_cast<Eigen::Index>(b) * bh, bh) - OR.middleRows(sel * bh, bh))
                         .cwiseAbs()
                         .maxCoeff();
    out.duplicate_residual = std::max(out.duplicate_residual, d);
  }
  for (std::size_t b = 0; b < R.block_words.size(); ++b) {
    const Eigen::Index sel = col_first.at(R.block_words[b].symbols());
    const double d = (OR.middleCols(static_cast<Eigen::Index>(b) * bw, bw) - OR.middleCols(sel * bw, bw))
                         .cwiseAbs()
                         .maxCoeff();
    out.duplicate_residual = std::max(out.duplicate_residual, d);
  }
  return out;
}

}  // namespace lpv
