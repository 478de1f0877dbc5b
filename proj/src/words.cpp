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

#include "lpv/words.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace lpv {

namespace {

void check_symbols(int np, const std::vector<int>& symbols) {
  if (np < 0) throw std::invalid_argument("alphabet parameter np must be >= 0");
  for (int s : symbols) {
    if (s < 0 || s > np) {
      throw std::invalid_argument("symbol " + std::to_string(s) + " outside [0, " +
                                  std::to_string(np) + "]");
    }
  }
}

std::int64_t checked_pow(std::int64_t base, int exp) {
  std::int64_t out = 1;
  for (int k = 0; k < exp; ++k) {
    if (out > std::numeric_limits<std::int64_t>::max() / base) {
      throw std::overflow_error("word count overflows 64 bits");
    }
    out *= base;
  }
  return out;
}

}  // namespace

Word::Word(int np) : np_(np) { check_symbols(np, symbols_); }

Word::Word(int np, std::vector<int> symbols) : np_(np), symbols_(std::move(symbols)) {
  check_symbols(np_, symbols_);
}

Word::Word(int np, std::initializer_list<int> symbols) : Word(np, std::vector<int>(symbols)) {}

Word Word::parse(std::string_view text, int np) {
  if (text.empty() || text == "eps") return Word(np);
  std::vector<int> symbols;
  if (np >= 10) {
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t dot = text.find('.', start);
      const std::string_view tok =
          text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start);
      if (tok.empty()) throw std::invalid_argument("malformed word '" + std::string(text) + "'");
      int v = 0;
      for (char c : tok) {
        if (c < '0' || c > '9') {
          throw std::invalid_argument("malformed word '" + std::string(text) + "'");
        }
        v = v * 10 + (c - '0');
      }
      symbols.push_back(v);
      if (dot == std::string_view::npos) break;
      start = dot + 1;
    }
  } else {
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw std::invalid_argument("malformed word '" + std::string(text) + "'");
      }
      symbols.push_back(c - '0');
    }
  }
  return Word(np, std::move(symbols));
}

Word Word::concat(const Word& suffix) const {
  if (suffix.np_ != np_) throw std::invalid_argument("alphabet mismatch in concatenation");
  std::vector<int> out = symbols_;
  out.insert(out.end(), suffix.symbols_.begin(), suffix.symbols_.end());
  return Word(np_, std::move(out));
}

Word Word::appended(int symbol) const {
  std::vector<int> out = symbols_;
  out.push_back(symbol);
  return Word(np_, std::move(out));
}

std::string Word::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < symbols_.size(); ++k) {
    if (np_ >= 10 && k > 0) out += '.';
    out += std::to_string(symbols_[k]);
  }
  return out;
}

std::string Word::display() const { return empty() ? "eps" : to_string(); }

std::strong_ordering compare_lex(const Word& r, const Word& s) {
  if (r.np() != s.np()) throw std::invalid_argument("alphabet mismatch in comparison");
  if (auto c = r.size() <=> s.size(); c != 0) return c;
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (auto c = r[k] <=> s[k]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::int64_t car(int np, int n) {
  if (np < 0) throw std::invalid_argument("alphabet parameter np must be >= 0");
  if (n < 0) return 0;
  std::int64_t total = 0;
  for (int k = 0; k <= n; ++k) {
    const std::int64_t term = checked_pow(np + 1, k);
    if (total > std::numeric_limits<std::int64_t>::max() - term) {
      throw std::overflow_error("word count overflows 64 bits");
    }
    total += term;
  }
  return total;
}

std::vector<Word> enumerate_up_to(int np, int n) {
  if (n < 0) throw std::invalid_argument("maximal word length must be >= 0");
  const std::int64_t total = car(np, n);
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(total));
  out.emplace_back(np);
  // Appending each symbol to the previous (sorted) layer in order yields the
  // next layer already sorted.
  std::size_t layer_begin = 0;
  for (int len = 1; len <= n; ++len) {
    const std::size_t layer_end = out.size();
    for (std::size_t k = layer_begin; k < layer_end; ++k) {
      for (int sym = 0; sym <= np; ++sym) out.push_back(out[k].appended(sym));
    }
    layer_begin = layer_end;
  }
  return out;
}

std::int64_t index_of(const Word& w, int n) {
  if (static_cast<int>(w.size()) > n) {
    throw std::out_of_range("word '" + w.display() + "' longer than bound " + std::to_string(n));
  }
  const int len = static_cast<int>(w.size());
  std::int64_t rank = 0;
  for (std::size_t k = 0; k < w.size(); ++k) rank = rank * (w.np() + 1) + w[k];
  return (len == 0 ? 0 : car(w.np(), len - 1)) + rank;
}

Word word_at(std::int64_t k, int np, int n) {
  if (k < 0 || k >= car(np, n)) {
    throw std::out_of_range("word index " + std::to_string(k) + " out of range");
  }
  int len = 0;
  while (car(np, len) <= k) ++len;
  std::int64_t rank = k - (len == 0 ? 0 : car(np, len - 1));
  std::vector<int> symbols(static_cast<std::size_t>(len));
  for (int pos = len - 1; pos >= 0; --pos) {
    symbols[static_cast<std::size_t>(pos)] = static_cast<int>(rank % (np + 1));
    rank /= (np + 1);
  }
  return Word(np, std::move(symbols));
}

}  // namespace lpv
