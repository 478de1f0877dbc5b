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

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace lpv {

/// Finite sequence over the alphabet {0, ..., np}. Symbol 0 is the constant
/// scheduling channel. The empty word is valid.
class Word {
 public:
  explicit Word(int np);
  Word(int np, std::vector<int> symbols);
  Word(int np, std::initializer_list<int> symbols);

  /// Parses "eps", "" or a digit string ("0101"); for np >= 10 symbols are
  /// separated by '.'.
  static Word parse(std::string_view text, int np);

  int np() const { return np_; }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  int operator[](std::size_t k) const { return symbols_[k]; }
  const std::vector<int>& symbols() const { return symbols_; }

  /// This word followed by `suffix`.
  Word concat(const Word& suffix) const;
  Word appended(int symbol) const;

  /// Digit string; the empty word gives "".
  std::string to_string() const;
  /// As to_string, but the empty word prints as "eps".
  std::string display() const;

  bool operator==(const Word& other) const = default;

 private:
  int np_;
  std::vector<int> symbols_;
};

/// Length-first lexicographic order; throws if the alphabets differ.
std::strong_ordering compare_lex(const Word& r, const Word& s);

/// Number of words of length at most n over {0, ..., np}.
std::int64_t car(int np, int n);

/// All words of length <= n in increasing order; index 0 is the empty word.
std::vector<Word> enumerate_up_to(int np, int n);

/// Position of w in enumerate_up_to(w.np(), n).
std::int64_t index_of(const Word& w, int n);

/// Inverse of index_of.
Word word_at(std::int64_t k, int np, int n);

}  // namespace lpv
