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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "test_support.hpp"

namespace lpv {
namespace {

std::vector<std::string> names(const std::vector<Word>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(w.display());
  return out;
}

TEST(WordTest, RejectsSymbolsOutsideAlphabet) {
  EXPECT_THROW(Word(1, {0, 2}), std::invalid_argument);
  EXPECT_THROW(Word(1, {-1}), std::invalid_argument);
  EXPECT_NO_THROW(Word(2, {2, 1, 0}));
}

TEST(WordTest, ParseAndPrint) {
  EXPECT_TRUE(Word::parse("", 1).empty());
  EXPECT_TRUE(Word::parse("eps", 1).empty());
  EXPECT_EQ(Word::parse("0101", 1), Word(1, {0, 1, 0, 1}));
  EXPECT_EQ(Word::parse("0101", 1).to_string(), "0101");
  EXPECT_EQ(Word(1).display(), "eps");
  EXPECT_EQ(Word(1).to_string(), "");
  EXPECT_THROW(Word::parse("012", 1), std::invalid_argument);
  EXPECT_THROW(Word::parse("0x", 1), std::invalid_argument);
}

TEST(WordTest, WideAlphabetUsesSeparators) {
  const Word w(11, {10, 0, 11});
  EXPECT_EQ(w.to_string(), "10.0.11");
  EXPECT_EQ(Word::parse("10.0.11", 11), w);
  EXPECT_THROW(Word::parse("10..1", 11), std::invalid_argument);
}

TEST(WordTest, ConcatenationPutsSuffixLast) {
  const Word a(2, {0, 1});
  const Word b(2, {2});
  EXPECT_EQ(a.concat(b), Word(2, {0, 1, 2}));
  EXPECT_EQ(a.appended(2), a.concat(b));
  EXPECT_EQ(Word(2).concat(a), a);
}

TEST(CompareLexTest, ShortWordsComeFirst) {
  const Word eps(1), w0(1, {0}), w1(1, {1}), w00(1, {0, 0});
  EXPECT_EQ(compare_lex(eps, w0), std::strong_ordering::less);
  EXPECT_EQ(compare_lex(w0, w1), std::strong_ordering::less);
  EXPECT_EQ(compare_lex(w1, w00), std::strong_ordering::less);
  EXPECT_EQ(compare_lex(w00, w1), std::strong_ordering::greater);
}

TEST(CompareLexTest, ProperExtensionIsLarger) {
  testing::Rng rng(11);
  for (int k = 0; k < 200; ++k) {
    const int np = testing::uniform_int(rng, 0, 3);
    std::vector<int> s(testing::uniform_int(rng, 0, 4)), r(testing::uniform_int(rng, 1, 3));
    for (int& x : s) x = testing::uniform_int(rng, 0, np);
    for (int& x : r) x = testing::uniform_int(rng, 0, np);
    const Word ws(np, s);
    EXPECT_EQ(compare_lex(ws, ws.concat(Word(np, r))), std::strong_ordering::less);
  }
}

TEST(CompareLexTest, Reflexive) {
  const Word w(3, {3, 0, 2});
  EXPECT_EQ(compare_lex(w, w), std::strong_ordering::equal);
  EXPECT_THROW((void)compare_lex(Word(1), Word(2)), std::invalid_argument);
}

TEST(EnumerateTest, SmallCases) {
  EXPECT_EQ(names(enumerate_up_to(1, 2)),
            (std::vector<std::string>{"eps", "0", "1", "00", "01", "10", "11"}));
  EXPECT_EQ(names(enumerate_up_to(2, 1)), (std::vector<std::string>{"eps", "0", "1", "2"}));
  EXPECT_EQ(enumerate_up_to(1, 3).size(), 15u);
  EXPECT_EQ(names(enumerate_up_to(3, 0)), (std::vector<std::string>{"eps"}));
}

TEST(EnumerateTest, MatchesBaseCountingAndIsSorted) {
  for (int np = 0; np <= 3; ++np) {
    const auto ws = enumerate_up_to(np, 4);
    const auto ref = testing::naive_words(np, 4);
    ASSERT_EQ(ws.size(), ref.size());
    for (std::size_t k = 0; k < ws.size(); ++k) EXPECT_EQ(ws[k].symbols(), ref[k]);
    for (std::size_t k = 1; k < ws.size(); ++k) {
      EXPECT_EQ(compare_lex(ws[k - 1], ws[k]), std::strong_ordering::less);
    }
  }
}

TEST(CarTest, Counts) {
  EXPECT_EQ(car(1, 2), 7);
  EXPECT_EQ(car(0, 5), 6);
  EXPECT_EQ(car(2, 2), 13);
  EXPECT_EQ(car(1, -1), 0);
  EXPECT_THROW(car(9, 40), std::overflow_error);
}

TEST(IndexTest, KnownPositions) {
  EXPECT_EQ(index_of(Word(1), 3), 0);
  EXPECT_EQ(index_of(Word(1, {0, 1}), 3), 4);
  EXPECT_EQ(word_at(4, 1, 3), Word(1, {0, 1}));
  EXPECT_THROW(index_of(Word(1, {0, 1}), 1), std::out_of_range);
  EXPECT_THROW(word_at(15, 1, 3), std::out_of_range);
}

TEST(IndexTest, RoundTripAgainstEnumeration) {
  testing::Rng rng(5);
  for (int k = 0; k < 1000; ++k) {
    const int np = testing::uniform_int(rng, 0, 3);
    const int n = testing::uniform_int(rng, 0, 5);
    std::vector<int> s(testing::uniform_int(rng, 0, n));
    for (int& x : s) x = testing::uniform_int(rng, 0, np);
    const Word w(np, s);
    const std::int64_t idx = index_of(w, n);
    const auto all = enumerate_up_to(np, n);
    ASSERT_LT(idx, static_cast<std::int64_t>(all.size()));
    EXPECT_EQ(all[static_cast<std::size_t>(idx)], w);
    EXPECT_EQ(word_at(idx, np, n), w);
  }
}

}  // namespace
}  // namespace lpv
