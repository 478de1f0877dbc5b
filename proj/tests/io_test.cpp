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

#include "lpv/io.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace lpv {
namespace {

using testing::Rng;

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

TEST(ModelJsonTest, RoundTrip) {
  Rng rng(1);
  LpvSsa m = testing::random_model(rng, 2, 3, 2, 1, 0.7, true, TimeDomain::kContinuous);
  m.scheduling_set = SwitchedModel::vertex_set(2);
  const Vector x0 = testing::gaussian_vector(rng, 3);
  const ModelFile back = model_from_json(Json::parse(model_to_json(m, x0).dump()));
  EXPECT_EQ(back.model.A, m.A);
  EXPECT_EQ(back.model.B, m.B);
  EXPECT_EQ(back.model.C, m.C);
  EXPECT_EQ(back.model.D, m.D);
  EXPECT_EQ(back.model.time_domain, TimeDomain::kContinuous);
  ASSERT_TRUE(back.x0.has_value());
  EXPECT_EQ(*back.x0, x0);
  ASSERT_TRUE(back.model.scheduling_set.has_value());
  EXPECT_EQ(back.model.scheduling_set->size(), 3u);
}

TEST(ModelJsonTest, MissingStateDefaultsToZero) {
  const Json doc = Json::parse(R"({"np":0,"nx":1,"nu":1,"ny":1,
      "A":[[[0.5]]],"B":[[[1]]],"C":[[[1]]]})");
  const ModelFile f = model_from_json(doc);
  EXPECT_FALSE(f.x0.has_value());
  EXPECT_EQ(f.initial_state(), Vector::Zero(1));
  EXPECT_EQ(f.model.D[0], Matrix::Zero(1, 1));
}

TEST(ModelJsonTest, DiagnosticsNameTheField) {
  EXPECT_NE(error_of([] { model_from_json(Json::parse(R"({"np":1})")); }).find("nx"), std::string::npos);
  EXPECT_NE(error_of([] {
              model_from_json(Json::parse(R"({"np":1,"nx":1,"nu":1,"ny":1,
                  "A":[[[0.5]]],"B":[[[1]],[[1]]],"C":[[[1]],[[1]]]})"));
            }).find("'A'"),
            std::string::npos);
  EXPECT_NE(error_of([] {
              model_from_json(Json::parse(R"({"np":0,"nx":2,"nu":1,"ny":1,
                  "A":[[[0.5, 0]]],"B":[[[1],[0]]],"C":[[[1, 0]]]})"));
            }).find("A"),
            std::string::npos);
  EXPECT_NE(error_of([] {
              model_from_json(Json::parse(R"({"np":0,"nx":1,"nu":1,"ny":1,"time_domain":"x",
                  "A":[[[0.5]]],"B":[[[1]]],"C":[[[1]]]})"));
            }).find("time_domain"),
            std::string::npos);
  EXPECT_NE(error_of([] {
              model_from_json(Json::parse(R"({"np":0,"nx":1,"nu":1,"ny":1,"x0":[1,2],
                  "A":[[[0.5]]],"B":[[[1]]],"C":[[[1]]]})"));
            }).find("x0"),
            std::string::npos);
}

TEST(ThetaTableTest, RoundTripAndOracle) {
  Vector x0;
  const LpvSsa m = testing::reference_model(x0);
  const ThetaTable t = ThetaTable::from_model(m, x0, 3);
  const ThetaTable back = theta_table_from_json(Json::parse(theta_table_to_json(t).dump()));
  ASSERT_EQ(back.blocks.size(), t.blocks.size());
  for (std::size_t k = 0; k < t.blocks.size(); ++k) EXPECT_EQ(back.blocks[k].matrix(), t.blocks[k].matrix());
  const ThetaOracle o = back.oracle();
  EXPECT_EQ(o(Word::parse("101", 1)).matrix(), sub_markov(m, x0, Word::parse("101", 1)).matrix());
  EXPECT_THROW(o(Word::parse("1010", 1)), std::out_of_range);
}

TEST(ThetaTableTest, RejectsIncompleteOrInconsistentTables) {
  Vector x0;
  const LpvSsa m = testing::reference_model(x0);
  const Json good = theta_table_to_json(ThetaTable::from_model(m, x0, 1));

  Json missing = good;
  missing["records"].erase(1);
  EXPECT_NE(error_of([&] { theta_table_from_json(missing); }).find("misses word"), std::string::npos);

  Json dup = good;
  dup["records"][2]["word"] = dup["records"][1]["word"];
  EXPECT_NE(error_of([&] { theta_table_from_json(dup); }).find("duplicate"), std::string::npos);

  Json wrong_dims = good;
  wrong_dims["ny"] = 2;
  EXPECT_NE(error_of([&] { theta_table_from_json(wrong_dims); }).find("theta"), std::string::npos);

  Json bad_word = good;
  bad_word["records"][1]["word"] = "7";
  EXPECT_NE(error_of([&] { theta_table_from_json(bad_word); }).find("word"), std::string::npos);
}

TEST(SignalJsonTest, ParsesAndChecksLengths) {
  const SignalFile s = signals_from_json(Json::parse(R"({"u":[[1],[2]],"p":[[0.5],[0.25]],"step":0.1})"));
  ASSERT_EQ(s.u.size(), 2u);
  EXPECT_EQ(s.p[1](0), 0.25);
  ASSERT_TRUE(s.step.has_value());
  EXPECT_EQ(*s.step, 0.1);
  EXPECT_THROW(signals_from_json(Json::parse(R"({"u":[[1],[2]],"p":[[0.5]]})")), InputError);
}

TEST(FileTest, MissingAndMalformedFiles) {
  EXPECT_THROW(read_json_file("/nonexistent/model.json"), InputError);
  const auto path = std::filesystem::temp_directory_path() / "lpvssa_io_test_bad.json";
  write_text_file(path, "{not json");
  EXPECT_THROW(read_json_file(path), InputError);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace lpv
