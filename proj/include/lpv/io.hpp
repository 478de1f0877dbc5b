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

// JSON file formats shared by the command-line tool.
//
// Model file:
//   {"np": 1, "nx": 2, "nu": 1, "ny": 1, "time_domain": "dt",
//    "A": [[[..], [..]], [[..], [..]]],   // np+1 row-major nx x nx arrays
//    "B": [...], "C": [...], "D": [...],  // D optional (zero)
//    "P": [[0.0], [1.0]],                  // optional scheduling points
//    "x0": [1.0, 0.0]}                     // optional initial state
//
// Theta table:
//   {"np": 1, "nu": 1, "ny": 1, "max_len": 2,
//    "records": [{"word": "", "theta": [...]}, {"word": "0", ...}, ...]}
//   theta is the (np+1)*ny x (nu*(np+1)+1) block flattened row-major.
//
// Signals file:
//   {"u": [[..], ...], "p": [[..], ...], "step": 0.01}  // or "t": [...]
//   DT files may omit both; CT files need one of them.

#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "lpv/markov.hpp"
#include "lpv/model.hpp"
#include "lpv/sim.hpp"

namespace lpv {

/// Malformed or inconsistent input. The message names the offending field.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Json = nlohmann::json;

struct ModelFile {
  LpvSsa model;
  std::optional<Vector> x0;

  /// x0 if present, otherwise the zero state.
  Vector initial_state() const;
};

ModelFile model_from_json(const Json& doc);
Json model_to_json(const LpvSsa& model, const std::optional<Vector>& x0 = std::nullopt);

struct ThetaTable {
  int np = 0;
  int nu = 0;
  int ny = 0;
  int max_len = 0;
  /// One block per word of length <= max_len, in lexicographic order.
  std::vector<SubMarkovBlock> blocks;

  static ThetaTable from_model(const LpvSsa& model, const Vector& x0, int max_len);

  /// Oracle over the stored words; longer words throw std::out_of_range.
  ThetaOracle oracle() const;
};

ThetaTable theta_table_from_json(const Json& doc);
Json theta_table_to_json(const ThetaTable& table);

struct SignalFile {
  std::vector<Vector> u;
  std::vector<Vector> p;
  std::optional<std::vector<double>> t;
  std::optional<double> step;
};

SignalFile signals_from_json(const Json& doc);
Json trajectory_to_json(const Trajectory& traj);

Json matrix_to_json(const Matrix& M);
Matrix matrix_from_json(const Json& j, const std::string& field);

/// Reads and parses a JSON document, mapping every failure to InputError.
Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace lpv
