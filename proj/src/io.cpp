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

#include <fstream>
#include <sstream>

namespace lpv {

namespace {

const Json& require_field(const Json& doc, const std::string& field) {
  if (!doc.is_object()) throw InputError("expected a JSON object");
  auto it = doc.find(field);
  if (it == doc.end()) throw InputError("missing field '" + field + "'");
  return *it;
}

int read_count(const Json& doc, const std::string& field) {
  const Json& v = require_field(doc, field);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw InputError("field '" + field + "' must be a non-negative integer");
  }
  return v.get<int>();
}

double read_number(const Json& v, const std::string& field) {
  if (!v.is_number()) throw InputError("field '" + field + "' must be a number");
  return v.get<double>();
}

Vector vector_from_json(const Json& j, const std::string& field) {
  if (!j.is_array()) throw InputError("field '" + field + "' must be an array of numbers");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t k = 0; k < j.size(); ++k) {
    v(static_cast<Eigen::Index>(k)) = read_number(j[k], field + "[" + std::to_string(k) + "]");
  }
  return v;
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back(v(k));
  return out;
}

std::vector<Vector> samples_from_json(const Json& j, const std::string& field) {
  if (!j.is_array()) throw InputError("field '" + field + "' must be an array of samples");
  std::vector<Vector> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string name = field + "[" + std::to_string(k) + "]";
    // Scalar samples are accepted for one-dimensional signals.
    if (j[k].is_number()) {
      out.push_back(Vector::Constant(1, j[k].get<double>()));
    } else {
      out.push_back(vector_from_json(j[k], name));
    }
  }
  return out;
}

std::vector<Matrix> family_from_json(const Json& doc, const std::string& field, int count,
                                     int rows, int cols, bool optional) {
  if (optional && (!doc.contains(field) || doc[field].is_null())) {
    return std::vector<Matrix>(static_cast<std::size_t>(count), Matrix::Zero(rows, cols));
  }
  const Json& j = require_field(doc, field);
  if (!j.is_array()) throw InputError("field '" + field + "' must be a list of matrices");
  if (static_cast<int>(j.size()) != count) {
    throw InputError("field '" + field + "': expected " + std::to_string(count) + " " + field +
                     "-matrices, got " + std::to_string(j.size()));
  }
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string name = field + "[" + std::to_string(k) + "]";
    Matrix M = matrix_from_json(j[k], name);
    if (M.size() == 0 && static_cast<long>(rows) * cols == 0) M.resize(rows, cols);
    if (M.rows() != rows || M.cols() != cols) {
      throw InputError("field '" + name + "' is " + std::to_string(M.rows()) + "x" +
                       std::to_string(M.cols()) + ", expected " + std::to_string(rows) + "x" +
                       std::to_string(cols));
    }
    out.push_back(std::move(M));
  }
  return out;
}

}  // namespace

Vector ModelFile::initial_state() const { return x0 ? *x0 : Vector::Zero(model.nx); }

Matrix matrix_from_json(const Json& j, const std::string& field) {
  if (!j.is_array()) throw InputError("field '" + field + "' must be a 2-D array");
  if (j.empty()) return Matrix(0, 0);
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  Matrix M(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::string row_name = field + "[" + std::to_string(r) + "]";
    if (!j[r].is_array() || j[r].size() != cols) {
      throw InputError("field '" + row_name + "' must be a row of " + std::to_string(cols) + " numbers");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      M(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          read_number(j[r][c], row_name + "[" + std::to_string(c) + "]");
    }
  }
  return M;
}

Json matrix_to_json(const Matrix& M) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < M.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < M.cols(); ++c) row.push_back(M(r, c));
    out.push_back(std::move(row));
  }
  return out;
}

ModelFile model_from_json(const Json& doc) {
  ModelFile file;
  LpvSsa& m = file.model;
  m.np = read_count(doc, "np");
  m.nx = read_count(doc, "nx");
  m.nu = read_count(doc, "nu");
  m.ny = read_count(doc, "ny");
  if (doc.contains("time_domain")) {
    const Json& td = doc["time_domain"];
    const std::string v = td.is_string() ? td.get<std::string>() : "";
    if (v == "dt") {
      m.time_domain = TimeDomain::kDiscrete;
    } else if (v == "ct") {
      m.time_domain = TimeDomain::kContinuous;
    } else {
      throw InputError("field 'time_domain' must be \"dt\" or \"ct\"");
    }
  }
  const int k = m.np + 1;
  m.A = family_from_json(doc, "A", k, m.nx, m.nx, false);
  m.B = family_from_json(doc, "B", k, m.nx, m.nu, false);
  m.C = family_from_json(doc, "C", k, m.ny, m.nx, false);
  m.D = family_from_json(doc, "D", k, m.ny, m.nu, true);
  if (doc.contains("P") && !doc["P"].is_null()) {
    std::vector<Vector> pts = samples_from_json(doc["P"], "P");
    for (std::size_t q = 0; q < pts.size(); ++q) {
      if (pts[q].size() != m.np) {
        throw InputError("field 'P[" + std::to_string(q) + "]' has length " +
                         std::to_string(pts[q].size()) + ", expected " + std::to_string(m.np));
      }
    }
    m.scheduling_set = std::move(pts);
  }
  if (doc.contains("x0") && !doc["x0"].is_null()) {
    Vector x0 = vector_from_json(doc["x0"], "x0");
    if (x0.size() != m.nx) {
      throw InputError("field 'x0' has length " + std::to_string(x0.size()) + ", expected " +
                       std::to_string(m.nx));
    }
    file.x0 = std::move(x0);
  }
  return file;
}

Json model_to_json(const LpvSsa& model, const std::optional<Vector>& x0) {
  Json doc;
  doc["np"] = model.np;
  doc["nx"] = model.nx;
  doc["nu"] = model.nu;
  doc["ny"] = model.ny;
  doc["time_domain"] = model.time_domain == TimeDomain::kDiscrete ? "dt" : "ct";
  auto family = [](const std::vector<Matrix>& ms) {
    Json out = Json::array();
    for (const Matrix& M : ms) out.push_back(matrix_to_json(M));
    return out;
  };
  doc["A"] = family(model.A);
  doc["B"] = family(model.B);
  doc["C"] = family(model.C);
  doc["D"] = family(model.D);
  if (model.scheduling_set) {
    Json pts = Json::array();
    for (const Vector& p : *model.scheduling_set) pts.push_back(vector_to_json(p));
    doc["P"] = std::move(pts);
  }
  if (x0) doc["x0"] = vector_to_json(*x0);
  return doc;
}

ThetaTable ThetaTable::from_model(const LpvSsa& model, const Vector& x0, int max_len) {
  ThetaTable table;
  table.np = model.np;
  table.nu = model.nu;
  table.ny = model.ny;
  table.max_len = max_len;
  table.blocks = sub_markov_table(model, x0, max_len);
  return table;
}

ThetaOracle ThetaTable::oracle() const {
  return [blocks = blocks, max_len = max_len](const Word& s) {
    if (static_cast<int>(s.size()) > max_len) {
      throw std::out_of_range("theta table holds words up to length " + std::to_string(max_len) +
                              ", requested '" + s.display() + "'");
    }
    return blocks[static_cast<std::size_t>(index_of(s, max_len))];
  };
}

ThetaTable theta_table_from_json(const Json& doc) {
  ThetaTable table;
  table.np = read_count(doc, "np");
  table.nu = read_count(doc, "nu");
  table.ny = read_count(doc, "ny");
  table.max_len = read_count(doc, "max_len");
  const int rows = SubMarkovBlock::rows(table.np, table.ny);
  const int cols = SubMarkovBlock::cols(table.np, table.nu);
  const std::int64_t count = car(table.np, table.max_len);
  const Json& records = require_field(doc, "records");
  if (!records.is_array()) throw InputError("field 'records' must be an array");

  std::vector<std::optional<SubMarkovBlock>> slots(static_cast<std::size_t>(count));
  for (std::size_t k = 0; k < records.size(); ++k) {
    const std::string name = "records[" + std::to_string(k) + "]";
    const Json& rec = records[k];
    const Json& wj = require_field(rec, "word");
    if (!wj.is_string()) throw InputError("field '" + name + ".word' must be a string");
    Word w(table.np);
    try {
      w = Word::parse(wj.get<std::string>(), table.np);
    } catch (const std::exception& e) {
      throw InputError("field '" + name + ".word': " + e.what());
    }
    if (static_cast<int>(w.size()) > table.max_len) {
      throw InputError("field '" + name + ".word' is longer than max_len");
    }
    const Vector flat = vector_from_json(require_field(rec, "theta"), name + ".theta");
    if (flat.size() != static_cast<Eigen::Index>(rows) * cols) {
      throw InputError("field '" + name + ".theta' has " + std::to_string(flat.size()) +
                       " entries, expected " + std::to_string(rows * cols));
    }
    Matrix M(rows, cols);
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) M(r, c) = flat(r * cols + c);
    }
    auto& slot = slots[static_cast<std::size_t>(index_of(w, table.max_len))];
    if (slot) throw InputError("field '" + name + ".word': duplicate word '" + w.display() + "'");
    slot.emplace(table.np, table.nu, table.ny, std::move(M));
  }
  for (std::size_t k = 0; k < slots.size(); ++k) {
    if (!slots[k]) {
      throw InputError("theta table misses word '" +
                       word_at(static_cast<std::int64_t>(k), table.np, table.max_len).display() + "'");
    }
    table.blocks.push_back(std::move(*slots[k]));
  }
  return table;
}

Json theta_table_to_json(const ThetaTable& table) {
  Json doc;
  doc["np"] = table.np;
  doc["nu"] = table.nu;
  doc["ny"] = table.ny;
  doc["max_len"] = table.max_len;
  Json records = Json::array();
  const std::vector<Word> words = enumerate_up_to(table.np, table.max_len);
  for (std::size_t k = 0; k < words.size(); ++k) {
    const Matrix& M = table.blocks[k].matrix();
    Json flat = Json::array();
    for (Eigen::Index r = 0; r < M.rows(); ++r) {
      for (Eigen::Index c = 0; c < M.cols(); ++c) flat.push_back(M(r, c));
    }
    records.push_back({{"word", words[k].to_string()}, {"theta", std::move(flat)}});
  }
  doc["records"] = std::move(records);
  return doc;
}

SignalFile signals_from_json(const Json& doc) {
  SignalFile sig;
  sig.u = samples_from_json(require_field(doc, "u"), "u");
  sig.p = samples_from_json(require_field(doc, "p"), "p");
  if (sig.u.size() != sig.p.size()) {
    throw InputError("fields 'u' and 'p' have different numbers of samples");
  }
  if (doc.contains("t")) {
    const Vector t = vector_from_json(doc["t"], "t");
    if (static_cast<std::size_t>(t.size()) != sig.u.size()) {
      throw InputError("field 't' has a different number of samples than 'u'");
    }
    sig.t = std::vector<double>(t.data(), t.data() + t.size());
  }
  if (doc.contains("step")) sig.step = read_number(doc["step"], "step");
  return sig;
}

Json trajectory_to_json(const Trajectory& traj) {
  auto samples = [](const std::vector<Vector>& v) {
    Json out = Json::array();
    for (const Vector& s : v) out.push_back(vector_to_json(s));
    return out;
  };
  Json doc;
  doc["t"] = traj.t;
  doc["u"] = samples(traj.u);
  doc["p"] = samples(traj.p);
  doc["x"] = samples(traj.x);
  doc["y"] = samples(traj.y);
  return doc;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << text;
}

}  // namespace lpv
