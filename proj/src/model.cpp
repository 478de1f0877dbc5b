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

#include "lpv/model.hpp"

#include <sstream>
#include <stdexcept>

#include "lpv/linalg.hpp"

namespace lpv {

namespace {

void check_family(const std::vector<Matrix>& family, const char* name, int count,
                  int rows, int cols, std::vector<std::string>& errors) {
  if (static_cast<int>(family.size()) != count) {
    std::ostringstream msg;
    msg << "expected " << count << " " << name << "-matrices, got " << family.size();
    errors.push_back(msg.str());
    return;
  }
  for (int i = 0; i < count; ++i) {
    const Matrix& m = family[i];
    if (m.rows() != rows || m.cols() != cols) {
      std::ostringstream msg;
      msg << name << "_" << i << " is " << m.rows() << "x" << m.cols() << ", expected "
          << rows << "x" << cols;
      errors.push_back(msg.str());
    } else if (!m.allFinite()) {
      std::ostringstream msg;
      msg << name << "_" << i << " has non-finite entries";
      errors.push_back(msg.str());
    }
  }
}

}  // namespace

LpvSsa LpvSsa::zeros(int np, int nx, int nu, int ny, TimeDomain domain) {
  LpvSsa m;
  m.np = np;
  m.nx = nx;
  m.nu = nu;
  m.ny = ny;
  m.time_domain = domain;
  for (int i = 0; i <= np; ++i) {
    m.A.push_back(Matrix::Zero(nx, nx));
    m.B.push_back(Matrix::Zero(nx, nu));
    m.C.push_back(Matrix::Zero(ny, nx));
    m.D.push_back(Matrix::Zero(ny, nu));
  }
  return m;
}

ValidationReport validate(const LpvSsa& model) {
  ValidationReport report;
  if (model.np < 0 || model.nx < 0 || model.nu < 0 || model.ny < 0) {
    report.errors.push_back("dimensions must be non-negative");
    return report;
  }
  const int k = model.channels();
  check_family(model.A, "A", k, model.nx, model.nx, report.errors);
  check_family(model.B, "B", k, model.nx, model.nu, report.errors);
  check_family(model.C, "C", k, model.ny, model.nx, report.errors);
  check_family(model.D, "D", k, model.ny, model.nu, report.errors);

  for (const Matrix& d : model.D) {
    if (d.size() > 0 && d.cwiseAbs().maxCoeff() != 0.0) report.feedthrough_zero = false;
  }
  if (!report.feedthrough_zero) {
    report.notes.push_back("D is nonzero: used only as feedthrough in simulation");
  }

  if (model.scheduling_set) {
    bool dims_ok = true;
    for (const Vector& p : *model.scheduling_set) {
      if (p.size() != model.np) dims_ok = false;
    }
    if (!dims_ok) {
      report.errors.push_back("scheduling point length differs from np");
    } else {
      report.affine_span_ok = affinely_spans(*model.scheduling_set, model.np);
      if (!*report.affine_span_ok) {
        report.notes.push_back("scheduling set does not affinely span R^np");
      }
    }
  } else {
    report.notes.push_back("no scheduling set given: affine span of P assumed to be R^np");
  }
  return report;
}

void require_valid(const LpvSsa& model) {
  const ValidationReport report = validate(model);
  if (!report.errors.empty()) throw std::invalid_argument(report.errors.front());
}

void require_state(const LpvSsa& model, const Vector& x0) {
  if (x0.size() != model.nx) {
    std::ostringstream msg;
    msg << "initial state has length " << x0.size() << ", expected " << model.nx;
    throw std::invalid_argument(msg.str());
  }
}

bool affinely_spans(const std::vector<Vector>& points, int dim, double rel_tol) {
  if (dim == 0) return !points.empty();
  if (static_cast<int>(points.size()) < dim + 1) return false;
  Matrix diffs(dim, static_cast<Eigen::Index>(points.size()) - 1);
  for (std::size_t k = 1; k < points.size(); ++k) diffs.col(k - 1) = points[k] - points[0];
  return numeric_rank(diffs, rel_tol).rank == dim;
}

FrozenMatrices eval_at(const LpvSsa& model, const Vector& p) {
  require_valid(model);
  if (p.size() != model.np) {
    std::ostringstream msg;
    msg << "scheduling point has length " << p.size() << ", expected " << model.np;
    throw std::invalid_argument(msg.str());
  }
  FrozenMatrices f{model.A[0], model.B[0], model.C[0], model.D[0]};
  for (int i = 1; i <= model.np; ++i) {
    const double w = p(i - 1);
    f.A += w * model.A[i];
    f.B += w * model.B[i];
    f.C += w * model.C[i];
    f.D += w * model.D[i];
  }
  return f;
}

std::vector<Vector> SwitchedModel::vertex_set(int np) {
  std::vector<Vector> pts;
  pts.push_back(Vector::Zero(np));
  for (int j = 0; j < np; ++j) pts.push_back(Vector::Unit(np, j));
  return pts;
}

SwitchedModel to_switched(const LpvSsa& model) {
  require_valid(model);
  SwitchedModel sw{without_feedthrough(model)};
  sw.model.scheduling_set = SwitchedModel::vertex_set(model.np);
  return sw;
}

LpvSsa from_switched(const SwitchedModel& sw, const std::vector<Vector>& scheduling_set) {
  require_valid(sw.model);
  for (const Vector& p : scheduling_set) {
    if (p.size() != sw.model.np) {
      throw std::invalid_argument("scheduling point length differs from np");
    }
  }
  if (!affinely_spans(scheduling_set, sw.model.np)) {
    throw std::invalid_argument("scheduling set does not affinely span R^np");
  }
  LpvSsa model = sw.model;
  model.scheduling_set = scheduling_set;
  return model;
}

LpvSsa without_feedthrough(const LpvSsa& model) {
  LpvSsa out = model;
  for (Matrix& d : out.D) d.setZero();
  return out;
}

LpvSsa transform(const LpvSsa& model, const Matrix& T, const Matrix& T_inv) {
  require_valid(model);
  LpvSsa out = model;
  out.nx = static_cast<int>(T.rows());
  for (int i = 0; i <= model.np; ++i) {
    out.A[i] = T * model.A[i] * T_inv;
    out.B[i] = T * model.B[i];
    out.C[i] = model.C[i] * T_inv;
  }
  return out;
}

}  // namespace lpv
