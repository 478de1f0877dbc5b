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

#include "cli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "lpv/hankel.hpp"
#include "lpv/io.hpp"
#include "lpv/markov.hpp"
#include "lpv/model.hpp"
#include "lpv/realize.hpp"
#include "lpv/reduce.hpp"
#include "lpv/sim.hpp"

namespace lpv::cli {

namespace {

constexpr std::int64_t kDefaultMaxBlocks = 20000;

struct Options {
  std::string model_path;
  std::string model2_path;
  std::string theta_path;
  std::string signals_path;
  std::string output_path;
  std::string dump_path;
  int max_len = 3;
  int n = 1;
  int m = -1;
  double tol = kDefaultRankTol;
  double iso_tol = kDefaultIsoTol;
  double check_tol = 1e-8;
  double roundtrip_tol = 1e-6;
  double step = 0.0;
  double horizon = -1.0;
  std::int64_t max_blocks = kDefaultMaxBlocks;
  std::optional<std::uint64_t> seed;
  int trajectories = 20;
  int length = 10;
  bool text = false;
  bool json = false;
};

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

void emit(const Options& opt, const std::string& text, std::ostream& out) {
  if (opt.output_path.empty()) {
    out << text;
  } else {
    write_text_file(opt.output_path, text);
  }
}

ModelFile load_model(const std::string& path) {
  ModelFile file = model_from_json(read_json_file(path));
  const ValidationReport report = validate(file.model);
  if (!report.errors.empty()) throw InputError(path + ": " + report.errors.front());
  return file;
}

void check_block_budget(int np, int n, int m, std::int64_t max_blocks) {
  const std::int64_t blocks = hankel_block_count(np, n, m);
  if (blocks > max_blocks) {
    throw InputError("H(" + std::to_string(n) + ", " + std::to_string(m) + ") has " +
                     std::to_string(blocks) + " blocks, above the ceiling of " +
                     std::to_string(max_blocks) + " (raise it with --max-blocks)");
  }
}

std::string format_vector(const Vector& v) {
  std::ostringstream s;
  s << std::setprecision(10);
  for (Eigen::Index k = 0; k < v.size(); ++k) s << (k ? " " : "") << v(k);
  return s.str();
}

// -- validate ----------------------------------------------------------------

int run_validate(const Options& opt, std::ostream& out) {
  const Json doc = read_json_file(opt.model_path);
  const ModelFile file = model_from_json(doc);
  const ValidationReport report = validate(file.model);
  for (const auto& e : report.errors) out << "error: " << e << "\n";
  if (report.affine_span_ok) {
    out << "affine span of P: " << (*report.affine_span_ok ? "OK" : "FAIL") << "\n";
  }
  out << "D == 0: " << (report.feedthrough_zero ? "yes" : "no") << "\n";
  for (const auto& n : report.notes) out << "note: " << n << "\n";
  if (!report.errors.empty()) return kInputError;
  return report.ok() ? kOk : kCheckFailed;
}

// -- markov ------------------------------------------------------------------

int run_markov(const Options& opt, std::ostream& out) {
  const ModelFile file = load_model(opt.model_path);
  if (opt.max_len < 0) throw InputError("--max-len must be >= 0");
  const ThetaTable table = ThetaTable::from_model(file.model, file.initial_state(), opt.max_len);
  if (!opt.text) {
    emit(opt, dump(theta_table_to_json(table)), out);
    return kOk;
  }
  std::ostringstream s;
  s << std::setprecision(12);
  const std::vector<Word> words = enumerate_up_to(table.np, table.max_len);
  for (std::size_t k = 0; k < words.size(); ++k) {
    const Matrix& M = table.blocks[k].matrix();
    s << words[k].display() << ":";
    for (Eigen::Index r = 0; r < M.rows(); ++r) {
      for (Eigen::Index c = 0; c < M.cols(); ++c) s << " " << M(r, c);
    }
    s << "\n";
  }
  emit(opt, s.str(), out);
  return kOk;
}

// -- hankel ------------------------------------------------------------------

struct ThetaSource {
  ThetaOracle oracle;
  int np = 0;
  int nu = 0;
  int ny = 0;
  int max_len = -1;  // -1: unbounded (model oracle)
  std::optional<ModelFile> model;
};

ThetaSource load_theta_source(const Options& opt) {
  ThetaSource src;
  if (!opt.theta_path.empty()) {
    const ThetaTable table = theta_table_from_json(read_json_file(opt.theta_path));
    src.oracle = table.oracle();
    src.np = table.np;
    src.nu = table.nu;
    src.ny = table.ny;
    src.max_len = table.max_len;
  } else if (!opt.model_path.empty()) {
    src.model = load_model(opt.model_path);
    src.oracle = model_oracle(src.model->model, src.model->initial_state());
    src.np = src.model->model.np;
    src.nu = src.model->model.nu;
    src.ny = src.model->model.ny;
  } else {
    throw InputError("give a model file or --theta");
  }
  return src;
}

HankelFinite hankel_from_source(const ThetaSource& src, int n, int m) {
  if (src.max_len >= 0 && n + m > src.max_len) {
    throw InputError("H(" + std::to_string(n) + ", " + std::to_string(m) + ") needs words up to length " +
                     std::to_string(n + m) + " but the theta table stops at " +
                     std::to_string(src.max_len));
  }
  if (src.model) return build_hankel(src.model->model, src.model->initial_state(), n, m);
  return build_hankel(src.oracle, src.np, src.nu, src.ny, n, m);
}

void write_hankel_dump(const std::string& path, const HankelFinite& H) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write '" + path + "'");
  auto put_i64 = [&](std::int64_t v) {
    auto u = static_cast<std::uint64_t>(v);
    for (int b = 0; b < 8; ++b) f.put(static_cast<char>((u >> (8 * b)) & 0xff));
  };
  put_i64(H.blocks.rows());
  put_i64(H.blocks.cols());
  put_i64(H.n);
  put_i64(H.m);
  for (Eigen::Index r = 0; r < H.blocks.rows(); ++r) {
    for (Eigen::Index c = 0; c < H.blocks.cols(); ++c) {
      const auto bits = std::bit_cast<std::uint64_t>(H.blocks(r, c));
      for (int b = 0; b < 8; ++b) f.put(static_cast<char>((bits >> (8 * b)) & 0xff));
    }
  }
}

int run_hankel(const Options& opt, std::ostream& out) {
  const ThetaSource src = load_theta_source(opt);
  const int m = opt.m < 0 ? opt.n : opt.m;
  if (opt.n < 0) throw InputError("--n must be >= 0");
  check_block_budget(src.np, opt.n, m, opt.max_blocks);
  const HankelFinite H = hankel_from_source(src, opt.n, m);
  const RankResult rank = numeric_rank(H.blocks, opt.tol);
  out << "H(" << H.n << ", " << H.m << "): " << H.blocks.rows() << " x " << H.blocks.cols()
      << " (" << H.row_words.size() << " x " << H.col_words.size() << " blocks of "
      << H.block_height() << " x " << H.block_width() << ")\n";
  out << "singular values: " << format_vector(rank.singular_values) << "\n";
  out << "rank (rel_tol " << opt.tol << "): " << rank.rank << "\n";
  if (!opt.dump_path.empty()) write_hankel_dump(opt.dump_path, H);
  return kOk;
}

// -- realize -----------------------------------------------------------------

int run_realize(const Options& opt, std::ostream& out, std::ostream& err) {
  const ThetaSource src = load_theta_source(opt);
  if (opt.n < 0) throw InputError("--n must be >= 0");
  check_block_budget(src.np, opt.n, opt.n + 1, opt.max_blocks);
  const HankelFinite H = hankel_from_source(src, opt.n, opt.n + 1);
  const TimeDomain domain = src.model ? src.model->model.time_domain : TimeDomain::kDiscrete;
  const HoKalmanResult hk = ho_kalman(H, opt.tol, domain);
  err << "recovered nx = " << hk.rank << " (rank H(n,n) = " << hk.rank_square << ")\n";
  if (hk.rank_mismatch) {
    err << "warning: rank H(n,n) differs from rank H(n,n+1); using the H(n,n+1) truncation\n";
  }
  emit(opt, dump(model_to_json(hk.model, hk.x0)), out);
  return kOk;
}

// -- minimize / decompose ----------------------------------------------------

int run_minimize(const Options& opt, std::ostream& out, std::ostream& err) {
  const ModelFile file = load_model(opt.model_path);
  const MinimizeResult res = minimize(file.model, file.initial_state(), opt.tol);
  err << "nx " << file.model.nx << " -> " << res.model.nx << "\n";
  emit(opt, dump(model_to_json(res.model, res.x0)), out);
  return kOk;
}

int run_decompose(const Options& opt, std::ostream& out) {
  const ModelFile file = load_model(opt.model_path);
  const KalmanDecomposition kd = kalman_decompose(file.model, file.initial_state(), opt.tol);
  Json doc;
  doc["r_m"] = kd.r_m;
  doc["r"] = kd.r;
  doc["nx"] = file.model.nx;
  doc["T"] = matrix_to_json(kd.T);
  doc["pattern_residual"] = kd.pattern_residual;
  doc["hat_model"] = model_to_json(kd.hat_model, kd.hat_x0);
  doc["minimal_model"] = model_to_json(kd.minimal_part, kd.minimal_x0);
  emit(opt, dump(doc), out);
  return kOk;
}

// -- isomorph ----------------------------------------------------------------

int run_isomorph(const Options& opt, std::ostream& out) {
  const ModelFile a = load_model(opt.model_path);
  const ModelFile b = load_model(opt.model2_path);
  const auto same = [&](const LpvSsa& x, const LpvSsa& y) {
    return x.np == y.np && x.nx == y.nx && x.nu == y.nu && x.ny == y.ny;
  };
  if (!same(a.model, b.model)) throw InputError("models have different dimensions");
  const Isomorphism iso =
      find_isomorphism(a.model, a.initial_state(), b.model, b.initial_state(), opt.iso_tol, opt.tol);
  Json doc;
  doc["success"] = iso.success;
  doc["T"] = matrix_to_json(iso.T);
  doc["condition"] = iso.condition;
  doc["residuals"] = {{"A", iso.residual_A},
                      {"B", iso.residual_B},
                      {"C", iso.residual_C},
                      {"D", iso.residual_D},
                      {"x0", iso.residual_x0}};
  emit(opt, dump(doc), out);
  return iso.success ? kOk : kCheckFailed;
}

// -- simulate ----------------------------------------------------------------

int run_simulate(const Options& opt, std::ostream& out) {
  const ModelFile file = load_model(opt.model_path);
  const SignalFile sig = signals_from_json(read_json_file(opt.signals_path));
  const LpvSsa& model = file.model;
  for (std::size_t k = 0; k < sig.u.size(); ++k) {
    if (sig.u[k].size() != model.nu || sig.p[k].size() != model.np) {
      throw InputError("signal sample " + std::to_string(k) + " does not match nu/np of the model");
    }
  }
  Trajectory traj;
  if (model.time_domain == TimeDomain::kDiscrete) {
    traj = simulate_dt(model, file.initial_state(), sig.u, sig.p);
  } else {
    if (sig.u.empty()) throw InputError("CT simulation needs at least one sample");
    std::optional<SampledSignal> u;
    std::optional<SampledSignal> p;
    try {
      if (sig.t) {
        u = SampledSignal::from_times(*sig.t, sig.u);
        p = SampledSignal::from_times(*sig.t, sig.p);
      } else if (sig.step) {
        u = SampledSignal(0.0, *sig.step, sig.u);
        p = SampledSignal(0.0, *sig.step, sig.p);
      } else {
        throw InputError("CT signals need 't' or 'step'");
      }
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("signals: ") + e.what());
    }
    const double horizon = opt.horizon >= 0.0 ? opt.horizon : u->t_end();
    const double h = opt.step > 0.0 ? opt.step : (horizon > 0.0 ? 1e-3 * horizon : 1.0);
    traj = simulate_ct(model, file.initial_state(), *u, *p, h, horizon);
  }
  emit(opt, dump(trajectory_to_json(traj)), out);
  return kOk;
}

// -- check -------------------------------------------------------------------

struct CheckLine {
  std::string name;
  bool pass = true;
  bool info = false;
  std::string detail;
};

double table_deviation(const LpvSsa& a, const Vector& xa, const LpvSsa& b, const Vector& xb,
                       int max_len) {
  const auto ta = sub_markov_table(a, xa, max_len);
  const auto tb = sub_markov_table(b, xb, max_len);
  double d = 0.0;
  for (std::size_t k = 0; k < ta.size(); ++k) {
    d = std::max(d, (ta[k].matrix() - tb[k].matrix()).cwiseAbs().maxCoeff());
  }
  return d;
}

// Without a seed the excitation is a fixed family of incommensurate sinusoids.
double excitation(std::mt19937_64* rng, int k, int t, int channel) {
  if (rng != nullptr) return std::normal_distribution<double>(0.0, 1.0)(*rng);
  const double freq = 0.7 + 0.37 * k + 1.13 * channel;
  return std::sin(freq * t + 0.5 * channel + 0.3 * k);
}

double simulation_deviation(const LpvSsa& a, const Vector& xa, const LpvSsa& b, const Vector& xb,
                            int count, int length, std::mt19937_64* rng) {
  double d = 0.0;
  for (int k = 0; k < count; ++k) {
    std::vector<Vector> u;
    std::vector<Vector> p;
    for (int t = 0; t < length; ++t) {
      Vector ut(a.nu);
      Vector pt(a.np);
      for (int i = 0; i < a.nu; ++i) ut(i) = excitation(rng, k, t, i);
      for (int i = 0; i < a.np; ++i) pt(i) = excitation(rng, k, t, a.nu + i);
      u.push_back(ut);
      p.push_back(pt);
    }
    const Trajectory ya = simulate_dt(a, xa, u, p);
    const Trajectory yb = simulate_dt(b, xb, u, p);
    for (int t = 0; t < length; ++t) {
      if (a.ny > 0) d = std::max(d, (ya.y[t] - yb.y[t]).cwiseAbs().maxCoeff());
    }
  }
  return d;
}

std::string fmt(double v) {
  std::ostringstream s;
  s << std::setprecision(3) << v;
  return s.str();
}

int run_check(const Options& opt, std::ostream& out) {
  const ModelFile file = load_model(opt.model_path);
  const LpvSsa model = file.model;
  const Vector x0 = file.initial_state();
  std::optional<std::mt19937_64> rng;
  if (opt.seed) rng.emplace(*opt.seed);
  std::vector<CheckLine> lines;

  const MinimalityReport mr = minimality_test(model, x0, opt.tol);
  lines.push_back({"minimality", true, true,
                   "rank R = " + std::to_string(mr.reach_rank) + ", rank O = " +
                       std::to_string(mr.obs_rank) + ", nx = " + std::to_string(model.nx) +
                       (mr.minimal ? " (minimal)" : " (not minimal)")});

  const MinimizeResult mini = minimize(model, x0, opt.tol);
  const int n_min = mini.model.nx;

  // Hankel rank equals the minimal dimension.
  if (hankel_block_count(model.np, model.nx, model.nx) <= opt.max_blocks) {
    const int hr = numeric_rank(build_hankel(model, x0, model.nx, model.nx).blocks, opt.tol).rank;
    lines.push_back({"hankel_rank", hr == n_min, false,
                     "rank H(nx,nx) = " + std::to_string(hr) + ", minimal dimension = " +
                         std::to_string(n_min)});
  } else {
    lines.push_back({"hankel_rank", true, true, "skipped: H(nx,nx) above the block ceiling"});
  }

  // Reductions preserve the input-output map.
  const Reduction reach = reach_reduce(model, x0, opt.tol);
  const Reduction obs = obs_reduce(model, x0, opt.tol);
  const KalmanDecomposition kd = kalman_decompose(model, x0, opt.tol);
  struct Reduced {
    const char* name;
    const LpvSsa* m;
    const Vector* x;
  };
  const Reduced reduced[] = {{"reach_reduce", &reach.model, &reach.x0},
                             {"obs_reduce", &obs.model, &obs.x0},
                             {"minimize", &mini.model, &mini.x0},
                             {"kalman_minimal_part", &kd.minimal_part, &kd.minimal_x0}};
  for (const Reduced& r : reduced) {
    const double dt = table_deviation(model, x0, *r.m, *r.x, 4);
    const double ds = simulation_deviation(model, x0, *r.m, *r.x, opt.trajectories, opt.length,
                                            rng ? &*rng : nullptr);
    const bool ok = dt <= opt.check_tol && ds <= opt.check_tol;
    lines.push_back({std::string(r.name) + "_equivalence", ok, false,
                     "nx = " + std::to_string(r.m->nx) + ", theta dev " + fmt(dt) +
                         ", output dev " + fmt(ds)});
  }
  lines.push_back({"kalman_pattern", kd.pattern_residual <= 1e-10, false,
                   "zero-block residual " + fmt(kd.pattern_residual) + ", (r_m, r, nx) = (" +
                       std::to_string(kd.r_m) + ", " + std::to_string(kd.r) + ", " +
                       std::to_string(model.nx) + ")"});
  const MinimalityReport mm = minimality_test(mini.model, mini.x0, opt.tol);
  lines.push_back({"minimize_is_minimal", mm.minimal, false,
                   "minimized model rank R = " + std::to_string(mm.reach_rank) + ", rank O = " +
                       std::to_string(mm.obs_rank)});

  // Ho-Kalman round trip from H(n, n+1), n = minimal dimension.
  const int n = n_min;
  if (hankel_block_count(model.np, n, n + 1) <= opt.max_blocks) {
    const HoKalmanResult hk = ho_kalman(build_hankel(model, x0, n, n + 1), opt.tol, model.time_domain);
    const PartialRealizationReport pr = partial_realization_check(
        hk.model, hk.x0, model_oracle(model, x0), 2 * n + 1, opt.roundtrip_tol);
    lines.push_back({"ho_kalman_moments", pr.pass && hk.rank == n_min, false,
                     "recovered nx = " + std::to_string(hk.rank) + ", max theta dev over |s| <= " +
                         std::to_string(2 * n + 1) + ": " + fmt(pr.max_deviation)});
    const Isomorphism iso = find_isomorphism(without_feedthrough(mini.model), mini.x0, hk.model,
                                             hk.x0, opt.roundtrip_tol, opt.tol);
    lines.push_back({"ho_kalman_isomorphic", iso.success, false,
                     "max residual " + fmt(iso.max_residual()) + ", cond(T) " + fmt(iso.condition)});
  } else {
    lines.push_back({"ho_kalman", true, true, "skipped: H(n,n+1) above the block ceiling"});
  }

  bool all = true;
  for (const auto& l : lines) all = all && l.pass;
  if (opt.json) {
    Json doc;
    doc["pass"] = all;
    Json arr = Json::array();
    for (const auto& l : lines) {
      arr.push_back({{"name", l.name}, {"pass", l.pass}, {"info", l.info}, {"detail", l.detail}});
    }
    doc["checks"] = std::move(arr);
    out << dump(doc);
  } else {
    for (const auto& l : lines) {
      out << (l.info ? "INFO" : (l.pass ? "PASS" : "FAIL")) << "  " << l.name << ": " << l.detail
          << "\n";
    }
    out << (all ? "all checks passed" : "some checks FAILED") << "\n";
  }
  return all ? kOk : kCheckFailed;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Realization theory toolkit for affine LPV state-space models", "lpvssa"};
  app.require_subcommand(1);
  Options opt;

  auto add_tol = [&](CLI::App* sub) {
    sub->add_option("--tol", opt.tol, "relative singular-value cutoff for ranks and pseudo-inverses")
        ->capture_default_str();
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", opt.output_path, "write the result here instead of stdout");
  };
  auto add_blocks = [&](CLI::App* sub) {
    sub->add_option("--max-blocks", opt.max_blocks, "ceiling on the number of Hankel blocks")
        ->capture_default_str();
  };

  auto* validate_cmd = app.add_subcommand("validate", "check dimensions, affine span of P, D == 0");
  validate_cmd->add_option("model", opt.model_path, "model file")->required();

  auto* markov_cmd = app.add_subcommand("markov", "sub-Markov parameter table of a model");
  markov_cmd->add_option("model", opt.model_path, "model file")->required();
  markov_cmd->add_option("--max-len", opt.max_len, "longest word")->capture_default_str();
  markov_cmd->add_flag("--text", opt.text, "plain-text table instead of JSON");
  add_output(markov_cmd);

  auto* hankel_cmd = app.add_subcommand("hankel", "finite Hankel matrix: singular values and rank");
  hankel_cmd->add_option("model", opt.model_path, "model file");
  hankel_cmd->add_option("--theta", opt.theta_path, "theta table instead of a model");
  hankel_cmd->add_option("--n", opt.n, "row word-length bound")->capture_default_str();
  hankel_cmd->add_option("--m", opt.m, "column word-length bound (default: n)");
  hankel_cmd->add_option("--dump", opt.dump_path,
                         "write H as int64 header (rows, cols, n, m) + row-major doubles, little endian");
  add_tol(hankel_cmd);
  add_blocks(hankel_cmd);

  auto* realize_cmd = app.add_subcommand("realize", "Ho-Kalman realization from H(n, n+1)");
  realize_cmd->add_option("model", opt.model_path, "model file used as theta source");
  realize_cmd->add_option("--theta", opt.theta_path, "theta table (needs max_len >= 2n+1)");
  realize_cmd->add_option("--n", opt.n, "row word-length bound")->capture_default_str();
  add_tol(realize_cmd);
  add_blocks(realize_cmd);
  add_output(realize_cmd);

  auto* minimize_cmd = app.add_subcommand("minimize", "reachability then observability reduction");
  minimize_cmd->add_option("model", opt.model_path, "model file")->required();
  add_tol(minimize_cmd);
  add_output(minimize_cmd);

  auto* decompose_cmd = app.add_subcommand("decompose", "Kalman decomposition");
  decompose_cmd->add_option("model", opt.model_path, "model file")->required();
  add_tol(decompose_cmd);
  add_output(decompose_cmd);

  auto* iso_cmd = app.add_subcommand("isomorph", "state isomorphism between two minimal models");
  iso_cmd->add_option("model1", opt.model_path, "first model file (with x0)")->required();
  iso_cmd->add_option("model2", opt.model2_path, "second model file (with x0)")->required();
  iso_cmd->add_option("--iso-tol", opt.iso_tol, "max-abs residual accepted")->capture_default_str();
  add_tol(iso_cmd);
  add_output(iso_cmd);

  auto* sim_cmd = app.add_subcommand("simulate", "simulate a model on a signals file");
  sim_cmd->add_option("model", opt.model_path, "model file")->required();
  sim_cmd->add_option("signals", opt.signals_path, "signals file")->required();
  sim_cmd->add_option("--step", opt.step, "CT integration step (default 1e-3 * horizon)");
  sim_cmd->add_option("--horizon", opt.horizon, "CT end time (default: end of the signals)");
  add_output(sim_cmd);

  auto* check_cmd = app.add_subcommand("check", "run the realization property suite on a model");
  check_cmd->add_option("model", opt.model_path, "model file")->required();
  check_cmd->add_option("--seed", opt.seed, "random trajectories from this seed (default: fixed sinusoids)");
  check_cmd->add_option("--trajectories", opt.trajectories, "random DT trajectories per reduction")
      ->capture_default_str();
  check_cmd->add_option("--length", opt.length, "length of each trajectory")->capture_default_str();
  check_cmd->add_option("--check-tol", opt.check_tol, "tolerance for reduction equivalence")
      ->capture_default_str();
  check_cmd->add_option("--iso-tol", opt.roundtrip_tol, "tolerance for the Ho-Kalman round trip")
      ->capture_default_str();
  check_cmd->add_flag("--json", opt.json, "machine-readable report");
  add_tol(check_cmd);
  add_blocks(check_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (!(opt.tol > 0.0 && opt.tol < 1.0)) throw InputError("--tol must lie in (0, 1)");
    if (*validate_cmd) return run_validate(opt, out);
    if (*markov_cmd) return run_markov(opt, out);
    if (*hankel_cmd) return run_hankel(opt, out);
    if (*realize_cmd) return run_realize(opt, out, err);
    if (*minimize_cmd) return run_minimize(opt, out, err);
    if (*decompose_cmd) return run_decompose(opt, out);
    if (*iso_cmd) return run_isomorph(opt, out);
    if (*sim_cmd) return run_simulate(opt, out);
    if (*check_cmd) return run_check(opt, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::out_of_range& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace lpv::cli
