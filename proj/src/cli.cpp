// Copyright 2026 The rjsa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rjsa/cli.hpp"

#include <charconv>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rjsa/annealing.hpp"
#include "rjsa/data_io.hpp"
#include "rjsa/errors.hpp"
#include "rjsa/kernels.hpp"
#include "rjsa/least_squares.hpp"
#include "rjsa/trace_io.hpp"

namespace rjsa::cli {
namespace {

using Json = nlohmann::ordered_json;

struct GenerateOptions {
  std::size_t n = 400;
  double sigma = 0.05;
  std::uint64_t seed = 1;
  std::string out;
};

struct FitOptions {
  std::string data;
  std::optional<std::size_t> n_train;
  std::optional<std::uint64_t> shuffle_seed;
  std::string criterion = "mdl";
  std::string basis = "cubic";
  double gaussian_width = 1.0;
  std::string metric = "euclidean";
  std::string metric_weight;
  std::size_t iterations = 500;
  std::uint64_t seed = 1;
  std::string schedule = "geometric";
  double t0 = 1.0;
  std::optional<double> gamma;
  double t_floor = 0.01;
  std::optional<double> zeta;
  std::size_t kmax = 50;
  double birth_margin = 0.1;
  std::string ratio_mode = "derived";
  std::string move_probs = "0.2,0.2,0.2,0.2,0.2";
  double rw_step_frac = 0.1;
  double global_prop_prob = 0.1;
  std::size_t initial_k = 1;
  std::size_t chains = 1;
  bool no_test_mse = false;
  std::string kernels;
  std::string out;
  std::string trace;
  std::string trace_csv;
};

struct EvaluateOptions {
  std::string model;
  std::string data;
  std::optional<std::size_t> n_train;
  std::optional<std::uint64_t> shuffle_seed;
  bool whole = false;
};

std::vector<double> parse_reals(const std::string& text, const std::string& field) {
  std::vector<double> out;
  std::string token;
  std::string normalized = text;
  for (char& ch : normalized) {
    if (ch == ',' || ch == ';' || ch == '[' || ch == ']' || ch == '"') ch = ' ';
  }
  std::istringstream ss(normalized);
  while (ss >> token) {
    double v = 0.0;
    const auto res = std::from_chars(token.data(), token.data() + token.size(), v);
    if (res.ec != std::errc() || res.ptr != token.data() + token.size()) {
      throw ConfigError(field + ": '" + token + "' is not a number");
    }
    out.push_back(v);
  }
  return out;
}

std::string real_text(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path + "'");
  out << text;
  if (!out.flush()) throw DataError("write failed for '" + path + "'");
}

std::string chain_path(const std::string& path, std::size_t chain, std::size_t chains) {
  if (chains == 1) return path;
  const std::filesystem::path p(path);
  auto name = p.stem().string() + ".chain" + std::to_string(chain) + p.extension().string();
  return (p.parent_path() / name).string();
}

Json matrix_rows(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return rows;
}

Matrix matrix_from_rows(const Json& rows, std::size_t cols, const std::string& field) {
  if (!rows.is_array()) throw DataError("model file: '" + field + "' must be an array");
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (!row.is_array() || row.size() != cols) throw DataError("model file: '" + field + "' has a ragged row");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c].get<double>();
  }
  return m;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Reads a flat key=value file into "--key value" pairs. Blank lines, lines
// starting with '#' or ';' and [section] headers are skipped. A boolean
// flag is written as key=true or key=false.
std::vector<std::string> config_file_args(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::vector<std::string> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string text = trim(line);
    if (text.empty() || text[0] == '#' || text[0] == ';' || text[0] == '[') continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path + ":" + std::to_string(line_no) + ": expected key=value");
    }
    std::string key = trim(text.substr(0, eq));
    std::string value = trim(text.substr(eq + 1));
    if (value.size() >= 2 && (value.front() == '"' || value.front() == '\'') && value.back() == value.front()) {
      value = value.substr(1, value.size() - 2);
    }
    if (key.empty()) throw ConfigError(path + ":" + std::to_string(line_no) + ": empty key");
    if (key == "config") throw ConfigError(path + ":" + std::to_string(line_no) + ": nested config files are not supported");
    if (key == "no-test-mse") {
      if (value == "true" || value == "1") out.push_back("--no-test-mse");
      else if (value != "false" && value != "0") throw ConfigError(path + ":" + std::to_string(line_no) + ": no-test-mse must be true or false");
      continue;
    }
    out.push_back("--" + key);
    out.push_back(value);
  }
  return out;
}

// Splices the contents of `fit --config FILE` in front of the remaining fit
// arguments, so that flags given on the command line win.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  if (args.empty() || args[0] != "fit") return args;
  std::optional<std::string> path;
  std::vector<std::string> rest;
  for (std::size_t i = 1; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw ConfigError("--config requires a path");
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (!path) return args;
  std::vector<std::string> out{"fit"};
  for (auto& a : config_file_args(*path)) out.push_back(std::move(a));
  for (auto& a : rest) out.push_back(std::move(a));
  return out;
}

// ---------------------------------------------------------------- generate

int cmd_generate(const GenerateOptions& opt, std::ostream& out) {
  Rng rng(opt.seed);
  const Dataset data = generate_robot_arm(opt.n, opt.sigma, rng);
  write_csv(std::filesystem::path(opt.out), data);
  out << "generated n=" << opt.n << " sigma=" << real_text(opt.sigma) << " seed=" << opt.seed << " out=" << opt.out
      << '\n';
  return kExitOk;
}

// --------------------------------------------------------------------- fit

struct ResolvedFit {
  AnnealingConfig config;
  SplitSpec split;
};

ResolvedFit resolve_fit(const FitOptions& opt, const Dataset& data) {
  ResolvedFit r;
  AnnealingConfig& cfg = r.config;
  try {
    cfg.criterion = parse_criterion(opt.criterion);
    cfg.basis = BasisKind::parse(opt.basis, opt.gaussian_width);
    if (opt.metric == "mahalanobis") {
      const auto w = parse_reals(opt.metric_weight, "metric-weight");
      const std::size_t d = data.input_dim();
      if (w.size() != d * d) {
        throw ConfigError("metric-weight: expected " + std::to_string(d * d) + " values for d=" + std::to_string(d));
      }
      Matrix weight(d, d);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) weight(i, j) = w[i * d + j];
      cfg.metric = DistanceMetric::mahalanobis(weight);
    } else if (opt.metric != "euclidean") {
      throw ConfigError("metric: expected euclidean|mahalanobis");
    }
    cfg.iterations = opt.iterations;
    CoolingSchedule schedule = CoolingSchedule::for_iterations(opt.iterations, opt.t_floor);
    schedule.kind = parse_schedule(opt.schedule);
    schedule.t0 = opt.t0;
    if (opt.gamma) schedule.gamma = *opt.gamma;
    cfg.schedule = schedule;
    cfg.moves.kmax = opt.kmax;
    cfg.moves.zeta = opt.zeta;
    cfg.moves.ratio_mode = parse_ratio_mode(opt.ratio_mode);
    const auto probs = parse_reals(opt.move_probs, "move-probs");
    if (probs.size() != 5) throw ConfigError("move-probs: expected 5 values (birth,death,split,merge,update)");
    cfg.moves.probs = MoveProbabilities{probs[0], probs[1], probs[2], probs[3], probs[4]};
    cfg.moves.rw_step_frac = opt.rw_step_frac;
    cfg.moves.global_prop_prob = opt.global_prop_prob;
    cfg.birth_margin = opt.birth_margin;
    cfg.initial_k = opt.initial_k;
    cfg.track_test_mse = !opt.no_test_mse;
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (opt.chains == 0) throw ConfigError("chains: must be >= 1");
  r.split.n_train = opt.n_train.value_or(data.size() / 2);
  r.split.shuffle_seed = opt.shuffle_seed;
  if (r.split.n_train == 0 || r.split.n_train >= data.size()) {
    throw ConfigError("n-train: must satisfy 0 < n-train < N (N=" + std::to_string(data.size()) + ")");
  }
  return r;
}

Json effective_config(const FitOptions& opt, const ResolvedFit& r) {
  const auto schedule = r.config.effective_schedule();
  const auto& mp = r.config.moves.probs;
  Json c;
  c["data"] = opt.data;
  c["n_train"] = r.split.n_train;
  c["shuffle_seed"] = r.split.shuffle_seed ? Json(*r.split.shuffle_seed) : Json(nullptr);
  c["criterion"] = criterion_name(r.config.criterion);
  c["basis"] = r.config.basis.name();
  c["gaussian_width"] = r.config.basis.width();
  c["metric"] = r.config.metric.is_euclidean() ? "euclidean" : "mahalanobis";
  c["metric_weight"] = r.config.metric.is_euclidean() ? Json(nullptr) : matrix_rows(r.config.metric.weight());
  c["iterations"] = r.config.iterations;
  c["seed"] = opt.seed;
  c["schedule"] = schedule_name(schedule.kind);
  c["t0"] = schedule.t0;
  c["gamma"] = schedule.gamma;
  c["t_floor"] = schedule.floor;
  c["zeta"] = r.config.moves.zeta ? Json(*r.config.moves.zeta) : Json(nullptr);
  c["kmax"] = r.config.moves.kmax;
  c["birth_margin"] = r.config.birth_margin;
  c["ratio_mode"] = ratio_mode_name(r.config.moves.ratio_mode);
  c["move_probs"] = {mp.birth, mp.death, mp.split, mp.merge, mp.update};
  c["rw_step_frac"] = r.config.moves.rw_step_frac;
  c["global_prop_prob"] = r.config.moves.global_prop_prob;
  c["initial_k"] = r.config.initial_k;
  c["chains"] = opt.chains;
  c["track_test_mse"] = r.config.track_test_mse;
  c["kernels"] = kernels::isa_name(kernels::active().isa);
  return c;
}

Json result_json(const MultiStartResult& runs, const Json& config, std::size_t n_train, std::size_t n_test) {
  const FitResult& best = runs.best_fit();
  Json j;
  j["k"] = best.map_state.k();
  j["log_post"] = best.map_state.log_post;
  j["map_iteration"] = best.map_iteration;
  j["train_mse"] = best.train_mse;
  j["test_mse"] = best.test_mse ? Json(*best.test_mse) : Json(nullptr);
  j["seed"] = best.seed;
  j["chain"] = runs.best;
  j["d"] = best.map_state.centres.dim();
  j["c"] = best.coefficients.cols();
  j["n_train"] = n_train;
  j["n_test"] = n_test;
  j["centres"] = matrix_rows(best.map_state.centres.to_matrix());
  j["coefficients"] = matrix_rows(best.coefficients);
  j["residuals"] = best.map_state.residuals;
  j["region"] = {{"lower", best.region.lower()}, {"upper", best.region.upper()}};
  j["zeta"] = best.zeta;
  Json chains = Json::array();
  for (std::size_t s = 0; s < runs.chains.size(); ++s) {
    const auto& f = runs.chains[s];
    chains.push_back({{"chain", s},
                      {"seed", f.seed},
                      {"k", f.map_state.k()},
                      {"log_post", f.map_state.log_post},
                      {"test_mse", f.test_mse ? Json(*f.test_mse) : Json(nullptr)}});
  }
  j["chains"] = chains;
  j["config"] = config;
  return j;
}

int cmd_fit(const FitOptions& opt, std::ostream& out) {
  if (!opt.kernels.empty()) {
    try {
      kernels::select(kernels::parse_isa(opt.kernels));
    } catch (const std::exception& e) {
      throw ConfigError(std::string("kernels: ") + e.what());
    }
  }
  const Dataset data = load_csv(opt.data);
  const ResolvedFit resolved = resolve_fit(opt, data);
  const auto [train, test] = split(data, resolved.split);

  const auto start = std::chrono::steady_clock::now();
  const MultiStartResult runs = run_multistart(train, &test, resolved.config, opt.seed, opt.chains);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  for (std::size_t s = 0; s < runs.chains.size(); ++s) {
    const auto& trace = runs.chains[s].trace;
    if (!opt.trace.empty()) write_trace_file(chain_path(opt.trace, s, opt.chains), trace);
    if (!opt.trace_csv.empty()) {
      std::ostringstream csv;
      write_trace_csv(csv, trace);
      write_text(chain_path(opt.trace_csv, s, opt.chains), csv.str());
    }
  }
  const Json result = result_json(runs, effective_config(opt, resolved), train.size(), test.size());
  if (!opt.out.empty()) write_text(opt.out, result.dump(2) + "\n");

  const FitResult& best = runs.best_fit();
  out << "k=" << best.map_state.k() << " log_post=" << real_text(best.map_state.log_post)
      << " train_mse=" << real_text(best.train_mse)
      << " test_mse=" << (best.test_mse ? real_text(*best.test_mse) : std::string("n/a"))
      << " map_iteration=" << best.map_iteration << " seed=" << best.seed << " chain=" << runs.best
      << " seconds=" << real_text(seconds) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- evaluate

int cmd_evaluate(const EvaluateOptions& opt, std::ostream& out) {
  Json model;
  {
    std::ifstream in(opt.model);
    if (!in) throw DataError("cannot open model '" + opt.model + "'");
    try {
      in >> model;
    } catch (const Json::exception& e) {
      throw DataError("model '" + opt.model + "' is not valid JSON: " + e.what());
    }
  }
  std::size_t d = 0;
  std::size_t c = 0;
  Matrix centres_m;
  Matrix coefficients;
  BasisKind basis = BasisKind::cubic();
  DistanceMetric metric;
  SplitSpec spec;
  try {
    d = model.at("d").get<std::size_t>();
    c = model.at("c").get<std::size_t>();
    centres_m = matrix_from_rows(model.at("centres"), d, "centres");
    coefficients = matrix_from_rows(model.at("coefficients"), c, "coefficients");
    const auto& cfg = model.at("config");
    basis = BasisKind::parse(cfg.at("basis").get<std::string>(), cfg.at("gaussian_width").get<double>());
    if (cfg.at("metric").get<std::string>() == "mahalanobis") {
      metric = DistanceMetric::mahalanobis(matrix_from_rows(cfg.at("metric_weight"), d, "metric_weight"));
    }
    spec.n_train = cfg.at("n_train").get<std::size_t>();
    if (!cfg.at("shuffle_seed").is_null()) spec.shuffle_seed = cfg.at("shuffle_seed").get<std::uint64_t>();
  } catch (const Json::exception& e) {
    throw DataError("model '" + opt.model + "': " + e.what());
  } catch (const std::invalid_argument& e) {
    throw DataError("model '" + opt.model + "': " + e.what());
  }
  const CentreSet centres = CentreSet::from_matrix(centres_m);
  if (coefficients.rows() != design_cols(d, centres.size())) {
    throw DataError("model '" + opt.model + "': coefficient rows do not match 1 + d + k");
  }

  const Dataset data = load_csv(opt.data);
  if (data.input_dim() != d || data.output_dim() != c) {
    throw DataError("dimension mismatch: model has d=" + std::to_string(d) + ", c=" + std::to_string(c) + " but '" +
                    opt.data + "' has d=" + std::to_string(data.input_dim()) +
                    ", c=" + std::to_string(data.output_dim()));
  }
  const auto mse_on = [&](const Dataset& part) {
    return mean_squared_error(predict(centres, coefficients, basis, part.x(), metric), part.y());
  };
  if (opt.whole) {
    out << "mse=" << real_text(mse_on(data)) << '\n';
    return kExitOk;
  }
  if (opt.n_train) spec.n_train = *opt.n_train;
  if (opt.shuffle_seed) spec.shuffle_seed = *opt.shuffle_seed;
  if (spec.n_train == 0 || spec.n_train >= data.size()) {
    throw ConfigError("n-train: must satisfy 0 < n-train < N (N=" + std::to_string(data.size()) +
                      "); use --whole to score the entire file");
  }
  const auto [train, test] = split(data, spec);
  out << "train_mse=" << real_text(mse_on(train)) << " test_mse=" << real_text(mse_on(test)) << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reversible-jump simulated annealing for RBF networks"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Write a robot-arm dataset as CSV");
  generate->add_option("--n", gen.n, "Number of samples")->capture_default_str();
  generate->add_option("--sigma", gen.sigma, "Output noise standard deviation")->capture_default_str();
  generate->add_option("--seed", gen.seed, "RNG seed")->capture_default_str();
  generate->add_option("--out", gen.out, "Output CSV path")->required();

  FitOptions fit;
  auto* fitcmd = app.add_subcommand("fit", "Fit an RBF network by reversible-jump simulated annealing");
  std::string config_path;
  fitcmd->add_option("--config", config_path, "Flat key=value configuration file (flags take precedence)");
  fitcmd->add_option("--data", fit.data, "Dataset CSV (x1..xd,y1..yc)")->required();
  fitcmd->add_option("--n-train", fit.n_train, "Training rows (default: N/2)");
  fitcmd->add_option("--shuffle-seed", fit.shuffle_seed, "Shuffle rows with this seed before splitting");
  fitcmd->add_option("--criterion", fit.criterion, "aic|bic|mdl")
      ->check(CLI::IsMember({"aic", "bic", "mdl"}))
      ->capture_default_str();
  fitcmd->add_option("--basis", fit.basis, "linear|cubic|thin-plate|gaussian")
      ->check(CLI::IsMember({"linear", "cubic", "thin-plate", "gaussian"}))
      ->capture_default_str();
  fitcmd->add_option("--gaussian-width", fit.gaussian_width, "Width of the Gaussian basis")->capture_default_str();
  fitcmd->add_option("--metric", fit.metric, "euclidean|mahalanobis")
      ->check(CLI::IsMember({"euclidean", "mahalanobis"}))
      ->capture_default_str();
  fitcmd->add_option("--metric-weight", fit.metric_weight, "Mahalanobis weight, d*d values row-major");
  fitcmd->add_option("--iterations", fit.iterations, "Annealing iterations")->capture_default_str();
  fitcmd->add_option("--seed", fit.seed, "RNG seed; chain s uses seed + s")->capture_default_str();
  fitcmd->add_option("--schedule", fit.schedule, "geometric|logarithmic")
      ->check(CLI::IsMember({"geometric", "logarithmic"}))
      ->capture_default_str();
  fitcmd->add_option("--t0", fit.t0, "Initial temperature")->capture_default_str();
  fitcmd->add_option("--gamma", fit.gamma, "Geometric cooling factor (default: floor at 80% of iterations)");
  fitcmd->add_option("--t-floor", fit.t_floor, "Temperature floor")->capture_default_str();
  fitcmd->add_option("--zeta", fit.zeta, "Split/merge scale (default: 5% of widest region side)");
  fitcmd->add_option("--kmax", fit.kmax, "Maximum number of basis functions")->capture_default_str();
  fitcmd->add_option("--birth-margin", fit.birth_margin, "Region margin per side, fraction of data range")
      ->capture_default_str();
  fitcmd->add_option("--ratio-mode", fit.ratio_mode, "derived|as-printed")
      ->check(CLI::IsMember({"derived", "as-printed"}))
      ->capture_default_str();
  fitcmd->add_option("--move-probs", fit.move_probs, "birth,death,split,merge,update")->capture_default_str();
  fitcmd->add_option("--rw-step-frac", fit.rw_step_frac, "Update random-walk sd / region side")
      ->capture_default_str();
  fitcmd->add_option("--global-prop-prob", fit.global_prop_prob, "Update uniform-redraw probability")
      ->capture_default_str();
  fitcmd->add_option("--initial-k", fit.initial_k, "Initial number of centres")->capture_default_str();
  fitcmd->add_option("--chains", fit.chains, "Independent chains run concurrently")->capture_default_str();
  fitcmd->add_flag("--no-test-mse", fit.no_test_mse, "Skip the per-iteration test error");
  fitcmd->add_option("--kernels", fit.kernels, "Force kernel ISA: scalar|avx2");
  fitcmd->add_option("--out", fit.out, "Result JSON path");
  fitcmd->add_option("--trace", fit.trace, "Trace path (.csv for CSV, otherwise JSON-lines)");
  fitcmd->add_option("--trace-csv", fit.trace_csv, "Additional CSV trace path");

  EvaluateOptions eval;
  auto* evaluate = app.add_subcommand("evaluate", "Score a saved model on a dataset");
  evaluate->add_option("--model", eval.model, "Result JSON written by fit")->required();
  evaluate->add_option("--data", eval.data, "Dataset CSV")->required();
  evaluate->add_option("--n-train", eval.n_train, "Override the stored split");
  evaluate->add_option("--shuffle-seed", eval.shuffle_seed, "Override the stored shuffle seed");
  evaluate->add_flag("--whole", eval.whole, "Report a single MSE over the whole file");

  std::vector<std::string> expanded;
  try {
    expanded = expand_config(args);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
  std::vector<const char*> argv{"rjsa"};
  for (const auto& a : expanded) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (generate->parsed()) return cmd_generate(gen, out);
    if (fitcmd->parsed()) return cmd_fit(fit, out);
    return cmd_evaluate(eval, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DataError& e) {
    err << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const DegenerateDesignError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace rjsa::cli
