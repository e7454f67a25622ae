/*
 * Copyright 2026 The PAID Development Team
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Benchmark harness for the PAID library: sweeps of evaluation counts and
// runtimes against the per-integral baseline, parallel speedup curves,
// integrand scans, and the built-in verification suites. Results go to CSV
// with a '#'-prefixed metadata header sufficient to re-run every row.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "paid/paid.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

struct CommonOpts {
  std::string mode = "both";
  std::string channel = "pp";
  double lx = 1.57;
  double ly = 1.31;
  double omega_start = 10.0;
  double omega_stop = 1e-3;
  int omega_points = 20;
  int basis_size = 9;
  int cc_n = 4;
  int max_task = 10;
  int workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  double epsilon = 1e-6;
  std::string epsilon_mode = "relative";
  std::string out = "paid_bench.csv";
};

void add_common_options(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--mode", opts.mode, "paid | local | both")
      ->check(CLI::IsMember({"paid", "local", "both"}));
  cmd->add_option("--channel", opts.channel, "pp | ph")
      ->check(CLI::IsMember({"pp", "ph"}));
  cmd->add_option("--lx", opts.lx, "transfer momentum x component");
  cmd->add_option("--ly", opts.ly, "transfer momentum y component");
  cmd->add_option("--omega-start", opts.omega_start, "largest scale of the sweep");
  cmd->add_option("--omega-stop", opts.omega_stop, "smallest scale of the sweep");
  cmd->add_option("--omega-points", opts.omega_points, "geometric grid size");
  cmd->add_option("--basis-size", opts.basis_size, "form-factor basis size (9 or 25)")
      ->check(CLI::IsMember({9, 25}));
  cmd->add_option("--cc-n", opts.cc_n, "coarse rule order N (even)");
  cmd->add_option("--max-task", opts.max_task, "tasks per bulk extraction");
  cmd->add_option("--workers", opts.workers, "worker thread count");
  cmd->add_option("--epsilon", opts.epsilon, "target error");
  cmd->add_option("--epsilon-mode", opts.epsilon_mode, "absolute | relative")
      ->check(CLI::IsMember({"absolute", "relative"}));
  cmd->add_option("--out", opts.out, "output CSV path");
  cmd->set_config("--config", "", "flat key=value configuration file");
}

paid::EpsilonMode parse_mode(const std::string& name) {
  return name == "absolute" ? paid::EpsilonMode::absolute
                            : paid::EpsilonMode::relative;
}

paid::frg::Channel parse_channel(const std::string& name) {
  return name == "pp" ? paid::frg::Channel::pp : paid::frg::Channel::ph;
}

paid::AdaptiveConfig adaptive_config(const CommonOpts& opts) {
  paid::AdaptiveConfig config;
  config.epsilon = opts.epsilon;
  config.epsilon_mode = parse_mode(opts.epsilon_mode);
  config.rule_order = opts.cc_n;
  config.max_task = opts.max_task;
  config.workers = opts.workers;
  return config;
}

std::vector<double> omega_grid(const CommonOpts& opts) {
  if (!(opts.omega_start > opts.omega_stop) || !(opts.omega_stop > 0.0)) {
    throw std::invalid_argument(
        "omega grid must be strictly descending and positive");
  }
  if (opts.omega_points < 1) {
    throw std::invalid_argument("omega grid needs at least one point");
  }
  std::vector<double> grid(opts.omega_points);
  if (opts.omega_points == 1) {
    grid[0] = opts.omega_start;
    return grid;
  }
  const double ratio = std::log(opts.omega_stop / opts.omega_start) /
                       (opts.omega_points - 1);
  for (int i = 0; i < opts.omega_points; ++i) {
    grid[i] = opts.omega_start * std::exp(ratio * i);
  }
  return grid;
}

paid::frg::BubbleSpec bubble_spec(const CommonOpts& opts, double omega) {
  paid::frg::BubbleSpec spec;
  spec.channel = parse_channel(opts.channel);
  spec.l = {opts.lx, opts.ly};
  spec.omega = omega;
  spec.params = paid::frg::ModelParams{1.0, 0.0, 0.0};
  spec.basis = paid::frg::FormFactorBasis::make(opts.basis_size);
  return spec;
}

class CsvWriter {
 public:
  explicit CsvWriter(const std::string& path) : out_(path) {
    if (!out_) {
      throw std::runtime_error("cannot open output file: " + path);
    }
  }

  void meta(const std::string& key, const std::string& value) {
    out_ << "# " << key << " = " << value << "\n";
  }
  void meta(const std::string& key, double value) { meta(key, fmt(value)); }
  void meta(const std::string& key, int value) { meta(key, std::to_string(value)); }

  void header(const std::vector<std::string>& columns) {
    join(columns);
  }
  void row(const std::vector<std::string>& cells) { join(cells); }

 private:
  void join(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out_ << (i ? "," : "") << cells[i];
    }
    out_ << "\n";
  }

  std::ofstream out_;
};

void write_common_meta(CsvWriter& csv, const std::string& subcommand,
                       const CommonOpts& opts) {
  csv.meta("tool", std::string("paid-bench ") + paid::kVersion);
  csv.meta("subcommand", subcommand);
  csv.meta("mode", opts.mode);
  csv.meta("channel", opts.channel);
  csv.meta("lx", opts.lx);
  csv.meta("ly", opts.ly);
  csv.meta("basis_size", opts.basis_size);
  csv.meta("basis_definition",
           "orthonormal products of {1, cos p, sin p" +
               std::string(opts.basis_size == 25 ? ", cos 2p, sin 2p" : "") +
               "} per axis on [-pi,pi]^2, constant first");
  csv.meta("cc_n", opts.cc_n);
  csv.meta("max_task", opts.max_task);
  csv.meta("workers", opts.workers);
  csv.meta("epsilon", fmt(opts.epsilon) + " (" + opts.epsilon_mode +
                          "; tool default when not set explicitly)");
  csv.meta("t", 1.0);
  csv.meta("t_prime", 0.0);
  csv.meta("mu", 0.0);
  csv.meta("local_criterion",
           "per-member epsilon vs own |value| in relative mode "
           "(floored at 64*eps_mach*quadrature L1 mass); epsilon/member_count "
           "in absolute mode; per-member budget = eval_budget/member_count");
}

double checksum(const paid::FamilyResult& result) {
  double total = 0.0;
  for (double v : result.values) total += std::abs(v);
  return total;
}

const std::vector<std::string> kSweepColumns = {
    "omega",     "mode",      "members",   "eval_count", "task_count",
    "wall_time_seconds", "global_err", "converged", "value_checksum"};

void append_sweep_row(CsvWriter& csv, double omega, const std::string& mode,
                      std::size_t members, const paid::FamilyResult& result,
                      double wall) {
  csv.row({fmt(omega), mode, std::to_string(members),
           std::to_string(result.eval_count), std::to_string(result.task_count),
           fmt(wall), fmt(result.global_err), result.converged ? "1" : "0",
           fmt(checksum(result))});
}

int run_sweep(const std::string& subcommand, const CommonOpts& opts) {
  CsvWriter csv(opts.out);
  write_common_meta(csv, subcommand, opts);
  const auto grid = omega_grid(opts);
  {
    std::string grid_str;
    for (double w : grid) grid_str += (grid_str.empty() ? "" : " ") + fmt(w);
    csv.meta("omega_grid", grid_str);
  }
  csv.header(kSweepColumns);

  const paid::AdaptiveConfig config = adaptive_config(opts);
  for (double omega : grid) {
    const auto family = paid::frg::build_family(bubble_spec(opts, omega));
    if (opts.mode == "paid" || opts.mode == "both") {
      const auto start = Clock::now();
      const auto result = paid::run_adaptive(family, config);
      append_sweep_row(csv, omega, "paid", family.size(), result,
                       seconds_since(start));
    }
    if (opts.mode == "local" || opts.mode == "both") {
      const auto start = Clock::now();
      const auto result = paid::run_family_local(family, config);
      append_sweep_row(csv, omega, "local", family.size(), result,
                       seconds_since(start));
    }
    std::cout << subcommand << ": omega " << fmt(omega) << " done\n";
  }
  std::cout << "wrote " << opts.out << "\n";
  return 0;
}

int run_speedup(const CommonOpts& opts, double omega, int reps) {
  CsvWriter csv(opts.out);
  write_common_meta(csv, "speedup", opts);
  csv.meta("omega", omega);
  csv.meta("repetitions", reps);
  csv.header({"workers", "median_wall_seconds", "speedup", "eval_count",
              "global_err", "converged", "value_checksum",
              "max_value_dev_vs_serial"});

  const auto family = paid::frg::build_family(bubble_spec(opts, omega));
  std::vector<int> worker_counts;
  for (int w = 1; w <= opts.workers; w *= 2) worker_counts.push_back(w);

  double serial_median = 0.0;
  std::vector<double> serial_values;
  for (int w : worker_counts) {
    paid::AdaptiveConfig config = adaptive_config(opts);
    config.workers = w;
    std::vector<double> walls(reps);
    paid::FamilyResult result;
    for (int r = 0; r < reps; ++r) {
      const auto start = Clock::now();
      result = paid::run_adaptive(family, config);
      walls[r] = seconds_since(start);
    }
    std::sort(walls.begin(), walls.end());
    const double median = walls[walls.size() / 2];
    if (w == 1) {
      serial_median = median;
      serial_values = result.values;
    }
    double max_dev = 0.0;
    for (std::size_t i = 0; i < result.values.size(); ++i) {
      max_dev = std::max(max_dev, std::abs(result.values[i] - serial_values[i]));
    }
    csv.row({std::to_string(w), fmt(median), fmt(serial_median / median),
             std::to_string(result.eval_count), fmt(result.global_err),
             result.converged ? "1" : "0", fmt(checksum(result)), fmt(max_dev)});
    std::cout << "speedup: workers " << w << " median " << fmt(median)
              << " s (x" << fmt(serial_median / median) << ")\n";
  }
  std::cout << "wrote " << opts.out << "\n";
  return 0;
}

int run_scan(const CommonOpts& opts, double omega, int m, int n, int grid_size) {
  if (grid_size < 64) {
    throw std::invalid_argument("scan: grid size must be at least 64");
  }
  const auto spec = bubble_spec(opts, omega);
  if (m < 0 || m >= spec.basis.size() || n < 0 || n >= spec.basis.size()) {
    throw std::invalid_argument("scan: form-factor index out of range");
  }

  CsvWriter csv(opts.out);
  write_common_meta(csv, "scan", opts);
  csv.meta("omega", omega);
  csv.meta("m", m);
  csv.meta("n", n);
  csv.meta("grid_size", grid_size);

  const double step = 2.0 * M_PI / grid_size;
  double max_abs = 0.0, sum_abs = 0.0;
  std::vector<std::string> rows;
  rows.reserve(static_cast<std::size_t>(grid_size) * grid_size);
  for (int i = 0; i < grid_size; ++i) {
    const double px = -M_PI + (i + 0.5) * step;
    for (int j = 0; j < grid_size; ++j) {
      const double py = -M_PI + (j + 0.5) * step;
      const double v = paid::frg::bubble_integrand(spec, m, n, px, py);
      if (!std::isfinite(v)) {
        throw paid::EvaluationError(px, py, m);
      }
      max_abs = std::max(max_abs, std::abs(v));
      sum_abs += std::abs(v);
      rows.push_back(fmt(px) + "," + fmt(py) + "," + fmt(v));
    }
  }
  const double sharpness = max_abs / (sum_abs / (static_cast<double>(grid_size) * grid_size));
  csv.meta("sharpness", sharpness);
  csv.header({"px", "py", "value"});
  for (const auto& r : rows) csv.row({r});

  std::cout << "sharpness (max|phi| / mean|phi|) = " << fmt(sharpness) << "\n";
  std::cout << "wrote " << opts.out << "\n";
  return 0;
}

int run_verify() {
  const auto suites = paid::verify::run_all_suites();
  bool ok = true;
  for (const auto& suite : suites) {
    ok = ok && suite.passed();
    std::cout << (suite.passed() ? "[PASS] " : "[FAIL] ") << suite.name << ": "
              << (suite.checks - suite.failures) << "/" << suite.checks
              << " checks, worst deviation " << fmt(suite.worst)
              << "x tolerance\n";
    if (!suite.passed()) {
      std::cout << "       first failure: " << suite.detail << "\n";
    }
  }
  std::cout << (ok ? "verification passed" : "verification FAILED") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"PAID benchmark harness: family-global adaptive integration "
               "versus the per-integral baseline"};
  app.require_subcommand(1);

  CommonOpts evals_opts;
  auto* evals = app.add_subcommand(
      "evals-sweep", "evaluation counts over a descending scale sweep");
  add_common_options(evals, evals_opts);

  CommonOpts runtime_opts;
  runtime_opts.basis_size = 25;
  runtime_opts.max_task = 7;
  auto* runtime = app.add_subcommand(
      "runtime-sweep", "wall times over a descending scale sweep");
  add_common_options(runtime, runtime_opts);

  CommonOpts speedup_opts;
  speedup_opts.basis_size = 25;
  speedup_opts.cc_n = 6;
  speedup_opts.max_task = 18;
  speedup_opts.mode = "paid";
  double speedup_omega = 1e-3;
  int speedup_reps = 3;
  auto* speedup = app.add_subcommand(
      "speedup", "parallel speedup at a fixed scale");
  add_common_options(speedup, speedup_opts);
  speedup->add_option("--omega", speedup_omega, "fixed scale");
  speedup->add_option("--reps", speedup_reps, "repetitions per point")
      ->check(CLI::PositiveNumber);

  CommonOpts scan_opts;
  scan_opts.lx = 3.14;
  scan_opts.ly = 0.78;
  scan_opts.out = "paid_scan.csv";
  double scan_omega = 1.0;
  int scan_m = 0, scan_n = 0, scan_grid = 512;
  auto* scan = app.add_subcommand(
      "scan", "tabulate one member's integrand on a uniform grid");
  add_common_options(scan, scan_opts);
  scan->add_option("--omega", scan_omega, "scale");
  scan->add_option("--m", scan_m, "first form-factor index");
  scan->add_option("--n", scan_n, "second form-factor index");
  scan->add_option("--grid-size", scan_grid, "points per axis (>= 64)");

  auto* verify = app.add_subcommand("verify", "run all verification suites");
  (void)verify;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (evals->parsed()) return run_sweep("evals-sweep", evals_opts);
    if (runtime->parsed()) return run_sweep("runtime-sweep", runtime_opts);
    if (speedup->parsed())
      return run_speedup(speedup_opts, speedup_omega, speedup_reps);
    if (scan->parsed())
      return run_scan(scan_opts, scan_omega, scan_m, scan_n, scan_grid);
    if (verify->parsed()) return run_verify();
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return 2;
  } catch (const paid::EvaluationError& e) {
    std::cerr << "evaluation failure: " << e.what() << "\n";
    return 3;
  } catch (const paid::SingularityError& e) {
    std::cerr << "evaluation failure: " << e.what() << "\n";
    return 3;
  } catch (const paid::OracleError& e) {
    std::cerr << "evaluation failure: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
