// Copyright 2026 The ginidex Authors.
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

// ginidex command-line tool.  Subcommands: index, estimate, fit, simulate,
// gof, heatmap.  JSON reports go to stdout with 10 significant digits;
// simulate/heatmap emit plot-ready CSV with 6 significant digits.
//
// Exit codes: 0 success, 2 usage error, 3 parse/numeric failure,
// 4 insufficient sample, 5 degenerate data.

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ginidex/ginidex.h"
#include "json.hpp"

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;
constexpr std::uint64_t kDefaultSeed = 42;

int exit_code_for(gx_status status) {
  switch (status) {
    case GX_OK:
      return 0;
    case GX_ERR_INVALID_ARGUMENT:
      return 2;
    case GX_ERR_DOMAIN:
    case GX_ERR_NO_CONVERGENCE:
    case GX_ERR_TOLERANCE:
    case GX_ERR_PARSE:
      return 3;
    case GX_ERR_INSUFFICIENT_SAMPLE:
      return 4;
    case GX_ERR_DEGENERATE_DATA:
      return 5;
    case GX_ERR_INTERNAL:
      break;
  }
  return 1;
}

void check(gx_status status) {
  if (status == GX_OK) return;
  std::fprintf(stderr, "ginidex: %s: %s\n", gx_status_name(status),
               gx_last_error());
  std::exit(exit_code_for(status));
}

[[noreturn]] void usage_error(const std::string& message) {
  std::fprintf(stderr, "ginidex: %s\n", message.c_str());
  std::exit(2);
}

// Round-trips through %.10g so JSON carries exactly 10 significant digits.
double json_num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return std::strtod(buf, nullptr);
}

std::string csv_num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct SampleHandle {
  gx_sample* ptr = nullptr;
  ~SampleHandle() { gx_sample_free(ptr); }
};

// Shared --data/--fixture input selection.
struct DataArgs {
  std::string path;
  std::string column;
  std::string fixture;

  void attach(CLI::App* cmd, bool required = true) {
    auto* data = cmd->add_option("--data", path, "CSV file of observations");
    auto* fix = cmd->add_option("--fixture", fixture,
                                "builtin dataset (gdp2023)");
    cmd->add_option("--column", column,
                    "column name for multi-column CSV input");
    data->excludes(fix);
    if (required) {
      // exactly one of --data/--fixture; validated in load().
    }
  }

  bool provided() const { return !path.empty() || !fixture.empty(); }

  void load(SampleHandle& out) const {
    if (!path.empty()) {
      check(gx_sample_from_csv(path.c_str(),
                               column.empty() ? nullptr : column.c_str(),
                               &out.ptr));
    } else if (!fixture.empty()) {
      check(gx_sample_builtin(fixture.c_str(), &out.ptr));
    } else {
      usage_error("one of --data or --fixture is required");
    }
  }
};

std::uint64_t default_seed() {
  const char* env = std::getenv("GINIDEX_SEED");
  if (env == nullptr || *env == '\0') return kDefaultSeed;
  char* end = nullptr;
  const std::uint64_t v = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0') {
    usage_error("GINIDEX_SEED must be an unsigned integer");
  }
  return v;
}

const char* kind_name(gx_index_kind kind) {
  switch (kind) {
    case GX_KIND_LOWER: return "lower";
    case GX_KIND_UPPER: return "upper";
    case GX_KIND_COMBINED: return "combined";
  }
  return "?";
}

gx_index_kind parse_kind(const std::string& s) {
  if (s == "lower") return GX_KIND_LOWER;
  if (s == "upper") return GX_KIND_UPPER;
  if (s == "combined") return GX_KIND_COMBINED;
  usage_error("unknown --kind '" + s + "' (lower|upper|combined)");
}

const char* repr_name(gx_representation repr) {
  switch (repr) {
    case GX_REPR_SURVIVAL: return "survival";
    case GX_REPR_QUANTILE: return "quantile_covariance";
    case GX_REPR_LORENZ: return "lorenz";
    case GX_REPR_GAMMA_CLOSED: return "gamma_closed_path";
  }
  return "?";
}

void emit(const json& report) {
  std::printf("%s\n", report.dump(2).c_str());
}

// ---- index -----------------------------------------------------------

struct IndexArgs {
  std::string dist = "gamma";
  double alpha = 0.0;
  double lambda = 0.0;
  bool has_alpha = false;
  bool has_lambda = false;
  DataArgs data;
  int m = 0;
  std::string kind;
  std::string repr = "survival";
};

int run_index(const IndexArgs& args) {
  if (args.dist != "gamma") {
    usage_error("only --dist gamma is supported");
  }
  double alpha = args.alpha;
  double lambda = args.lambda;
  std::string source = "flags";
  if (args.data.provided()) {
    SampleHandle sample;
    args.data.load(sample);
    gx_fit_result fit;
    check(gx_fit_gamma(sample.ptr, &fit));
    alpha = fit.alpha;
    lambda = fit.lambda;
    source = "mle_fit";
  } else if (!args.has_alpha || !args.has_lambda) {
    usage_error("--alpha and --lambda (or --data/--fixture) are required");
  }

  const gx_index_kind kind = parse_kind(args.kind);
  json report{{"schema_version", kSchemaVersion},
              {"command", "index"},
              {"model",
               {{"dist", "gamma"},
                {"alpha", json_num(alpha)},
                {"lambda", json_num(lambda)},
                {"source", source}}},
              {"m", args.m},
              {"kind", kind_name(kind)}};

  const gx_representation all_reprs[4] = {GX_REPR_SURVIVAL, GX_REPR_QUANTILE,
                                          GX_REPR_LORENZ, GX_REPR_GAMMA_CLOSED};
  if (args.repr == "all") {
    json results = json::array();
    double lo = 0.0, hi = 0.0;
    bool first = true;
    for (gx_representation repr : all_reprs) {
      double value, err;
      check(gx_gamma_index(alpha, lambda, args.m, kind, repr, &value, &err));
      results.push_back({{"representation", repr_name(repr)},
                         {"value", json_num(value)},
                         {"est_error", json_num(err)}});
      lo = first ? value : std::min(lo, value);
      hi = first ? value : std::max(hi, value);
      first = false;
    }
    report["results"] = results;
    report["max_pairwise_gap"] = json_num(hi - lo);
    emit(report);
    return 0;
  }

  gx_representation repr;
  if (args.repr == "survival") {
    repr = GX_REPR_SURVIVAL;
  } else if (args.repr == "quantile") {
    repr = GX_REPR_QUANTILE;
  } else if (args.repr == "lorenz") {
    repr = GX_REPR_LORENZ;
  } else if (args.repr == "gamma") {
    repr = GX_REPR_GAMMA_CLOSED;
  } else {
    usage_error("unknown --repr '" + args.repr +
                "' (survival|quantile|lorenz|gamma|all)");
  }
  double value, err;
  check(gx_gamma_index(alpha, lambda, args.m, kind, repr, &value, &err));
  report["value"] = json_num(value);
  report["representation"] = repr_name(repr);
  report["est_error"] = json_num(err);
  emit(report);
  return 0;
}

// ---- estimate ----------------------------------------------------------

struct EstimateArgs {
  DataArgs data;
  int m = 0;
  int i = 1;
  std::string kind;
  std::string algorithm = "weighted";
};

int run_estimate(const EstimateArgs& args) {
  SampleHandle sample;
  args.data.load(sample);
  gx_algorithm alg;
  if (args.algorithm == "weighted") {
    alg = GX_ALG_WEIGHTED;
  } else if (args.algorithm == "brute") {
    alg = GX_ALG_BRUTE_FORCE;
  } else {
    usage_error("unknown --algorithm '" + args.algorithm + "' (brute|weighted)");
  }
  const gx_index_kind kind = parse_kind(args.kind);
  double value;
  check(gx_estimate(sample.ptr, args.m, args.i, kind, alg, &value));
  emit(json{{"schema_version", kSchemaVersion},
            {"command", "estimate"},
            {"value", json_num(value)},
            {"n", gx_sample_size(sample.ptr)},
            {"m", args.m},
            {"i", args.i},
            {"kind", kind_name(kind)},
            {"algorithm", args.algorithm == "brute" ? "brute_force" : "weighted"}});
  return 0;
}

// ---- fit ---------------------------------------------------------------

int run_fit(const DataArgs& data) {
  SampleHandle sample;
  data.load(sample);
  gx_fit_result fit;
  check(gx_fit_gamma(sample.ptr, &fit));
  emit(json{{"schema_version", kSchemaVersion},
            {"command", "fit"},
            {"n", gx_sample_size(sample.ptr)},
            {"alpha", json_num(fit.alpha)},
            {"lambda", json_num(fit.lambda)},
            {"log_likelihood", json_num(fit.log_likelihood)},
            {"iterations", fit.iterations},
            {"converged", fit.converged != 0}});
  return 0;
}

// ---- simulate ------------------------------------------------------------

struct SimulateArgs {
  double alpha = 0.0;
  double lambda = 0.0;
  int m = 0;
  int i = 0;
  std::vector<int> sizes;
  int reps = 0;
  std::uint64_t seed = 0;
  bool has_seed = false;
  int threads = 1;
};

int run_simulate(const SimulateArgs& args) {
  const std::uint64_t seed = args.has_seed ? args.seed : default_seed();
  gx_sim_plan plan{args.alpha, args.lambda,       args.m,
                   args.i,     args.sizes.data(), args.sizes.size(),
                   args.reps,  seed,              args.threads};
  std::vector<gx_sim_row> rows(2 * args.sizes.size());
  size_t count = 0;
  check(gx_simulate(&plan, rows.data(), rows.size(), &count));
  std::printf("n,kind,bias,mse,mc_se,truth\n");
  for (size_t r = 0; r < count; ++r) {
    std::printf("%d,%s,%s,%s,%s,%s\n", rows[r].n, kind_name(rows[r].kind),
                csv_num(rows[r].bias).c_str(), csv_num(rows[r].mse).c_str(),
                csv_num(rows[r].mc_se).c_str(), csv_num(rows[r].truth).c_str());
  }
  return 0;
}

// ---- gof -----------------------------------------------------------------

struct GofArgs {
  DataArgs data;
  std::string method = "plugin";
  int boot = 2000;
  std::uint64_t seed = 0;
  bool has_seed = false;
};

int run_gof(const GofArgs& args) {
  SampleHandle sample;
  args.data.load(sample);
  gx_gof_method method;
  const char* method_name;
  if (args.method == "plugin" || args.method == "plugin-exact") {
    method = GX_GOF_PLUGIN_EXACT;
    method_name = "plugin_exact";
  } else if (args.method == "plugin-asymptotic") {
    method = GX_GOF_PLUGIN_ASYMPTOTIC;
    method_name = "plugin_asymptotic";
  } else if (args.method == "bootstrap") {
    method = GX_GOF_PARAMETRIC_BOOTSTRAP;
    method_name = "parametric_bootstrap";
  } else {
    usage_error("unknown --method '" + args.method +
                "' (plugin|plugin-asymptotic|bootstrap)");
  }
  const std::uint64_t seed = args.has_seed ? args.seed : default_seed();
  gx_gof_report report;
  check(gx_gof(sample.ptr, method, args.boot, seed, &report));
  emit(json{{"schema_version", kSchemaVersion},
            {"command", "gof"},
            {"method", method_name},
            {"n", gx_sample_size(sample.ptr)},
            {"statistic_ks", json_num(report.statistic_ks)},
            {"p_value_ks", json_num(report.p_value_ks)},
            {"statistic_cvm", json_num(report.statistic_cvm)},
            {"p_value_cvm", json_num(report.p_value_cvm)},
            {"fitted",
             {{"alpha", json_num(report.fitted.alpha)},
              {"lambda", json_num(report.fitted.lambda)},
              {"log_likelihood", json_num(report.fitted.log_likelihood)},
              {"iterations", report.fitted.iterations},
              {"converged", report.fitted.converged != 0}}}});
  return 0;
}

// ---- heatmap ---------------------------------------------------------------

struct HeatmapArgs {
  DataArgs data;
  std::string kind;
  int m_max = 0;
};

int run_heatmap(const HeatmapArgs& args) {
  SampleHandle sample;
  args.data.load(sample);
  const gx_index_kind kind = parse_kind(args.kind);
  if (kind == GX_KIND_COMBINED) {
    usage_error("--kind must be lower or upper for heatmap");
  }
  const size_t cells_needed =
      static_cast<size_t>(args.m_max) * (args.m_max + 1) / 2;
  std::vector<gx_heatmap_cell> cells(cells_needed);
  size_t count = 0;
  check(gx_heatmap(sample.ptr, kind, args.m_max, cells.data(), cells.size(),
                   &count));
  std::printf("m,i,value\n");
  for (size_t c = 0; c < count; ++c) {
    std::printf("%d,%d,%s\n", cells[c].m, cells[c].i,
                csv_num(cells[c].value).c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"extended lower/upper Gini indices: population values, exact "
               "estimators, gamma fitting, GoF tests and simulation studies"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("ginidex ") + gx_version());

  IndexArgs index_args;
  CLI::App* index_cmd = app.add_subcommand(
      "index", "population extended Gini index of a gamma model");
  index_cmd->add_option("--dist", index_args.dist, "model family (gamma)");
  index_cmd->add_option("--alpha", index_args.alpha, "gamma shape")
      ->each([&](const std::string&) { index_args.has_alpha = true; });
  index_cmd->add_option("--lambda", index_args.lambda, "gamma rate")
      ->each([&](const std::string&) { index_args.has_lambda = true; });
  index_args.data.attach(index_cmd, /*required=*/false);
  index_cmd->add_option("--m", index_args.m, "subset size (>= 2)")->required();
  index_cmd->add_option("--kind", index_args.kind, "lower|upper|combined")
      ->required();
  index_cmd->add_option("--repr", index_args.repr,
                        "survival|quantile|lorenz|gamma|all");

  EstimateArgs estimate_args;
  CLI::App* estimate_cmd =
      app.add_subcommand("estimate", "finite-sample index estimate from data");
  estimate_args.data.attach(estimate_cmd);
  estimate_cmd->add_option("--m", estimate_args.m, "subset size (>= 2)")
      ->required();
  estimate_cmd->add_option("--i", estimate_args.i,
                           "position within the index tuple (1..m)");
  estimate_cmd->add_option("--kind", estimate_args.kind, "lower|upper|combined")
      ->required();
  estimate_cmd->add_option("--algorithm", estimate_args.algorithm,
                           "brute|weighted");

  DataArgs fit_args;
  CLI::App* fit_cmd =
      app.add_subcommand("fit", "maximum-likelihood gamma fit");
  fit_args.attach(fit_cmd);

  SimulateArgs sim_args;
  CLI::App* sim_cmd = app.add_subcommand(
      "simulate", "Monte Carlo bias/MSE study under a gamma population (CSV)");
  sim_cmd->add_option("--alpha", sim_args.alpha, "gamma shape")->required();
  sim_cmd->add_option("--lambda", sim_args.lambda, "gamma rate")->required();
  sim_cmd->add_option("--m", sim_args.m, "subset size")->required();
  sim_cmd->add_option("--i", sim_args.i, "estimator position")->required();
  sim_cmd->add_option("--sizes", sim_args.sizes, "sample sizes")
      ->required()
      ->delimiter(',');
  sim_cmd->add_option("--reps", sim_args.reps, "replications per size")
      ->required();
  sim_cmd->add_option("--seed", sim_args.seed, "master seed")
      ->each([&](const std::string&) { sim_args.has_seed = true; });
  sim_cmd->add_option("--threads", sim_args.threads, "worker threads");

  GofArgs gof_args;
  CLI::App* gof_cmd = app.add_subcommand(
      "gof", "KS and Cramer-von Mises tests against a fitted gamma");
  gof_args.data.attach(gof_cmd);
  gof_cmd->add_option("--method", gof_args.method,
                      "plugin|plugin-asymptotic|bootstrap");
  gof_cmd->add_option("--boot", gof_args.boot, "bootstrap replications");
  gof_cmd->add_option("--seed", gof_args.seed, "bootstrap seed")
      ->each([&](const std::string&) { gof_args.has_seed = true; });

  HeatmapArgs heatmap_args;
  CLI::App* heatmap_cmd = app.add_subcommand(
      "heatmap", "estimate grid over (m, i) as plot-ready CSV");
  heatmap_args.data.attach(heatmap_cmd);
  heatmap_cmd->add_option("--kind", heatmap_args.kind, "lower|upper")
      ->required();
  heatmap_cmd->add_option("--m-max", heatmap_args.m_max, "largest subset size")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "ginidex: %s\n", e.what());
    return 2;
  }

  if (index_cmd->parsed()) return run_index(index_args);
  if (estimate_cmd->parsed()) return run_estimate(estimate_args);
  if (fit_cmd->parsed()) return run_fit(fit_args);
  if (sim_cmd->parsed()) return run_simulate(sim_args);
  if (gof_cmd->parsed()) return run_gof(gof_args);
  if (heatmap_cmd->parsed()) return run_heatmap(heatmap_args);
  return 2;
}
