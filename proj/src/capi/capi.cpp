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

// extern "C" surface over the C++ core.  Exceptions are translated to
// status codes here and never cross the library boundary.

#include "ginidex/ginidex.h"

#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "core/dataset.hpp"
#include "core/errors.hpp"
#include "core/estimators.hpp"
#include "core/fixtures.hpp"
#include "core/gamma_model.hpp"
#include "core/inference.hpp"
#include "core/population.hpp"
#include "core/sample.hpp"
#include "core/specfun.hpp"

struct gx_sample {
  ginidex::Sample sample;
};

namespace {

thread_local std::string g_last_error;

gx_status fail(gx_status status, const char* what) {
  g_last_error = what ? what : "";
  return status;
}

// Translates the active exception into a status code.
gx_status translate_exception() {
  try {
    throw;
  } catch (const ginidex::InsufficientSampleError& e) {
    return fail(GX_ERR_INSUFFICIENT_SAMPLE, e.what());
  } catch (const ginidex::DegenerateDataError& e) {
    return fail(GX_ERR_DEGENERATE_DATA, e.what());
  } catch (const ginidex::ParseError& e) {
    return fail(GX_ERR_PARSE, e.what());
  } catch (const ginidex::NonConvergenceError& e) {
    return fail(GX_ERR_NO_CONVERGENCE, e.what());
  } catch (const ginidex::ToleranceError& e) {
    return fail(GX_ERR_TOLERANCE, e.what());
  } catch (const std::domain_error& e) {
    return fail(GX_ERR_DOMAIN, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(GX_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(GX_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(GX_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(GX_ERR_INTERNAL, "unknown error");
  }
}

template <typename Fn>
gx_status guarded(Fn&& fn) {
  try {
    fn();
    return GX_OK;
  } catch (...) {
    return translate_exception();
  }
}

gx_status require(bool ok, const char* what) {
  return ok ? GX_OK : fail(GX_ERR_INVALID_ARGUMENT, what);
}

ginidex::IndexKind to_kind(gx_index_kind kind) {
  switch (kind) {
    case GX_KIND_LOWER: return ginidex::IndexKind::kLower;
    case GX_KIND_UPPER: return ginidex::IndexKind::kUpper;
    case GX_KIND_COMBINED: return ginidex::IndexKind::kCombined;
  }
  throw std::invalid_argument("unknown index kind");
}

ginidex::Representation to_repr(gx_representation repr) {
  switch (repr) {
    case GX_REPR_SURVIVAL: return ginidex::Representation::kSurvival;
    case GX_REPR_QUANTILE: return ginidex::Representation::kQuantileCovariance;
    case GX_REPR_LORENZ: return ginidex::Representation::kLorenz;
    case GX_REPR_GAMMA_CLOSED: return ginidex::Representation::kGammaClosedForm;
  }
  throw std::invalid_argument("unknown representation");
}

ginidex::GofMethod to_gof_method(gx_gof_method method) {
  switch (method) {
    case GX_GOF_PLUGIN_ASYMPTOTIC: return ginidex::GofMethod::kPluginAsymptotic;
    case GX_GOF_PLUGIN_EXACT: return ginidex::GofMethod::kPluginExact;
    case GX_GOF_PARAMETRIC_BOOTSTRAP:
      return ginidex::GofMethod::kParametricBootstrap;
  }
  throw std::invalid_argument("unknown goodness-of-fit method");
}

gx_fit_result to_c(const ginidex::FitResult& fit) {
  return gx_fit_result{fit.params.alpha, fit.params.lambda, fit.log_likelihood,
                       fit.iterations, fit.converged ? 1 : 0};
}

}  // namespace

extern "C" {

const char* gx_version(void) { return "0.1.0"; }

const char* gx_status_name(gx_status status) {
  switch (status) {
    case GX_OK: return "ok";
    case GX_ERR_INVALID_ARGUMENT: return "invalid argument";
    case GX_ERR_DOMAIN: return "domain error";
    case GX_ERR_NO_CONVERGENCE: return "no convergence";
    case GX_ERR_TOLERANCE: return "tolerance not met";
    case GX_ERR_INSUFFICIENT_SAMPLE: return "insufficient sample";
    case GX_ERR_DEGENERATE_DATA: return "degenerate data";
    case GX_ERR_PARSE: return "parse error";
    case GX_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* gx_last_error(void) { return g_last_error.c_str(); }

gx_status gx_sample_create(const double* values, size_t n, gx_sample** out) {
  if (gx_status s = require(values != nullptr && out != nullptr && n > 0,
                            "gx_sample_create: null argument or empty data"))
    return s;
  return guarded([&] {
    *out = new gx_sample{ginidex::Sample(std::vector<double>(values, values + n))};
  });
}

gx_status gx_sample_from_csv(const char* path, const char* column,
                             gx_sample** out) {
  if (gx_status s = require(path != nullptr && out != nullptr,
                            "gx_sample_from_csv: null argument"))
    return s;
  return guarded([&] {
    std::optional<std::string> col;
    if (column != nullptr) col = column;
    *out = new gx_sample{ginidex::read_csv(path, col)};
  });
}

gx_status gx_sample_builtin(const char* name, gx_sample** out) {
  if (gx_status s = require(name != nullptr && out != nullptr,
                            "gx_sample_builtin: null argument"))
    return s;
  return guarded([&] { *out = new gx_sample{ginidex::builtin_sample(name)}; });
}

void gx_sample_free(gx_sample* sample) { delete sample; }

size_t gx_sample_size(const gx_sample* sample) {
  return sample ? sample->sample.size() : 0;
}

double gx_sample_sum(const gx_sample* sample) {
  return sample ? sample->sample.sum() : 0.0;
}

gx_status gx_sample_values(const gx_sample* sample, double* out,
                           size_t capacity) {
  if (gx_status s = require(sample != nullptr && out != nullptr,
                            "gx_sample_values: null argument"))
    return s;
  if (gx_status s = require(capacity >= sample->sample.size(),
                            "gx_sample_values: buffer too small"))
    return s;
  const std::vector<double>& v = sample->sample.values();
  std::memcpy(out, v.data(), v.size() * sizeof(double));
  return GX_OK;
}

gx_status gx_log_gamma(double x, double* out) {
  if (gx_status s = require(out != nullptr, "gx_log_gamma: null output")) return s;
  return guarded([&] { *out = ginidex::log_gamma(x); });
}

gx_status gx_reg_lower_inc_gamma(double alpha, double x, double* out) {
  if (gx_status s = require(out != nullptr, "gx_reg_lower_inc_gamma: null output"))
    return s;
  return guarded([&] { *out = ginidex::reg_lower_inc_gamma(alpha, x); });
}

gx_status gx_digamma(double x, double* out) {
  if (gx_status s = require(out != nullptr, "gx_digamma: null output")) return s;
  return guarded([&] { *out = ginidex::digamma(x); });
}

gx_status gx_kolmogorov_cdf(double d, int n, gx_ks_mode mode, double* out) {
  if (gx_status s = require(out != nullptr, "gx_kolmogorov_cdf: null output"))
    return s;
  return guarded([&] {
    *out = ginidex::kolmogorov_cdf(
        d, n,
        mode == GX_KS_EXACT ? ginidex::KsMode::kExact
                            : ginidex::KsMode::kAsymptotic);
  });
}

gx_status gx_cvm_asymptotic_cdf(double w2, double* out) {
  if (gx_status s = require(out != nullptr, "gx_cvm_asymptotic_cdf: null output"))
    return s;
  return guarded([&] { *out = ginidex::cvm_asymptotic_cdf(w2); });
}

gx_status gx_gamma_cdf(double alpha, double lambda, double x, double* out) {
  if (gx_status s = require(out != nullptr, "gx_gamma_cdf: null output")) return s;
  return guarded(
      [&] { *out = ginidex::gamma_cdf(ginidex::GammaParams{alpha, lambda}, x); });
}

gx_status gx_gamma_quantile(double alpha, double lambda, double p, double* out) {
  if (gx_status s = require(out != nullptr, "gx_gamma_quantile: null output"))
    return s;
  return guarded([&] {
    *out = ginidex::gamma_quantile(ginidex::GammaParams{alpha, lambda}, p);
  });
}

gx_status gx_fit_gamma(const gx_sample* sample, gx_fit_result* out) {
  if (gx_status s = require(sample != nullptr && out != nullptr,
                            "gx_fit_gamma: null argument"))
    return s;
  return guarded([&] {
    *out = to_c(ginidex::gamma_mle(sample->sample.values()));
  });
}

gx_status gx_gamma_index(double alpha, double lambda, int m, gx_index_kind kind,
                         gx_representation repr, double* value,
                         double* est_error) {
  if (gx_status s = require(value != nullptr, "gx_gamma_index: null output"))
    return s;
  return guarded([&] {
    const ginidex::IndexValue result = ginidex::gamma_index(
        ginidex::GammaParams{alpha, lambda}, m, to_kind(kind), to_repr(repr));
    *value = result.value;
    if (est_error != nullptr) *est_error = result.est_error;
  });
}

gx_status gx_estimate(const gx_sample* sample, int m, int i, gx_index_kind kind,
                      gx_algorithm algorithm, double* value) {
  if (gx_status s = require(sample != nullptr && value != nullptr,
                            "gx_estimate: null argument"))
    return s;
  return guarded([&] {
    const ginidex::IndexSpec spec{m, i, to_kind(kind)};
    const ginidex::EstimateResult result = ginidex::estimate(
        sample->sample, spec,
        algorithm == GX_ALG_BRUTE_FORCE
            ? ginidex::EstimatorAlgorithm::kBruteForce
            : ginidex::EstimatorAlgorithm::kWeighted);
    *value = result.value;
  });
}

gx_status gx_heatmap(const gx_sample* sample, gx_index_kind kind, int m_max,
                     gx_heatmap_cell* cells, size_t capacity, size_t* count) {
  if (gx_status s = require(sample != nullptr && cells != nullptr && count != nullptr,
                            "gx_heatmap: null argument"))
    return s;
  return guarded([&] {
    const std::vector<ginidex::HeatmapCell> grid =
        ginidex::heatmap_grid(sample->sample, to_kind(kind), m_max);
    if (capacity < grid.size()) {
      throw std::invalid_argument("gx_heatmap: buffer too small");
    }
    for (std::size_t c = 0; c < grid.size(); ++c) {
      cells[c] = gx_heatmap_cell{grid[c].m, grid[c].i, grid[c].value};
    }
    *count = grid.size();
  });
}

gx_status gx_simulate(const gx_sim_plan* plan, gx_sim_row* rows,
                      size_t capacity, size_t* count) {
  if (gx_status s = require(plan != nullptr && rows != nullptr && count != nullptr &&
                                plan->sample_sizes != nullptr,
                            "gx_simulate: null argument"))
    return s;
  if (gx_status s = require(capacity >= 2 * plan->n_sizes,
                            "gx_simulate: buffer too small"))
    return s;
  return guarded([&] {
    ginidex::SimulationPlan cpp_plan;
    cpp_plan.params = ginidex::GammaParams{plan->alpha, plan->lambda};
    cpp_plan.spec = ginidex::IndexSpec{plan->m, plan->i, ginidex::IndexKind::kLower};
    cpp_plan.sample_sizes.assign(plan->sample_sizes,
                                 plan->sample_sizes + plan->n_sizes);
    cpp_plan.replications = plan->replications;
    cpp_plan.master_seed = plan->seed;
    cpp_plan.threads = plan->threads;
    const ginidex::SimulationReport report = ginidex::run_simulation(cpp_plan);
    for (std::size_t c = 0; c < report.cells.size(); ++c) {
      const ginidex::SimulationCell& cell = report.cells[c];
      rows[c] = gx_sim_row{
          cell.n,
          cell.kind == ginidex::IndexKind::kLower ? GX_KIND_LOWER : GX_KIND_UPPER,
          cell.bias,
          cell.mse,
          cell.mc_se,
          cell.truth,
          cell.replicate_count};
    }
    *count = report.cells.size();
  });
}

gx_status gx_gof(const gx_sample* sample, gx_gof_method method,
                 int bootstrap_replications, uint64_t seed,
                 gx_gof_report* out) {
  if (gx_status s = require(sample != nullptr && out != nullptr,
                            "gx_gof: null argument"))
    return s;
  return guarded([&] {
    const ginidex::GofReport report = ginidex::gof_test(
        sample->sample, to_gof_method(method), bootstrap_replications, seed);
    out->statistic_ks = report.statistic_ks;
    out->p_value_ks = report.p_value_ks;
    out->statistic_cvm = report.statistic_cvm;
    out->p_value_cvm = report.p_value_cvm;
    out->method = method;
    out->fitted = to_c(report.fitted);
  });
}

}  // extern "C"
