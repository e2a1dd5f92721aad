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

#include "core/inference.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "core/errors.hpp"
#include "core/population.hpp"
#include "core/rng.hpp"
#include "core/specfun.hpp"

namespace ginidex {

namespace {

// Neumaier compensated summation; keeps replicate aggregation stable and
// independent of the accumulation grouping chosen by the optimizer.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

struct ReplicatePair {
  double lower;
  double upper;
};

// All replications for one sample size, in replication order.  Threads
// write disjoint slots; the caller aggregates serially.
std::vector<ReplicatePair> run_replications(const SimulationPlan& plan, int n) {
  const int reps = plan.replications;
  std::vector<ReplicatePair> out(reps);
  const auto worker = [&](int begin, int end) {
    for (int r = begin; r < end; ++r) {
      RandomStream stream = RandomStream::derive(
          plan.master_seed, static_cast<std::uint64_t>(n),
          static_cast<std::uint64_t>(r));
      const Sample sample(gamma_sample(plan.params, stream, n));
      out[r].lower =
          estimate_weighted(sample, IndexSpec{plan.spec.m, plan.spec.i,
                                              IndexKind::kLower})
              .value;
      out[r].upper =
          estimate_weighted(sample, IndexSpec{plan.spec.m, plan.spec.i,
                                              IndexKind::kUpper})
              .value;
    }
  };

  const int threads = std::max(1, plan.threads);
  if (threads == 1 || reps < 2 * threads) {
    worker(0, reps);
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  const int chunk = (reps + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const int begin = t * chunk;
    const int end = std::min(reps, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back(worker, begin, end);
  }
  for (std::thread& th : pool) th.join();
  return out;
}

SimulationCell aggregate(const std::vector<double>& estimates, int n,
                         IndexKind kind, double truth) {
  const int reps = static_cast<int>(estimates.size());
  CompensatedSum sum, sq_dev;
  for (double e : estimates) {
    sum.add(e);
    sq_dev.add((e - truth) * (e - truth));
  }
  const double mean = sum.value() / reps;
  CompensatedSum var_sum;
  for (double e : estimates) var_sum.add((e - mean) * (e - mean));
  const double sd = std::sqrt(var_sum.value() / (reps - 1));
  return SimulationCell{n,
                        kind,
                        mean - truth,
                        sq_dev.value() / reps,
                        sd / std::sqrt(static_cast<double>(reps)),
                        truth,
                        reps};
}

}  // namespace

void SimulationPlan::validate() const {
  params.validate();
  spec.validate();
  if (replications < 2) {
    throw std::invalid_argument("SimulationPlan: at least 2 replications required");
  }
  if (sample_sizes.empty()) {
    throw std::invalid_argument("SimulationPlan: no sample sizes given");
  }
  for (int n : sample_sizes) {
    if (n < spec.m) {
      throw InsufficientSampleError(
          "SimulationPlan: every sample size must be at least m");
    }
  }
}

SimulationReport run_simulation(const SimulationPlan& plan) {
  plan.validate();
  const double truth_lower = gamma_lower_index(plan.params, plan.spec.m).value;
  const double truth_upper = gamma_upper_index(plan.params, plan.spec.m).value;

  SimulationReport report;
  report.cells.reserve(plan.sample_sizes.size() * 2);
  for (int n : plan.sample_sizes) {
    const std::vector<ReplicatePair> pairs = run_replications(plan, n);
    std::vector<double> lows(pairs.size()), ups(pairs.size());
    for (std::size_t r = 0; r < pairs.size(); ++r) {
      lows[r] = pairs[r].lower;
      ups[r] = pairs[r].upper;
    }
    report.cells.push_back(aggregate(lows, n, IndexKind::kLower, truth_lower));
    report.cells.push_back(aggregate(ups, n, IndexKind::kUpper, truth_upper));
  }
  return report;
}

std::vector<double> replicate_estimates(const SimulationPlan& plan, int n,
                                        IndexKind kind) {
  plan.validate();
  const std::vector<ReplicatePair> pairs = run_replications(plan, n);
  std::vector<double> out(pairs.size());
  for (std::size_t r = 0; r < pairs.size(); ++r) {
    out[r] = (kind == IndexKind::kUpper)
                 ? pairs[r].upper
                 : (kind == IndexKind::kLower
                        ? pairs[r].lower
                        : pairs[r].lower + pairs[r].upper);
  }
  return out;
}

double consistency_check(const GammaParams& params, const IndexSpec& spec,
                         int n_large, std::uint64_t seed) {
  params.validate();
  spec.validate();
  if (n_large < spec.m) {
    throw InsufficientSampleError("consistency_check: n below subset size");
  }
  RandomStream stream =
      RandomStream::derive(seed, static_cast<std::uint64_t>(n_large), 0);
  const Sample sample(gamma_sample(params, stream, n_large));
  const double est = estimate_weighted(sample, spec).value;

  double truth = 0.0;
  switch (spec.kind) {
    case IndexKind::kLower:
      truth = gamma_lower_index(params, spec.m).value;
      break;
    case IndexKind::kUpper:
      truth = gamma_upper_index(params, spec.m).value;
      break;
    case IndexKind::kCombined:
      truth = gamma_lower_index(params, spec.m).value +
              gamma_upper_index(params, spec.m).value;
      break;
  }
  return std::fabs(est - truth);
}

double normal_ks_pvalue(const std::vector<double>& values) {
  const std::size_t n = values.size();
  if (n < 2) {
    throw std::invalid_argument("normal_ks_pvalue: need at least 2 values");
  }
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));
  if (!(sd > 0.0)) return 0.0;  // degenerate replicates: flag as non-normal

  std::vector<double> u(n);
  for (std::size_t k = 0; k < n; ++k) u[k] = normal_cdf((values[k] - mean) / sd);
  std::sort(u.begin(), u.end());
  double d = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double ecdf_hi = static_cast<double>(k + 1) / n;
    const double ecdf_lo = static_cast<double>(k) / n;
    d = std::max(d, std::max(ecdf_hi - u[k], u[k] - ecdf_lo));
  }
  const double p =
      1.0 - kolmogorov_asymptotic_cdf(std::sqrt(static_cast<double>(n)) * d);
  return std::clamp(p, 0.0, 1.0);
}

double normality_smoke(const SimulationPlan& plan) {
  plan.validate();
  if (plan.sample_sizes.size() != 1 || plan.sample_sizes[0] < 100) {
    throw std::invalid_argument(
        "normality_smoke: plan needs a single sample size >= 100");
  }
  if (plan.replications < 500) {
    throw std::invalid_argument("normality_smoke: at least 500 replications required");
  }
  return normal_ks_pvalue(
      replicate_estimates(plan, plan.sample_sizes[0], plan.spec.kind));
}

namespace {

struct GofStats {
  double d;
  double w2;
};

GofStats gof_statistics(const std::vector<double>& data,
                        const GammaParams& params) {
  const std::size_t n = data.size();
  std::vector<double> u(n);
  for (std::size_t k = 0; k < n; ++k) u[k] = gamma_cdf(params, data[k]);
  std::sort(u.begin(), u.end());
  double d = 0.0;
  double w2 = 1.0 / (12.0 * static_cast<double>(n));
  for (std::size_t k = 0; k < n; ++k) {
    const double ecdf_hi = static_cast<double>(k + 1) / n;
    const double ecdf_lo = static_cast<double>(k) / n;
    d = std::max(d, std::max(ecdf_hi - u[k], u[k] - ecdf_lo));
    const double centered = u[k] - (2.0 * static_cast<double>(k + 1) - 1.0) /
                                       (2.0 * static_cast<double>(n));
    w2 += centered * centered;
  }
  return GofStats{d, w2};
}

double ks_pvalue(double d, int n, bool exact) {
  if (exact && n <= 1000) {
    return std::clamp(1.0 - kolmogorov_cdf(d, n, KsMode::kExact), 0.0, 1.0);
  }
  return std::clamp(1.0 - kolmogorov_cdf(d, n, KsMode::kAsymptotic), 0.0, 1.0);
}

}  // namespace

GofReport gof_test(const Sample& data, GofMethod method,
                   int bootstrap_replications, std::uint64_t seed) {
  const std::vector<double>& x = data.values();
  const int n = static_cast<int>(x.size());
  if (n < 3) {
    throw InsufficientSampleError("gof_test: need at least 3 observations");
  }
  const FitResult fit = gamma_mle(x);
  const GofStats stats = gof_statistics(x, fit.params);

  GofReport report;
  report.statistic_ks = stats.d;
  report.statistic_cvm = stats.w2;
  report.method = method;
  report.fitted = fit;

  switch (method) {
    case GofMethod::kPluginExact:
      report.p_value_ks = ks_pvalue(stats.d, n, /*exact=*/true);
      report.p_value_cvm =
          std::clamp(1.0 - cvm_asymptotic_cdf(stats.w2), 0.0, 1.0);
      return report;
    case GofMethod::kPluginAsymptotic:
      report.p_value_ks = ks_pvalue(stats.d, n, /*exact=*/false);
      report.p_value_cvm =
          std::clamp(1.0 - cvm_asymptotic_cdf(stats.w2), 0.0, 1.0);
      return report;
    case GofMethod::kParametricBootstrap:
      break;
  }

  const int reps = bootstrap_replications;
  if (reps < 100) {
    throw std::invalid_argument(
        "gof_test: parametric bootstrap needs at least 100 replications");
  }
  int ks_ge = 0, cvm_ge = 0;
  for (int b = 0; b < reps; ++b) {
    RandomStream stream =
        RandomStream::derive(seed, 0x676f66u /* "gof" */, b);
    const std::vector<double> synth =
        gamma_sample(fit.params, stream, static_cast<std::size_t>(n));
    const FitResult refit = gamma_mle(synth);
    const GofStats boot = gof_statistics(synth, refit.params);
    if (boot.d >= stats.d) ++ks_ge;
    if (boot.w2 >= stats.w2) ++cvm_ge;
  }
  report.p_value_ks = (1.0 + ks_ge) / (reps + 1.0);
  report.p_value_cvm = (1.0 + cvm_ge) / (reps + 1.0);
  return report;
}

}  // namespace ginidex
