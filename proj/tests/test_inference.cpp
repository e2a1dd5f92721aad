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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <cstring>
#include <stdexcept>
#include <vector>

#include "core/errors.hpp"
#include "core/fixtures.hpp"
#include "core/inference.hpp"
#include "core/rng.hpp"
#include "doctest.h"

using namespace ginidex;

namespace {

SimulationPlan paper_like_plan() {
  SimulationPlan plan;
  plan.params = {2.0, 1.0};
  plan.spec = {3, 3, IndexKind::kLower};
  plan.sample_sizes = {10, 30};
  plan.replications = 200;
  plan.master_seed = 99;
  return plan;
}

bool reports_identical(const SimulationReport& a, const SimulationReport& b) {
  if (a.cells.size() != b.cells.size()) return false;
  for (std::size_t c = 0; c < a.cells.size(); ++c) {
    const SimulationCell& x = a.cells[c];
    const SimulationCell& y = b.cells[c];
    // Bitwise equality of every field (not memcmp: padding is unspecified).
    if (x.n != y.n || x.kind != y.kind || x.bias != y.bias || x.mse != y.mse ||
        x.mc_se != y.mc_se || x.truth != y.truth ||
        x.replicate_count != y.replicate_count) {
      return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("minimal plan produces finite cells") {
  SimulationPlan plan;
  plan.params = {2.0, 1.0};
  plan.spec = {3, 2, IndexKind::kLower};
  plan.sample_sizes = {3};  // n = m
  plan.replications = 2;
  plan.master_seed = 5;
  const SimulationReport report = run_simulation(plan);
  REQUIRE(report.cells.size() == 2);
  for (const SimulationCell& cell : report.cells) {
    CHECK(std::isfinite(cell.bias));
    CHECK(std::isfinite(cell.mse));
    CHECK(std::isfinite(cell.mc_se));
    CHECK(cell.replicate_count == 2);
    // Variance non-negativity: mse >= bias^2 up to roundoff.
    CHECK(cell.mse >= cell.bias * cell.bias - 1e-12);
  }
}

TEST_CASE("simulation reports are deterministic and thread-invariant") {
  SimulationPlan plan = paper_like_plan();
  const SimulationReport serial = run_simulation(plan);
  const SimulationReport again = run_simulation(plan);
  CHECK(reports_identical(serial, again));
  plan.threads = 4;
  const SimulationReport parallel = run_simulation(plan);
  CHECK(reports_identical(serial, parallel));
  plan.threads = 3;
  CHECK(reports_identical(serial, run_simulation(plan)));
}

TEST_CASE("different seeds change the report") {
  SimulationPlan plan = paper_like_plan();
  const SimulationReport a = run_simulation(plan);
  plan.master_seed += 1;
  const SimulationReport b = run_simulation(plan);
  CHECK_FALSE(reports_identical(a, b));
}

TEST_CASE("report layout follows the plan") {
  const SimulationReport report = run_simulation(paper_like_plan());
  REQUIRE(report.cells.size() == 4);
  CHECK(report.cells[0].n == 10);
  CHECK(report.cells[0].kind == IndexKind::kLower);
  CHECK(report.cells[1].n == 10);
  CHECK(report.cells[1].kind == IndexKind::kUpper);
  CHECK(report.cells[2].n == 30);
  // Truths are the quadrature values of the gamma forms.
  CHECK(report.cells[0].truth == doctest::Approx(14.0 / 81.0).epsilon(1e-8));
  CHECK(report.cells[1].truth ==
        doctest::Approx(0.375 - 14.0 / 81.0).epsilon(1e-8));
}

TEST_CASE("MSE shrinks with the sample size") {
  SimulationPlan plan = paper_like_plan();
  plan.sample_sizes = {10, 100};
  plan.replications = 300;
  const SimulationReport report = run_simulation(plan);
  // lower cells are 0 and 2, upper cells 1 and 3.
  CHECK(report.cells[2].mse < report.cells[0].mse);
  CHECK(report.cells[3].mse < report.cells[1].mse);
}

TEST_CASE("plan validation") {
  SimulationPlan plan = paper_like_plan();
  plan.replications = 1;
  CHECK_THROWS_AS(run_simulation(plan), std::invalid_argument);
  plan = paper_like_plan();
  plan.sample_sizes = {2};  // below m = 3
  CHECK_THROWS_AS(run_simulation(plan), InsufficientSampleError);
  plan = paper_like_plan();
  plan.sample_sizes.clear();
  CHECK_THROWS_AS(run_simulation(plan), std::invalid_argument);
}

TEST_CASE("consistency checks at n = 10^4") {
  CHECK(consistency_check({2.0, 1.0}, {3, 2, IndexKind::kLower}, 10000, 7001) <
        0.01);
  // Exponential upper truth is 5/18.
  CHECK(consistency_check({1.0, 1.0}, {3, 2, IndexKind::kUpper}, 10000, 7002) <
        0.01);
  // Minimal n = m stays finite.
  CHECK(std::isfinite(
      consistency_check({2.0, 1.0}, {3, 1, IndexKind::kCombined}, 3, 7003)));
  CHECK_THROWS_AS(consistency_check({2.0, 1.0}, {3, 1, IndexKind::kLower}, 2, 1),
                  InsufficientSampleError);
}

TEST_CASE("normality smoke tests" * doctest::timeout(300)) {
  SimulationPlan plan;
  plan.params = {2.0, 1.0};
  plan.spec = {3, 3, IndexKind::kLower};
  plan.sample_sizes = {200};
  plan.replications = 1000;
  plan.master_seed = 314159;
  plan.threads = 4;
  CHECK(normality_smoke(plan) > 0.01);

  plan.spec = {2, 1, IndexKind::kCombined};  // classical Gini case
  CHECK(normality_smoke(plan) > 0.01);

  // Degenerate replicates are flagged with a zero p-value.
  CHECK(normal_ks_pvalue(std::vector<double>(600, 0.25)) == 0.0);

  SimulationPlan bad = plan;
  bad.replications = 100;
  CHECK_THROWS_AS(normality_smoke(bad), std::invalid_argument);
  bad = plan;
  bad.sample_sizes = {200, 300};
  CHECK_THROWS_AS(normality_smoke(bad), std::invalid_argument);
}

TEST_CASE("gof on the fixture reproduces the published p-values") {
  const Sample fixture = gdp2023_sample();
  const GofReport exact = gof_test(fixture, GofMethod::kPluginExact);
  CHECK(exact.statistic_ks == doctest::Approx(0.23442).epsilon(1e-4));
  CHECK(exact.statistic_cvm == doctest::Approx(0.066473).epsilon(1e-4));
  CHECK(std::fabs(exact.p_value_ks - 0.508) < 0.05);
  CHECK(std::fabs(exact.p_value_cvm - 0.784) < 0.07);
  CHECK(exact.fitted.converged);

  const GofReport asym = gof_test(fixture, GofMethod::kPluginAsymptotic);
  // Same statistics, different KS null law; CvM is asymptotic either way.
  CHECK(asym.statistic_ks == exact.statistic_ks);
  CHECK(asym.p_value_cvm == exact.p_value_cvm);
  CHECK(asym.p_value_ks > exact.p_value_ks);  // asymptotic law is heavier here
}

TEST_CASE("gof null calibration on exact gamma data") {
  RandomStream rng(161803);
  const Sample data(gamma_sample({2.0, 1.0}, rng, 10000));
  const GofReport report = gof_test(data, GofMethod::kPluginAsymptotic);
  CHECK(report.p_value_ks > 0.001);
  CHECK(report.p_value_cvm > 0.001);
}

TEST_CASE("parametric bootstrap gof" * doctest::timeout(120)) {
  const Sample fixture = gdp2023_sample();
  const GofReport a =
      gof_test(fixture, GofMethod::kParametricBootstrap, 2000, 1);
  CHECK(a.p_value_ks > 0.0);
  CHECK(a.p_value_ks <= 1.0);
  CHECK(a.p_value_cvm > 0.0);
  CHECK(a.p_value_cvm <= 1.0);
  // Deterministic for a fixed seed.
  const GofReport b =
      gof_test(fixture, GofMethod::kParametricBootstrap, 2000, 1);
  CHECK(a.p_value_ks == b.p_value_ks);
  CHECK(a.p_value_cvm == b.p_value_cvm);
  // Estimated parameters make the plug-in test conservative; the bootstrap
  // p-value should come out below it.
  const GofReport plugin = gof_test(fixture, GofMethod::kPluginExact);
  CHECK(a.p_value_ks < plugin.p_value_ks);
  CHECK_THROWS_AS(gof_test(fixture, GofMethod::kParametricBootstrap, 10, 1),
                  std::invalid_argument);
}

TEST_CASE("gof guards") {
  CHECK_THROWS_AS(gof_test(Sample({1.0, 2.0}), GofMethod::kPluginExact),
                  InsufficientSampleError);
  CHECK_THROWS_AS(gof_test(Sample({2.0, 2.0, 2.0, 2.0}), GofMethod::kPluginExact),
                  DegenerateDataError);
}
