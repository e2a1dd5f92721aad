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
#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "core/quadrature.hpp"
#include "core/rng.hpp"
#include "core/specfun.hpp"
#include "doctest.h"

using namespace ginidex;

TEST_CASE("log_gamma known values") {
  CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-13));
  // Gamma(1/2) = sqrt(pi)
  CHECK(log_gamma(0.5) ==
        doctest::Approx(0.5 * std::log(3.14159265358979323846)).epsilon(1e-13));
  // Gamma(10) = 9! = 362880
  CHECK(log_gamma(10.0) ==
        doctest::Approx(std::log(362880.0)).epsilon(1e-13));
  CHECK(log_gamma(1e-6) == doctest::Approx(std::log(999999.4227843351)).epsilon(1e-12));
  CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(log_gamma(-2.5), std::domain_error);
}

TEST_CASE("log_gamma functional equation") {
  // Gamma(x+1) = x Gamma(x)
  for (double x = 0.1; x <= 50.0; x *= 1.7) {
    CHECK(std::exp(log_gamma(x + 1.0) - log_gamma(x)) ==
          doctest::Approx(x).epsilon(1e-10));
  }
}

TEST_CASE("reg_lower_inc_gamma examples") {
  // P(1, x) = 1 - exp(-x)
  CHECK(reg_lower_inc_gamma(1.0, 1.0) ==
        doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-12));
  CHECK(reg_lower_inc_gamma(2.0, 0.0) == 0.0);
  // P(1/2, x) = erf(sqrt(x))
  CHECK(reg_lower_inc_gamma(0.5, 2.0) ==
        doctest::Approx(std::erf(std::sqrt(2.0))).epsilon(1e-12));
}

TEST_CASE("reg_lower_inc_gamma quadrature oracle") {
  // Independent check: integrate the Gamma(alpha, 1) density.  The
  // substitution t = u^2 removes the t^{alpha-1} endpoint singularity, so
  // the integrand is smooth for every alpha >= 1/2.
  for (double alpha : {0.5, 1.3, 4.0}) {
    for (double x : {0.5, 2.0, 7.0}) {
      const double direct = reg_lower_inc_gamma(alpha, x);
      const IntegralEstimate numeric = integrate_interval(
          [alpha](double u) {
            return 2.0 * std::exp((2.0 * alpha - 1.0) * std::log(u) - u * u -
                                  log_gamma(alpha));
          },
          0.0, std::sqrt(x));
      CHECK(direct == doctest::Approx(numeric.value).epsilon(1e-9));
    }
  }
}

TEST_CASE("reg_lower_inc_gamma monotone and saturating") {
  for (double alpha : {0.5, 1.0, 2.0, 5.0}) {
    double prev = 0.0;
    for (double x = 0.0; x < 20.0; x += 0.25) {
      const double p = reg_lower_inc_gamma(alpha, x);
      CHECK(p >= prev);
      CHECK(p <= 1.0);
      prev = p;
    }
    CHECK(reg_lower_inc_gamma(alpha, 1e6 * alpha) > 1.0 - 1e-12);
  }
}

TEST_CASE("reg_lower_inc_gamma recurrence identity") {
  // P(a+1, x) = P(a, x) - x^a e^{-x} / Gamma(a+1)
  for (double alpha : {0.5, 1.0, 2.0, 5.0}) {
    for (double x : {0.1, 1.0, 10.0}) {
      const double lhs = reg_lower_inc_gamma(alpha + 1.0, x);
      const double rhs =
          reg_lower_inc_gamma(alpha, x) -
          std::exp(alpha * std::log(x) - x - log_gamma(alpha + 1.0));
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
  }
}

TEST_CASE("reg_lower_inc_gamma domain errors") {
  CHECK_THROWS_AS(reg_lower_inc_gamma(0.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(reg_lower_inc_gamma(-1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(reg_lower_inc_gamma(1.0, -0.5), std::domain_error);
}

TEST_CASE("digamma known values and derivative oracle") {
  const double euler = 0.57721566490153286061;
  CHECK(digamma(1.0) == doctest::Approx(-euler).epsilon(1e-10));
  CHECK(digamma(2.0) == doctest::Approx(1.0 - euler).epsilon(1e-10));
  CHECK(digamma(0.5) ==
        doctest::Approx(-euler - 2.0 * std::log(2.0)).epsilon(1e-10));
  CHECK_THROWS_AS(digamma(0.0), std::domain_error);

  // Central difference of log_gamma as an independent oracle.
  for (double x : {0.7, 1.0, 3.3, 12.0}) {
    const double h = 1e-5;
    const double numeric = (log_gamma(x + h) - log_gamma(x - h)) / (2.0 * h);
    CHECK(digamma(x) == doctest::Approx(numeric).epsilon(1e-7));
  }
}

TEST_CASE("trigamma known values") {
  const double pi = 3.14159265358979323846;
  CHECK(trigamma(1.0) == doctest::Approx(pi * pi / 6.0).epsilon(1e-10));
  CHECK(trigamma(0.5) == doctest::Approx(pi * pi / 2.0).epsilon(1e-10));
  // psi'(x+1) = psi'(x) - 1/x^2
  CHECK(trigamma(3.7) ==
        doctest::Approx(trigamma(2.7) - 1.0 / (2.7 * 2.7)).epsilon(1e-10));
}

TEST_CASE("kolmogorov_cdf boundary cases") {
  CHECK(kolmogorov_cdf(0.0, 11, KsMode::kExact) == 0.0);
  CHECK(kolmogorov_cdf(0.02, 11, KsMode::kExact) == 0.0);  // below 1/(2n)
  CHECK(kolmogorov_cdf(1.0, 11, KsMode::kExact) == 1.0);
  CHECK(kolmogorov_cdf(1.5, 4, KsMode::kExact) == 1.0);
  CHECK_THROWS_AS(kolmogorov_cdf(0.2, 0, KsMode::kExact), std::domain_error);
  CHECK_THROWS_AS(kolmogorov_cdf(-0.1, 5, KsMode::kExact), std::domain_error);
  CHECK_THROWS_AS(kolmogorov_cdf(0.05, 2000, KsMode::kExact),
                  std::invalid_argument);
  CHECK_NOTHROW(kolmogorov_cdf(0.05, 2000, KsMode::kAsymptotic));
}

TEST_CASE("kolmogorov asymptotic law") {
  // Classical two-sided 5% point of the limit law.
  CHECK(kolmogorov_asymptotic_cdf(1.3581) == doctest::Approx(0.95).epsilon(2e-4));
  CHECK(kolmogorov_asymptotic_cdf(0.0) == 0.0);
  CHECK(kolmogorov_asymptotic_cdf(4.0) == doctest::Approx(1.0).epsilon(1e-12));
  // Continuity across the theta/alternating crossover at x = 1.18:
  // the gap must be no larger than density * step.
  CHECK(std::fabs(kolmogorov_asymptotic_cdf(1.1799999) -
                  kolmogorov_asymptotic_cdf(1.1800001)) < 5e-7);
  // Both branches against an independently computed reference value.
  CHECK(kolmogorov_asymptotic_cdf(1.0) ==
        doctest::Approx(0.7300003283226455).epsilon(1e-12));
  CHECK(kolmogorov_asymptotic_cdf(1.17) ==
        doctest::Approx(0.870609957814381).epsilon(1e-10));
  CHECK(kolmogorov_asymptotic_cdf(1.19) ==
        doctest::Approx(0.8822577071202283).epsilon(1e-10));
}

TEST_CASE("kolmogorov cdfs are monotone in the statistic") {
  double prev_e = 0.0, prev_a = 0.0;
  for (double d = 0.0; d <= 1.0; d += 0.01) {
    const double e = kolmogorov_cdf(d, 37, KsMode::kExact);
    const double a = kolmogorov_cdf(d, 37, KsMode::kAsymptotic);
    CHECK(e >= prev_e);
    CHECK(a >= prev_a);
    prev_e = e;
    prev_a = a;
  }
}

TEST_CASE("kolmogorov exact law against a simulation oracle" *
          doctest::timeout(120)) {
  // 10^6 uniform samples of D_11; the exact CDF must sit inside a 3-SE band.
  const int n = 11;
  const int reps = 1000000;
  const double d0 = 0.2;
  RandomStream rng(20230901);
  std::vector<double> u(n);
  int below = 0;
  for (int r = 0; r < reps; ++r) {
    for (int k = 0; k < n; ++k) u[k] = rng.uniform();
    std::sort(u.begin(), u.end());
    double d = 0.0;
    for (int k = 0; k < n; ++k) {
      d = std::max(d, std::max((k + 1.0) / n - u[k], u[k] - k * 1.0 / n));
    }
    if (d <= d0) ++below;
  }
  const double mc = static_cast<double>(below) / reps;
  const double exact = kolmogorov_cdf(d0, n, KsMode::kExact);
  CHECK(exact > 0.0);
  CHECK(exact < 1.0);
  const double se = std::sqrt(exact * (1.0 - exact) / reps);
  CHECK(std::fabs(mc - exact) < 3.0 * se);
}

TEST_CASE("cvm asymptotic law: reference values") {
  CHECK(cvm_asymptotic_cdf(0.0) == 0.0);
  // Reference values computed independently with mpmath/SciPy.
  CHECK(cvm_asymptotic_cdf(0.02) == doctest::Approx(0.003000614302).epsilon(1e-8));
  CHECK(cvm_asymptotic_cdf(0.1) == doctest::Approx(0.415126561593).epsilon(1e-8));
  CHECK(cvm_asymptotic_cdf(0.2) == doctest::Approx(0.732529569459).epsilon(1e-8));
  // Classical 5% critical value.
  CHECK(cvm_asymptotic_cdf(0.4614) == doctest::Approx(0.950011462391).epsilon(1e-8));
  CHECK(cvm_asymptotic_cdf(1.1679) == doctest::Approx(0.999000222398).epsilon(1e-8));
  CHECK(cvm_asymptotic_cdf(5.0) >= 0.9999);
  CHECK(cvm_asymptotic_cdf(8.0) >= 0.9999);
  CHECK_THROWS_AS(cvm_asymptotic_cdf(-0.1), std::domain_error);
}

TEST_CASE("cvm asymptotic law is monotone") {
  double prev = 0.0;
  for (double w2 = 0.0; w2 <= 3.0; w2 += 0.02) {
    const double c = cvm_asymptotic_cdf(w2);
    CHECK(c >= prev);
    CHECK(c <= 1.0);
    prev = c;
  }
}

TEST_CASE("cvm asymptotic law against a simulation oracle" *
          doctest::timeout(120)) {
  // W^2 at n = 300 is close enough to the limit law that a Monte Carlo
  // band of 3 SE plus an O(1/n) allowance must contain the CDF value.
  const int n = 300;
  const int reps = 200000;
  const double w0 = 0.4614;
  RandomStream rng(777001);
  std::vector<double> u(n);
  int below = 0;
  for (int r = 0; r < reps; ++r) {
    for (int k = 0; k < n; ++k) u[k] = rng.uniform();
    std::sort(u.begin(), u.end());
    double w2 = 1.0 / (12.0 * n);
    for (int k = 0; k < n; ++k) {
      const double c = u[k] - (2.0 * k + 1.0) / (2.0 * n);
      w2 += c * c;
    }
    if (w2 <= w0) ++below;
  }
  const double mc = static_cast<double>(below) / reps;
  const double limit = cvm_asymptotic_cdf(w0);
  const double se = std::sqrt(limit * (1.0 - limit) / reps);
  CHECK(std::fabs(mc - limit) < 3.0 * se + 1.0 / n);
}

TEST_CASE("normal_cdf sanity") {
  CHECK(normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(normal_cdf(1.959963985) == doctest::Approx(0.975).epsilon(1e-8));
  CHECK(normal_cdf(-1.959963985) == doctest::Approx(0.025).epsilon(1e-7));
}
