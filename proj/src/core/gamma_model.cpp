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

#include "core/gamma_model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "core/errors.hpp"
#include "core/specfun.hpp"

namespace ginidex {

void GammaParams::validate() const {
  if (!(alpha > 0.0) || !(lambda > 0.0)) {
    throw std::domain_error("GammaParams: alpha and lambda must be positive");
  }
}

double gamma_pdf(const GammaParams& params, double x) {
  params.validate();
  if (x < 0.0) return 0.0;
  if (x == 0.0) {
    if (params.alpha < 1.0) return std::numeric_limits<double>::infinity();
    return params.alpha == 1.0 ? params.lambda : 0.0;
  }
  return std::exp(params.alpha * std::log(params.lambda) +
                  (params.alpha - 1.0) * std::log(x) - params.lambda * x -
                  log_gamma(params.alpha));
}

double gamma_cdf(const GammaParams& params, double x, const Tolerance& tol) {
  params.validate();
  if (x < 0.0) {
    throw std::domain_error("gamma_cdf: x must be non-negative");
  }
  return reg_lower_inc_gamma(params.alpha, params.lambda * x, tol);
}

double gamma_quantile(const GammaParams& params, double p, const Tolerance& tol) {
  params.validate();
  if (!(p >= 0.0) || p >= 1.0) {
    throw std::domain_error("gamma_quantile: p must lie in [0, 1)");
  }
  if (p == 0.0) return 0.0;

  // Wilson-Hilferty starting point, clipped to the positive axis.
  const double z = normal_quantile(p);
  const double cube =
      1.0 - 1.0 / (9.0 * params.alpha) + z / (3.0 * std::sqrt(params.alpha));
  double x = (cube > 0.0) ? params.mean() * cube * cube * cube
                          : params.mean() * 1e-4;

  // Bracket the root, doubling upward as needed.
  double lo = 0.0;
  double hi = std::max(params.mean(), 2.0 * x);
  for (int i = 0; i < 1200 && gamma_cdf(params, hi, tol) < p; ++i) {
    lo = hi;
    hi *= 2.0;
  }
  if (!(x > lo) || !(x < hi)) x = 0.5 * (lo + hi);

  // Newton with the bracket as a safety net.  The residual target is
  // relative to p so that deep-left-tail quantiles stay accurate where
  // the CDF is tiny but carries full relative precision.
  const double f_tol = 5e-13 * p;
  for (int iter = 0; iter < tol.max_iter; ++iter) {
    const double fx = gamma_cdf(params, x, tol) - p;
    if (std::fabs(fx) <= f_tol) return x;
    if (fx > 0.0) {
      hi = x;
    } else {
      lo = x;
    }
    const double dfx = gamma_pdf(params, x);
    double next = (dfx > 0.0) ? x - fx / dfx : x;
    if (!(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);  // bisect
    if (std::fabs(next - x) <= tol.abs_eps + 1e-14 * std::fabs(x) &&
        std::fabs(fx) <= 1e-10 * std::max(p, 1e-8)) {
      return next;
    }
    x = next;
  }
  throw NonConvergenceError("gamma_quantile: Newton/bisection did not converge");
}

namespace {

// Marsaglia & Tsang (2000) squeeze method for shape >= 1 at unit rate.
double draw_unit_rate(double shape, RandomStream& rng) {
  if (shape < 1.0) {
    // Boost transform: Gamma(a) = Gamma(a+1) * U^{1/a}.
    const double big = draw_unit_rate(shape + 1.0, rng);
    return big * std::pow(rng.uniform(), 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = rng.normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.uniform();
    if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
  }
}

}  // namespace

std::vector<double> gamma_sample(const GammaParams& params, RandomStream& rng,
                                 std::size_t count) {
  params.validate();
  if (count == 0) {
    throw std::invalid_argument("gamma_sample: count must be positive");
  }
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = draw_unit_rate(params.alpha, rng) / params.lambda;
  }
  return out;
}

double gamma_log_likelihood(const GammaParams& params,
                            const std::vector<double>& data) {
  params.validate();
  double sum_log = 0.0, sum = 0.0;
  for (double x : data) {
    if (!(x > 0.0)) {
      throw DegenerateDataError("gamma_log_likelihood: data must be positive");
    }
    sum_log += std::log(x);
    sum += x;
  }
  const double n = static_cast<double>(data.size());
  return n * params.alpha * std::log(params.lambda) +
         (params.alpha - 1.0) * sum_log - params.lambda * sum -
         n * log_gamma(params.alpha);
}

FitResult gamma_mle(const std::vector<double>& data, const Tolerance& tol) {
  tol.validate();
  const std::size_t n = data.size();
  if (n < 2) {
    // A single observation cannot pin down two parameters.
    throw DegenerateDataError("gamma_mle: need at least two observations");
  }
  double sum = 0.0, sum_log = 0.0;
  double lo_val = data[0], hi_val = data[0];
  for (double x : data) {
    if (!(x > 0.0)) {
      throw DegenerateDataError("gamma_mle: observations must be positive");
    }
    sum += x;
    sum_log += std::log(x);
    lo_val = std::min(lo_val, x);
    hi_val = std::max(hi_val, x);
  }
  if (lo_val == hi_val) {
    throw DegenerateDataError("gamma_mle: all observations equal");
  }
  const double mean = sum / n;
  // s > 0 strictly for non-degenerate data (Jensen).
  const double s = std::log(mean) - sum_log / n;
  if (!(s > 0.0)) {
    throw DegenerateDataError("gamma_mle: degenerate log-moment gap");
  }

  // Method-of-moments start.
  double ss = 0.0;
  for (double x : data) ss += (x - mean) * (x - mean);
  const double var = ss / (n - 1);
  double alpha = (var > 0.0) ? mean * mean / var : 1.0;
  alpha = std::clamp(alpha, 1e-3, 1e6);

  // Newton on f(alpha) = ln(alpha) - psi(alpha) - s, which is strictly
  // decreasing with a unique positive root.
  bool converged = false;
  int iterations = 0;
  for (; iterations < tol.max_iter; ++iterations) {
    const double f = std::log(alpha) - digamma(alpha) - s;
    if (std::fabs(f) <= tol.rel_eps * std::max(1.0, std::fabs(s))) {
      converged = true;
      break;
    }
    const double df = 1.0 / alpha - trigamma(alpha);
    double next = alpha - f / df;
    if (!(next > 0.0)) next = 0.5 * alpha;
    if (std::fabs(next - alpha) <= tol.abs_eps + tol.rel_eps * alpha) {
      alpha = next;
      converged = true;
      break;
    }
    alpha = next;
  }
  if (!converged) {
    throw NonConvergenceError("gamma_mle: Newton iteration did not converge");
  }

  const GammaParams params{alpha, alpha / mean};
  return FitResult{params, gamma_log_likelihood(params, data), iterations,
                   converged};
}

}  // namespace ginidex
