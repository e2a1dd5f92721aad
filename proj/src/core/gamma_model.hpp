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

// The gamma distribution as the library's parametric income model:
// density, CDF, quantile, random sampling and maximum-likelihood fitting.

#ifndef GINIDEX_CORE_GAMMA_MODEL_HPP_
#define GINIDEX_CORE_GAMMA_MODEL_HPP_

#include <cstddef>
#include <vector>

#include "core/rng.hpp"
#include "core/tolerance.hpp"

namespace ginidex {

// Shape/rate parameterization: density lambda^alpha x^(alpha-1) e^(-lambda x) / Gamma(alpha).
struct GammaParams {
  double alpha;   // shape, > 0
  double lambda;  // rate, > 0

  double mean() const { return alpha / lambda; }
  void validate() const;
};

struct FitResult {
  GammaParams params;
  double log_likelihood;
  int iterations;
  bool converged;
};

double gamma_pdf(const GammaParams& params, double x);

// F(x) = P(alpha, lambda x); x >= 0 required.
double gamma_cdf(const GammaParams& params, double x, const Tolerance& tol = {});

// Inverse CDF on [0, 1); bracketed Newton with bisection fallback,
// |F(x) - p| <= 1e-11 at the returned point.  p = 0 maps to 0.
double gamma_quantile(const GammaParams& params, double p,
                      const Tolerance& tol = {});

// count iid draws by the Marsaglia-Tsang squeeze method (with the
// boost transform for alpha < 1), drawn at unit rate and scaled by
// 1/lambda so that rate only rescales an otherwise identical stream.
std::vector<double> gamma_sample(const GammaParams& params, RandomStream& rng,
                                 std::size_t count);

// Maximum-likelihood fit: Newton iteration for the profile equation
// ln(alpha) - psi(alpha) = ln(mean) - mean(ln x), started from the
// method-of-moments estimate; lambda = alpha / mean.
// Requires n >= 2, strictly positive data, not all equal.
FitResult gamma_mle(const std::vector<double>& data, const Tolerance& tol = {});

// Log-likelihood of data under params (used by fitting and reporting).
double gamma_log_likelihood(const GammaParams& params,
                            const std::vector<double>& data);

}  // namespace ginidex

#endif  // GINIDEX_CORE_GAMMA_MODEL_HPP_
