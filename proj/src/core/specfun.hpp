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

// Scalar special functions used throughout the library: log-gamma, the
// regularized lower incomplete gamma function, digamma/trigamma, and the
// null distributions of the Kolmogorov-Smirnov and Cramer-von Mises
// statistics.  All functions are pure and thread-safe.

#ifndef GINIDEX_CORE_SPECFUN_HPP_
#define GINIDEX_CORE_SPECFUN_HPP_

#include "core/tolerance.hpp"

namespace ginidex {

// ln Gamma(x) for x > 0 via the Lanczos approximation (reflection below
// 0.5).  Relative error below 1e-13 on [1e-6, 1e6].
double log_gamma(double x);

// Regularized lower incomplete gamma P(alpha, x) = gamma(alpha, x)/Gamma(alpha),
// alpha > 0, x >= 0.  Series expansion for x < alpha + 1, Lentz continued
// fraction otherwise.
double reg_lower_inc_gamma(double alpha, double x, const Tolerance& tol = {});

// psi(x) = d/dx ln Gamma(x), x > 0.  Recurrence shifts the argument above 6,
// then the Bernoulli asymptotic series.  Absolute error below 1e-10.
double digamma(double x);

// psi'(x), x > 0.  Same recurrence/asymptotic structure as digamma.
double trigamma(double x);

enum class KsMode { kExact, kAsymptotic };

// CDF of the Kolmogorov-Smirnov statistic D_n.
//   kExact:      Pr(D_n <= d) by the Marsaglia-Tsang-Wang matrix-power
//                algorithm (JSS 2003); requires n <= 1000.
//   kAsymptotic: K(sqrt(n) d) where K is the Kolmogorov limit law.
double kolmogorov_cdf(double d, int n, KsMode mode);

// Kolmogorov limit CDF K(x) = Pr(sup_t |B(t)| <= x) for the Brownian
// bridge; series truncated below 1e-12.
double kolmogorov_asymptotic_cdf(double x);

// Limiting null CDF of the Cramer-von Mises W^2 statistic, computed by the
// classical eigen-series of Anderson & Darling / Csorgo & Faraway in terms
// of Bessel K_{1/4}; terms truncated below 1e-12.
double cvm_asymptotic_cdf(double w2);

// Standard normal CDF (convenience wrapper over erfc).
double normal_cdf(double x);

// Standard normal quantile for p in (0, 1); Acklam's rational
// approximation polished by one Halley step.
double normal_quantile(double p);

}  // namespace ginidex

#endif  // GINIDEX_CORE_SPECFUN_HPP_
