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

// Adaptive Gauss-Kronrod (G7/K15) integration on [0, 1], finite intervals
// and [0, inf).  Semi-infinite integrals are truncated at a point T where
// the integrand has decayed below tail_cut times its observed maximum,
// with T found by doubling from an initial scale.

#ifndef GINIDEX_CORE_QUADRATURE_HPP_
#define GINIDEX_CORE_QUADRATURE_HPP_

#include <functional>
#include <stdexcept>

namespace ginidex {

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_depth = 60;      // per-interval bisection limit
  double tail_cut = 1e-14; // integrand threshold for truncating the tail

  void validate() const {
    if (!(rel_tol > 0.0) || !(tail_cut > 0.0) || abs_tol < 0.0 || max_depth < 1) {
      throw std::invalid_argument(
          "QuadratureConfig: rel_tol > 0, tail_cut > 0, abs_tol >= 0, max_depth >= 1 required");
    }
  }
};

struct IntegralEstimate {
  double value = 0.0;
  double error = 0.0;  // estimated absolute error
};

using Integrand = std::function<double(double)>;

// Adaptive integration over the finite interval [a, b].
IntegralEstimate integrate_interval(const Integrand& f, double a, double b,
                                    const QuadratureConfig& cfg = {});

// Integral of f over [0, inf).  initial_scale seeds the truncation search;
// the result must not depend on it for decaying integrands.
IntegralEstimate integrate_semi_infinite(const Integrand& f,
                                         const QuadratureConfig& cfg = {},
                                         double initial_scale = 1.0);

// Integral of f over [0, 1]; endpoints are never evaluated, so integrable
// endpoint singularities (e.g. quantile integrands at u -> 1) are allowed.
IntegralEstimate integrate_unit(const Integrand& f,
                                const QuadratureConfig& cfg = {});

}  // namespace ginidex

#endif  // GINIDEX_CORE_QUADRATURE_HPP_
