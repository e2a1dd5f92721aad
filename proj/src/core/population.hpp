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

// Population-level extended Gini indices of a non-negative distribution
// with mean mu > 0.  For subset size m >= 2,
//
//   lower  = E[X_1 - min(X_1..X_m)] / (m mu)
//   upper  = E[max(X_1..X_m) - X_1] / (m mu)
//
// and lower + upper is the m-th Gini index (normalized expected range).
// Three independent computational routes are provided -- survival
// integrals on [0, inf), quantile/covariance integrals on [0, 1], and the
// Lorenz-moment identities -- plus reduced single-integral forms for the
// gamma model.  Population values do not depend on the estimator position
// i, so these functions take m directly.

#ifndef GINIDEX_CORE_POPULATION_HPP_
#define GINIDEX_CORE_POPULATION_HPP_

#include <functional>

#include "core/estimators.hpp"
#include "core/gamma_model.hpp"
#include "core/quadrature.hpp"

namespace ginidex {

// A continuous non-negative distribution.  Both cdf and quantile are
// required so that the independent representations can cross-validate.
// Must be immutable while shared across threads.
struct DistributionModel {
  std::function<double(double)> cdf;       // F(x), x >= 0
  std::function<double(double)> quantile;  // F^{-1}(p), p in [0, 1)
  double mean;                             // mu > 0
};

enum class Representation {
  kSurvival,
  kQuantileCovariance,
  kLorenz,
  kGammaClosedForm,
};

struct IndexValue {
  double value;        // in [0, 1)
  Representation representation;
  double est_error;    // propagated quadrature error estimate
};

// Survival-integral route:
//   lower = (I1 - Im) / (m I1),  upper = (Jm - I1) / (m I1)
// with I1 = int (1-F), Im = int (1-F)^m, Jm = int (1-F^m).
IndexValue lower_index_survival(const DistributionModel& model, int m,
                                const QuadratureConfig& cfg = {});
IndexValue upper_index_survival(const DistributionModel& model, int m,
                                const QuadratureConfig& cfg = {});

// Quantile/covariance route over U ~ U(0,1):
//   lower = (1/(m mu)) int F^{-1}(u) {1 - m (1-u)^{m-1}} du
//   upper = (1/(m mu)) int F^{-1}(u) {m u^{m-1} - 1} du
// spec.kind selects the component (combined sums both); spec.i is unused.
IndexValue index_quantile_covariance(const DistributionModel& model,
                                     const IndexSpec& spec,
                                     const QuadratureConfig& cfg = {});

// Lorenz-moment route: lower = G_m / m, upper = (1 - 1/m) D_{m-1}.
IndexValue index_lorenz(const DistributionModel& model, const IndexSpec& spec,
                        const QuadratureConfig& cfg = {});

// Lorenz curve L(p) = int_0^p F^{-1}(t) dt / mu.
double lorenz_curve(const DistributionModel& model, double p,
                    const QuadratureConfig& cfg = {});

// Aaberge's Lorenz inequality moments D_n = (n+1) E[(U - L(U)) U^{n-1}].
double aaberge_D(const DistributionModel& model, int n,
                 const QuadratureConfig& cfg = {});

// Kakwani-Donaldson-Weymark-Yitzhaki moments
// G_n = n (n-1) E[(U - L(U)) (1-U)^{n-2}]; G_1 = 0.
double kakwani_G(const DistributionModel& model, int n,
                 const QuadratureConfig& cfg = {});

// Gamma-model reduced forms (independent of the rate parameter):
//   lower = (1/m) [1 - (1/alpha) int {1 - P(alpha,t)}^m dt]
//   upper = (1/m) [(1/alpha) int {1 - P(alpha,t)^m} dt - 1]
IndexValue gamma_lower_index(const GammaParams& params, int m,
                             const QuadratureConfig& cfg = {});
IndexValue gamma_upper_index(const GammaParams& params, int m,
                             const QuadratureConfig& cfg = {});

// One-stop dispatcher over representation and kind for a gamma model.
IndexValue gamma_index(const GammaParams& params, int m, IndexKind kind,
                       Representation repr, const QuadratureConfig& cfg = {});

// Shift constants r_m, s_m > 0 with lower_m(X) = G(X + r_m) and
// upper_m(X) = G(X + s_m).  Since G(X + r) = mu G(X) / (mu + r), they have
// the closed forms r_m = mu (G - lower_m)/lower_m, s_m = mu (G - upper_m)/upper_m
// where G is the classical Gini (m = 2 components summed).
struct ShiftConstants {
  double r;
  double s;
};
ShiftConstants shift_constants(const DistributionModel& model, int m,
                               const QuadratureConfig& cfg = {});

// Model constructors.
DistributionModel make_gamma_model(const GammaParams& params,
                                   const Tolerance& tol = {});
DistributionModel shifted_model(const DistributionModel& model, double a);
DistributionModel scaled_model(const DistributionModel& model, double b);

}  // namespace ginidex

#endif  // GINIDEX_CORE_POPULATION_HPP_
