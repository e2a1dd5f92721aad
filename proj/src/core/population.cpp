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

#include "core/population.hpp"

#include <cmath>
#include <stdexcept>

#include "core/errors.hpp"
#include "core/specfun.hpp"

namespace ginidex {

namespace {

void require_m(int m) {
  if (m < 2) {
    throw std::invalid_argument("population index: m must be at least 2");
  }
}

void require_model(const DistributionModel& model) {
  if (!(model.mean > 0.0)) {
    throw std::invalid_argument("DistributionModel: mean must be positive");
  }
}

// Quantile integrands may receive abscissae that round to the endpoint;
// keep them strictly inside (0, 1).
double clamp_unit_open(double u) {
  const double hi = 0.99999999999999989;  // nextafter(1, 0)
  if (u > hi) return hi;
  if (u < 1e-300) return 1e-300;
  return u;
}

// Error of (numerator)/(m * denominator) with numerator error en and
// denominator error ed, propagated linearly.
double ratio_error(double numer, double denom, double en, double ed, int m) {
  return en / (m * std::fabs(denom)) +
         std::fabs(numer) * ed / (m * denom * denom);
}

// Inner tolerance for nested Lorenz integrals: tighter than the outer
// request so inner noise stays below the outer error target.
QuadratureConfig inner_config(const QuadratureConfig& cfg) {
  QuadratureConfig inner = cfg;
  inner.rel_tol = std::min(cfg.rel_tol, 1e-12);
  inner.abs_tol = std::min(cfg.abs_tol, 1e-14);
  return inner;
}

struct Estimated {
  double value;
  double error;
};

Estimated aaberge_D_est(const DistributionModel& model, int n,
                        const QuadratureConfig& cfg) {
  require_model(model);
  if (n < 1) {
    throw std::invalid_argument("aaberge_D: n must be at least 1");
  }
  const QuadratureConfig inner = inner_config(cfg);
  const double mu = model.mean;
  const auto& quantile = model.quantile;
  const Integrand f = [&](double u) {
    u = clamp_unit_open(u);
    const double lorenz =
        integrate_interval([&](double t) { return quantile(clamp_unit_open(t)); },
                           0.0, u, inner)
            .value /
        mu;
    return (u - lorenz) * std::pow(u, n - 1);
  };
  const IntegralEstimate est = integrate_unit(f, cfg);
  return {(n + 1.0) * est.value, (n + 1.0) * est.error};
}

Estimated kakwani_G_est(const DistributionModel& model, int n,
                        const QuadratureConfig& cfg) {
  require_model(model);
  if (n < 1) {
    throw std::invalid_argument("kakwani_G: n must be at least 1");
  }
  if (n == 1) return {0.0, 0.0};
  const QuadratureConfig inner = inner_config(cfg);
  const double mu = model.mean;
  const auto& quantile = model.quantile;
  const Integrand f = [&](double u) {
    u = clamp_unit_open(u);
    const double lorenz =
        integrate_interval([&](double t) { return quantile(clamp_unit_open(t)); },
                           0.0, u, inner)
            .value /
        mu;
    return (u - lorenz) * std::pow(1.0 - u, n - 2);
  };
  const IntegralEstimate est = integrate_unit(f, cfg);
  const double scale = static_cast<double>(n) * (n - 1.0);
  return {scale * est.value, scale * est.error};
}

}  // namespace

IndexValue lower_index_survival(const DistributionModel& model, int m,
                                const QuadratureConfig& cfg) {
  require_m(m);
  require_model(model);
  const auto& cdf = model.cdf;
  const IntegralEstimate mean_int =
      integrate_semi_infinite([&](double t) { return 1.0 - cdf(t); }, cfg,
                              std::max(1.0, model.mean));
  const IntegralEstimate min_int = integrate_semi_infinite(
      [&](double t) { return std::pow(1.0 - cdf(t), m); }, cfg,
      std::max(1.0, model.mean));
  const double numer = mean_int.value - min_int.value;
  return IndexValue{numer / (m * mean_int.value), Representation::kSurvival,
                    ratio_error(numer, mean_int.value,
                                mean_int.error + min_int.error, mean_int.error,
                                m)};
}

IndexValue upper_index_survival(const DistributionModel& model, int m,
                                const QuadratureConfig& cfg) {
  require_m(m);
  require_model(model);
  const auto& cdf = model.cdf;
  const IntegralEstimate mean_int =
      integrate_semi_infinite([&](double t) { return 1.0 - cdf(t); }, cfg,
                              std::max(1.0, model.mean));
  const IntegralEstimate max_int = integrate_semi_infinite(
      [&](double t) { return 1.0 - std::pow(cdf(t), m); }, cfg,
      std::max(1.0, model.mean));
  const double numer = max_int.value - mean_int.value;
  return IndexValue{numer / (m * mean_int.value), Representation::kSurvival,
                    ratio_error(numer, mean_int.value,
                                mean_int.error + max_int.error, mean_int.error,
                                m)};
}

IndexValue index_quantile_covariance(const DistributionModel& model,
                                     const IndexSpec& spec,
                                     const QuadratureConfig& cfg) {
  spec.validate();
  require_model(model);
  const int m = spec.m;
  const double mu = model.mean;
  const auto& quantile = model.quantile;

  const auto integral = [&](IndexKind kind) {
    const Integrand f = [&, kind](double u) {
      u = clamp_unit_open(u);
      const double weight =
          (kind == IndexKind::kLower)
              ? 1.0 - m * std::pow(1.0 - u, m - 1)
              : m * std::pow(u, m - 1) - 1.0;
      return quantile(u) * weight;
    };
    return integrate_unit(f, cfg);
  };

  if (spec.kind == IndexKind::kCombined) {
    const IntegralEstimate lo = integral(IndexKind::kLower);
    const IntegralEstimate hi = integral(IndexKind::kUpper);
    return IndexValue{(lo.value + hi.value) / (m * mu),
                      Representation::kQuantileCovariance,
                      (lo.error + hi.error) / (m * mu)};
  }
  const IntegralEstimate est = integral(spec.kind);
  return IndexValue{est.value / (m * mu), Representation::kQuantileCovariance,
                    est.error / (m * mu)};
}

double lorenz_curve(const DistributionModel& model, double p,
                    const QuadratureConfig& cfg) {
  require_model(model);
  if (p < 0.0 || p > 1.0) {
    throw std::domain_error("lorenz_curve: p must lie in [0, 1]");
  }
  if (p == 0.0) return 0.0;
  const auto& quantile = model.quantile;
  const IntegralEstimate est = integrate_interval(
      [&](double t) { return quantile(clamp_unit_open(t)); }, 0.0, p, cfg);
  return est.value / model.mean;
}

double aaberge_D(const DistributionModel& model, int n,
                 const QuadratureConfig& cfg) {
  return aaberge_D_est(model, n, cfg).value;
}

double kakwani_G(const DistributionModel& model, int n,
                 const QuadratureConfig& cfg) {
  return kakwani_G_est(model, n, cfg).value;
}

IndexValue index_lorenz(const DistributionModel& model, const IndexSpec& spec,
                        const QuadratureConfig& cfg) {
  spec.validate();
  const int m = spec.m;
  const auto lower = [&] {
    const Estimated g = kakwani_G_est(model, m, cfg);
    return Estimated{g.value / m, g.error / m};
  };
  const auto upper = [&] {
    const Estimated d = aaberge_D_est(model, m - 1, cfg);
    const double factor = 1.0 - 1.0 / m;
    return Estimated{factor * d.value, factor * d.error};
  };
  Estimated est{0.0, 0.0};
  switch (spec.kind) {
    case IndexKind::kLower:
      est = lower();
      break;
    case IndexKind::kUpper:
      est = upper();
      break;
    case IndexKind::kCombined: {
      const Estimated lo = lower();
      const Estimated hi = upper();
      est = Estimated{lo.value + hi.value, lo.error + hi.error};
      break;
    }
  }
  return IndexValue{est.value, Representation::kLorenz, est.error};
}

IndexValue gamma_lower_index(const GammaParams& params, int m,
                             const QuadratureConfig& cfg) {
  require_m(m);
  params.validate();
  const double alpha = params.alpha;
  const IntegralEstimate est = integrate_semi_infinite(
      [alpha, m](double t) {
        return std::pow(1.0 - reg_lower_inc_gamma(alpha, t), m);
      },
      cfg, std::max(1.0, alpha));
  return IndexValue{(1.0 - est.value / alpha) / m,
                    Representation::kGammaClosedForm, est.error / (m * alpha)};
}

IndexValue gamma_upper_index(const GammaParams& params, int m,
                             const QuadratureConfig& cfg) {
  require_m(m);
  params.validate();
  const double alpha = params.alpha;
  const IntegralEstimate est = integrate_semi_infinite(
      [alpha, m](double t) {
        return 1.0 - std::pow(reg_lower_inc_gamma(alpha, t), m);
      },
      cfg, std::max(1.0, alpha));
  return IndexValue{(est.value / alpha - 1.0) / m,
                    Representation::kGammaClosedForm, est.error / (m * alpha)};
}

IndexValue gamma_index(const GammaParams& params, int m, IndexKind kind,
                       Representation repr, const QuadratureConfig& cfg) {
  require_m(m);
  params.validate();
  if (repr == Representation::kGammaClosedForm) {
    switch (kind) {
      case IndexKind::kLower:
        return gamma_lower_index(params, m, cfg);
      case IndexKind::kUpper:
        return gamma_upper_index(params, m, cfg);
      case IndexKind::kCombined: {
        const IndexValue lo = gamma_lower_index(params, m, cfg);
        const IndexValue hi = gamma_upper_index(params, m, cfg);
        return IndexValue{lo.value + hi.value, repr,
                          lo.est_error + hi.est_error};
      }
    }
  }
  const DistributionModel model = make_gamma_model(params);
  const IndexSpec spec{m, 1, kind};
  switch (repr) {
    case Representation::kSurvival: {
      if (kind == IndexKind::kLower) return lower_index_survival(model, m, cfg);
      if (kind == IndexKind::kUpper) return upper_index_survival(model, m, cfg);
      const IndexValue lo = lower_index_survival(model, m, cfg);
      const IndexValue hi = upper_index_survival(model, m, cfg);
      return IndexValue{lo.value + hi.value, repr, lo.est_error + hi.est_error};
    }
    case Representation::kQuantileCovariance:
      return index_quantile_covariance(model, spec, cfg);
    case Representation::kLorenz:
      return index_lorenz(model, spec, cfg);
    default:
      throw std::invalid_argument("gamma_index: unknown representation");
  }
}

ShiftConstants shift_constants(const DistributionModel& model, int m,
                               const QuadratureConfig& cfg) {
  require_m(m);
  require_model(model);
  const double gini = lower_index_survival(model, 2, cfg).value +
                      upper_index_survival(model, 2, cfg).value;
  const double lower = lower_index_survival(model, m, cfg).value;
  const double upper = upper_index_survival(model, m, cfg).value;
  if (!(lower > 0.0) || !(upper > 0.0)) {
    throw DegenerateDataError(
        "shift_constants: undefined for a degenerate distribution");
  }
  return ShiftConstants{model.mean * (gini - lower) / lower,
                        model.mean * (gini - upper) / upper};
}

DistributionModel make_gamma_model(const GammaParams& params,
                                   const Tolerance& tol) {
  params.validate();
  return DistributionModel{
      [params, tol](double x) { return x <= 0.0 ? 0.0 : gamma_cdf(params, x, tol); },
      [params, tol](double p) { return gamma_quantile(params, p, tol); },
      params.mean()};
}

DistributionModel shifted_model(const DistributionModel& model, double a) {
  if (a < 0.0) {
    throw std::invalid_argument("shifted_model: shift must be non-negative");
  }
  const auto cdf = model.cdf;
  const auto quantile = model.quantile;
  return DistributionModel{
      [cdf, a](double x) { return x < a ? 0.0 : cdf(x - a); },
      [quantile, a](double p) { return quantile(p) + a; },
      model.mean + a};
}

DistributionModel scaled_model(const DistributionModel& model, double b) {
  if (!(b > 0.0)) {
    throw std::invalid_argument("scaled_model: scale must be positive");
  }
  const auto cdf = model.cdf;
  const auto quantile = model.quantile;
  return DistributionModel{
      [cdf, b](double x) { return cdf(x / b); },
      [quantile, b](double p) { return quantile(p) * b; },
      model.mean * b};
}

}  // namespace ginidex
