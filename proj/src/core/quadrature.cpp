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

#include "core/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>
#include <vector>

#include "core/errors.hpp"

namespace ginidex {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK dqk15).
// Even-indexed abscissae are Kronrod-only; odd-indexed plus the midpoint
// form the embedded Gauss rule.
const double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
const double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
const double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  int depth;
};

struct SegmentWorse {
  bool operator()(const Segment& lhs, const Segment& rhs) const {
    return lhs.error < rhs.error;
  }
};

double eval_checked(const Integrand& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) {
    throw std::domain_error("quadrature: non-finite integrand value at x = " +
                            std::to_string(x));
  }
  return y;
}

Segment gk15(const Integrand& f, double a, double b, int depth) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = eval_checked(f, c);
  double resk = kWgk[7] * fc;
  double resg = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const double f1 = eval_checked(f, c - dx);
    const double f2 = eval_checked(f, c + dx);
    resk += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }
  return Segment{a, b, resk * h, std::fabs((resk - resg) * h), depth};
}

constexpr int kMaxSegments = 200000;

}  // namespace

IntegralEstimate integrate_interval(const Integrand& f, double a, double b,
                                    const QuadratureConfig& cfg) {
  cfg.validate();
  if (a == b) return {0.0, 0.0};
  const double width_floor = 1e-14 * std::fabs(b - a);

  std::priority_queue<Segment, std::vector<Segment>, SegmentWorse> active;
  std::vector<Segment> frozen;  // at depth cap or width floor
  active.push(gk15(f, a, b, 0));

  double total = active.top().value;
  double total_err = active.top().error;
  int n_segments = 1;

  while (total_err > std::max(cfg.abs_tol, cfg.rel_tol * std::fabs(total))) {
    if (active.empty() || n_segments >= kMaxSegments) {
      throw ToleranceError("quadrature: tolerance not met", total, total_err);
    }
    const Segment worst = active.top();
    active.pop();
    if (worst.depth >= cfg.max_depth || (worst.b - worst.a) <= width_floor) {
      frozen.push_back(worst);
      continue;
    }
    const double mid = 0.5 * (worst.a + worst.b);
    const Segment left = gk15(f, worst.a, mid, worst.depth + 1);
    const Segment right = gk15(f, mid, worst.b, worst.depth + 1);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    active.push(left);
    active.push(right);
    ++n_segments;
  }

  // Re-sum for a result free of incremental-update drift.
  double value = 0.0, error = 0.0;
  for (const Segment& s : frozen) {
    value += s.value;
    error += s.error;
  }
  while (!active.empty()) {
    value += active.top().value;
    error += active.top().error;
    active.pop();
  }
  return {value, error};
}

IntegralEstimate integrate_semi_infinite(const Integrand& f,
                                         const QuadratureConfig& cfg,
                                         double initial_scale) {
  cfg.validate();
  if (!(initial_scale > 0.0)) {
    throw std::invalid_argument("integrate_semi_infinite: initial_scale must be positive");
  }

  double upper = initial_scale;
  double max_abs = 0.0;
  for (int i = 0; i < 16; ++i) {
    max_abs = std::max(max_abs,
                       std::fabs(eval_checked(f, (i + 0.5) / 16.0 * upper)));
  }
  int doublings = 0;
  while (std::fabs(eval_checked(f, upper)) >=
         cfg.tail_cut * std::max(max_abs, 1e-300)) {
    max_abs = std::max(max_abs, std::fabs(eval_checked(f, 0.75 * upper)));
    max_abs = std::max(max_abs, std::fabs(eval_checked(f, upper)));
    upper *= 2.0;
    if (++doublings > 960 || upper > 1e300) {
      throw ToleranceError("integrate_semi_infinite: integrand tail does not decay",
                           0.0, std::numeric_limits<double>::infinity());
    }
  }
  if (max_abs == 0.0) return {0.0, 0.0};
  return integrate_interval(f, 0.0, upper, cfg);
}

IntegralEstimate integrate_unit(const Integrand& f, const QuadratureConfig& cfg) {
  return integrate_interval(f, 0.0, 1.0, cfg);
}

}  // namespace ginidex
