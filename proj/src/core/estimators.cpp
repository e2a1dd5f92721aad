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

#include "core/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "core/errors.hpp"

namespace ginidex {

void IndexSpec::validate() const {
  if (m < 2) {
    throw std::invalid_argument("IndexSpec: m must be at least 2");
  }
  if (i < 1 || i > m) {
    throw std::invalid_argument("IndexSpec: i must lie in 1..m");
  }
}

namespace {

void require_size(std::size_t n, int m) {
  if (static_cast<std::size_t>(m) > n) {
    throw InsufficientSampleError("estimator: sample size " + std::to_string(n) +
                                  " is below subset size m = " + std::to_string(m));
  }
}

// Ranks of the data in ascending value order, ties broken by original index.
std::vector<std::size_t> ascending_order(const std::vector<double>& x) {
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&x](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  return order;
}

}  // namespace

// All weight families are built from ratio recurrences started at their
// mode and normalized by their running sum, so no binomial coefficient is
// ever formed explicitly and the normalization is exact by construction
// (Vandermonde / hockey-stick identities make the true sums C(n, m)).

std::vector<double> position_weights(std::size_t n, int m, int i) {
  std::vector<double> w(n, 0.0);
  const std::size_t j_lo = static_cast<std::size_t>(i);
  const std::size_t j_hi = n - static_cast<std::size_t>(m - i);
  // Mode of C(j-1, i-1) C(n-j, m-i) over j.
  std::size_t peak = static_cast<std::size_t>(
      static_cast<double>(i) * (static_cast<double>(n) + 1.0) / (m + 1.0));
  peak = std::clamp(peak, j_lo, j_hi);

  const auto ratio = [&](std::size_t j) {
    // w(j+1) / w(j)
    return (static_cast<double>(j) / static_cast<double>(j - i + 1)) *
           (static_cast<double>(n - j - m + i) / static_cast<double>(n - j));
  };

  w[peak - 1] = 1.0;
  for (std::size_t j = peak; j < j_hi; ++j) w[j] = w[j - 1] * ratio(j);
  for (std::size_t j = peak; j > j_lo; --j) w[j - 2] = w[j - 1] / ratio(j - 1);

  double total = 0.0;
  for (double v : w) total += v;
  for (double& v : w) v /= total;
  return w;
}

std::vector<double> min_weights(std::size_t n, int m) {
  std::vector<double> w(n, 0.0);
  w[0] = 1.0;
  const std::size_t k_hi = n - static_cast<std::size_t>(m) + 1;
  for (std::size_t k = 1; k < k_hi; ++k) {
    // C(n-k-1, m-1) / C(n-k, m-1)
    w[k] = w[k - 1] * static_cast<double>(n - k - m + 1) /
           static_cast<double>(n - k);
  }
  double total = 0.0;
  for (double v : w) total += v;
  for (double& v : w) v /= total;
  return w;
}

std::vector<double> max_weights(std::size_t n, int m) {
  std::vector<double> w(n, 0.0);
  w[n - 1] = 1.0;
  for (std::size_t k = n - 1; k >= static_cast<std::size_t>(m); --k) {
    // C(k-1, m-1) / C(k, m-1) with w[k-1] holding rank k
    w[k - 1] = w[k] * static_cast<double>(k + 1 - m) / static_cast<double>(k);
  }
  double total = 0.0;
  for (double v : w) total += v;
  for (double& v : w) v /= total;
  return w;
}

EstimateResult estimate_weighted(const Sample& data, const IndexSpec& spec) {
  spec.validate();
  const std::vector<double>& x = data.values();
  const std::size_t n = x.size();
  require_size(n, spec.m);

  const std::vector<std::size_t> order = ascending_order(x);

  double min_mean = 0.0, max_mean = 0.0, pos_mean = 0.0;
  if (spec.kind != IndexKind::kUpper) {
    const std::vector<double> wmin = min_weights(n, spec.m);
    for (std::size_t k = 0; k < n; ++k) min_mean += x[order[k]] * wmin[k];
  }
  if (spec.kind != IndexKind::kLower) {
    const std::vector<double> wmax = max_weights(n, spec.m);
    for (std::size_t k = 0; k < n; ++k) max_mean += x[order[k]] * wmax[k];
  }
  if (spec.kind != IndexKind::kCombined) {
    const std::vector<double> wpos = position_weights(n, spec.m, spec.i);
    for (std::size_t j = 0; j < n; ++j) pos_mean += x[j] * wpos[j];
  }

  double kernel_mean = 0.0;
  switch (spec.kind) {
    case IndexKind::kLower:    kernel_mean = pos_mean - min_mean; break;
    case IndexKind::kUpper:    kernel_mean = max_mean - pos_mean; break;
    case IndexKind::kCombined: kernel_mean = max_mean - min_mean; break;
  }
  return EstimateResult{kernel_mean / (spec.m * data.mean()), spec, n,
                        EstimatorAlgorithm::kWeighted};
}

EstimateResult estimate_brute_force(const Sample& data, const IndexSpec& spec) {
  spec.validate();
  const std::vector<double>& x = data.values();
  const std::size_t n = x.size();
  require_size(n, spec.m);
  if (n > 25) {
    throw std::invalid_argument(
        "estimate_brute_force: enumeration limited to n <= 25");
  }

  const int m = spec.m;
  std::vector<std::size_t> c(m);
  std::iota(c.begin(), c.end(), std::size_t{0});

  double kernel_sum = 0.0;
  double combos = 0.0;
  for (;;) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (int t = 0; t < m; ++t) {
      lo = std::min(lo, x[c[t]]);
      hi = std::max(hi, x[c[t]]);
    }
    switch (spec.kind) {
      case IndexKind::kLower:    kernel_sum += x[c[spec.i - 1]] - lo; break;
      case IndexKind::kUpper:    kernel_sum += hi - x[c[spec.i - 1]]; break;
      case IndexKind::kCombined: kernel_sum += hi - lo; break;
    }
    combos += 1.0;

    int t = m - 1;
    while (t >= 0 && c[t] == n - m + t) --t;
    if (t < 0) break;
    ++c[t];
    for (int u = t + 1; u < m; ++u) c[u] = c[u - 1] + 1;
  }

  return EstimateResult{(kernel_sum / combos) / (m * data.mean()), spec, n,
                        EstimatorAlgorithm::kBruteForce};
}

EstimateResult estimate(const Sample& data, const IndexSpec& spec,
                        EstimatorAlgorithm algorithm) {
  return algorithm == EstimatorAlgorithm::kBruteForce
             ? estimate_brute_force(data, spec)
             : estimate_weighted(data, spec);
}

EstimateResult estimate_mth_gini(const Sample& data, int m) {
  return estimate_weighted(data, IndexSpec{m, 1, IndexKind::kCombined});
}

std::vector<HeatmapCell> heatmap_grid(const Sample& data, IndexKind kind,
                                      int m_max) {
  if (m_max < 2) {
    throw std::invalid_argument("heatmap_grid: m_max must be at least 2");
  }
  require_size(data.size(), m_max);
  std::vector<HeatmapCell> cells;
  cells.reserve(static_cast<std::size_t>(m_max) * (m_max + 1) / 2 - 1);
  for (int m = 2; m <= m_max; ++m) {
    for (int i = 1; i <= m; ++i) {
      const EstimateResult r = estimate_weighted(data, IndexSpec{m, i, kind});
      cells.push_back(HeatmapCell{m, i, r.value});
    }
  }
  return cells;
}

}  // namespace ginidex
