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

// Finite-sample estimators of the extended Gini indices.  The statistics
// average a position-dependent kernel over all size-m index combinations
// j_1 < ... < j_m of the data:
//
//   lower:    X_{j_i} - min(X_{j_1..j_m})
//   upper:    max(X_{j_1..j_m}) - X_{j_i}
//   combined: max - min                      (the m-th Gini kernel)
//
// normalized by m times the sample mean.  estimate_brute_force enumerates
// the combinations and serves as the oracle; estimate_weighted computes
// the identical value in O(n log n) through closed-form combination
// counts.

#ifndef GINIDEX_CORE_ESTIMATORS_HPP_
#define GINIDEX_CORE_ESTIMATORS_HPP_

#include <vector>

#include "core/sample.hpp"

namespace ginidex {

enum class IndexKind { kLower, kUpper, kCombined };

struct IndexSpec {
  int m = 2;                       // subset size, >= 2
  int i = 1;                       // position within the index tuple, 1..m
  IndexKind kind = IndexKind::kLower;

  void validate() const;
};

enum class EstimatorAlgorithm { kBruteForce, kWeighted };

struct EstimateResult {
  double value;
  IndexSpec spec;
  std::size_t n;
  EstimatorAlgorithm algorithm;
};

// Exhaustive enumeration over all C(n, m) combinations; n <= 25.
EstimateResult estimate_brute_force(const Sample& data, const IndexSpec& spec);

// Combinatorial-weight algorithm; identical value, n limited only by memory.
EstimateResult estimate_weighted(const Sample& data, const IndexSpec& spec);

// Dispatch on algorithm.
EstimateResult estimate(const Sample& data, const IndexSpec& spec,
                        EstimatorAlgorithm algorithm);

// m-th Gini index estimator: the combined (range) kernel, independent of i.
EstimateResult estimate_mth_gini(const Sample& data, int m);

// Normalized combination weights, exposed for tests and diagnostics.
// position_weights[j-1] = C(j-1, i-1) C(n-j, m-i) / C(n, m), sum = 1.
std::vector<double> position_weights(std::size_t n, int m, int i);
// min_weights[k-1] = C(n-k, m-1) / C(n, m) over ascending value ranks.
std::vector<double> min_weights(std::size_t n, int m);
// max_weights[k-1] = C(k-1, m-1) / C(n, m).
std::vector<double> max_weights(std::size_t n, int m);

struct HeatmapCell {
  int m;
  int i;
  double value;
};

// Long-format grid of weighted estimates over 2 <= m <= m_max, 1 <= i <= m.
std::vector<HeatmapCell> heatmap_grid(const Sample& data, IndexKind kind,
                                      int m_max);

}  // namespace ginidex

#endif  // GINIDEX_CORE_ESTIMATORS_HPP_
