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

#ifndef GINIDEX_CORE_SAMPLE_HPP_
#define GINIDEX_CORE_SAMPLE_HPP_

#include <cstddef>
#include <vector>

namespace ginidex {

// Observations in their original order.  Construction enforces the
// invariants every estimator relies on: n >= 1, all values non-negative,
// positive total.  Immutable afterwards, safe to share across threads.
class Sample {
 public:
  explicit Sample(std::vector<double> values);

  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double sum() const { return sum_; }
  double mean() const { return sum_ / static_cast<double>(values_.size()); }

 private:
  std::vector<double> values_;
  double sum_;
};

}  // namespace ginidex

#endif  // GINIDEX_CORE_SAMPLE_HPP_
