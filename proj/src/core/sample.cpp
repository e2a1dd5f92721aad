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

#include "core/sample.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "core/errors.hpp"

namespace ginidex {

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw std::invalid_argument("Sample: at least one observation required");
  }
  sum_ = 0.0;
  for (double v : values_) {
    if (!std::isfinite(v) || v < 0.0) {
      throw std::invalid_argument("Sample: observations must be finite and non-negative");
    }
    sum_ += v;
  }
  if (!(sum_ > 0.0)) {
    throw DegenerateDataError("Sample: total must be positive");
  }
}

}  // namespace ginidex
