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

#ifndef GINIDEX_CORE_TOLERANCE_HPP_
#define GINIDEX_CORE_TOLERANCE_HPP_

#include <stdexcept>

namespace ginidex {

// Convergence control for iterative scalar algorithms.
struct Tolerance {
  double rel_eps = 1e-12;
  double abs_eps = 1e-15;
  int max_iter = 500;

  void validate() const {
    if (!(rel_eps > 0.0) || abs_eps < 0.0 || max_iter < 1) {
      throw std::invalid_argument("Tolerance: rel_eps > 0, abs_eps >= 0 and max_iter >= 1 required");
    }
  }
};

}  // namespace ginidex

#endif  // GINIDEX_CORE_TOLERANCE_HPP_
