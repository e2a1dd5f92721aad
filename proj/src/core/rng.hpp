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

#ifndef GINIDEX_CORE_RNG_HPP_
#define GINIDEX_CORE_RNG_HPP_

#include <cstdint>
#include <random>

namespace ginidex {

// Deterministic random stream.  mt19937_64 is fully specified by the
// standard, and the uniform/normal transforms below avoid the
// implementation-defined std distributions, so identically seeded streams
// produce identical draws on every platform.
//
// Streams are single-owner: parallel code must derive one independent
// stream per work unit via derive().
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  // Independent stream keyed by (master, a, b); splitmix64-style mixing.
  static RandomStream derive(std::uint64_t master, std::uint64_t a,
                             std::uint64_t b);

  std::uint64_t next_u64() { return engine_(); }

  // Uniform draw on the open interval (0, 1); never returns an endpoint.
  double uniform() {
    return (static_cast<double>(engine_() >> 12) + 0.5) * 0x1.0p-52;
  }

  // Standard normal via the Marsaglia polar method (second draw cached).
  double normal();

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace ginidex

#endif  // GINIDEX_CORE_RNG_HPP_
