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

#include "core/fixtures.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace ginidex {

const std::array<CountryGdp, 11> kGdp2023 = {{
    {"Guyana", 49315.16},
    {"Uruguay", 31019.31},
    {"Chile", 29462.64},
    {"Argentina", 27104.98},
    {"Suriname", 19043.71},
    {"Brazil", 19018.24},
    {"Colombia", 18692.38},
    {"Paraguay", 15783.11},
    {"Peru", 15294.26},
    {"Ecuador", 14472.32},
    {"Bolivia", 9843.97},
}};

Sample gdp2023_sample() {
  std::vector<double> values;
  values.reserve(kGdp2023.size());
  for (const CountryGdp& row : kGdp2023) values.push_back(row.gdp);
  return Sample(std::move(values));
}

Sample builtin_sample(std::string_view name) {
  if (name == "gdp2023") return gdp2023_sample();
  throw std::invalid_argument("unknown builtin dataset '" + std::string(name) + "'");
}

}  // namespace ginidex
