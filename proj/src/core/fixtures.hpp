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

#ifndef GINIDEX_CORE_FIXTURES_HPP_
#define GINIDEX_CORE_FIXTURES_HPP_

#include <array>
#include <string_view>

#include "core/sample.hpp"

namespace ginidex {

struct CountryGdp {
  std::string_view country;
  double gdp;  // international-$ at 2021 prices
};

// 2023 GDP per capita for the eleven South American countries.
// Source: Our World in Data, https://ourworldindata.org/grapher/gdp-per-capita-worldbank
// (World Bank, 2023 values, international-$ at 2021 prices).
// Mirrored in data/gdp2023.csv.
extern const std::array<CountryGdp, 11> kGdp2023;

// The fixture as a Sample, in table order (descending GDP).
Sample gdp2023_sample();

// Looks up a named builtin dataset; currently only "gdp2023".
// Throws std::invalid_argument for unknown names.
Sample builtin_sample(std::string_view name);

}  // namespace ginidex

#endif  // GINIDEX_CORE_FIXTURES_HPP_
