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

#ifndef GINIDEX_CORE_DATASET_HPP_
#define GINIDEX_CORE_DATASET_HPP_

#include <optional>
#include <string>

#include "core/sample.hpp"

namespace ginidex {

// Reads observations from a CSV file.
//
// Without a column name the file must hold one value per row; a
// non-numeric first row is treated as a header.  With a column name the
// first row must be a header containing that column and the file may have
// any number of columns.  Rows that fail to parse are errors, never
// silently skipped; blank lines are ignored.
Sample read_csv(const std::string& path,
                const std::optional<std::string>& column = std::nullopt);

// Same parsing rules applied to in-memory text (used by tests).
Sample parse_csv_text(const std::string& text,
                      const std::optional<std::string>& column = std::nullopt);

}  // namespace ginidex

#endif  // GINIDEX_CORE_DATASET_HPP_
