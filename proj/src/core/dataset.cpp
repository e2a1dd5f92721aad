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

#include "core/dataset.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "core/errors.hpp"

namespace ginidex {

namespace {

std::string trim(const std::string& s) {
  std::size_t begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  std::size_t end = s.find_last_not_of(" \t\r");
  std::string out = s.substr(begin, end - begin + 1);
  if (out.size() >= 2 && out.front() == '"' && out.back() == '"') {
    out = out.substr(1, out.size() - 2);
  }
  return out;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) fields.push_back(trim(field));
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

bool parse_number(const std::string& token, double& out) {
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc{} && ptr == end && !token.empty();
}

Sample parse_lines(const std::vector<std::string>& lines,
                   const std::optional<std::string>& column) {
  std::size_t start = 0;
  std::size_t col_index = 0;

  if (column.has_value()) {
    if (lines.empty()) throw ParseError("csv: empty input");
    const std::vector<std::string> header = split_fields(lines[0]);
    bool found = false;
    for (std::size_t c = 0; c < header.size(); ++c) {
      if (header[c] == *column) {
        col_index = c;
        found = true;
        break;
      }
    }
    if (!found) {
      throw ParseError("csv: column '" + *column + "' not found in header");
    }
    start = 1;
  } else if (!lines.empty()) {
    // Optional single-token header.
    const std::vector<std::string> first = split_fields(lines[0]);
    double ignored;
    if (first.size() == 1 && !parse_number(first[0], ignored)) start = 1;
  }

  std::vector<double> values;
  for (std::size_t row = start; row < lines.size(); ++row) {
    const std::vector<std::string> fields = split_fields(lines[row]);
    if (!column.has_value() && fields.size() != 1) {
      throw ParseError("csv: expected a single column at line " +
                       std::to_string(row + 1) +
                       " (use a named column for multi-column files)");
    }
    if (col_index >= fields.size()) {
      throw ParseError("csv: missing field at line " + std::to_string(row + 1));
    }
    double v;
    if (!parse_number(fields[col_index], v)) {
      throw ParseError("csv: non-numeric value '" + fields[col_index] +
                       "' at line " + std::to_string(row + 1));
    }
    values.push_back(v);
  }
  if (values.empty()) throw ParseError("csv: no data rows");
  return Sample(std::move(values));
}

}  // namespace

Sample parse_csv_text(const std::string& text,
                      const std::optional<std::string>& column) {
  std::vector<std::string> lines;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (!trim(line).empty()) lines.push_back(line);
  }
  return parse_lines(lines, column);
}

Sample read_csv(const std::string& path,
                const std::optional<std::string>& column) {
  std::ifstream in(path);
  if (!in) throw ParseError("csv: cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_csv_text(buffer.str(), column);
}

}  // namespace ginidex
