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

#ifndef GINIDEX_CORE_ERRORS_HPP_
#define GINIDEX_CORE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace ginidex {

// Iterative scheme hit its iteration cap before meeting tolerance.
class NonConvergenceError : public std::runtime_error {
 public:
  explicit NonConvergenceError(const std::string& what)
      : std::runtime_error(what) {}
};

// Quadrature could not reach the requested tolerance; carries the
// achieved error estimate so callers can decide whether to accept.
class ToleranceError : public std::runtime_error {
 public:
  ToleranceError(const std::string& what, double estimate, double achieved)
      : std::runtime_error(what), estimate_(estimate), achieved_(achieved) {}
  double estimate() const { return estimate_; }
  double achieved_error() const { return achieved_; }

 private:
  double estimate_;
  double achieved_;
};

// Sample too small for the requested subset size (n < m).
class InsufficientSampleError : public std::invalid_argument {
 public:
  explicit InsufficientSampleError(const std::string& what)
      : std::invalid_argument(what) {}
};

// Data carries no usable signal for the requested operation
// (all observations equal, zero total mass, non-positive values in a
// positive-support fit, ...).
class DegenerateDataError : public std::invalid_argument {
 public:
  explicit DegenerateDataError(const std::string& what)
      : std::invalid_argument(what) {}
};

// Malformed input file or row.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ginidex

#endif  // GINIDEX_CORE_ERRORS_HPP_
