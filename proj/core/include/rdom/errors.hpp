// Copyright 2026 The rdom Authors.
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

#ifndef RDOM_ERRORS_HPP_
#define RDOM_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rdom {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input. `line()` is 1-based; 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what
                        : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A vertex id outside [0, n).
class IndexError : public Error {
 public:
  using Error::Error;
};

// A caller broke an operation precondition (e.g. u in A for a projection).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// An exponential oracle or counter refused to run past its configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace rdom

#endif  // RDOM_ERRORS_HPP_
