// Copyright 2026 The cirng Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CIRNG_ERRORS_HPP_
#define CIRNG_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cirng {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A value violates an operation's precondition or a type invariant.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// The requested work exceeds a configured size limit.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// A scripted entropy source ran out of entries.
class SourceExhausted : public Error {
 public:
  using Error::Error;
};

// The stream is shorter than the named test's minimum length.
class StreamTooShort : public Error {
 public:
  StreamTooShort(std::string test, std::size_t minimum, std::size_t actual)
      : Error(test + ": stream of " + std::to_string(actual) +
              " bits is shorter than the minimum of " +
              std::to_string(minimum)),
        test_(std::move(test)),
        minimum_(minimum) {}

  const std::string& test() const noexcept { return test_; }
  std::size_t minimum() const noexcept { return minimum_; }

 private:
  std::string test_;
  std::size_t minimum_;
};

// Text input could not be parsed. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace cirng

#endif  // CIRNG_ERRORS_HPP_
