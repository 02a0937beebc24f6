// Copyright 2026 The silaudit Authors
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

#ifndef SILAUDIT_ERROR_HPP_
#define SILAUDIT_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace silaudit {

// Base class for all errors raised by the library. The CLI maps these to
// exit code 2 (data error); anything CLI11 raises maps to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed protocol or config text. Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Defective or unsupported audio payload.
class AudioError : public Error {
 public:
  using Error::Error;
};

// Inconsistent inputs discovered while joining or loading corpus data.
class DataError : public Error {
 public:
  using Error::Error;
};

// Filesystem failures.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace silaudit

#endif  // SILAUDIT_ERROR_HPP_
