/* Copyright 2026 The palogic Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef PALOGIC_ERROR_HPP_
#define PALOGIC_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace palogic {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `line()` is 1-based, or 0 when not line oriented.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line), detail_(what) {}

  /// The same error attributed to a file: "<source>:<line>: <detail>".
  ParseError(const std::string& source, const ParseError& inner)
      : Error(source + (inner.line_ ? ":" + std::to_string(inner.line_) : std::string()) + ": " + inner.detail_),
        line_(inner.line_),
        detail_(inner.detail_) {}

  std::size_t line() const { return line_; }
  const std::string& detail() const { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

}  // namespace palogic

#endif  // PALOGIC_ERROR_HPP_
