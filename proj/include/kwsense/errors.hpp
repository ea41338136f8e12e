// Copyright 2026 the kwsense authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kwsense {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file. `line()` is 1-based, 0 when not line-oriented.
class ParseError : public Error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : Error(format(source, line, what)), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  static std::string format(const std::string& source, std::size_t line,
                            const std::string& what) {
    std::string msg = source;
    if (line > 0) msg += ":" + std::to_string(line);
    return msg + ": " + what;
  }

  std::size_t line_;
};

/// Invalid parameters or a missing strategy input, detected before scoring.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A lexicon that violates its structural invariants.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Arithmetic that is undefined for the given inputs (zero vectors,
/// empty aggregates, degenerate rank vectors).
class DomainError : public Error {
 public:
  using Error::Error;
};

class UnknownKeywordError : public Error {
 public:
  explicit UnknownKeywordError(const std::string& keyword)
      : Error("unknown keyword: " + keyword), keyword_(keyword) {}

  const std::string& keyword() const noexcept { return keyword_; }

 private:
  std::string keyword_;
};

}  // namespace kwsense
