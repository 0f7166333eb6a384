// Copyright 2026 The xamr Authors.
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

#ifndef XAMR_ERROR_HPP_
#define XAMR_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace xamr {

// Base class for all errors raised by the toolkit.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

// Penman syntax error with 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string &msg, int line, int column)
      : Error(msg + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// File could not be read or written.
class IoError : public Error {
 public:
  explicit IoError(const std::string &msg) : Error(msg) {}
};

// Input data violates a documented contract (counts, formats, alignment).
class DataError : public Error {
 public:
  explicit DataError(const std::string &msg) : Error(msg) {}
};

}  // namespace xamr

#endif  // XAMR_ERROR_HPP_
