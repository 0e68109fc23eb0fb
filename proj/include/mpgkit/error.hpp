// Copyright 2026 The mpgkit Authors
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
#include <cstdint>
#include <stdexcept>
#include <string>

namespace mpgkit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation requiring a graph without negative cycles received one.
class NegativeCycleError : public Error {
 public:
  using Error::Error;
};

class NotAZeroCycleError : public Error {
 public:
  using Error::Error;
};

/// A configurable enumeration or search limit would be exceeded.
class CapExceededError : public Error {
 public:
  using Error::Error;
};

/// A weight outside the automaton alphabet was read.
class AlphabetMismatchError : public Error {
 public:
  using Error::Error;
};

class InvalidSequenceError : public Error {
 public:
  using Error::Error;
};

/// Raised when a graph expected to be universal fails to receive a
/// homomorphism from one of the test graphs.
class HomomorphismNotFoundError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Syntax or structural error in an input file, with 1-based position.
class ParseError : public Error {
 public:
  enum class Kind { Syntax, DeadEndVertex, UnknownVertex, DuplicateDeclaration };

  ParseError(Kind kind, std::size_t line, std::size_t column,
             const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
              message),
        kind_(kind),
        line_(line),
        column_(column) {}

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  Kind kind_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace mpgkit
