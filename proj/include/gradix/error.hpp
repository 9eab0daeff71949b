/*
 *   Copyright 2026 The Gradix Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace gradix {

/// Root of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Relation-scheme precondition violated (subset, disjointness, shape).
class SchemeError : public Error {
 public:
  using Error::Error;
};

/// Operands live in different structures of degrees.
class LatticeMismatch : public Error {
 public:
  using Error::Error;
};

/// A finite table lattice failed one of the residuated-lattice axioms.
class LatticeValidationError : public Error {
 public:
  LatticeValidationError(std::string axiom, const std::string& detail)
      : Error("lattice axiom violated: " + axiom + ": " + detail), axiom_(std::move(axiom)) {}

  const std::string& axiom() const noexcept { return axiom_; }

 private:
  std::string axiom_;
};

/// Two tuples disagree on a shared attribute.
class NotJoinable : public Error {
 public:
  using Error::Error;
};

/// Operation only defined on the two-element Boolean lattice.
class UnsupportedLattice : public Error {
 public:
  using Error::Error;
};

/// Generic precondition failure (ranked universe, bad degree literal, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class UnboundSymbol : public Error {
 public:
  using Error::Error;
};

/// Syntax error with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// File could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace gradix
