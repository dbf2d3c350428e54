// Copyright 2026 The pctc-sim Authors
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

#include <stdexcept>
#include <string>
#include <utility>

namespace pctc {

/// Base class for all domain errors. `code()` is a stable machine-readable
/// identifier; the CLI maps it into structured JSON error output.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// Requested object exceeds the configured dense-simulation capacity.
class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& m) : Error("capacity", m) {}
};

/// Register name or order mismatch against a RegisterLayout.
class LayoutError : public Error {
 public:
  explicit LayoutError(const std::string& m) : Error("layout", m) {}
};

/// Measurement operators do not satisfy the completeness relation.
class MeasurementError : public Error {
 public:
  explicit MeasurementError(const std::string& m) : Error("measurement", m) {}
};

/// A state set is linearly dependent where independence is required.
class DependentSetError : public Error {
 public:
  explicit DependentSetError(const std::string& m) : Error("dependent_set", m) {}
};

/// The induced operator annihilates this particular input.
class ParadoxError : public Error {
 public:
  explicit ParadoxError(const std::string& m) : Error("paradox", m) {}
};

/// The induced operator is numerically the null operator; the map is
/// undefined for every input.
class NullEvolutionError : public Error {
 public:
  explicit NullEvolutionError(const std::string& m) : Error("null_evolution", m) {}
};

/// The Deutsch fixed-point iteration failed to reach the residual tolerance.
class NonConvergenceError : public Error {
 public:
  explicit NonConvergenceError(const std::string& m) : Error("non_convergence", m) {}
};

/// Factoring rejects primes before building any circuit.
class PrimeInputError : public Error {
 public:
  explicit PrimeInputError(const std::string& m) : Error("prime_input", m) {}
};

/// DIMACS parse failure, with the 1-based offending line.
class DimacsSyntaxError : public Error {
 public:
  DimacsSyntaxError(int line, const std::string& m)
      : Error("dimacs_syntax", "line " + std::to_string(line) + ": " + m), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// DIMACS header disagrees with the actual clause or variable counts.
class DimacsHeaderError : public Error {
 public:
  explicit DimacsHeaderError(const std::string& m) : Error("dimacs_header", m) {}
};

}  // namespace pctc
