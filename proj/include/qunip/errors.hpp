// Copyright 2026 The qunip Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qunip {

/// Base of every error raised by the library. Messages name the failing
/// operation and the offending value.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A size exceeds a configured resource guard (qubit cap, path-count guard,
/// integer overflow).
class CapacityError : public Error {
  public:
    using Error::Error;
};

/// An argument lies outside the operation's domain (index out of range,
/// dimension mismatch, malformed cut).
class DomainError : public Error {
  public:
    using Error::Error;
};

/// A value violates a type invariant (non-unitary gate, unnormalized state).
class ValidationError : public Error {
  public:
    using Error::Error;
};

/// Conditioning on an outcome whose probability is (numerically) zero.
class PostSelectionError : public Error {
  public:
    using Error::Error;
};

/// An algorithm promise was not met (e.g. Deutsch-Jozsa on a function that
/// is neither constant nor balanced).
class PreconditionError : public Error {
  public:
    using Error::Error;
};

/// Training produced a non-finite loss.
class DivergenceError : public Error {
  public:
    DivergenceError(const std::string& what, long epoch) : Error(what), epoch_(epoch) {}
    [[nodiscard]] long epoch() const noexcept { return epoch_; }

  private:
    long epoch_;
};

/// Malformed input file (state dump, lattice, pattern file, CSV).
class ParseError : public Error {
  public:
    using Error::Error;
};

} // namespace qunip
