// Copyright 2026 The QReliefF Authors
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

namespace qrelieff {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Register would exceed the simulator's memory cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Qubit index out of range, or overlapping target/control sets.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// An operation's documented precondition does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Postselection onto a branch with (numerically) zero probability.
class DegeneratePostselectionError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A search was requested with no marked element.
class NoSolutionError : public Error {
 public:
  using Error::Error;
};

/// Malformed or degenerate input data.
class DataError : public Error {
 public:
  using Error::Error;
};

/// Invalid run configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace qrelieff
