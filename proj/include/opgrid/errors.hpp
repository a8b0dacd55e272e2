// Copyright 2026 The opgrid Authors
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

namespace opgrid {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not conform.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Non-finite floating input or a failed numerical iteration.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Requested size exceeds a hard desk-scale cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A constructor could not produce a valid object.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// A grid transform hit a failing identity.
class TransformError : public Error {
 public:
  using Error::Error;
};

/// A factor of a decomposition into ones vanished or an index set was invalid.
class DecompositionError : public Error {
 public:
  using Error::Error;
};

/// Input is (numerically) zero where a nonzero value is required.
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

/// A precondition on plain arguments was violated.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

}  // namespace opgrid
