// Copyright 2026 The twoq Authors
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

namespace twoq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input matrix failed the unitarity check.
class NonUnitaryError : public Error {
 public:
  using Error::Error;
};

/// The supplied resource gate is local or SWAP-class and cannot generate
/// entanglement.
class NotEntanglingError : public Error {
 public:
  using Error::Error;
};

/// A numeric argument is outside the domain of the requested operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A constructed circuit or decomposition did not reproduce its target.
/// Always indicates a bug; never a user error.
class VerificationError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input (angle expressions, matrix files, circuit documents).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace twoq
