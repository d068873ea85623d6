// Copyright 2026 The Authors.
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

namespace extalg {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live in different ambient algebras or have incompatible shapes.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Scalars from two different coefficient fields met in one expression.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

// An argument is outside the documented domain of an operation.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// The input is well formed but violates a mathematical hypothesis, for
// example a family that fails the exchange axiom or a bracket that fails
// the Jacobi identity.
class DomainError : public Error {
 public:
  using Error::Error;
};

}  // namespace extalg
