// Copyright 2026 The ulc Authors
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

#ifndef ULC_ERRORS_H_
#define ULC_ERRORS_H_

#include <stdexcept>
#include <string>

namespace ulc {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input: bad rationals, bad JSON, wrong file schema.
class ParseError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its domain (negative dilation factor,
// non-ULC input to a realization, non-contiguous support, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The requested order d is smaller than the sequence degree m.
class OrderTooSmallError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Bodies live in different ambient dimensions.
class DimensionMismatchError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// An internal cross-check between two exact computations disagreed. This
// always indicates a bug and is never a property of the input.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace ulc

#endif  // ULC_ERRORS_H_
