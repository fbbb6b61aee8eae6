// Copyright 2026 The mannheim authors
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

namespace mannheim {

// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Integer arithmetic left the representable range instead of wrapping.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// Malformed text input (Gaussian literals, polynomial lists, spec documents).
class ParseError : public Error {
 public:
  using Error::Error;
};

// The requested modulus does not define a residue field handled here.
class InvalidModulus : public Error {
 public:
  using Error::Error;
};

// Multiplicative inverse of zero requested.
class ZeroInverse : public Error {
 public:
  using Error::Error;
};

// Integer argument outside its documented range, or a value that is not a
// canonical residue where one is required.
class OutOfRange : public Error {
 public:
  using Error::Error;
};

// Qudit position outside [0, n).
class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

// Operands belong to residue fields with different moduli.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

// Vector or message length does not match the expected dimension.
class LengthMismatch : public Error {
 public:
  using Error::Error;
};

// State vectors of different field or qudit count compared.
class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

// Polynomial division by the zero polynomial.
class DivisionByZeroPoly : public Error {
 public:
  using Error::Error;
};

// Generator polynomial does not divide the selected modulus polynomial.
class NotADivisor : public Error {
 public:
  using Error::Error;
};

// A code with no nonzero codeword where one is required.
class ZeroCode : public Error {
 public:
  using Error::Error;
};

// Exhaustive enumeration would exceed the configured cap.
class EnumerationTooLarge : public Error {
 public:
  using Error::Error;
};

// No codeword within the requested decoding radius.
class NoDecode : public Error {
 public:
  using Error::Error;
};

// A full state vector was requested beyond the amplitude-count cap.
class CapacityExceeded : public Error {
 public:
  using Error::Error;
};

// The inner code of a nested pair is not contained in the outer one.
class NotNested : public Error {
 public:
  using Error::Error;
};

// The given vector is not a codeword of the code it was claimed to be in.
class NotACodeword : public Error {
 public:
  using Error::Error;
};

// An internal postcondition failed; indicates a bug, not a usage error.
class InternalInvariant : public Error {
 public:
  using Error::Error;
};

}  // namespace mannheim
