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

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mannheim/field.hpp"

namespace mannheim {

// Selects the quotient-ring modulus for polynomial codes.
enum class Modulus { XnMinus1, XnPlus1 };

// Polynomial over a residue field, stored as canonical-residue coefficients
// in ascending degree with no trailing zeros (the zero polynomial is the
// empty list). Values are immutable; all operations return new objects.
class Polynomial {
 public:
  // Reduces every coefficient and strips trailing zeros.
  Polynomial(FieldPtr field, std::vector<GaussInt> coeffs);

  static Polynomial zero(FieldPtr field) { return Polynomial(std::move(field), {}); }
  static Polynomial one(FieldPtr field) { return Polynomial(std::move(field), {GaussInt{1, 0}}); }

  // x^n - 1 or x^n + 1.
  static Polynomial modulus_poly(FieldPtr field, int n, Modulus m);

  // Comma-separated ascending coefficients in the Gaussian literal grammar,
  // e.g. "1+2i, -1+1i, -1i, 1".
  static Polynomial parse(FieldPtr field, std::string_view text);

  const FieldPtr& field() const { return field_; }
  const std::vector<GaussInt>& coeffs() const { return coeffs_; }

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  GaussInt leading_coeff() const { return is_zero() ? GaussInt{} : coeffs_.back(); }
  bool is_monic() const { return leading_coeff() == GaussInt{1, 0}; }

  // Scales by the inverse of the leading coefficient.
  // Throws DivisionByZeroPoly on the zero polynomial.
  Polynomial monic() const;

  // Horner evaluation.
  GaussInt eval(GaussInt a) const;

  std::string to_string() const;

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  friend bool operator==(const Polynomial& f, const Polynomial& g);

 private:
  FieldPtr field_;
  std::vector<GaussInt> coeffs_;
};

// Exact division with remainder: f = q * g + r with deg r < deg g.
// Throws DivisionByZeroPoly when g is zero, FieldMismatch on mixed fields.
std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& f, const Polynomial& g);

// True iff g divides f exactly. g must be nonzero.
bool divides(const Polynomial& g, const Polynomial& f);

// Which of the two degree-(p-1)/4 binomials x^((p-1)/4) -/+ i to factor.
enum class QuarticSign { MinusI, PlusI };

// The (p-1)/4 roots alpha^1, alpha^5, ..., alpha^(p-4) (exponent step 4)
// of x^((p-1)/4) - i (using alpha1) or x^((p-1)/4) + i (using alpha2).
// Multiplying out (x - root) over the returned list reconstructs the
// binomial exactly.
std::vector<GaussInt> quartic_root_factor(const FieldPtr& field, QuarticSign sign);

// Outcome of checking the three factorization identities tying the quartic
// root schedules to x^((p-1)/2) + 1 and x^(p-1) - 1.
struct FactorizationReport {
  bool quartic_minus_ok = false;  // product over MinusI roots == x^((p-1)/4) - i
  bool quartic_plus_ok = false;   // product over PlusI roots == x^((p-1)/4) + i
  bool half_identity_ok = false;  // product of both root sets == x^((p-1)/2) + 1
  bool full_identity_ok = false;  // (x^((p-1)/2) + 1)(x^((p-1)/2) - 1) == x^(p-1) - 1
  std::string detail;             // empty when everything passed

  bool all_ok() const {
    return quartic_minus_ok && quartic_plus_ok && half_identity_ok && full_identity_ok;
  }
};

FactorizationReport verify_global_factorizations(const FieldPtr& field);

}  // namespace mannheim
