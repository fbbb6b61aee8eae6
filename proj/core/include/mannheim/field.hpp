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

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mannheim/gaussian.hpp"

namespace mannheim {

class PrimeField;
using FieldPtr = std::shared_ptr<const PrimeField>;

// The residue field of the Gaussian integers modulo pi, where
// p = N(pi) is an odd prime congruent to 1 mod 4. Residues are the fixed
// points of the rounding reduction
//
//   reduce(z) = z - round(z * conj(pi) / p) * pi,
//
// with real and imaginary parts rounded to the nearest integer separately.
// Exact half fractions cannot occur for Gaussian-integer inputs (the
// fractional parts are multiples of 1/p with p odd), so no tie rule exists;
// the implementation asserts this instead of choosing one.
//
// The map project : residue -> {0..p-1} defined by residues()[g] <-> g is a
// ring isomorphism onto the integers mod p, which is what makes all linear
// algebra here runnable on plain integer labels. Immutable after
// construction; every operation is a pure function and safe to call
// concurrently.
class PrimeField {
 public:
  // Validates the modulus (norm an odd prime, p = 1 mod 4, p < 10^4 by
  // trial division) and precomputes residue, weight and inverse tables.
  // The modulus is taken exactly as supplied; 4+i and 4-i give different
  // (conjugated) residue sets and are deliberately not normalized.
  static FieldPtr make(GaussInt pi);

  GaussInt modulus() const { return pi_; }
  std::int64_t p() const { return p_; }

  // Canonical residues in project order: residues()[g] = lift(g).
  const std::vector<GaussInt>& residues() const { return residues_; }

  // Primitive elements of order p-1 whose (p-1)/4-th powers are i and -i
  // respectively; the first qualifying elements in project order.
  GaussInt alpha1() const { return alpha1_; }
  GaussInt alpha2() const { return alpha2_; }

  GaussInt reduce(GaussInt z) const;
  bool is_canonical(GaussInt a) const;

  // Field arithmetic; results are always canonical. Inputs are expected to
  // be canonical but any representative of the class gives the same result.
  GaussInt add(GaussInt a, GaussInt b) const { return reduce(a + b); }
  GaussInt sub(GaussInt a, GaussInt b) const { return reduce(a - b); }
  GaussInt mul(GaussInt a, GaussInt b) const { return reduce(a * b); }
  GaussInt neg(GaussInt a) const { return reduce(-a); }

  // Inverse computed as a^(p-2) in the integer image of the field.
  // Throws ZeroInverse on zero.
  GaussInt invert(GaussInt a) const;

  // a^e for e >= 0 (e < 0 inverts first).
  GaussInt pow(GaussInt a, std::int64_t e) const;

  // Order of a in the multiplicative group; throws ZeroInverse on zero.
  std::int64_t multiplicative_order(GaussInt a) const;

  // Mutually inverse bijections between {0..p-1} and the residue set.
  GaussInt lift(std::int64_t g) const;
  std::int64_t project(GaussInt a) const;  // OutOfRange if a is not canonical

  // Integer-label arithmetic (the field's image mod p). Used by the linear
  // algebra and enumeration layers; lift/project convert at the boundary.
  std::int64_t label_add(std::int64_t a, std::int64_t b) const { return (a + b) % p_; }
  std::int64_t label_sub(std::int64_t a, std::int64_t b) const { return ((a - b) % p_ + p_) % p_; }
  std::int64_t label_mul(std::int64_t a, std::int64_t b) const { return (a * b) % p_; }
  std::int64_t label_neg(std::int64_t a) const { return (p_ - a % p_) % p_; }
  std::int64_t label_invert(std::int64_t a) const;
  std::int64_t label_pow(std::int64_t a, std::int64_t e) const;

  // Mannheim weight of lift(g), by table.
  int weight_of_label(std::int64_t g) const { return weights_[static_cast<std::size_t>(g)]; }

  // All canonical residues of the given weight, in project order. Empty for
  // weights that do not occur (including w = 0 queries above the maximum).
  const std::vector<GaussInt>& residues_of_weight(int w) const;

  int max_weight() const { return max_weight_; }

  friend bool operator==(const PrimeField& a, const PrimeField& b) {
    return a.pi_ == b.pi_;
  }

 private:
  explicit PrimeField(GaussInt pi);

  GaussInt pi_;
  std::int64_t p_ = 0;
  std::vector<GaussInt> residues_;
  std::vector<int> weights_;
  std::vector<std::int64_t> inverse_labels_;
  std::vector<std::vector<GaussInt>> by_weight_;
  int max_weight_ = 0;
  std::unordered_map<std::int64_t, std::int64_t> project_;
  GaussInt alpha1_, alpha2_;
};

// Deterministic search for the (alpha1, alpha2) pair: the first elements in
// project order with multiplicative order p-1 whose (p-1)/4-th power is i
// (respectively -i). Such elements always exist because the unit group is
// cyclic of order p-1 with 4 | p-1; InternalInvariant if the scan fails.
std::pair<GaussInt, GaussInt> find_alpha_pair(const PrimeField& field);

// Throws FieldMismatch unless both handles refer to the same modulus.
void ensure_same_field(const FieldPtr& a, const FieldPtr& b);

}  // namespace mannheim
