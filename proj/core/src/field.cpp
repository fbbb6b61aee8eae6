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

#include "mannheim/field.hpp"

#include <algorithm>

namespace mannheim {

namespace {

constexpr std::int64_t kMaxP = 10'000;  // keeps every intermediate product far inside 64 bits

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Nearest integer to n/d for d > 0. A fractional part of exactly 1/2 would
// make the result convention-dependent; it cannot arise here (see the class
// comment), and the guard below turns any such case into a loud failure.
std::int64_t round_div(std::int64_t n, std::int64_t d) {
  std::int64_t num = checked_add(checked_mul(2, n), d);
  std::int64_t den = 2 * d;
  std::int64_t q = num / den;
  std::int64_t r = num % den;
  if (r != 0 && ((r < 0) != (den < 0))) --q;  // floor, not truncation
  if (checked_sub(checked_mul(2, n), d) % den == 0) {
    throw InternalInvariant("rounding tie in residue reduction");
  }
  return q;
}

std::int64_t pack(GaussInt a) {
  // Canonical residues satisfy |re|, |im| <= sqrt(p) + 1 < 2^9 for p < 10^4.
  return (a.re + 512) * 1024 + (a.im + 512);
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

GaussInt PrimeField::reduce(GaussInt z) const {
  // z * conj(pi) has components (z.re*pi.re + z.im*pi.im, z.im*pi.re - z.re*pi.im).
  GaussInt zc = z * conj(pi_);
  GaussInt q{round_div(zc.re, p_), round_div(zc.im, p_)};
  return z - q * pi_;
}

bool PrimeField::is_canonical(GaussInt a) const {
  if (a.re < -512 || a.re > 511 || a.im < -512 || a.im > 511) return false;
  return project_.find(pack(a)) != project_.end();
}

GaussInt PrimeField::invert(GaussInt a) const {
  return lift(label_invert(project(reduce(a))));
}

GaussInt PrimeField::pow(GaussInt a, std::int64_t e) const {
  std::int64_t base = project(reduce(a));
  if (e < 0) {
    base = label_invert(base);
    e = -e;
  }
  return lift(label_pow(base, e));
}

std::int64_t PrimeField::multiplicative_order(GaussInt a) const {
  std::int64_t g = project(reduce(a));
  if (g == 0) throw ZeroInverse("order of zero requested");
  std::int64_t order = p_ - 1;
  for (std::int64_t q : prime_factors(p_ - 1)) {
    while (order % q == 0 && label_pow(g, order / q) == 1) {
      order /= q;
    }
  }
  return order;
}

GaussInt PrimeField::lift(std::int64_t g) const {
  if (g < 0 || g >= p_) {
    throw OutOfRange("lift argument " + std::to_string(g) + " outside [0, " +
                     std::to_string(p_) + ")");
  }
  return residues_[static_cast<std::size_t>(g)];
}

std::int64_t PrimeField::project(GaussInt a) const {
  if (a.re >= -512 && a.re <= 511 && a.im >= -512 && a.im <= 511) {
    auto it = project_.find(pack(a));
    if (it != project_.end()) return it->second;
  }
  throw OutOfRange("project argument " + to_string(a) + " is not a canonical residue");
}

std::int64_t PrimeField::label_invert(std::int64_t a) const {
  a %= p_;
  if (a == 0) throw ZeroInverse("inverse of zero requested");
  return inverse_labels_[static_cast<std::size_t>(a)];
}

std::int64_t PrimeField::label_pow(std::int64_t a, std::int64_t e) const {
  a %= p_;
  std::int64_t acc = 1;
  while (e > 0) {
    if (e & 1) acc = (acc * a) % p_;
    a = (a * a) % p_;
    e >>= 1;
  }
  return acc;
}

const std::vector<GaussInt>& PrimeField::residues_of_weight(int w) const {
  static const std::vector<GaussInt> kEmpty;
  if (w < 0 || w > max_weight_) return kEmpty;
  return by_weight_[static_cast<std::size_t>(w)];
}

PrimeField::PrimeField(GaussInt pi) : pi_(pi) {
  p_ = norm(pi);
  if (p_ < 5 || p_ >= kMaxP) {
    throw InvalidModulus("norm " + std::to_string(p_) + " of modulus " + to_string(pi) +
                         " outside the supported range [5, " + std::to_string(kMaxP) + ")");
  }
  if (p_ % 4 != 1) {
    throw InvalidModulus("norm " + std::to_string(p_) + " of modulus " + to_string(pi) +
                         " is not 1 mod 4");
  }
  if (!is_prime(p_)) {
    throw InvalidModulus("norm " + std::to_string(p_) + " of modulus " + to_string(pi) +
                         " is not prime");
  }
  residues_.reserve(static_cast<std::size_t>(p_));
  for (std::int64_t g = 0; g < p_; ++g) {
    GaussInt r = reduce(GaussInt{g, 0});
    if (!project_.emplace(pack(r), g).second) {
      throw InternalInvariant("duplicate canonical residue for modulus " + to_string(pi));
    }
    residues_.push_back(r);
  }
  weights_.reserve(residues_.size());
  for (const GaussInt& r : residues_) {
    int w = static_cast<int>(mannheim_weight(r));
    weights_.push_back(w);
    max_weight_ = std::max(max_weight_, w);
  }
  by_weight_.assign(static_cast<std::size_t>(max_weight_) + 1, {});
  for (std::size_t g = 0; g < residues_.size(); ++g) {
    by_weight_[static_cast<std::size_t>(weights_[g])].push_back(residues_[g]);
  }
  inverse_labels_.assign(static_cast<std::size_t>(p_), 0);
  for (std::int64_t g = 1; g < p_; ++g) {
    inverse_labels_[static_cast<std::size_t>(g)] = label_pow(g, p_ - 2);
  }
}

FieldPtr PrimeField::make(GaussInt pi) {
  auto field = std::shared_ptr<PrimeField>(new PrimeField(pi));
  auto [a1, a2] = find_alpha_pair(*field);
  field->alpha1_ = a1;
  field->alpha2_ = a2;
  return field;
}

std::pair<GaussInt, GaussInt> find_alpha_pair(const PrimeField& field) {
  const std::int64_t p = field.p();
  const std::int64_t quarter = (p - 1) / 4;
  const GaussInt plus_i{0, 1};
  const GaussInt minus_i{0, -1};
  GaussInt a1{}, a2{};
  bool found1 = false, found2 = false;
  for (std::int64_t g = 1; g < p && !(found1 && found2); ++g) {
    GaussInt a = field.lift(g);
    if (field.multiplicative_order(a) != p - 1) continue;
    GaussInt q = field.pow(a, quarter);
    if (!found1 && q == plus_i) {
      a1 = a;
      found1 = true;
    } else if (!found2 && q == minus_i) {
      a2 = a;
      found2 = true;
    }
  }
  if (!found1 || !found2) {
    throw InternalInvariant("primitive pair search failed for modulus " +
                            to_string(field.modulus()));
  }
  return {a1, a2};
}

void ensure_same_field(const FieldPtr& a, const FieldPtr& b) {
  if (!a || !b || !(*a == *b)) {
    throw FieldMismatch("operands belong to different residue fields");
  }
}

}  // namespace mannheim
