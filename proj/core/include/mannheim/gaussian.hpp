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
#include <iosfwd>
#include <string>
#include <string_view>

#include "mannheim/errors.hpp"

namespace mannheim {

// Exact Gaussian integer. All arithmetic is overflow-checked: operations
// throw OverflowError rather than wrapping silently.
struct GaussInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  constexpr GaussInt() = default;
  constexpr GaussInt(std::int64_t real, std::int64_t imag) : re(real), im(imag) {}
  constexpr GaussInt(std::int64_t real) : re(real), im(0) {}  // NOLINT: intentional implicit lift from Z

  constexpr bool is_zero() const { return re == 0 && im == 0; }

  friend constexpr bool operator==(const GaussInt&, const GaussInt&) = default;
};

// Checked signed 64-bit helpers used throughout the exact-arithmetic layer.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

GaussInt operator+(GaussInt a, GaussInt b);
GaussInt operator-(GaussInt a, GaussInt b);
GaussInt operator*(GaussInt a, GaussInt b);
GaussInt operator-(GaussInt a);

constexpr GaussInt conj(GaussInt a) { return GaussInt{a.re, -a.im}; }

// N(a + bi) = a^2 + b^2; nonnegative, zero only for zero.
std::int64_t norm(GaussInt a);

// |re| + |im|. Meaningful as a weight only on canonical residues; see
// PrimeField for the reduction that produces those.
std::int64_t mannheim_weight(GaussInt a);

// Canonical literal: "0", "3", "-2", "2i", "-1i", "1+2i", "-1-1i".
// The imaginary unit always carries an explicit integer on output.
std::string to_string(GaussInt a);

// Accepts the canonical forms plus the shorthands "i", "-i", "4+i", "4-i"
// and the Unicode minus sign. Throws ParseError on anything else.
GaussInt parse_gauss_int(std::string_view text);

std::ostream& operator<<(std::ostream& os, GaussInt a);

}  // namespace mannheim
