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

#include "mannheim/gaussian.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <ostream>

namespace mannheim {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError("integer addition overflow");
  }
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw OverflowError("integer subtraction overflow");
  }
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError("integer multiplication overflow");
  }
  return r;
}

GaussInt operator+(GaussInt a, GaussInt b) {
  return {checked_add(a.re, b.re), checked_add(a.im, b.im)};
}

GaussInt operator-(GaussInt a, GaussInt b) {
  return {checked_sub(a.re, b.re), checked_sub(a.im, b.im)};
}

GaussInt operator*(GaussInt a, GaussInt b) {
  // (a.re + a.im i)(b.re + b.im i)
  std::int64_t re = checked_sub(checked_mul(a.re, b.re), checked_mul(a.im, b.im));
  std::int64_t im = checked_add(checked_mul(a.re, b.im), checked_mul(a.im, b.re));
  return {re, im};
}

GaussInt operator-(GaussInt a) {
  return {checked_sub(0, a.re), checked_sub(0, a.im)};
}

std::int64_t norm(GaussInt a) {
  return checked_add(checked_mul(a.re, a.re), checked_mul(a.im, a.im));
}

std::int64_t mannheim_weight(GaussInt a) {
  std::int64_t re = a.re < 0 ? checked_sub(0, a.re) : a.re;
  std::int64_t im = a.im < 0 ? checked_sub(0, a.im) : a.im;
  return checked_add(re, im);
}

std::string to_string(GaussInt a) {
  if (a.is_zero()) {
    return "0";
  }
  std::string out;
  if (a.re != 0) {
    out += std::to_string(a.re);
  }
  if (a.im != 0) {
    if (a.re != 0 && a.im > 0) {
      out += '+';
    }
    out += std::to_string(a.im);
    out += 'i';
  }
  return out;
}

namespace {

// Replaces the Unicode minus sign (U+2212, UTF-8 e2 88 92) with '-' and
// strips ASCII whitespace.
std::string normalize_literal(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c == 0xe2 && i + 2 < text.size() &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x92) {
      out += '-';
      i += 2;
      continue;
    }
    if (std::isspace(c)) {
      continue;
    }
    out += static_cast<char>(c);
  }
  return out;
}

// Parses [sign] digits* starting at pos. An absent digit run yields 1 so
// that "i", "+i" and "4-i" parse; `had_digits` reports which case occurred.
bool scan_term(const std::string& s, std::size_t& pos, std::int64_t& value,
               bool& had_digits) {
  std::int64_t sign = 1;
  std::size_t start = pos;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    sign = s[pos] == '-' ? -1 : 1;
    ++pos;
  }
  std::size_t digits_begin = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    ++pos;
  }
  had_digits = pos > digits_begin;
  if (!had_digits) {
    value = sign;
    return pos > start;  // consumed at least a sign
  }
  std::int64_t magnitude = 0;
  auto [ptr, ec] = std::from_chars(s.data() + digits_begin, s.data() + pos, magnitude);
  if (ec != std::errc() || ptr != s.data() + pos) {
    return false;
  }
  value = sign * magnitude;
  return true;
}

}  // namespace

GaussInt parse_gauss_int(std::string_view text) {
  const std::string s = normalize_literal(text);
  if (s.empty()) {
    throw ParseError("empty Gaussian integer literal");
  }
  std::size_t pos = 0;
  std::int64_t first = 0;
  bool first_digits = false;
  if (!scan_term(s, pos, first, first_digits) && !(pos < s.size() && s[pos] == 'i')) {
    throw ParseError("bad Gaussian integer literal: '" + std::string(text) + "'");
  }
  // Pure imaginary: "i", "-i", "2i", "-1i".
  if (pos < s.size() && s[pos] == 'i') {
    ++pos;
    if (pos != s.size()) {
      throw ParseError("trailing characters in Gaussian integer literal: '" +
                       std::string(text) + "'");
    }
    return {0, first};
  }
  if (!first_digits) {
    throw ParseError("bad Gaussian integer literal: '" + std::string(text) + "'");
  }
  if (pos == s.size()) {
    return {first, 0};
  }
  // Remainder must be a signed imaginary term ending in 'i'.
  if (s[pos] != '+' && s[pos] != '-') {
    throw ParseError("bad Gaussian integer literal: '" + std::string(text) + "'");
  }
  std::int64_t second = 0;
  bool second_digits = false;
  if (!scan_term(s, pos, second, second_digits)) {
    throw ParseError("bad Gaussian integer literal: '" + std::string(text) + "'");
  }
  if (pos >= s.size() || s[pos] != 'i' || pos + 1 != s.size()) {
    throw ParseError("bad Gaussian integer literal: '" + std::string(text) + "'");
  }
  return {first, second};
}

std::ostream& operator<<(std::ostream& os, GaussInt a) {
  return os << to_string(a);
}

}  // namespace mannheim
