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

#include "mannheim/polynomial.hpp"

#include <algorithm>

namespace mannheim {

namespace {

void strip_trailing_zeros(std::vector<GaussInt>& coeffs) {
  while (!coeffs.empty() && coeffs.back().is_zero()) {
    coeffs.pop_back();
  }
}

}  // namespace

Polynomial::Polynomial(FieldPtr field, std::vector<GaussInt> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (!field_) {
    throw FieldMismatch("polynomial constructed without a field");
  }
  for (GaussInt& c : coeffs_) {
    c = field_->reduce(c);
  }
  strip_trailing_zeros(coeffs_);
}

Polynomial Polynomial::modulus_poly(FieldPtr field, int n, Modulus m) {
  if (n < 1) {
    throw OutOfRange("modulus polynomial degree must be positive");
  }
  std::vector<GaussInt> coeffs(static_cast<std::size_t>(n) + 1, GaussInt{});
  coeffs[0] = m == Modulus::XnMinus1 ? GaussInt{-1, 0} : GaussInt{1, 0};
  coeffs[static_cast<std::size_t>(n)] = GaussInt{1, 0};
  return Polynomial(std::move(field), std::move(coeffs));
}

Polynomial Polynomial::parse(FieldPtr field, std::string_view text) {
  std::vector<GaussInt> coeffs;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view item = comma == std::string_view::npos
                                ? text.substr(start)
                                : text.substr(start, comma - start);
    coeffs.push_back(parse_gauss_int(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Polynomial(std::move(field), std::move(coeffs));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) {
    throw DivisionByZeroPoly("monic normalization of the zero polynomial");
  }
  GaussInt inv = field_->invert(leading_coeff());
  std::vector<GaussInt> scaled;
  scaled.reserve(coeffs_.size());
  for (const GaussInt& c : coeffs_) {
    scaled.push_back(field_->mul(c, inv));
  }
  return Polynomial(field_, std::move(scaled));
}

GaussInt Polynomial::eval(GaussInt a) const {
  GaussInt acc{};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = field_->add(field_->mul(acc, a), *it);
  }
  return acc;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) out += ", ";
    out += mannheim::to_string(coeffs_[i]);
  }
  return out;
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  ensure_same_field(f.field_, g.field_);
  std::vector<GaussInt> out(std::max(f.coeffs_.size(), g.coeffs_.size()), GaussInt{});
  for (std::size_t i = 0; i < out.size(); ++i) {
    GaussInt a = i < f.coeffs_.size() ? f.coeffs_[i] : GaussInt{};
    GaussInt b = i < g.coeffs_.size() ? g.coeffs_[i] : GaussInt{};
    out[i] = f.field_->add(a, b);
  }
  return Polynomial(f.field_, std::move(out));
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) {
  ensure_same_field(f.field_, g.field_);
  std::vector<GaussInt> out(std::max(f.coeffs_.size(), g.coeffs_.size()), GaussInt{});
  for (std::size_t i = 0; i < out.size(); ++i) {
    GaussInt a = i < f.coeffs_.size() ? f.coeffs_[i] : GaussInt{};
    GaussInt b = i < g.coeffs_.size() ? g.coeffs_[i] : GaussInt{};
    out[i] = f.field_->sub(a, b);
  }
  return Polynomial(f.field_, std::move(out));
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  ensure_same_field(f.field_, g.field_);
  if (f.is_zero() || g.is_zero()) return Polynomial::zero(f.field_);
  std::vector<GaussInt> out(f.coeffs_.size() + g.coeffs_.size() - 1, GaussInt{});
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < g.coeffs_.size(); ++j) {
      out[i + j] = f.field_->add(out[i + j], f.field_->mul(f.coeffs_[i], g.coeffs_[j]));
    }
  }
  return Polynomial(f.field_, std::move(out));
}

bool operator==(const Polynomial& f, const Polynomial& g) {
  return *f.field_ == *g.field_ && f.coeffs_ == g.coeffs_;
}

std::pair<Polynomial, Polynomial> poly_divmod(const Polynomial& f, const Polynomial& g) {
  ensure_same_field(f.field(), g.field());
  if (g.is_zero()) {
    throw DivisionByZeroPoly("polynomial division by zero");
  }
  const FieldPtr& field = f.field();
  std::vector<GaussInt> rem = f.coeffs();
  const std::vector<GaussInt>& div = g.coeffs();
  const int dg = g.degree();
  if (f.degree() < dg) {
    return {Polynomial::zero(field), f};
  }
  std::vector<GaussInt> quot(static_cast<std::size_t>(f.degree() - dg) + 1, GaussInt{});
  GaussInt lead_inv = field->invert(g.leading_coeff());
  for (int i = f.degree() - dg; i >= 0; --i) {
    GaussInt top = rem[static_cast<std::size_t>(i + dg)];
    if (top.is_zero()) continue;
    GaussInt c = field->mul(top, lead_inv);
    quot[static_cast<std::size_t>(i)] = c;
    for (int j = 0; j <= dg; ++j) {
      auto idx = static_cast<std::size_t>(i + j);
      rem[idx] = field->sub(rem[idx], field->mul(c, div[static_cast<std::size_t>(j)]));
    }
  }
  return {Polynomial(field, std::move(quot)), Polynomial(field, std::move(rem))};
}

bool divides(const Polynomial& g, const Polynomial& f) {
  return poly_divmod(f, g).second.is_zero();
}

std::vector<GaussInt> quartic_root_factor(const FieldPtr& field, QuarticSign sign) {
  GaussInt alpha = sign == QuarticSign::MinusI ? field->alpha1() : field->alpha2();
  const std::int64_t p = field->p();
  std::vector<GaussInt> roots;
  roots.reserve(static_cast<std::size_t>((p - 1) / 4));
  for (std::int64_t j = 1; j <= p - 4; j += 4) {
    roots.push_back(field->pow(alpha, j));
  }
  return roots;
}

namespace {

Polynomial product_of_linear_factors(const FieldPtr& field, const std::vector<GaussInt>& roots) {
  Polynomial acc = Polynomial::one(field);
  for (const GaussInt& r : roots) {
    acc = acc * Polynomial(field, {field->neg(r), GaussInt{1, 0}});
  }
  return acc;
}

Polynomial binomial(const FieldPtr& field, int degree, GaussInt constant) {
  std::vector<GaussInt> coeffs(static_cast<std::size_t>(degree) + 1, GaussInt{});
  coeffs[0] = constant;
  coeffs[static_cast<std::size_t>(degree)] = GaussInt{1, 0};
  return Polynomial(field, std::move(coeffs));
}

}  // namespace

FactorizationReport verify_global_factorizations(const FieldPtr& field) {
  FactorizationReport report;
  const int quarter = static_cast<int>((field->p() - 1) / 4);
  const int half = 2 * quarter;

  auto minus_roots = quartic_root_factor(field, QuarticSign::MinusI);
  auto plus_roots = quartic_root_factor(field, QuarticSign::PlusI);
  Polynomial minus_prod = product_of_linear_factors(field, minus_roots);
  Polynomial plus_prod = product_of_linear_factors(field, plus_roots);

  report.quartic_minus_ok = minus_prod == binomial(field, quarter, GaussInt{0, -1});
  report.quartic_plus_ok = plus_prod == binomial(field, quarter, GaussInt{0, 1});
  report.half_identity_ok = minus_prod * plus_prod == binomial(field, half, GaussInt{1, 0});
  Polynomial half_plus = binomial(field, half, GaussInt{1, 0});
  Polynomial half_minus = binomial(field, half, GaussInt{-1, 0});
  report.full_identity_ok = half_plus * half_minus == binomial(field, 2 * half, GaussInt{-1, 0});

  if (!report.quartic_minus_ok) {
    report.detail += "quartic product with constant -i reconstructs " + minus_prod.to_string() + "; ";
  }
  if (!report.quartic_plus_ok) {
    report.detail += "quartic product with constant +i reconstructs " + plus_prod.to_string() + "; ";
  }
  if (!report.half_identity_ok) {
    report.detail += "root products do not multiply to x^" + std::to_string(half) + "+1; ";
  }
  if (!report.full_identity_ok) {
    report.detail += "half-degree binomials do not multiply to x^" + std::to_string(2 * half) + "-1; ";
  }
  return report;
}

}  // namespace mannheim
