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

#include "mannheim/catalog.hpp"

#include <algorithm>

namespace mannheim {

namespace {

CatalogRow make_row(int index, std::int64_t p_listed, GaussInt pi, GaussInt a1, GaussInt a2,
                    int n, Modulus modulus, std::vector<GaussInt> h1, std::vector<GaussInt> g2,
                    std::optional<std::vector<GaussInt>> g2_corrected, ParameterClaim hamming,
                    ParameterClaim mannheim) {
  CatalogRow row;
  row.index = index;
  row.p_listed = p_listed;
  row.pi = pi;
  row.alpha1_claim = a1;
  row.alpha2_claim = a2;
  row.n = n;
  row.modulus = modulus;
  row.h1 = std::move(h1);
  row.g2 = std::move(g2);
  row.g2_corrected = std::move(g2_corrected);
  row.hamming_claim = hamming;
  row.mannheim_claim = mannheim;
  return row;
}

std::vector<CatalogRow> build_rows() {
  std::vector<CatalogRow> rows;
  rows.push_back(make_row(
      1, 5, {2, 1}, {0, 1}, {0, -1}, 4, Modulus::XnMinus1,
      {{0, 1}, {-1, 0}, {0, -1}, {1, 0}}, {{0, -1}, {-1, 0}, {0, 1}, {1, 0}}, std::nullopt,
      {4, 2, 2, false}, {4, 2, 2, false}));
  rows.push_back(make_row(
      2, 13, {3, 2}, {2, 0}, {-2, 0}, 6, Modulus::XnPlus1,
      {{1, -1}, {-1, 0}, {1, 0}}, {{1, -1}, {1, 0}, {1, 0}}, std::nullopt,
      {6, 2, 3, false}, {6, 2, 4, false}));
  rows.push_back(make_row(
      3, 13, {3, 2}, {2, 0}, {-2, 0}, 6, Modulus::XnPlus1,
      {{0, -1}, {-2, 0}, {0, 2}, {1, 0}}, {{1, -1}, {1, 0}, {1, 0}}, std::nullopt,
      {6, 1, 3, false}, {6, 1, 4, false}));
  rows.push_back(make_row(
      4, 13, {3, 2}, {2, 0}, {-2, 0}, 6, Modulus::XnPlus1,
      {{-2, 0}, {1, 0}}, {{2, 0}, {1, 0}}, std::nullopt,
      {6, 4, 2, false}, {6, 4, 2, false}));
  rows.push_back(make_row(
      5, 13, {3, 2}, {2, 0}, {-2, 0}, 6, Modulus::XnPlus1,
      {{-1, 0}, {0, 1}, {1, 0}}, {{0, -1}, {-1, 1}, {1, 0}},
      std::vector<GaussInt>{{-1, 0}, {0, -1}, {1, 0}},
      {6, 2, 2, false}, {6, 2, 2, false}));
  rows.push_back(make_row(
      6, 17, {4, 1}, {1, 1}, {-2, 1}, 8, Modulus::XnPlus1,
      {{-1, 1}, {2, -1}, {1, -1}, {0, -1}, {0, 1}, {1, 0}},
      {{0, -1}, {0, -2}, {0, 0}, {1, 0}, {1, 0}}, std::nullopt,
      {8, 1, 4, false}, {8, 1, 5, false}));
  rows.push_back(make_row(
      7, 17, {4, 1}, {1, 1}, {-2, 1}, 8, Modulus::XnPlus1,
      {{-2, 1}, {1, 1}, {2, -1}, {1, 0}}, {{2, -1}, {1, 1}, {-2, 1}, {1, 0}}, std::nullopt,
      {8, 2, 4, false}, {8, 2, 5, false}));
  rows.push_back(make_row(
      8, 17, {4, 1}, {1, 1}, {-2, 1}, 8, Modulus::XnPlus1,
      {{-1, 0}, {1, 1}, {1, 0}}, {{-1, 0}, {-1, -1}, {1, 0}}, std::nullopt,
      {8, 4, 3, false}, {8, 4, 3, true}));
  rows.push_back(make_row(
      9, 17, {4, 1}, {1, 1}, {-2, 1}, 8, Modulus::XnPlus1,
      {{-1, -1}, {1, 0}}, {{1, 1}, {1, 0}}, std::nullopt,
      {8, 6, 2, false}, {8, 6, 2, true}));
  rows.push_back(make_row(
      10, 19, {5, 2}, {-1, 1}, {-2, 1}, 14, Modulus::XnPlus1,
      {{-2, 0}, {1, 0}}, {{2, 0}, {1, 0}}, std::nullopt,
      {14, 12, 2, false}, {14, 12, 2, true}));
  return rows;
}

std::string poly_text(const FieldPtr& field, const std::vector<GaussInt>& coeffs) {
  return Polynomial(field, coeffs).to_string();
}

// Builds the row's C2 under the given interpretation, or explains why it
// cannot be built. k2 is reported even on failure when the degree fixes it.
struct C2Result {
  std::optional<LinearCode> code;
  std::string failure;
  int k2 = -1;
};

C2Result build_c2(const FieldPtr& field, const CatalogRow& row, TableInterpretation interp) {
  C2Result out;
  const std::vector<GaussInt>& coeffs = row.g2_corrected ? *row.g2_corrected : row.g2;
  Polynomial g2(field, coeffs);
  if (interp == TableInterpretation::GeneratorPair) {
    out.k2 = row.n - g2.degree();
    try {
      out.code = LinearCode::from_generator_poly(g2, row.n, row.modulus);
    } catch (const Error& e) {
      out.failure = std::string("C2: ") + e.what();
    }
    return out;
  }
  out.k2 = g2.degree();
  const Polynomial modulus = Polynomial::modulus_poly(field, row.n, row.modulus);
  auto [quot, rem] = poly_divmod(modulus, g2);
  if (!rem.is_zero()) {
    out.failure = "C2: check polynomial does not divide x^" + std::to_string(row.n) +
                  (row.modulus == Modulus::XnMinus1 ? "-1" : "+1");
    return out;
  }
  try {
    out.code = LinearCode::from_generator_poly(quot, row.n, row.modulus);
  } catch (const Error& e) {
    out.failure = std::string("C2: ") + e.what();
  }
  return out;
}

bool claim_matches(const ParameterClaim& claim, int computed) {
  return claim.at_least ? computed >= claim.d : computed == claim.d;
}

RowAttempt run_attempt(const CatalogRow& row, TableInterpretation interp,
                       const std::optional<LinearCode>& c1, const std::string& c1_failure,
                       const SearchOptions& search) {
  RowAttempt attempt;
  attempt.interp = interp;
  if (!c1) {
    attempt.failure = "C1: " + c1_failure;
    return attempt;
  }
  attempt.k1 = c1->k();
  C2Result c2 = build_c2(c1->field(), row, interp);
  attempt.k2 = c2.k2;
  if (attempt.k2 >= 0) attempt.K = attempt.k1 - attempt.k2;
  if (!c2.code) {
    attempt.failure = c2.failure;
    return attempt;
  }
  if (!is_subcode(*c2.code, *c1)) {
    attempt.failure = "C2 is not a subcode of C1";
    return attempt;
  }
  attempt.built = true;
  attempt.k_matches = attempt.K == row.hamming_claim.K && attempt.K == row.mannheim_claim.K &&
                      row.n == row.hamming_claim.n && row.n == row.mannheim_claim.n;
  if (!attempt.k_matches) return attempt;

  const LinearCode c2dual = c2.code->dual();
  try {
    attempt.dm_c1 = c1->min_distance(Metric::Mannheim, search);
    attempt.dh_c1 = c1->min_distance(Metric::Hamming, search);
  } catch (const EnumerationTooLarge&) {
  }
  try {
    attempt.dm_c2dual = c2dual.min_distance(Metric::Mannheim, search);
    attempt.dh_c2dual = c2dual.min_distance(Metric::Hamming, search);
  } catch (const EnumerationTooLarge&) {
  }
  if (attempt.dm_c1 && attempt.dm_c2dual) {
    attempt.d_m = std::min(*attempt.dm_c1, *attempt.dm_c2dual);
    attempt.dm_matches = claim_matches(row.mannheim_claim, *attempt.d_m);
  }
  if (attempt.dh_c1 && attempt.dh_c2dual) {
    attempt.d_h = std::min(*attempt.dh_c1, *attempt.dh_c2dual);
    attempt.dh_matches = claim_matches(row.hamming_claim, *attempt.d_h);
  }
  return attempt;
}

void add_alpha_notes(const FieldPtr& field, const CatalogRow& row, std::vector<std::string>& notes) {
  const std::int64_t quarter = (field->p() - 1) / 4;
  const GaussInt i{0, 1};
  const GaussInt minus_i{0, -1};
  const GaussInt a = field->reduce(row.alpha1_claim);
  const GaussInt b = field->reduce(row.alpha2_claim);
  const bool a_primitive = field->multiplicative_order(a) == field->p() - 1;
  const bool b_primitive = field->multiplicative_order(b) == field->p() - 1;
  const GaussInt aq = field->pow(a, quarter);
  const GaussInt bq = field->pow(b, quarter);
  if (!a_primitive || !b_primitive) {
    notes.push_back("recorded primitive pair (" + to_string(row.alpha1_claim) + ", " +
                    to_string(row.alpha2_claim) + ") contains a non-primitive element");
    return;
  }
  if (aq == i && bq == minus_i) {
    notes.push_back("recorded primitive pair (" + to_string(row.alpha1_claim) + ", " +
                    to_string(row.alpha2_claim) +
                    ") is valid: quarter powers i and -i in the listed order");
  } else if (aq == minus_i && bq == i) {
    notes.push_back("recorded primitive pair (" + to_string(row.alpha1_claim) + ", " +
                    to_string(row.alpha2_claim) +
                    ") has its roles swapped: quarter powers are -i and i");
  } else {
    notes.push_back("recorded primitive pair (" + to_string(row.alpha1_claim) + ", " +
                    to_string(row.alpha2_claim) + ") has quarter powers " + to_string(aq) +
                    " and " + to_string(bq) + ", not i and -i");
  }
}

// Fallback reading for rows neither interpretation explains: h1 as the
// check polynomial of C1 and g2 as the generator of C2. Reported as a note
// only; the verdict still reflects the two standard interpretations.
void add_swapped_reading_note(const FieldPtr& field, const CatalogRow& row,
                              const SearchOptions& search, std::vector<std::string>& notes) {
  Polynomial h1(field, row.h1);
  Polynomial g2(field, row.g2_corrected ? *row.g2_corrected : row.g2);
  const Polynomial modulus = Polynomial::modulus_poly(field, row.n, row.modulus);
  auto [quot, rem] = poly_divmod(modulus, h1);
  if (!rem.is_zero()) return;
  std::optional<LinearCode> c1;
  std::optional<LinearCode> c2;
  try {
    c1 = LinearCode::from_generator_poly(quot, row.n, row.modulus);
    c2 = LinearCode::from_generator_poly(g2, row.n, row.modulus);
  } catch (const Error&) {
    return;
  }
  if (!is_subcode(*c2, *c1)) return;
  const int K = c1->k() - c2->k();
  std::string note = "reading h1 as the check polynomial of C1 (generator " +
                     quot.to_string() + ") and g2 as the generator of C2 gives [[" +
                     std::to_string(row.n) + ", " + std::to_string(K) + "]]";
  try {
    const LinearCode c2dual = c2->dual();
    const int dm = std::min(c1->min_distance(Metric::Mannheim, search),
                            c2dual.min_distance(Metric::Mannheim, search));
    const int dh = std::min(c1->min_distance(Metric::Hamming, search),
                            c2dual.min_distance(Metric::Hamming, search));
    note += " with Mannheim distance " + std::to_string(dm) + " and Hamming distance " +
            std::to_string(dh);
  } catch (const EnumerationTooLarge&) {
  }
  notes.push_back(note);
}

}  // namespace

const std::vector<CatalogRow>& catalog_rows() {
  static const std::vector<CatalogRow> rows = build_rows();
  return rows;
}

std::string to_string(TableInterpretation interp) {
  return interp == TableInterpretation::GeneratorPair ? "a" : "b";
}

std::string to_string(RowVerdict v) {
  switch (v) {
    case RowVerdict::Verified:
      return "verified";
    case RowVerdict::KOnly:
      return "k-only";
    case RowVerdict::DistanceMismatch:
      return "distance-mismatch";
    case RowVerdict::Unresolved:
      return "unresolved";
  }
  return "unresolved";
}

std::vector<RowReport> reproduce_catalog(const TableOptions& opts) {
  std::vector<RowReport> reports;
  for (const CatalogRow& row : catalog_rows()) {
    RowReport report;
    report.row = row;

    FieldPtr field = PrimeField::make(row.pi);
    if (row.p_listed != field->p()) {
      report.notes.push_back("row lists p = " + std::to_string(row.p_listed) +
                             " but the modulus " + to_string(row.pi) + " has norm " +
                             std::to_string(field->p()) + "; the field uses the modulus");
    }
    add_alpha_notes(field, row, report.notes);
    if (row.g2_corrected) {
      report.notes.push_back(
          "recorded g2 = " + poly_text(field, row.g2) + " does not divide the modulus "
          "binomial; corrected to " + poly_text(field, *row.g2_corrected) +
          " following the g2(x) = +-h1(-x) pattern the other rows obey");
    }

    std::optional<LinearCode> c1;
    std::string c1_failure;
    try {
      c1 = LinearCode::from_generator_poly(Polynomial(field, row.h1), row.n, row.modulus);
    } catch (const Error& e) {
      c1_failure = e.what();
    }

    if (opts.interp_a) {
      report.attempts.push_back(
          run_attempt(row, TableInterpretation::GeneratorPair, c1, c1_failure, opts.search));
    }
    if (opts.interp_b) {
      report.attempts.push_back(
          run_attempt(row, TableInterpretation::CheckPolynomial, c1, c1_failure, opts.search));
    }

    bool any_verified = false;
    bool any_mismatch = false;
    bool any_k_only = false;
    for (const RowAttempt& attempt : report.attempts) {
      if (!attempt.built || !attempt.k_matches) continue;
      if (attempt.d_m && attempt.d_h) {
        if (attempt.dm_matches && attempt.dh_matches) {
          any_verified = true;
        } else {
          any_mismatch = true;
        }
      } else {
        any_k_only = true;
      }
    }
    if (any_verified) {
      report.verdict = RowVerdict::Verified;
    } else if (any_mismatch) {
      report.verdict = RowVerdict::DistanceMismatch;
    } else if (any_k_only) {
      report.verdict = RowVerdict::KOnly;
    } else {
      report.verdict = RowVerdict::Unresolved;
      add_swapped_reading_note(field, row, opts.search, report.notes);
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

}  // namespace mannheim
