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

#include <algorithm>
#include <string>

#include "doctest.h"
#include "mannheim/catalog.hpp"

using namespace mannheim;

namespace {

const RowAttempt* find_attempt(const RowReport& report, TableInterpretation interp) {
  for (const RowAttempt& a : report.attempts) {
    if (a.interp == interp) return &a;
  }
  return nullptr;
}

bool has_note_containing(const RowReport& report, const std::string& needle) {
  return std::any_of(report.notes.begin(), report.notes.end(), [&](const std::string& note) {
    return note.find(needle) != std::string::npos;
  });
}

// One shared reproduction run; the heavy rows scan 17^6 words.
const std::vector<RowReport>& cached_reports() {
  static const std::vector<RowReport> reports = [] {
    TableOptions opts;
    opts.search.workers = 4;
    return reproduce_catalog(opts);
  }();
  return reports;
}

}  // namespace

TEST_CASE("catalog rows are transcribed once and fixed") {
  const auto& rows = catalog_rows();
  REQUIRE(rows.size() == 10);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].index == static_cast<int>(i) + 1);
  }
  CHECK(rows[0].pi == GaussInt{2, 1});
  CHECK(rows[0].modulus == Modulus::XnMinus1);
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].modulus == Modulus::XnPlus1);
  // Only the row with the non-divisor g2 carries a correction.
  for (const CatalogRow& row : rows) {
    CHECK(row.g2_corrected.has_value() == (row.index == 5));
  }
  // The last row's listed p disagrees with the norm of its modulus.
  CHECK(rows[9].p_listed == 19);
  CHECK(norm(rows[9].pi) == 29);
}

TEST_CASE("reproduction reaches the expected verdict on every row") {
  const auto& reports = cached_reports();
  REQUIRE(reports.size() == 10);

  const RowVerdict expect[10] = {
      RowVerdict::Unresolved, RowVerdict::Verified, RowVerdict::Verified,
      RowVerdict::Verified,   RowVerdict::Verified, RowVerdict::Unresolved,
      RowVerdict::Verified,   RowVerdict::Verified, RowVerdict::KOnly,
      RowVerdict::KOnly,
  };
  for (int i = 0; i < 10; ++i) {
    INFO("row ", i + 1);
    CHECK(reports[static_cast<std::size_t>(i)].verdict == expect[i]);
  }
}

TEST_CASE("check-polynomial reading reproduces the p=13 block in detail") {
  const auto& reports = cached_reports();

  struct Expect {
    int row;
    int k1, k2, K;
    int d_m, d_h;
  };
  const Expect table[] = {
      {2, 4, 2, 2, 4, 3}, {3, 3, 2, 1, 4, 3}, {4, 5, 1, 4, 2, 2}, {5, 4, 2, 2, 2, 2},
      {7, 5, 3, 2, 5, 4}, {8, 6, 2, 4, 4, 3},
  };
  for (const Expect& e : table) {
    const RowReport& report = reports[static_cast<std::size_t>(e.row - 1)];
    const RowAttempt* b = find_attempt(report, TableInterpretation::CheckPolynomial);
    REQUIRE(b != nullptr);
    INFO("row ", e.row);
    CHECK(b->built);
    CHECK(b->k1 == e.k1);
    CHECK(b->k2 == e.k2);
    CHECK(b->K == e.K);
    CHECK(b->k_matches);
    REQUIRE(b->d_m.has_value());
    REQUIRE(b->d_h.has_value());
    CHECK(*b->d_m == e.d_m);
    CHECK(*b->d_h == e.d_h);
    CHECK(b->dm_matches);
    CHECK(b->dh_matches);
  }
}

TEST_CASE("generator-pair reading fails nesting everywhere") {
  const auto& reports = cached_reports();
  for (const RowReport& report : reports) {
    const RowAttempt* a = find_attempt(report, TableInterpretation::GeneratorPair);
    REQUIRE(a != nullptr);
    CHECK(!a->built);
    CHECK(!a->failure.empty());
  }
}

TEST_CASE("large rows stop at the dimension check") {
  const auto& reports = cached_reports();
  for (int row : {9, 10}) {
    const RowAttempt* b =
        find_attempt(reports[static_cast<std::size_t>(row - 1)], TableInterpretation::CheckPolynomial);
    REQUIRE(b != nullptr);
    CHECK(b->built);
    CHECK(b->k_matches);
    CHECK(!b->d_m.has_value());  // 17^7 and 29^13 exceed the default cap
    CHECK(!b->d_h.has_value());
  }
}

TEST_CASE("row notes flag the transcription anomalies") {
  const auto& reports = cached_reports();
  // Row 5: corrected generator.
  CHECK(has_note_containing(reports[4], "corrected to"));
  // Row 10: listed p disagrees with the norm.
  CHECK(has_note_containing(reports[9], "norm"));
  // Rows 2-5 record the swapped quarter powers of the listed pair.
  for (int row : {2, 3, 4, 5}) {
    CHECK(has_note_containing(reports[static_cast<std::size_t>(row - 1)], "swapped"));
  }
  // Rows 1 and 6 carry the alternative-reading diagnostic.
  CHECK(has_note_containing(reports[0], "check polynomial of C1"));
  CHECK(has_note_containing(reports[0], "[[4, 2]]"));
  CHECK(has_note_containing(reports[5], "check polynomial of C1"));
  CHECK(has_note_containing(reports[5], "[[8, 1]]"));
}

TEST_CASE("interpretation toggles limit the attempts") {
  TableOptions only_b;
  only_b.interp_a = false;
  only_b.search.cap = 1000;  // skip every distance scan, attempts still appear
  auto reports = reproduce_catalog(only_b);
  for (const RowReport& report : reports) {
    REQUIRE(report.attempts.size() == 1);
    CHECK(report.attempts[0].interp == TableInterpretation::CheckPolynomial);
  }
}
