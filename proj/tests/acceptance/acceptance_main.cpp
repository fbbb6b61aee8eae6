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

// Acceptance gate: one pass/fail line per criterion, with the elapsed time
// checked against each criterion's runtime budget. Exits nonzero if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "mannheim/catalog.hpp"
#include "mannheim/css.hpp"
#include "mannheim/qudit.hpp"

using namespace mannheim;

namespace {

using Cx = std::complex<double>;
using Word = std::vector<GaussInt>;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

int g_failures = 0;

void run_criterion(int id, const std::string& label, double budget_ms,
                   const std::function<void(Outcome&)>& body) {
  Outcome outcome;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(outcome);
  } catch (const std::exception& e) {
    outcome.require(false, std::string("unexpected exception: ") + e.what());
  }
  const auto end = std::chrono::steady_clock::now();
  const double ms = std::chrono::duration<double, std::milli>(end - start).count();
  if (ms > budget_ms) {
    outcome.require(false, "over budget");
  }
  std::printf("[%s] criterion %2d: %s (%.0f ms, budget %.0f ms)\n",
              outcome.pass ? "PASS" : "FAIL", id, label.c_str(), ms, budget_ms);
  if (!outcome.pass) {
    ++g_failures;
    std::printf("       %s\n", outcome.detail.c_str());
  }
}

std::set<std::pair<std::int64_t, std::int64_t>> residue_set(const std::vector<GaussInt>& v) {
  std::set<std::pair<std::int64_t, std::int64_t>> out;
  for (GaussInt a : v) out.insert({a.re, a.im});
  return out;
}

std::set<std::vector<std::pair<std::int64_t, std::int64_t>>> word_key_set(
    const std::vector<Word>& words) {
  std::set<std::vector<std::pair<std::int64_t, std::int64_t>>> out;
  for (const Word& w : words) {
    std::vector<std::pair<std::int64_t, std::int64_t>> key;
    for (GaussInt a : w) key.push_back({a.re, a.im});
    out.insert(key);
  }
  return out;
}

int parallel_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::min(8u, hw == 0 ? 1u : hw));
}

LinearCode example2_c1() {
  auto f = PrimeField::make({4, 1});
  return LinearCode::from_generator_poly(Polynomial::parse(f, "1+2i, -1+1i, -1i, 1"), 8,
                                         Modulus::XnPlus1);
}

LinearCode example2_c2() {
  auto f = PrimeField::make({4, 1});
  return LinearCode::from_generator_poly(
      Polynomial::parse(f, "1-1i, 2-1i, -1+1i, -1i, -1i, 1"), 8, Modulus::XnPlus1);
}

// Correctable single-error sweep for one nested pair: every X shift and
// every Z phase of Mannheim weight 1 within the decoding radii, plus their
// combinations, must restore the state exactly.
void sweep_single_errors(Outcome& out, const LinearCode& c1, const LinearCode& c2,
                         const Word& x, const std::string& tag) {
  const auto& f = c1.field();
  const int n = c1.n();
  const Word zero(static_cast<std::size_t>(n), GaussInt{0, 0});

  ProtocolRun clean = run_css_protocol(c1, c2, x, zero, zero);
  out.require(clean.transcript.corrected && clean.transcript.fidelity >= 1 - 1e-9,
              tag + ": zero-error round trip failed");
  const int t1 = clean.transcript.t1;
  const int t2 = clean.transcript.t2;

  std::vector<std::pair<Word, Word>> cases;
  if (t1 >= 1) {
    for (int pos = 0; pos < n; ++pos) {
      for (GaussInt e : f->residues_of_weight(1)) {
        Word e1 = zero;
        e1[static_cast<std::size_t>(pos)] = e;
        cases.push_back({e1, zero});
      }
    }
  }
  if (t2 >= 1) {
    for (int pos = 0; pos < n; ++pos) {
      for (GaussInt e : f->residues_of_weight(1)) {
        Word e2 = zero;
        e2[static_cast<std::size_t>(pos)] = e;
        cases.push_back({zero, e2});
      }
    }
  }
  if (t1 >= 1 && t2 >= 1) {
    for (int pos = 0; pos < n; ++pos) {
      for (GaussInt e : f->residues_of_weight(1)) {
        Word e1 = zero;
        Word e2 = zero;
        e1[static_cast<std::size_t>(pos)] = e;
        e2[static_cast<std::size_t>((pos + 1) % n)] = e;
        cases.push_back({e1, e2});
      }
    }
  }
  for (const auto& [e1, e2] : cases) {
    ProtocolRun run = run_css_protocol(c1, c2, x, e1, e2);
    if (!(run.transcript.corrected && run.transcript.fidelity >= 1 - 1e-9)) {
      std::ostringstream what;
      what << tag << ": error case not corrected (fidelity " << run.transcript.fidelity << ")";
      out.require(false, what.str());
      return;
    }
  }
}

void criterion1(Outcome& out) {
  auto f = PrimeField::make({4, 1});
  std::vector<GaussInt> expected = {
      {0, 0},  {1, 0},  {-1, 0}, {0, 1},  {0, -1}, {2, 0},  {-2, 0}, {0, 2},  {0, -2},
      {1, 1},  {-1, -1}, {1, -1}, {-1, 1}, {2, -1}, {-2, 1}, {1, 2},  {-1, -2}};
  out.require(f->residues().size() == 17, "residue count is not 17");
  out.require(residue_set(f->residues()) == residue_set(expected),
              "residue set differs from the recorded one");
}

void criterion2(Outcome& out) {
  auto f = PrimeField::make({4, 1});
  auto code = LinearCode::from_generator_matrix(f, {{{-1, 1}, {1, 0}}});
  std::vector<Word> expected = {
      {{0, 0}, {0, 0}},   {{1, 0}, {1, 2}},    {{2, 0}, {-1, -1}}, {{-1, -1}, {0, 1}},
      {{0, -1}, {2, -1}}, {{1, -1}, {-1, 0}},  {{2, -1}, {0, 2}},  {{-1, -2}, {2, 0}},
      {{0, -2}, {-1, 1}}, {{0, 2}, {1, -1}},   {{1, 2}, {-2, 0}},  {{-2, 1}, {0, -2}},
      {{-1, 1}, {1, 0}},  {{0, 1}, {-2, 1}},   {{1, 1}, {0, -1}},  {{-2, 0}, {1, 1}},
      {{-1, 0}, {-1, -2}}};
  auto words = code.codewords();
  out.require(words.size() == 17, "codeword count is not 17");
  out.require(word_key_set(words) == word_key_set(expected), "codeword set differs");
  out.require(code.min_distance(Metric::Mannheim) == 3, "d_M != 3");
  out.require(code.min_distance(Metric::Hamming) == 2, "d_H != 2");

  DecodeResult res = code.decode_bounded({{-1, 1}, {0, 0}}, Metric::Mannheim, 1);
  out.require(res.codeword == Word{{-1, 1}, {1, 0}}, "Mannheim decode picked a different codeword");
  bool ambiguous = false;
  try {
    code.decode_bounded({{-1, 1}, {0, 0}}, Metric::Hamming, 1);
  } catch (const AmbiguousDecode&) {
    ambiguous = true;
  }
  out.require(ambiguous, "Hamming decode was not reported ambiguous");
}

void criterion3(Outcome& out) {
  for (GaussInt pi : {GaussInt{2, 1}, GaussInt{3, 2}, GaussInt{4, 1}, GaussInt{5, 2}}) {
    auto f = PrimeField::make(pi);
    FactorizationReport report = verify_global_factorizations(f);
    out.require(report.all_ok(),
                "factorization identities failed at p = " + std::to_string(f->p()) + ": " +
                    report.detail);
  }
}

void criterion4(Outcome& out) {
  auto f = PrimeField::make({4, 1});
  Polynomial g1 = Polynomial::parse(f, "1+2i, -1+1i, -1i, 1");
  Polynomial g2 = Polynomial::parse(f, "1-1i, 2-1i, -1+1i, -1i, -1i, 1");
  Polynomial binomial = Polynomial::modulus_poly(f, 8, Modulus::XnPlus1);
  out.require(divides(g1, binomial), "g1 does not divide x^8+1");
  out.require(divides(g2, binomial), "g2 does not divide x^8+1");
  out.require(divides(g1, g2), "g1 does not divide g2");

  // Single-threaded exhaustive pass (17^5 words per code), budget 60 s.
  {
    const auto start = std::chrono::steady_clock::now();
    SearchOptions serial;
    serial.workers = 1;
    LinearCode c1 = example2_c1();
    LinearCode c2dual = example2_c2().dual();
    out.require(c1.min_distance(Metric::Mannheim, serial) == 5, "serial d_M(C1) != 5");
    out.require(c2dual.min_distance(Metric::Mannheim, serial) == 5, "serial d_M(C2-dual) != 5");
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    out.require(ms < 60000, "single-threaded pass over its 60 s budget");
  }
  // Parallel pass on fresh objects (nothing cached), budget 10 s.
  {
    const auto start = std::chrono::steady_clock::now();
    SearchOptions par;
    par.workers = parallel_workers();
    LinearCode c1 = example2_c1();
    LinearCode c2dual = example2_c2().dual();
    out.require(c1.min_distance(Metric::Mannheim, par) == 5, "parallel d_M(C1) != 5");
    out.require(c2dual.min_distance(Metric::Mannheim, par) == 5, "parallel d_M(C2-dual) != 5");
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    out.require(ms < 10000, "parallel pass over its 10 s budget");
  }

  LinearCode c1 = example2_c1();
  LinearCode c2 = example2_c2();
  SearchOptions opts;
  opts.workers = parallel_workers();
  CssCode css = build_css(c1, c2, opts);
  out.require(css.n == 8 && css.K == 2 && css.d_m.value == 5 && css.d_m.exact,
              "build_css did not yield [[8, 2, 5]]");
  out.require(correctable_count(8, 5, Metric::Mannheim, 17).count == 480,
              "Mannheim correctable count != 480");
  out.require(correctable_count(8, 4, Metric::Hamming, 17).count == 128,
              "Hamming correctable count != 128");
  out.require(check_singleton(8, 2, 4, 17).attains, "Singleton check does not attain");
}

void criterion5(Outcome& out) {
  auto f = PrimeField::make({2, 1});
  auto H = hadamard_matrix(f);
  out.require(H.size() == 5, "matrix is not 5x5");
  const double scale = 1.0 / std::sqrt(5.0);
  double entry_err = 0.0;
  for (std::size_t s = 0; s < 5; ++s) {
    for (std::size_t t = 0; t < 5; ++t) {
      const Cx want =
          std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(s * t % 5) / 5.0) * scale;
      entry_err = std::max(entry_err, std::abs(H[s][t] - want));
      entry_err = std::max(entry_err, std::abs(std::abs(H[s][t]) - scale));
    }
  }
  out.require(entry_err <= 1e-12, "entrywise mismatch above 1e-12");

  double residual = 0.0;
  for (std::size_t r = 0; r < 5; ++r) {
    for (std::size_t c = 0; c < 5; ++c) {
      Cx acc{0, 0};
      for (std::size_t k = 0; k < 5; ++k) acc += H[r][k] * std::conj(H[c][k]);
      if (r == c) acc -= Cx{1, 0};
      residual = std::max(residual, std::abs(acc));
    }
  }
  out.require(residual <= 1e-12, "unitarity residual above 1e-12");
}

void criterion6(Outcome& out) {
  auto f = PrimeField::make({2, 1});
  // Pair 1: C2 = span{(1, 1)} inside C1 = full space at n = 2.
  {
    auto c1 = LinearCode::full_space(f, 2);
    auto c2 = LinearCode::from_generator_matrix(f, {{{1, 0}, {1, 0}}});
    sweep_single_errors(out, c1, c2, Word{{0, 0}, {0, 0}}, "n=2 pair");
    if (!out.pass) return;
  }
  // Pair 2: divisors of x^4 - 1 over G_{2+i}: C1 = <x + i>, C2 = <g2>.
  {
    auto c1 = LinearCode::from_generator_poly(Polynomial::parse(f, "1i, 1"), 4,
                                              Modulus::XnMinus1);
    auto c2 = LinearCode::from_generator_poly(Polynomial::parse(f, "-1i, -1, 1i, 1"), 4,
                                              Modulus::XnMinus1);
    out.require(is_subcode(c2, c1), "x^4-1 divisor pair is not nested");
    sweep_single_errors(out, c1, c2, Word(4, GaussInt{0, 0}), "[[4, 2]] pair");
    if (!out.pass) return;
  }
  // Pair 3: the self-dual-flavored x^2 + x + i divisor pair, t1 = t2 = 1.
  {
    auto c = LinearCode::from_generator_poly(Polynomial::parse(f, "1i, 1, 1"), 4,
                                             Modulus::XnMinus1);
    out.require(c.min_distance(Metric::Mannheim) == 3, "[[4, 0]] component distance != 3");
    sweep_single_errors(out, c, c, Word(4, GaussInt{0, 0}), "[[4, 0]] pair");
  }
}

void criterion7(Outcome& out) {
  LinearCode c1 = example2_c1();
  LinearCode c2 = example2_c2();
  Word psi = {{1, -1}, {2, -1}, {-1, 1}, {0, -1}, {0, -1}, {1, 0}, {0, 0}, {0, 0}};
  Word zero8(8, GaussInt{0, 0});
  Word e1 = zero8;
  e1[3] = {1, 0};
  e1[4] = {1, 0};

  ProtocolOptions opts;
  opts.mode = ProtocolMode::SyndromeOnly;
  opts.t1 = 2;
  opts.t2 = 2;
  ProtocolRun run = run_css_protocol(c1, c2, psi, e1, zero8, opts);
  out.require(run.transcript.bit_status == SyndromeStatus::Found, "bit decode not found");
  out.require(run.transcript.e1_hat == e1, "recovered X error differs from the applied one");
  out.require(run.transcript.corrected, "transcript not marked corrected");
}

void criterion8(Outcome& out) {
  auto f = PrimeField::make({2, 1});
  auto xi = [&](std::int64_t e) {
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(e % 5) / 5.0);
  };
  for (auto c2 : {LinearCode::from_generator_matrix(f, {{{1, 0}, {1, 0}}}),
                  LinearCode::from_generator_poly(Polynomial::parse(f, "1i, 1, 1"), 4,
                                                  Modulus::XnMinus1),
                  LinearCode::from_generator_poly(Polynomial::parse(f, "1i, 1"), 4,
                                                  Modulus::XnMinus1)}) {
    auto words = c2.codewords();
    auto dual = c2.dual();
    const int n = c2.n();
    std::vector<std::int64_t> digits(static_cast<std::size_t>(n), 0);
    while (true) {
      Word z;
      for (std::int64_t d : digits) z.push_back(f->lift(d));
      Cx acc{0, 0};
      for (const Word& y : words) {
        GaussInt dot{0, 0};
        for (int j = 0; j < n; ++j) {
          dot = f->add(dot, f->mul(y[static_cast<std::size_t>(j)], z[static_cast<std::size_t>(j)]));
        }
        acc += xi(f->project(dot));
      }
      const double want = dual.contains(z) ? static_cast<double>(words.size()) : 0.0;
      if (std::abs(acc - Cx{want, 0}) >= 1e-9) {
        out.require(false, "character sum off at n = " + std::to_string(n));
        return;
      }
      std::size_t pos = 0;
      while (pos < digits.size() && ++digits[pos] == 5) digits[pos++] = 0;
      if (pos == digits.size()) break;
    }
  }
}

void criterion9(Outcome& out) {
  TableOptions opts;
  opts.search.cap = 100'000'000;
  opts.search.workers = parallel_workers();
  auto reports = reproduce_catalog(opts);
  // The source table as transcribed holds ten rows; all must be processed.
  out.require(reports.size() == 10, "not all rows processed");
  for (const RowReport& report : reports) {
    out.require(!report.attempts.empty(), "row without attempts");
  }

  // p = 13 rows: one documented interpretation matches the MM column
  // values 4, 4, 2, 2 through the component-code Mannheim distances.
  const int expected_dm[] = {4, 4, 2, 2};
  for (int i = 0; i < 4; ++i) {
    const RowReport& report = reports[static_cast<std::size_t>(i) + 1];
    bool matched = false;
    for (const RowAttempt& attempt : report.attempts) {
      if (attempt.d_m && *attempt.d_m == expected_dm[i] && attempt.dm_matches) matched = true;
    }
    out.require(matched, "p=13 row " + std::to_string(i + 2) + " did not reproduce d_M");
  }

  // Rows that no interpretation explains stay visibly unresolved; the p=5
  // row is the known instance (row 6 shares its fate).
  out.require(reports[0].verdict == RowVerdict::Unresolved, "p=5 row not flagged unresolved");
  for (const RowReport& report : reports) {
    bool any_k = false;
    for (const RowAttempt& attempt : report.attempts) {
      if (attempt.built && attempt.k_matches) any_k = true;
    }
    if (!any_k) {
      out.require(report.verdict == RowVerdict::Unresolved,
                  "row " + std::to_string(report.row.index) + " silently matched");
    }
  }
}

void criterion10(Outcome& out) {
  // Field axioms, criterion-complete for p <= 29.
  for (GaussInt pi : {GaussInt{2, 1}, GaussInt{3, 2}, GaussInt{4, 1}, GaussInt{5, 2}}) {
    auto f = PrimeField::make(pi);
    const auto& rs = f->residues();
    for (GaussInt a : rs) {
      if (!a.is_zero() && f->mul(a, f->invert(a)) != GaussInt{1, 0}) {
        out.require(false, "inverse axiom failed");
        return;
      }
      for (GaussInt b : rs) {
        if (f->add(a, b) != f->add(b, a) || f->mul(a, b) != f->mul(b, a)) {
          out.require(false, "commutativity failed");
          return;
        }
        for (GaussInt c : rs) {
          if (f->mul(a, f->add(b, c)) != f->add(f->mul(a, b), f->mul(a, c)) ||
              f->add(f->add(a, b), c) != f->add(a, f->add(b, c)) ||
              f->mul(f->mul(a, b), c) != f->mul(a, f->mul(b, c))) {
            out.require(false, "associativity/distributivity failed");
            return;
          }
        }
      }
    }
    // lift/project bijection.
    for (std::int64_t g = 0; g < f->p(); ++g) {
      if (f->project(f->lift(g)) != g) {
        out.require(false, "lift/project bijection failed");
        return;
      }
    }
  }

  // Reduce idempotence across the +-1000 integer box at p = 17.
  auto f17 = PrimeField::make({4, 1});
  for (std::int64_t re = -1000; re <= 1000; ++re) {
    for (std::int64_t im = -1000; im <= 1000; ++im) {
      GaussInt r = f17->reduce({re, im});
      if (f17->reduce(r) != r || !f17->is_canonical(r)) {
        out.require(false, "reduce not idempotent at " + to_string(GaussInt{re, im}));
        return;
      }
    }
  }

  // d_M >= d_H on every constructed code.
  auto f13 = PrimeField::make({3, 2});
  auto f5 = PrimeField::make({2, 1});
  std::vector<LinearCode> codes;
  codes.push_back(LinearCode::from_generator_matrix(f17, {{{-1, 1}, {1, 0}}}));
  codes.push_back(LinearCode::from_generator_poly(Polynomial::parse(f13, "1-1i, -1, 1"), 6,
                                                  Modulus::XnPlus1));
  codes.push_back(LinearCode::from_generator_poly(Polynomial::parse(f13, "-1i, -2, 2i, 1"), 6,
                                                  Modulus::XnPlus1));
  codes.push_back(LinearCode::from_generator_poly(Polynomial::parse(f5, "1i, 1, 1"), 4,
                                                  Modulus::XnMinus1));
  codes.push_back(example2_c1());
  codes.push_back(example2_c2().dual());
  for (const LinearCode& code : codes) {
    SearchOptions opts;
    opts.workers = parallel_workers();
    if (code.min_distance(Metric::Mannheim, opts) < code.min_distance(Metric::Hamming, opts)) {
      out.require(false, "d_M < d_H on a constructed code");
      return;
    }
  }

  // Star-product antisymmetry and bilinearity on a word grid.
  for (std::int64_t a = 0; a < 5 && out.pass; ++a) {
    for (std::int64_t b = 0; b < 5; ++b) {
      Word u = {f5->lift(a), f5->lift(b), f5->lift((a + b) % 5), f5->lift((2 * a) % 5)};
      Word v = {f5->lift(b), f5->lift(a), f5->lift((3 * b + 1) % 5), f5->lift((a + 4) % 5)};
      Word w = {f5->lift((a * b) % 5), f5->lift(1), f5->lift(b), f5->lift(a)};
      if (star_product(f5, u, v) != f5->neg(star_product(f5, v, u))) {
        out.require(false, "star antisymmetry failed");
        return;
      }
      Word vw(4);
      for (int j = 0; j < 4; ++j) {
        vw[static_cast<std::size_t>(j)] =
            f5->add(v[static_cast<std::size_t>(j)], w[static_cast<std::size_t>(j)]);
      }
      if (star_product(f5, u, vw) !=
          f5->add(star_product(f5, u, v), star_product(f5, u, w))) {
        out.require(false, "star bilinearity failed");
        return;
      }
    }
  }

  // Parallel and serial distance scans agree.
  LinearCode big = example2_c1();
  SearchOptions serial;
  serial.workers = 1;
  SearchOptions par;
  par.workers = parallel_workers();
  LinearCode fresh = example2_c1();
  if (big.min_distance(Metric::Mannheim, serial) != fresh.min_distance(Metric::Mannheim, par) ||
      big.min_distance(Metric::Hamming, serial) != fresh.min_distance(Metric::Hamming, par)) {
    out.require(false, "parallel and serial scans disagree");
  }
}

}  // namespace

int main() {
  run_criterion(1, "residue set of G_{4+i} equals the recorded 17-element set", 1000,
                criterion1);
  run_criterion(2, "n=2 reference code end-to-end (codewords, distances, decoding)", 1000,
                criterion2);
  run_criterion(3, "factorization identities for p in {5, 13, 17, 29}", 5000, criterion3);
  run_criterion(4, "[[8, 2, 5]] construction with exhaustive component distances", 70000,
                criterion4);
  run_criterion(5, "5x5 Fourier gate pattern and unitarity", 1000, criterion5);
  run_criterion(6, "protocol round trip over three nested pairs", 30000, criterion6);
  run_criterion(7, "syndrome-only recovery of the recorded two-position X error", 30000,
                criterion7);
  run_criterion(8, "character-sum lemma on p=5 codes", 5000, criterion8);
  run_criterion(9, "reference catalog reproduction report", 120000, criterion9);
  run_criterion(10, "property suites (axioms, reduce, duality, star, parallel scans)", 60000,
                criterion10);

  if (g_failures == 0) {
    std::printf("all 10 acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria FAILED\n", g_failures);
  return 1;
}
