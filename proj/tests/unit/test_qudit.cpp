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

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "mannheim/qudit.hpp"

using namespace mannheim;

namespace {

using Cx = std::complex<double>;
using Word = std::vector<GaussInt>;

constexpr double kEps = 1e-12;

std::vector<Cx> xi_powers(std::int64_t p) {
  std::vector<Cx> out(static_cast<std::size_t>(p));
  for (std::int64_t k = 0; k < p; ++k) {
    out[static_cast<std::size_t>(k)] =
        std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) /
                            static_cast<double>(p));
  }
  return out;
}

}  // namespace

TEST_CASE("the 5x5 Fourier gate matches the xi-power pattern") {
  auto f = PrimeField::make({2, 1});
  auto H = hadamard_matrix(f);
  auto xi = xi_powers(5);
  const double scale = 1.0 / std::sqrt(5.0);
  REQUIRE(H.size() == 5);
  for (std::size_t s = 0; s < 5; ++s) {
    REQUIRE(H[s].size() == 5);
    for (std::size_t t = 0; t < 5; ++t) {
      CHECK(std::abs(H[s][t] - xi[(s * t) % 5] * scale) < kEps);
      CHECK(std::abs(std::abs(H[s][t]) - scale) < kEps);
    }
  }
}

TEST_CASE("the Fourier gate is unitary for every supported p") {
  for (GaussInt pi : {GaussInt{2, 1}, GaussInt{3, 2}, GaussInt{4, 1}, GaussInt{5, 2}}) {
    auto f = PrimeField::make(pi);
    auto H = hadamard_matrix(f);
    const std::size_t p = H.size();
    double residual = 0.0;
    for (std::size_t r = 0; r < p; ++r) {
      for (std::size_t c = 0; c < p; ++c) {
        Cx acc{0, 0};
        for (std::size_t k = 0; k < p; ++k) acc += H[r][k] * std::conj(H[c][k]);
        acc -= r == c ? Cx{1, 0} : Cx{0, 0};
        residual = std::max(residual, std::abs(acc));
      }
    }
    CHECK(residual < kEps);
  }
}

TEST_CASE("X shifts labels and Z applies phases") {
  auto f = PrimeField::make({2, 1});
  auto xi = xi_powers(5);
  for (std::int64_t l = 0; l < 5; ++l) {
    StateVector s = StateVector::basis_state(f, {f->lift(l)});
    s.apply_x_label(0, 2);
    for (std::int64_t r = 0; r < 5; ++r) {
      CHECK(std::abs(s.amps()[static_cast<std::size_t>(r)] -
                     (r == (l + 2) % 5 ? Cx{1, 0} : Cx{0, 0})) < kEps);
    }
    StateVector z = StateVector::basis_state(f, {f->lift(l)});
    z.apply_z_label(0, 3);
    CHECK(std::abs(z.amps()[static_cast<std::size_t>(l)] - xi[(3 * l) % 5]) < kEps);
  }
  // The value-level gates reduce their argument first.
  StateVector s = StateVector::basis_state(f, {{0, 0}});
  s.apply_x(0, {0, 1});  // i reduces to label project(i)
  StateVector expect = StateVector::basis_state(f, {f->reduce({0, 1})});
  CHECK(fidelity(s, expect) > 1 - 1e-12);
}

TEST_CASE("conjugating a shift by the Fourier gate gives a phase") {
  auto f = PrimeField::make({2, 1});
  auto xi = xi_powers(5);
  // H X(a) H^-1 = Z(a) as dense 5x5 matrices, for every label a.
  for (std::int64_t a = 0; a < 5; ++a) {
    std::vector<std::vector<Cx>> got(5, std::vector<Cx>(5));
    for (std::int64_t t = 0; t < 5; ++t) {
      StateVector s = StateVector::basis_state(f, {f->lift(t)});
      s.apply_hadamard_inverse(0);
      s.apply_x_label(0, a);
      s.apply_hadamard(0);
      for (std::int64_t r = 0; r < 5; ++r) {
        got[static_cast<std::size_t>(r)][static_cast<std::size_t>(t)] =
            s.amps()[static_cast<std::size_t>(r)];
      }
    }
    for (std::int64_t t = 0; t < 5; ++t) {
      for (std::int64_t r = 0; r < 5; ++r) {
        Cx want = r == t ? xi[(a * t) % 5] : Cx{0, 0};
        CHECK(std::abs(got[static_cast<std::size_t>(r)][static_cast<std::size_t>(t)] - want) <
              kEps);
      }
    }
  }
}

TEST_CASE("X and Z obey the Weyl commutation phase") {
  auto f = PrimeField::make({2, 1});
  auto xi = xi_powers(5);
  for (std::int64_t a = 0; a < 5; ++a) {
    for (std::int64_t b = 0; b < 5; ++b) {
      StateVector left = StateVector::basis_state(f, {{1, 0}});
      left.apply_z_label(0, b);
      left.apply_x_label(0, a);  // X(a) Z(b) |1>
      StateVector right = StateVector::basis_state(f, {{1, 0}});
      right.apply_x_label(0, a);
      right.apply_z_label(0, b);  // Z(b) X(a) |1>
      // X(a) Z(b) = xi^{-ab} Z(b) X(a): compare amplitudes entrywise.
      const Cx phase = std::conj(xi[(a * b) % 5]);
      for (std::size_t j = 0; j < 5; ++j) {
        CHECK(std::abs(left.amps()[j] - phase * right.amps()[j]) < kEps);
      }
    }
  }
}

TEST_CASE("multi-qudit layout is little-endian in the position index") {
  auto f = PrimeField::make({2, 1});
  StateVector s = StateVector::basis_state(f, {{1, 0}, {2, 0}});  // labels (1, 2)
  // index = 1 * 5^0 + 2 * 5^1 = 11
  for (std::size_t j = 0; j < 25; ++j) {
    CHECK(std::abs(s.amps()[j] - (j == 11 ? Cx{1, 0} : Cx{0, 0})) < kEps);
  }
  s.apply_x_label(1, 4);  // second digit: 2 + 4 = 6 = 1 mod 5 -> index 6
  CHECK(std::abs(s.amps()[6] - Cx{1, 0}) < kEps);
}

TEST_CASE("state vector capacity is enforced") {
  auto f = PrimeField::make({5, 2});
  CHECK_THROWS_AS(StateVector(f, 5), CapacityExceeded);  // 29^5 > 10^7
  StateVector ok(f, 4);                                  // 29^4 = 707281
  CHECK(ok.amps().size() == 707281);
  CHECK(ok.norm() == doctest::Approx(1.0));
}

TEST_CASE("coset states are uniform over x + C2") {
  auto f = PrimeField::make({2, 1});
  auto c1 = LinearCode::full_space(f, 2);
  auto c2 = LinearCode::from_generator_matrix(f, {{{1, 0}, {1, 0}}});
  Word x = {{1, 0}, {0, 0}};
  StateVector s = prepare_coset_state(c1, c2, x);
  CHECK(s.norm() == doctest::Approx(1.0));

  // Expected support: (1,0) + t(1,1) for t in G_5, amplitude 1/sqrt(5).
  std::vector<bool> in_coset(25, false);
  for (std::int64_t t = 0; t < 5; ++t) {
    GaussInt tt = f->lift(t);
    GaussInt first = f->add({1, 0}, tt);
    GaussInt second = tt;
    in_coset[static_cast<std::size_t>(f->project(first) + 5 * f->project(second))] = true;
  }
  const double amp = 1.0 / std::sqrt(5.0);
  for (std::size_t j = 0; j < 25; ++j) {
    double want = in_coset[j] ? amp : 0.0;
    CHECK(std::abs(s.amps()[j] - Cx{want, 0}) < kEps);
  }

  // x must lie in C1: against the diagonal code, (2, 1) does not.
  auto zero = LinearCode::zero_code(f, 2);
  CHECK_THROWS_AS(prepare_coset_state(c2, zero, Word{{2, 0}, {1, 0}}), NotACodeword);
  CHECK_THROWS_AS(prepare_coset_state(c2, c1, x), NotNested);
}

TEST_CASE("character sums over C2 detect dual membership") {
  // sum_{y in C2} xi^{project(y . z)} is |C2| when z is in the dual and 0
  // otherwise.
  auto f = PrimeField::make({2, 1});
  auto xi = xi_powers(5);
  for (auto c2 : {LinearCode::from_generator_matrix(f, {{{1, 0}, {1, 0}}}),
                  LinearCode::from_generator_poly(Polynomial::parse(f, "1i, 1, 1"), 4,
                                                  Modulus::XnMinus1)}) {
    auto words = c2.codewords();
    auto dual = c2.dual();
    const int n = c2.n();
    // Walk every vector z in G_5^n.
    std::vector<std::int64_t> digits(static_cast<std::size_t>(n), 0);
    while (true) {
      Word z;
      for (std::int64_t d : digits) z.push_back(f->lift(d));
      Cx acc{0, 0};
      for (const Word& y : words) {
        GaussInt dot{0, 0};
        for (int j = 0; j < n; ++j) dot = f->add(dot, f->mul(y[static_cast<std::size_t>(j)],
                                                             z[static_cast<std::size_t>(j)]));
        acc += xi[static_cast<std::size_t>(f->project(dot))];
      }
      const double want = dual.contains(z) ? static_cast<double>(words.size()) : 0.0;
      CHECK(std::abs(acc - Cx{want, 0}) < 1e-9);
      std::size_t pos = 0;
      while (pos < digits.size() && ++digits[pos] == 5) digits[pos++] = 0;
      if (pos == digits.size()) break;
    }
  }
}

TEST_CASE("fidelity") {
  auto f = PrimeField::make({2, 1});
  StateVector a = StateVector::basis_state(f, {{1, 0}});
  StateVector b = StateVector::basis_state(f, {{2, 0}});
  CHECK(fidelity(a, a) == doctest::Approx(1.0));
  CHECK(fidelity(a, b) == doctest::Approx(0.0));
  CHECK_THROWS_AS(fidelity(a, StateVector(f, 2)), ShapeMismatch);
}

TEST_CASE("full protocol corrects in-budget errors") {
  auto f = PrimeField::make({2, 1});
  auto c = LinearCode::from_generator_poly(Polynomial::parse(f, "1i, 1, 1"), 4,
                                           Modulus::XnMinus1);
  const Word zero4(4, GaussInt{0, 0});
  ProtocolOptions opts;
  opts.t1 = 1;
  opts.t2 = 1;

  // No error: identity round trip.
  ProtocolRun clean = run_css_protocol(c, c, zero4, zero4, zero4, opts);
  CHECK(clean.transcript.corrected);
  CHECK(clean.transcript.fidelity == doctest::Approx(1.0));
  CHECK(!clean.transcript.syndrome_only);
  CHECK(clean.state.has_value());

  // A weight-1 X error together with a weight-1 Z error.
  Word e1 = zero4;
  e1[2] = {0, -1};
  Word e2 = zero4;
  e2[0] = {1, 0};
  ProtocolRun run = run_css_protocol(c, c, zero4, e1, e2, opts);
  CHECK(run.transcript.corrected);
  CHECK(run.transcript.fidelity > 1 - 1e-9);
  CHECK(run.transcript.e1_hat == e1);
  CHECK(run.transcript.e2_hat == e2);

  // Weight 2 exceeds t=1: the decoder reports the failure.
  Word heavy = zero4;
  heavy[0] = {1, 0};
  heavy[1] = {0, 1};
  ProtocolRun fail = run_css_protocol(c, c, zero4, heavy, zero4, opts);
  CHECK(!fail.transcript.corrected);
}

TEST_CASE("syndrome-only protocol matches the recorded recovery") {
  auto f = PrimeField::make({4, 1});
  auto c1 = LinearCode::from_generator_poly(Polynomial::parse(f, "1+2i, -1+1i, -1i, 1"), 8,
                                            Modulus::XnPlus1);
  auto c2 = LinearCode::from_generator_poly(
      Polynomial::parse(f, "1-1i, 2-1i, -1+1i, -1i, -1i, 1"), 8, Modulus::XnPlus1);
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
  CHECK(run.transcript.syndrome_only);
  CHECK(!run.state.has_value());
  CHECK(run.transcript.e1_hat == e1);
  CHECK(run.transcript.corrected);
  CHECK(run.transcript.fidelity == doctest::Approx(1.0));

  // 17^8 amplitudes exceed the cap: Auto degrades, Full refuses.
  ProtocolOptions full = opts;
  full.mode = ProtocolMode::Full;
  CHECK_THROWS_AS(run_css_protocol(c1, c2, psi, e1, zero8, full), CapacityExceeded);
  ProtocolOptions autodetect = opts;
  autodetect.mode = ProtocolMode::Auto;
  ProtocolRun degraded = run_css_protocol(c1, c2, psi, e1, zero8, autodetect);
  CHECK(degraded.transcript.syndrome_only);
  CHECK(!degraded.state.has_value());
  CHECK(degraded.transcript.within_capacity);  // weights sit inside the radii
  CHECK(degraded.transcript.corrected);
}

TEST_CASE("auto mode stays full-state within capacity") {
  auto f = PrimeField::make({2, 1});
  auto c1 = LinearCode::full_space(f, 2);
  auto c2 = LinearCode::from_generator_matrix(f, {{{1, 0}, {1, 0}}});
  const Word zero2(2, GaussInt{0, 0});
  ProtocolRun run = run_css_protocol(c1, c2, zero2, zero2, zero2);
  CHECK(!run.transcript.syndrome_only);
  CHECK(run.transcript.within_capacity);
  CHECK(run.transcript.corrected);
  CHECK(run.transcript.t1 == 0);  // derived from d_M(C1) = 1
  CHECK(run.state.has_value());
}
