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

#include "mannheim/qudit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace mannheim {

namespace {

std::vector<std::complex<double>> root_of_unity_powers(std::int64_t p) {
  std::vector<std::complex<double>> xi(static_cast<std::size_t>(p));
  for (std::int64_t k = 0; k < p; ++k) {
    xi[static_cast<std::size_t>(k)] =
        std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(p));
  }
  return xi;
}

constexpr double kSupportEps = 1e-9;

}  // namespace

StateVector::StateVector(FieldPtr field, int n) : field_(std::move(field)), n_(n) {
  if (!field_) throw FieldMismatch("state vector needs a field");
  if (n_ < 1) throw OutOfRange("qudit count must be positive");
  const __int128 dim = detail::pow_clamped(field_->p(), n_, kAmpCap);
  if (dim > kAmpCap) {
    throw CapacityExceeded("state of " + std::to_string(field_->p()) + "^" + std::to_string(n_) +
                           " amplitudes exceeds the cap " + std::to_string(kAmpCap));
  }
  dim_ = static_cast<std::int64_t>(dim);
  amps_.assign(static_cast<std::size_t>(dim_), {0.0, 0.0});
  amps_[0] = {1.0, 0.0};
}

StateVector StateVector::basis_state(FieldPtr field, const std::vector<GaussInt>& labels) {
  StateVector s(std::move(field), static_cast<int>(labels.size()));
  const std::int64_t p = s.field_->p();
  std::int64_t idx = 0;
  std::int64_t stride = 1;
  for (const GaussInt& g : labels) {
    idx += s.field_->project(s.field_->reduce(g)) * stride;
    stride *= p;
  }
  s.amps_[0] = {0.0, 0.0};
  s.amps_[static_cast<std::size_t>(idx)] = {1.0, 0.0};
  return s;
}

void StateVector::check_pos(int pos) const {
  if (pos < 0 || pos >= n_) {
    throw IndexOutOfRange("qudit index " + std::to_string(pos) + " outside [0, " +
                          std::to_string(n_) + ")");
  }
}

void StateVector::apply_x(int pos, GaussInt a) {
  apply_x_label(pos, field_->project(field_->reduce(a)));
}

void StateVector::apply_z(int pos, GaussInt b) {
  apply_z_label(pos, field_->project(field_->reduce(b)));
}

void StateVector::apply_x_label(int pos, std::int64_t a) {
  check_pos(pos);
  const std::int64_t p = field_->p();
  const std::int64_t s = ((a % p) + p) % p;
  if (s == 0) return;
  std::int64_t stride = 1;
  for (int i = 0; i < pos; ++i) stride *= p;
  const std::int64_t block = stride * p;
  std::vector<std::complex<double>> tmp(static_cast<std::size_t>(p));
  for (std::int64_t hi = 0; hi < dim_; hi += block) {
    for (std::int64_t lo = 0; lo < stride; ++lo) {
      const std::int64_t base = hi + lo;
      for (std::int64_t t = 0; t < p; ++t) {
        tmp[static_cast<std::size_t>(t)] = amps_[static_cast<std::size_t>(base + t * stride)];
      }
      for (std::int64_t t = 0; t < p; ++t) {
        amps_[static_cast<std::size_t>(base + ((t + s) % p) * stride)] =
            tmp[static_cast<std::size_t>(t)];
      }
    }
  }
}

void StateVector::apply_z_label(int pos, std::int64_t b) {
  check_pos(pos);
  const std::int64_t p = field_->p();
  const std::int64_t s = ((b % p) + p) % p;
  if (s == 0) return;
  const auto xi = root_of_unity_powers(p);
  std::vector<std::complex<double>> phase(static_cast<std::size_t>(p));
  for (std::int64_t t = 0; t < p; ++t) {
    phase[static_cast<std::size_t>(t)] = xi[static_cast<std::size_t>(s * t % p)];
  }
  std::int64_t stride = 1;
  for (int i = 0; i < pos; ++i) stride *= p;
  const std::int64_t block = stride * p;
  for (std::int64_t hi = 0; hi < dim_; hi += block) {
    for (std::int64_t lo = 0; lo < stride; ++lo) {
      const std::int64_t base = hi + lo;
      for (std::int64_t t = 0; t < p; ++t) {
        amps_[static_cast<std::size_t>(base + t * stride)] *= phase[static_cast<std::size_t>(t)];
      }
    }
  }
}

void StateVector::apply_fourier(int pos, int direction) {
  check_pos(pos);
  const std::int64_t p = field_->p();
  const auto xi = root_of_unity_powers(p);
  const double scale = 1.0 / std::sqrt(static_cast<double>(p));
  std::int64_t stride = 1;
  for (int i = 0; i < pos; ++i) stride *= p;
  const std::int64_t block = stride * p;
  std::vector<std::complex<double>> in(static_cast<std::size_t>(p));
  std::vector<std::complex<double>> out(static_cast<std::size_t>(p));
  for (std::int64_t hi = 0; hi < dim_; hi += block) {
    for (std::int64_t lo = 0; lo < stride; ++lo) {
      const std::int64_t base = hi + lo;
      for (std::int64_t t = 0; t < p; ++t) {
        in[static_cast<std::size_t>(t)] = amps_[static_cast<std::size_t>(base + t * stride)];
      }
      for (std::int64_t s = 0; s < p; ++s) {
        std::complex<double> acc{0.0, 0.0};
        for (std::int64_t t = 0; t < p; ++t) {
          std::int64_t e = s * t % p;
          if (direction < 0) e = (p - e) % p;
          acc += xi[static_cast<std::size_t>(e)] * in[static_cast<std::size_t>(t)];
        }
        out[static_cast<std::size_t>(s)] = acc * scale;
      }
      for (std::int64_t s = 0; s < p; ++s) {
        amps_[static_cast<std::size_t>(base + s * stride)] = out[static_cast<std::size_t>(s)];
      }
    }
  }
}

void StateVector::apply_hadamard(int pos) { apply_fourier(pos, +1); }

void StateVector::apply_hadamard_inverse(int pos) { apply_fourier(pos, -1); }

double StateVector::norm() const {
  double acc = 0.0;
  for (const std::complex<double>& a : amps_) acc += std::norm(a);
  return std::sqrt(acc);
}

std::vector<std::vector<std::complex<double>>> hadamard_matrix(const FieldPtr& field) {
  if (!field) throw FieldMismatch("hadamard matrix needs a field");
  const std::int64_t p = field->p();
  const auto xi = root_of_unity_powers(p);
  const double scale = 1.0 / std::sqrt(static_cast<double>(p));
  std::vector<std::vector<std::complex<double>>> h(
      static_cast<std::size_t>(p), std::vector<std::complex<double>>(static_cast<std::size_t>(p)));
  for (std::int64_t s = 0; s < p; ++s) {
    for (std::int64_t t = 0; t < p; ++t) {
      h[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] =
          xi[static_cast<std::size_t>(s * t % p)] * scale;
    }
  }
  return h;
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (!(*a.field() == *b.field()) || a.n() != b.n()) {
    throw ShapeMismatch("state vectors have different shapes");
  }
  std::complex<double> inner{0.0, 0.0};
  for (std::size_t i = 0; i < a.amps().size(); ++i) {
    inner += std::conj(a.amps()[i]) * b.amps()[i];
  }
  return std::norm(inner);
}

StateVector prepare_coset_state(const LinearCode& c1, const LinearCode& c2,
                                const std::vector<GaussInt>& x) {
  if (!is_subcode(c2, c1)) throw NotNested("C2 is not a subcode of C1");
  if (!c1.contains(x)) throw NotACodeword("x is not a codeword of C1");
  const FieldPtr& f = c1.field();
  const std::int64_t p = f->p();
  StateVector psi(f, c1.n());
  psi.mutable_amps()[0] = {0.0, 0.0};

  detail::LabelVec xl(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) xl[i] = f->project(f->reduce(x[i]));

  const __int128 coset = detail::pow_clamped(p, c2.k(), StateVector::kAmpCap);
  const double amp = 1.0 / std::sqrt(static_cast<double>(coset));
  detail::foreach_in_span(c2.basis_labels(), xl.size(), p, [&](const detail::LabelVec& y) {
    std::int64_t idx = 0;
    std::int64_t stride = 1;
    for (std::size_t j = 0; j < xl.size(); ++j) {
      idx += (xl[j] + y[j]) % p * stride;
      stride *= p;
    }
    psi.mutable_amps()[static_cast<std::size_t>(idx)] = {amp, 0.0};
  });
  return psi;
}

namespace {

// Reads the deterministic projective measurement of the given code's check
// values off the state support. Every support label must agree; anything
// else means the state was not in a syndrome eigenspace.
std::vector<GaussInt> measure_syndrome(const StateVector& psi, const LinearCode& code) {
  const FieldPtr& f = psi.field();
  const std::int64_t p = f->p();
  std::vector<GaussInt> syn;
  bool first = true;
  std::vector<GaussInt> word(static_cast<std::size_t>(psi.n()));
  for (std::size_t idx = 0; idx < psi.amps().size(); ++idx) {
    if (std::abs(psi.amps()[idx]) <= kSupportEps) continue;
    std::int64_t rem = static_cast<std::int64_t>(idx);
    for (std::size_t j = 0; j < word.size(); ++j) {
      word[j] = f->lift(rem % p);
      rem /= p;
    }
    std::vector<GaussInt> s = code.syndrome(word);
    if (first) {
      syn = std::move(s);
      first = false;
    } else if (s != syn) {
      throw InternalInvariant("syndrome varies across the state support");
    }
  }
  if (first) throw InternalInvariant("state support is empty");
  return syn;
}

int reduced_weight(const PrimeField& f, const std::vector<GaussInt>& v) {
  int w = 0;
  for (const GaussInt& g : v) w += mannheim_weight(f.reduce(g));
  return w;
}

}  // namespace

ProtocolRun run_css_protocol(const LinearCode& c1, const LinearCode& c2,
                             const std::vector<GaussInt>& x, const std::vector<GaussInt>& e1,
                             const std::vector<GaussInt>& e2, const ProtocolOptions& opts) {
  if (!is_subcode(c2, c1)) throw NotNested("C2 is not a subcode of C1");
  const FieldPtr& f = c1.field();
  const int n = c1.n();
  if (static_cast<int>(e1.size()) != n || static_cast<int>(e2.size()) != n) {
    throw LengthMismatch("error vectors must have the code length");
  }
  const LinearCode c2dual = c2.dual();

  ProtocolRun run;
  ProtocolTranscript& tr = run.transcript;
  tr.t1 = opts.t1 >= 0 ? opts.t1 : (c1.min_distance(Metric::Mannheim, opts.search) - 1) / 2;
  tr.t2 = opts.t2 >= 0 ? opts.t2 : (c2dual.min_distance(Metric::Mannheim, opts.search) - 1) / 2;
  tr.within_capacity =
      reduced_weight(*f, e1) <= tr.t1 && reduced_weight(*f, e2) <= tr.t2;

  bool full = false;
  const __int128 dim = detail::pow_clamped(f->p(), n, StateVector::kAmpCap);
  switch (opts.mode) {
    case ProtocolMode::Auto:
      full = dim <= StateVector::kAmpCap;
      break;
    case ProtocolMode::Full:
      if (dim > StateVector::kAmpCap) {
        throw CapacityExceeded("full-state mode needs at most " +
                               std::to_string(StateVector::kAmpCap) +
                               " amplitudes; rerun in syndrome-only mode");
      }
      full = true;
      break;
    case ProtocolMode::SyndromeOnly:
      full = false;
      break;
  }
  tr.syndrome_only = !full;

  if (full) {
    StateVector psi = prepare_coset_state(c1, c2, x);
    const StateVector reference = psi;
    // Phase errors first: the corruption phases read the labels before the
    // bit shifts move them.
    for (int i = 0; i < n; ++i) psi.apply_z(i, e2[static_cast<std::size_t>(i)]);
    for (int i = 0; i < n; ++i) psi.apply_x(i, e1[static_cast<std::size_t>(i)]);

    tr.bit_syndrome = measure_syndrome(psi, c1);
    const SyndromeDecodeResult dec1 = c1.syndrome_decode(tr.bit_syndrome, Metric::Mannheim, tr.t1);
    tr.bit_status = dec1.status;
    if (dec1.status == SyndromeStatus::Found) {
      tr.e1_hat = dec1.error;
      for (int i = 0; i < n; ++i) psi.apply_x(i, f->neg(dec1.error[static_cast<std::size_t>(i)]));
    }

    for (int i = 0; i < n; ++i) psi.apply_hadamard(i);

    // The Fourier layer turns the phase error into a label shift by -e2, so
    // the decoded shift is negated to estimate e2 itself.
    tr.phase_syndrome = measure_syndrome(psi, c2dual);
    const SyndromeDecodeResult dec2 =
        c2dual.syndrome_decode(tr.phase_syndrome, Metric::Mannheim, tr.t2);
    tr.phase_status = dec2.status;
    if (dec2.status == SyndromeStatus::Found) {
      tr.e2_hat.reserve(dec2.error.size());
      for (const GaussInt& g : dec2.error) tr.e2_hat.push_back(f->neg(g));
      for (int i = 0; i < n; ++i) psi.apply_x(i, f->neg(dec2.error[static_cast<std::size_t>(i)]));
    }

    for (int i = 0; i < n; ++i) psi.apply_hadamard_inverse(i);

    tr.fidelity = fidelity(reference, psi);
    tr.corrected = dec1.status == SyndromeStatus::Found &&
                   dec2.status == SyndromeStatus::Found && tr.fidelity >= 1.0 - 1e-9;
    run.state = std::move(psi);
    return run;
  }

  // Classical path: the same syndromes the measurements would produce.
  if (!c1.contains(x)) throw NotACodeword("x is not a codeword of C1");
  std::vector<GaussInt> received(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    received[static_cast<std::size_t>(i)] =
        f->add(x[static_cast<std::size_t>(i)], e1[static_cast<std::size_t>(i)]);
  }
  tr.bit_syndrome = c1.syndrome(received);
  const SyndromeDecodeResult dec1 = c1.syndrome_decode(tr.bit_syndrome, Metric::Mannheim, tr.t1);
  tr.bit_status = dec1.status;
  if (dec1.status == SyndromeStatus::Found) tr.e1_hat = dec1.error;

  std::vector<GaussInt> shifted(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) shifted[static_cast<std::size_t>(i)] = f->neg(e2[static_cast<std::size_t>(i)]);
  tr.phase_syndrome = c2dual.syndrome(shifted);
  const SyndromeDecodeResult dec2 =
      c2dual.syndrome_decode(tr.phase_syndrome, Metric::Mannheim, tr.t2);
  tr.phase_status = dec2.status;
  if (dec2.status == SyndromeStatus::Found) {
    tr.e2_hat.reserve(dec2.error.size());
    for (const GaussInt& g : dec2.error) tr.e2_hat.push_back(f->neg(g));
  }

  // Corrected means both residual errors act trivially on the code space:
  // leftover bit shifts inside C2 permute each coset with itself, leftover
  // phases in the dual of C1 are constant on every coset.
  std::vector<GaussInt> res1(static_cast<std::size_t>(n));
  std::vector<GaussInt> res2(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    res1[ui] = tr.e1_hat.empty() ? f->reduce(e1[ui]) : f->sub(e1[ui], tr.e1_hat[ui]);
    res2[ui] = tr.e2_hat.empty() ? f->reduce(e2[ui]) : f->sub(e2[ui], tr.e2_hat[ui]);
  }
  tr.corrected = c2.contains(res1) && c1.dual().contains(res2);
  tr.fidelity = tr.corrected ? 1.0 : 0.0;
  return run;
}

}  // namespace mannheim
