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

#include "mannheim/linear_code.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <thread>
#include <utility>

namespace mannheim {

namespace {

detail::LabelVec labels_of(const PrimeField& f, const std::vector<GaussInt>& v) {
  detail::LabelVec out;
  out.reserve(v.size());
  for (const GaussInt& g : v) out.push_back(f.project(f.reduce(g)));
  return out;
}

std::vector<GaussInt> residues_of(const PrimeField& f, const detail::LabelVec& v) {
  std::vector<GaussInt> out;
  out.reserve(v.size());
  for (std::int64_t l : v) out.push_back(f.lift(l));
  return out;
}

std::string count_text(std::int64_t p, int k) {
  return std::to_string(p) + "^" + std::to_string(k);
}

constexpr std::int64_t kCountClamp = 4'000'000'000'000'000'000LL;

struct ScanMins {
  int dm = std::numeric_limits<int>::max();
  int dh = std::numeric_limits<int>::max();
};

// Walks message indices [lo, hi) over the given generator rows, message
// digit 0 attached to rows[0] and running fastest. Tracks the minimum
// Mannheim and Hamming codeword weights in a single pass. Index 0 is the
// zero message; callers keep lo >= 1.
ScanMins scan_message_range(std::int64_t p, const detail::LabelMat& rows,
                            const std::vector<std::vector<detail::LabelVec>>& rowmul,
                            const std::vector<int>& wlut, __int128 lo, __int128 hi) {
  ScanMins mins;
  const std::size_t k = rows.size();
  const std::size_t n = rows[0].size();

  std::vector<std::int64_t> digit(k, 0);
  __int128 rem = lo;
  for (std::size_t j = 0; j < k; ++j) {
    digit[j] = static_cast<std::int64_t>(rem % p);
    rem /= p;
  }
  std::vector<detail::LabelVec> suffix(k + 1, detail::LabelVec(n, 0));
  for (std::size_t j = k; j-- > 0;) {
    const detail::LabelVec& rm = rowmul[j][static_cast<std::size_t>(digit[j])];
    for (std::size_t t = 0; t < n; ++t) {
      std::int64_t s = suffix[j + 1][t] + rm[t];
      suffix[j][t] = s >= p ? s - p : s;
    }
  }

  __int128 idx = lo;
  while (idx < hi) {
    const std::int64_t c0 = digit[0];
    const __int128 want = hi - idx;
    const std::int64_t avail = p - c0;
    const std::int64_t steps = want < avail ? static_cast<std::int64_t>(want) : avail;
    const detail::LabelVec& s1 = suffix[1];
    for (std::int64_t s = 0; s < steps; ++s) {
      const detail::LabelVec& rm = rowmul[0][static_cast<std::size_t>(c0 + s)];
      int wm = 0;
      int wh = 0;
      for (std::size_t t = 0; t < n; ++t) {
        std::int64_t lbl = s1[t] + rm[t];
        if (lbl >= p) lbl -= p;
        wm += wlut[static_cast<std::size_t>(lbl)];
        wh += lbl != 0;
      }
      if (wm < mins.dm) mins.dm = wm;
      if (wh < mins.dh) mins.dh = wh;
    }
    idx += steps;
    if (idx >= hi) break;
    digit[0] = 0;
    std::size_t d = 1;
    while (d < k && digit[d] == p - 1) {
      digit[d] = 0;
      ++d;
    }
    if (d == k) break;
    ++digit[d];
    for (std::size_t j = d + 1; j-- > 1;) {
      const detail::LabelVec& rm = rowmul[j][static_cast<std::size_t>(digit[j])];
      for (std::size_t t = 0; t < n; ++t) {
        std::int64_t s = suffix[j + 1][t] + rm[t];
        suffix[j][t] = s >= p ? s - p : s;
      }
    }
  }
  return mins;
}

ScanMins scan_codewords(const PrimeField& f, const detail::LabelMat& rows, __int128 lo,
                        __int128 hi, int workers) {
  const std::int64_t p = f.p();
  const std::size_t k = rows.size();
  std::vector<std::vector<detail::LabelVec>> rowmul(k);
  for (std::size_t j = 0; j < k; ++j) {
    rowmul[j].assign(static_cast<std::size_t>(p), detail::LabelVec(rows[j].size(), 0));
    for (std::int64_t c = 1; c < p; ++c) {
      for (std::size_t t = 0; t < rows[j].size(); ++t) {
        rowmul[j][static_cast<std::size_t>(c)][t] = c * rows[j][t] % p;
      }
    }
  }
  std::vector<int> wlut(static_cast<std::size_t>(p));
  for (std::int64_t l = 0; l < p; ++l) wlut[static_cast<std::size_t>(l)] = f.weight_of_label(l);

  const __int128 span = hi - lo;
  int w = std::clamp(workers, 1, 256);
  if (span < w) w = std::max<int>(1, static_cast<int>(span));
  if (w == 1) return scan_message_range(p, rows, rowmul, wlut, lo, hi);

  std::vector<ScanMins> results(static_cast<std::size_t>(w));
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(w));
  const __int128 chunk = span / w;
  const __int128 extra = span % w;
  __int128 start = lo;
  for (int i = 0; i < w; ++i) {
    const __int128 len = chunk + (i < extra ? 1 : 0);
    const __int128 stop = start + len;
    threads.emplace_back([&, i, start, stop]() {
      results[static_cast<std::size_t>(i)] =
          scan_message_range(p, rows, rowmul, wlut, start, stop);
    });
    start = stop;
  }
  for (std::thread& t : threads) t.join();
  ScanMins mins;
  for (const ScanMins& r : results) {
    mins.dm = std::min(mins.dm, r.dm);
    mins.dh = std::min(mins.dh, r.dh);
  }
  return mins;
}

// Visits every label-vector pattern of exact metric weight rem whose support
// starts at or after start, mutating e in place. Supports are generated in
// increasing position order so no pattern repeats.
void foreach_pattern_rec(const PrimeField& f, Metric metric, detail::LabelVec& e,
                         std::size_t start, int rem, const std::function<void()>& visit) {
  if (rem == 0) {
    visit();
    return;
  }
  const std::size_t n = e.size();
  for (std::size_t pos = start; pos < n; ++pos) {
    if (metric == Metric::Mannheim) {
      const int maxw = std::min(rem, f.max_weight());
      for (int wc = 1; wc <= maxw; ++wc) {
        for (const GaussInt& v : f.residues_of_weight(wc)) {
          e[pos] = f.project(v);
          foreach_pattern_rec(f, metric, e, pos + 1, rem - wc, visit);
        }
      }
    } else {
      for (std::int64_t lbl = 1; lbl < f.p(); ++lbl) {
        e[pos] = lbl;
        foreach_pattern_rec(f, metric, e, pos + 1, rem - 1, visit);
      }
    }
    e[pos] = 0;
  }
}

}  // namespace

std::string to_string(Metric m) { return m == Metric::Mannheim ? "mannheim" : "hamming"; }

struct LinearCode::DistanceCache {
  std::mutex mu;
  std::optional<int> dm;
  std::optional<int> dh;
};

LinearCode::LinearCode(FieldPtr field, int n, detail::LabelMat basis,
                       std::optional<PolyOrigin> origin)
    : field_(std::move(field)),
      n_(n),
      basis_(std::move(basis)),
      origin_(std::move(origin)),
      cache_(std::make_shared<DistanceCache>()) {
  const std::int64_t p = field_->p();
  rref_ = detail::rref(basis_, p);
  if (rref_.rows.size() != basis_.size()) {
    throw InternalInvariant("generator basis rows are linearly dependent");
  }
  parity_ = detail::rref(detail::nullspace(rref_.rows, static_cast<std::size_t>(n_), p), p).rows;
}

LinearCode LinearCode::from_generator_matrix(FieldPtr field,
                                             const std::vector<std::vector<GaussInt>>& rows) {
  if (!field) throw FieldMismatch("generator matrix needs a field");
  if (rows.empty()) throw ZeroCode("generator matrix has no rows");
  const std::size_t n = rows[0].size();
  if (n == 0) throw LengthMismatch("generator rows are empty");
  detail::LabelMat kept;
  detail::Rref cur;
  for (const std::vector<GaussInt>& grow : rows) {
    if (grow.size() != n) throw LengthMismatch("generator rows have differing lengths");
    detail::LabelVec lrow = labels_of(*field, grow);
    if (!detail::in_row_space(cur, lrow, field->p())) {
      kept.push_back(std::move(lrow));
      cur = detail::rref(kept, field->p());
    }
  }
  if (kept.empty()) throw ZeroCode("every generator row is zero");
  return LinearCode(std::move(field), static_cast<int>(n), std::move(kept), std::nullopt);
}

LinearCode LinearCode::from_generator_poly(const Polynomial& g, int n, Modulus modulus) {
  const FieldPtr& field = g.field();
  if (g.is_zero()) throw ZeroCode("zero generator polynomial");
  if (n < 1) throw OutOfRange("code length must be positive");
  if (g.degree() >= n) throw OutOfRange("generator degree must be below the code length");
  if (!divides(g, Polynomial::modulus_poly(field, n, modulus))) {
    throw NotADivisor("generator polynomial does not divide x^" + std::to_string(n) +
                      (modulus == Modulus::XnMinus1 ? "-1" : "+1"));
  }
  const int k = n - g.degree();
  const std::vector<GaussInt>& c = g.coeffs();
  detail::LabelMat rows(static_cast<std::size_t>(k),
                        detail::LabelVec(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i) + j] = field->project(c[j]);
    }
  }
  return LinearCode(field, n, std::move(rows), PolyOrigin{g, modulus});
}

LinearCode LinearCode::zero_code(FieldPtr field, int n) {
  if (!field) throw FieldMismatch("zero code needs a field");
  if (n < 1) throw OutOfRange("code length must be positive");
  return LinearCode(std::move(field), n, detail::LabelMat{}, std::nullopt);
}

LinearCode LinearCode::full_space(FieldPtr field, int n) {
  if (!field) throw FieldMismatch("full space needs a field");
  if (n < 1) throw OutOfRange("code length must be positive");
  detail::LabelMat rows(static_cast<std::size_t>(n),
                        detail::LabelVec(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return LinearCode(std::move(field), n, std::move(rows), std::nullopt);
}

std::vector<std::vector<GaussInt>> LinearCode::basis() const {
  std::vector<std::vector<GaussInt>> out;
  out.reserve(basis_.size());
  for (const detail::LabelVec& row : basis_) out.push_back(residues_of(*field_, row));
  return out;
}

LinearCode LinearCode::dual() const { return LinearCode(field_, n_, parity_, std::nullopt); }

std::vector<GaussInt> LinearCode::encode(const std::vector<GaussInt>& msg) const {
  if (static_cast<int>(msg.size()) != k()) {
    throw LengthMismatch("message length " + std::to_string(msg.size()) +
                         " does not match code dimension " + std::to_string(k()));
  }
  const std::int64_t p = field_->p();
  detail::LabelVec m = labels_of(*field_, msg);
  detail::LabelVec out(static_cast<std::size_t>(n_), 0);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (m[i] == 0) continue;
    for (std::size_t t = 0; t < out.size(); ++t) {
      out[t] = (out[t] + m[i] * basis_[i][t]) % p;
    }
  }
  return residues_of(*field_, out);
}

bool LinearCode::contains(const std::vector<GaussInt>& word) const {
  if (static_cast<int>(word.size()) != n_) {
    throw LengthMismatch("word length does not match code length");
  }
  return detail::in_row_space(rref_, labels_of(*field_, word), field_->p());
}

bool LinearCode::same_code(const LinearCode& other) const {
  return *field_ == *other.field_ && n_ == other.n_ && rref_.rows == other.rref_.rows;
}

std::vector<std::vector<GaussInt>> LinearCode::codewords(std::int64_t cap) const {
  const __int128 total = detail::pow_clamped(field_->p(), k(), cap);
  if (total > cap) {
    throw EnumerationTooLarge("codeword count " + count_text(field_->p(), k()) +
                              " exceeds the cap " + std::to_string(cap));
  }
  std::vector<std::vector<GaussInt>> out;
  out.reserve(static_cast<std::size_t>(total));
  detail::foreach_in_span(basis_, static_cast<std::size_t>(n_), field_->p(),
                          [&](const detail::LabelVec& v) { out.push_back(residues_of(*field_, v)); });
  return out;
}

int LinearCode::min_distance(Metric metric, const SearchOptions& opts) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    if (metric == Metric::Mannheim && cache_->dm) return *cache_->dm;
    if (metric == Metric::Hamming && cache_->dh) return *cache_->dh;
  }
  if (k() == 0) throw ZeroCode("minimum distance of the zero code is undefined");
  int dm = 1;
  int dh = 1;
  if (k() < n_) {
    // Weight-1 words exist whenever the code is the whole space, so only
    // proper subspaces need the scan.
    const __int128 total = detail::pow_clamped(field_->p(), k(), opts.cap);
    if (total > opts.cap) {
      throw EnumerationTooLarge("codeword count " + count_text(field_->p(), k()) +
                                " exceeds the enumeration cap " + std::to_string(opts.cap));
    }
    ScanMins mins = scan_codewords(*field_, rref_.rows, 1, total, opts.workers);
    dm = mins.dm;
    dh = mins.dh;
  }
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    cache_->dm = dm;
    cache_->dh = dh;
  }
  return metric == Metric::Mannheim ? dm : dh;
}

DistanceBound LinearCode::distance_bound(Metric metric, const SearchOptions& opts) const {
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    const std::optional<int>& hit = metric == Metric::Mannheim ? cache_->dm : cache_->dh;
    if (hit) {
      const __int128 total = detail::pow_clamped(field_->p(), k(), kCountClamp);
      return DistanceBound{*hit, true, static_cast<std::int64_t>(total - 1)};
    }
  }
  if (k() == 0) throw ZeroCode("minimum distance of the zero code is undefined");
  const __int128 total = detail::pow_clamped(field_->p(), k(), opts.cap);
  if (total <= opts.cap || k() == n_) {
    return DistanceBound{min_distance(metric, opts), true,
                         static_cast<std::int64_t>(
                             detail::pow_clamped(field_->p(), k(), kCountClamp) - 1)};
  }
  if (!opts.allow_partial) {
    throw EnumerationTooLarge("codeword count " + count_text(field_->p(), k()) +
                              " exceeds the enumeration cap " + std::to_string(opts.cap) +
                              "; raise the cap or allow a partial scan");
  }
  const std::int64_t budget = std::max<std::int64_t>(1, opts.partial_budget);
  __int128 hi = static_cast<__int128>(budget) + 1;
  const __int128 full = detail::pow_clamped(field_->p(), k(), kCountClamp);
  if (hi > full) hi = full;
  ScanMins mins = scan_codewords(*field_, rref_.rows, 1, hi, opts.workers);
  const int value = metric == Metric::Mannheim ? mins.dm : mins.dh;
  if (hi == full) {
    // The budget covered the whole space after all.
    std::lock_guard<std::mutex> lock(cache_->mu);
    cache_->dm = mins.dm;
    cache_->dh = mins.dh;
    return DistanceBound{value, true, static_cast<std::int64_t>(full - 1)};
  }
  return DistanceBound{value, false, static_cast<std::int64_t>(hi - 1)};
}

DecodeResult LinearCode::decode_bounded(const std::vector<GaussInt>& received, Metric metric,
                                        int t) const {
  if (static_cast<int>(received.size()) != n_) {
    throw LengthMismatch("received word length does not match code length");
  }
  if (t < 0) throw OutOfRange("decoding radius must be nonnegative");
  const std::int64_t p = field_->p();
  const detail::LabelVec r = labels_of(*field_, received);
  if (detail::in_row_space(rref_, r, p)) {
    return DecodeResult{residues_of(*field_, r),
                        std::vector<GaussInt>(static_cast<std::size_t>(n_), GaussInt{}), metric,
                        0};
  }
  detail::LabelVec e(static_cast<std::size_t>(n_), 0);
  for (int w = 1; w <= t; ++w) {
    std::vector<detail::LabelVec> hits;
    foreach_pattern_rec(*field_, metric, e, 0, w, [&]() {
      detail::LabelVec cand(r.size());
      for (std::size_t i = 0; i < r.size(); ++i) cand[i] = (r[i] - e[i] + p) % p;
      if (detail::in_row_space(rref_, cand, p)) hits.push_back(e);
    });
    if (hits.size() == 1) {
      detail::LabelVec cand(r.size());
      for (std::size_t i = 0; i < r.size(); ++i) cand[i] = (r[i] - hits[0][i] + p) % p;
      return DecodeResult{residues_of(*field_, cand), residues_of(*field_, hits[0]), metric, w};
    }
    if (hits.size() > 1) {
      std::vector<std::vector<GaussInt>> tied;
      tied.reserve(hits.size());
      for (const detail::LabelVec& h : hits) {
        detail::LabelVec cand(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) cand[i] = (r[i] - h[i] + p) % p;
        tied.push_back(residues_of(*field_, cand));
      }
      throw AmbiguousDecode("decoding is ambiguous: " + std::to_string(hits.size()) +
                                " codewords at " + to_string(metric) + " weight " +
                                std::to_string(w),
                            std::move(tied));
    }
  }
  throw NoDecode("no codeword within " + to_string(metric) + " weight " + std::to_string(t));
}

std::vector<GaussInt> LinearCode::syndrome(const std::vector<GaussInt>& word) const {
  if (static_cast<int>(word.size()) != n_) {
    throw LengthMismatch("word length does not match code length");
  }
  const std::int64_t p = field_->p();
  const detail::LabelVec w = labels_of(*field_, word);
  std::vector<GaussInt> out;
  out.reserve(parity_.size());
  for (const detail::LabelVec& row : parity_) {
    std::int64_t s = 0;
    for (std::size_t t = 0; t < w.size(); ++t) s = (s + row[t] * w[t]) % p;
    out.push_back(field_->lift(s));
  }
  return out;
}

SyndromeDecodeResult LinearCode::syndrome_decode(const std::vector<GaussInt>& target,
                                                 Metric metric, int t) const {
  if (target.size() != parity_.size()) {
    throw LengthMismatch("syndrome length " + std::to_string(target.size()) +
                         " does not match check row count " + std::to_string(parity_.size()));
  }
  if (t < 0) throw OutOfRange("decoding radius must be nonnegative");
  const std::int64_t p = field_->p();
  const detail::LabelVec goal = labels_of(*field_, target);
  const bool zero_goal =
      std::all_of(goal.begin(), goal.end(), [](std::int64_t x) { return x == 0; });
  if (zero_goal) {
    return SyndromeDecodeResult{SyndromeStatus::Found,
                                std::vector<GaussInt>(static_cast<std::size_t>(n_), GaussInt{}),
                                0};
  }
  detail::LabelVec e(static_cast<std::size_t>(n_), 0);
  for (int w = 1; w <= t; ++w) {
    std::vector<detail::LabelVec> hits;
    foreach_pattern_rec(*field_, metric, e, 0, w, [&]() {
      for (std::size_t r = 0; r < parity_.size(); ++r) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < e.size(); ++i) s = (s + parity_[r][i] * e[i]) % p;
        if (s != goal[r]) return;
      }
      hits.push_back(e);
    });
    if (hits.size() == 1) {
      return SyndromeDecodeResult{SyndromeStatus::Found, residues_of(*field_, hits[0]), w};
    }
    if (hits.size() > 1) {
      return SyndromeDecodeResult{SyndromeStatus::Ambiguous, {}, w};
    }
  }
  return SyndromeDecodeResult{SyndromeStatus::NotFound, {}, 0};
}

bool is_subcode(const LinearCode& inner, const LinearCode& outer) {
  ensure_same_field(inner.field(), outer.field());
  if (inner.n() != outer.n()) throw LengthMismatch("codes have different lengths");
  for (const detail::LabelVec& row : inner.basis_labels()) {
    if (!detail::in_row_space(outer.rref(), row, outer.field()->p())) return false;
  }
  return true;
}

}  // namespace mannheim
