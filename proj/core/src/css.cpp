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

#include "mannheim/css.hpp"

#include <algorithm>
#include <limits>
#include <random>

namespace mannheim {

namespace {

constexpr std::uint64_t kSampleSeed = 0x6d616e6e6865696dULL;

using U128 = unsigned __int128;

std::uint64_t checked_u64(U128 v, const char* what) {
  if (v > std::numeric_limits<std::uint64_t>::max()) {
    throw OverflowError(std::string(what) + " exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(v);
}

DistanceBound min_bound(const DistanceBound& a, const DistanceBound& b) {
  // A partial bound only upper-bounds the true minimum, so the combined
  // value is exact only when both inputs were.
  return DistanceBound{std::min(a.value, b.value), a.exact && b.exact, 0};
}

}  // namespace

ErrorCountReport correctable_count(int n, int d, Metric metric, std::int64_t p) {
  if (n < 1) throw OutOfRange("length must be positive");
  if (d < 1) throw OutOfRange("distance must be positive");
  ErrorCountReport report;
  report.n = n;
  report.d = d;
  report.t = (d - 1) / 2;
  report.metric = metric;
  const U128 m = metric == Metric::Mannheim ? 4 : static_cast<U128>(p - 1);
  U128 total = 0;
  U128 mj = 1;
  U128 binom = 1;
  for (int j = 1; j <= report.t; ++j) {
    mj = checked_u64(mj * m, "correctable error count");
    binom = binom * static_cast<U128>(n - j + 1) / static_cast<U128>(j);
    total = checked_u64(total + checked_u64(mj * binom, "correctable error count"),
                        "correctable error count");
  }
  report.count = static_cast<std::uint64_t>(total);
  return report;
}

int pair_weight(const std::vector<GaussInt>& w) {
  if (w.size() % 2 != 0) throw LengthMismatch("pair vector must have even length");
  std::int64_t total = 0;
  for (const GaussInt& g : w) total += mannheim_weight(g);
  return static_cast<int>((total + 1) / 2);
}

GaussInt star_product(const FieldPtr& field, const std::vector<GaussInt>& a,
                      const std::vector<GaussInt>& b) {
  if (!field) throw FieldMismatch("star product needs a field");
  if (a.size() != b.size()) throw LengthMismatch("pair vectors have different lengths");
  if (a.size() % 2 != 0) throw LengthMismatch("pair vectors must have even length");
  const std::size_t n = a.size() / 2;
  const std::int64_t p = field->p();
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t ua = field->project(field->reduce(a[i]));
    const std::int64_t va = field->project(field->reduce(a[n + i]));
    const std::int64_t ub = field->project(field->reduce(b[i]));
    const std::int64_t vb = field->project(field->reduce(b[n + i]));
    acc = ((acc + va * ub - vb * ua) % p + p) % p;
  }
  return field->lift(acc);
}

CssCode build_css(const LinearCode& c1, const LinearCode& c2, const SearchOptions& opts) {
  if (!is_subcode(c2, c1)) throw NotNested("C2 is not a subcode of C1");
  CssCode out{c1, c2, c1.n(), c1.k() - c2.k(), {}, {}, {}, {}, {}, {}};
  SearchOptions scan = opts;
  scan.allow_partial = true;  // oversized scans degrade to flagged bounds
  const LinearCode c2dual = c2.dual();
  out.dm_c1 = c1.distance_bound(Metric::Mannheim, scan);
  out.dh_c1 = c1.distance_bound(Metric::Hamming, scan);
  out.dm_c2dual = c2dual.distance_bound(Metric::Mannheim, scan);
  out.dh_c2dual = c2dual.distance_bound(Metric::Hamming, scan);
  out.d_m = min_bound(out.dm_c1, out.dm_c2dual);
  out.d_h = min_bound(out.dh_c1, out.dh_c2dual);
  return out;
}

namespace {

bool star_orthogonal_basis(const PrimeField& f, const detail::LabelMat& basis, int n) {
  const std::int64_t p = f.p();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      std::int64_t acc = 0;
      for (int t = 0; t < n; ++t) {
        const auto ut = static_cast<std::size_t>(t);
        const auto vt = static_cast<std::size_t>(n + t);
        acc = ((acc + basis[i][vt] * basis[j][ut] - basis[j][vt] * basis[i][ut]) % p + p) % p;
      }
      if (acc != 0) return false;
    }
  }
  return true;
}

}  // namespace

SymplecticCode make_symplectic_code(const LinearCode& c1, const LinearCode& c2) {
  ensure_same_field(c1.field(), c2.field());
  if (c1.n() != c2.n()) throw LengthMismatch("codes have different lengths");
  const int n = c1.n();
  const std::size_t width = 2 * static_cast<std::size_t>(n);
  detail::LabelMat basis;
  for (const detail::LabelVec& c : c2.basis_labels()) {
    detail::LabelVec row(width, 0);
    std::copy(c.begin(), c.end(), row.begin());
    basis.push_back(std::move(row));
  }
  const LinearCode c1dual = c1.dual();
  for (const detail::LabelVec& h : c1dual.basis_labels()) {
    detail::LabelVec row(width, 0);
    std::copy(h.begin(), h.end(), row.begin() + n);
    basis.push_back(std::move(row));
  }
  SymplecticCode code{c1.field(), n, std::move(basis), false};
  code.self_orthogonal = star_orthogonal_basis(*code.field, code.basis, n);
  return code;
}

SymplecticCode symplectic_dual(const SymplecticCode& s) {
  if (!s.field) throw FieldMismatch("symplectic code needs a field");
  const std::int64_t p = s.field->p();
  const std::size_t width = 2 * static_cast<std::size_t>(s.n);
  // (u|v) * w = 0 is the ordinary dot product of (v|-u) with w, so the dual
  // is a standard null space of the transformed rows.
  detail::LabelMat transformed;
  transformed.reserve(s.basis.size());
  for (const detail::LabelVec& row : s.basis) {
    detail::LabelVec t(width, 0);
    for (int i = 0; i < s.n; ++i) {
      t[static_cast<std::size_t>(i)] = row[static_cast<std::size_t>(s.n + i)];
      t[static_cast<std::size_t>(s.n + i)] = (p - row[static_cast<std::size_t>(i)]) % p;
    }
    transformed.push_back(std::move(t));
  }
  detail::LabelMat basis =
      detail::rref(detail::nullspace(transformed, width, p), p).rows;
  SymplecticCode dual{s.field, s.n, std::move(basis), false};
  dual.self_orthogonal = star_orthogonal_basis(*dual.field, dual.basis, dual.n);
  return dual;
}

SymplecticParams build_symplectic(const LinearCode& c1, const LinearCode& c2,
                                  const SearchOptions& opts) {
  if (!is_subcode(c2, c1)) throw NotNested("C2 is not a subcode of C1");
  SymplecticParams out;
  out.code = make_symplectic_code(c1, c2);
  if (!out.code.self_orthogonal) {
    throw InternalInvariant("nested pair produced a non-self-orthogonal symplectic code");
  }
  SymplecticCode dual = symplectic_dual(out.code);
  out.dim_code = static_cast<int>(out.code.basis.size());
  out.dim_dual = static_cast<int>(dual.basis.size());
  out.K_pair = out.dim_dual - out.dim_code;
  out.K_css = c1.k() - c2.k();
  out.no_logical_operators = out.dim_dual == out.dim_code;

  const PrimeField& f = *out.code.field;
  const std::int64_t p = f.p();
  const std::size_t width = 2 * static_cast<std::size_t>(out.code.n);
  std::vector<int> wlut(static_cast<std::size_t>(p));
  for (std::int64_t l = 0; l < p; ++l) wlut[static_cast<std::size_t>(l)] = f.weight_of_label(l);
  const detail::Rref code_rref = detail::rref(out.code.basis, p);
  const auto pair_weight_of = [&](const detail::LabelVec& v) {
    std::int64_t total = 0;
    for (std::int64_t l : v) total += wlut[static_cast<std::size_t>(l)];
    return static_cast<int>((total + 1) / 2);
  };

  if (out.no_logical_operators) {
    out.d_pair = DistanceBound{0, true, 0};
  } else {
    const __int128 total = detail::pow_clamped(p, out.dim_dual, opts.pair_cap);
    int best = std::numeric_limits<int>::max();
    if (total <= opts.pair_cap) {
      detail::foreach_in_span(dual.basis, width, p, [&](const detail::LabelVec& v) {
        if (detail::in_row_space(code_rref, v, p)) return;
        best = std::min(best, pair_weight_of(v));
      });
      out.d_pair = DistanceBound{best, true, static_cast<std::int64_t>(total)};
      out.sample_size = 0;
    } else {
      // Deterministic sampled bound: fixed seed, coefficients via modulo so
      // the draw sequence does not depend on the standard library build.
      std::mt19937_64 rng(kSampleSeed);
      const std::int64_t samples = std::max<std::int64_t>(1, opts.partial_budget);
      detail::LabelVec v(width);
      for (std::int64_t s = 0; s < samples; ++s) {
        std::fill(v.begin(), v.end(), 0);
        for (const detail::LabelVec& row : dual.basis) {
          const std::int64_t c = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p));
          if (c == 0) continue;
          for (std::size_t t = 0; t < width; ++t) v[t] = (v[t] + c * row[t]) % p;
        }
        if (detail::in_row_space(code_rref, v, p)) continue;
        best = std::min(best, pair_weight_of(v));
      }
      if (best == std::numeric_limits<int>::max()) best = 0;  // every draw landed inside
      out.d_pair = DistanceBound{best, false, samples};
      out.sample_size = samples;
    }
  }

  SearchOptions scan = opts;
  scan.allow_partial = true;
  out.d_component = min_bound(c1.distance_bound(Metric::Mannheim, scan),
                              c2.dual().distance_bound(Metric::Mannheim, scan));
  return out;
}

SingletonCheck check_singleton(int n, int K, int d_h, std::int64_t) {
  SingletonCheck out;
  out.slack = (n - 2 * d_h + 2) - K;
  out.attains = out.slack == 0;
  return out;
}

}  // namespace mannheim
