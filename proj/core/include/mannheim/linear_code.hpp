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

// Linear block codes over a Gaussian residue field: construction from a
// generator matrix or from a generator polynomial dividing x^n -+ 1, duals,
// exhaustive minimum-distance search under the Mannheim and Hamming metrics,
// and bounded-weight decoding.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mannheim/detail/linalg.hpp"
#include "mannheim/errors.hpp"
#include "mannheim/field.hpp"
#include "mannheim/polynomial.hpp"

namespace mannheim {

enum class Metric { Mannheim, Hamming };

std::string to_string(Metric m);

// Knobs for the enumeration-based searches. cap bounds the number of
// codewords an exact scan may visit; partial scans visit partial_budget
// messages and mark the result inexact. pair_cap is the analogous bound for
// symplectic pair enumeration.
struct SearchOptions {
  std::int64_t cap = 100'000'000;
  int workers = 1;
  bool allow_partial = false;
  std::int64_t partial_budget = 1'000'000;
  std::int64_t pair_cap = 10'000'000;
};

// A distance value together with how trustworthy it is. exact means every
// nonzero codeword was visited; otherwise value is the best weight seen
// among the enumerated sample and the true minimum may be smaller.
struct DistanceBound {
  int value = 0;
  bool exact = true;
  std::int64_t enumerated = 0;
};

struct DecodeResult {
  std::vector<GaussInt> codeword;
  std::vector<GaussInt> error;
  Metric metric = Metric::Mannheim;
  int weight = 0;
};

// Decoding found two or more codewords at the minimal achieved weight.
class AmbiguousDecode : public Error {
 public:
  AmbiguousDecode(const std::string& what, std::vector<std::vector<GaussInt>> tied)
      : Error(what), tied_(std::move(tied)) {}
  const std::vector<std::vector<GaussInt>>& tied() const noexcept { return tied_; }

 private:
  std::vector<std::vector<GaussInt>> tied_;
};

enum class SyndromeStatus { Found, NotFound, Ambiguous };

struct SyndromeDecodeResult {
  SyndromeStatus status = SyndromeStatus::NotFound;
  std::vector<GaussInt> error;  // populated only when status == Found
  int weight = 0;
};

// Provenance of a polynomial-quotient code: the generator and which
// binomial x^n - 1 or x^n + 1 it divides.
struct PolyOrigin {
  Polynomial generator;
  Modulus modulus;
};

class LinearCode {
 public:
  // Keeps the first maximal linearly independent subset of the supplied
  // rows as the user-facing basis, so encode() maps messages through the
  // rows the caller wrote down. Throws ZeroCode when every row is zero.
  static LinearCode from_generator_matrix(FieldPtr field,
                                          const std::vector<std::vector<GaussInt>>& rows);

  // Code of dimension n - deg g whose rows are x^i * g(x). The generator
  // must divide the selected modulus binomial (NotADivisor otherwise).
  static LinearCode from_generator_poly(const Polynomial& g, int n, Modulus modulus);

  static LinearCode zero_code(FieldPtr field, int n);
  static LinearCode full_space(FieldPtr field, int n);

  const FieldPtr& field() const noexcept { return field_; }
  int n() const noexcept { return n_; }
  int k() const noexcept { return static_cast<int>(basis_.size()); }
  const std::optional<PolyOrigin>& origin() const noexcept { return origin_; }

  // Generator rows as canonical residues, one vector per basis row.
  std::vector<std::vector<GaussInt>> basis() const;

  // Null space of the generator under the unconjugated dot product.
  LinearCode dual() const;

  std::vector<GaussInt> encode(const std::vector<GaussInt>& msg) const;
  bool contains(const std::vector<GaussInt>& word) const;
  bool same_code(const LinearCode& other) const;

  // All p^k codewords, zero included. Guarded by cap since the count is
  // exponential in k.
  std::vector<std::vector<GaussInt>> codewords(std::int64_t cap = 1'000'000) const;

  // Exact minimum weight over the p^k - 1 nonzero codewords. One scan
  // computes both metrics and caches them, so the second call is free.
  // Throws EnumerationTooLarge when p^k exceeds opts.cap, ZeroCode at k = 0.
  int min_distance(Metric metric, const SearchOptions& opts = {}) const;

  // Like min_distance but degrades to a flagged partial scan instead of
  // throwing when p^k exceeds the cap and opts.allow_partial is set.
  DistanceBound distance_bound(Metric metric, const SearchOptions& opts = {}) const;

  // Nearest-codeword search over error patterns of metric weight 0..t in
  // increasing weight. Unique hit at the first populated weight wins;
  // several hits throw AmbiguousDecode carrying the tied codewords; no hit
  // within t throws NoDecode.
  DecodeResult decode_bounded(const std::vector<GaussInt>& received, Metric metric,
                              int t) const;

  // Parity-check view: syndrome(word) has length n - k and is zero exactly
  // on codewords. The check rows are the canonical dual basis.
  std::vector<GaussInt> syndrome(const std::vector<GaussInt>& word) const;

  // Recovers the error pattern of metric weight <= t matching the given
  // syndrome, by the same increasing-weight enumeration as decode_bounded.
  // Reports ambiguity and absence in the result instead of throwing, since
  // protocol callers treat both as data.
  SyndromeDecodeResult syndrome_decode(const std::vector<GaussInt>& target, Metric metric,
                                       int t) const;

  // Label-space views for callers doing their own linear algebra.
  const detail::LabelMat& basis_labels() const noexcept { return basis_; }
  const detail::Rref& rref() const noexcept { return rref_; }
  const detail::LabelMat& parity_rows() const noexcept { return parity_; }

 private:
  LinearCode(FieldPtr field, int n, detail::LabelMat basis, std::optional<PolyOrigin> origin);

  FieldPtr field_;
  int n_ = 0;
  detail::LabelMat basis_;   // independent user-facing generator rows
  detail::Rref rref_;        // canonical row-space form of basis_
  detail::LabelMat parity_;  // canonical dual basis (check rows)
  std::optional<PolyOrigin> origin_;
  struct DistanceCache;
  std::shared_ptr<DistanceCache> cache_;
};

// True iff every codeword of inner lies in outer. Same field and length
// required (FieldMismatch / LengthMismatch).
bool is_subcode(const LinearCode& inner, const LinearCode& outer);

}  // namespace mannheim
