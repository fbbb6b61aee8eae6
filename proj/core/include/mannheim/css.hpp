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

// CSS quantum-code construction from nested classical codes, the symplectic
// pair formulation, correctable-error counting, and the Singleton check.

#pragma once

#include <cstdint>
#include <vector>

#include "mannheim/linear_code.hpp"

namespace mannheim {

// Count of correctable error patterns: sum over j = 1..t of m^j * C(n, j)
// with m = 4 per-coordinate weight-1 values for Mannheim, m = p - 1 nonzero
// values for Hamming, and t = floor((d - 1) / 2).
struct ErrorCountReport {
  int n = 0;
  int d = 0;
  int t = 0;
  Metric metric = Metric::Mannheim;
  std::uint64_t count = 0;
};

ErrorCountReport correctable_count(int n, int d, Metric metric, std::int64_t p);

// Weight of a length-2n pair vector (u|v): ceil of half the total Mannheim
// weight across all 2n coordinates. Entries must be canonical residues.
int pair_weight(const std::vector<GaussInt>& w);

// (u|v) * (u'|v') = sum(v_i u'_i - v'_i u_i) reduced to a canonical residue.
// Alternating and bilinear.
GaussInt star_product(const FieldPtr& field, const std::vector<GaussInt>& a,
                      const std::vector<GaussInt>& b);

// Quantum code from a nested pair C2 within C1. The distance fields are
// bounds: exact when the underlying scans were complete, otherwise the best
// weight seen in a flagged partial scan.
struct CssCode {
  LinearCode c1;
  LinearCode c2;
  int n = 0;
  int K = 0;  // logical dimension exponent k1 - k2; code dimension is p^K
  DistanceBound dm_c1;
  DistanceBound dm_c2dual;
  DistanceBound dh_c1;
  DistanceBound dh_c2dual;
  DistanceBound d_m;  // min of dm_c1 and dm_c2dual
  DistanceBound d_h;  // min of dh_c1 and dh_c2dual
};

// Throws NotNested when C2 is not a subcode of C1. Distance scans larger
// than opts.cap degrade to flagged partial bounds instead of throwing.
CssCode build_css(const LinearCode& c1, const LinearCode& c2, const SearchOptions& opts = {});

// Code of pair vectors (u|v) in G^{2n}, row span of basis in label form.
struct SymplecticCode {
  FieldPtr field;
  int n = 0;  // pair count; vectors have 2n coordinates
  detail::LabelMat basis;
  bool self_orthogonal = true;  // basis stars to zero pairwise
};

// C = (C2 | C1perp): rows (c, 0) for c in basis(C2) plus (0, h) for h in
// basis(dual(C1)). Codes must share field and length.
SymplecticCode make_symplectic_code(const LinearCode& c1, const LinearCode& c2);

// Null space under the * form; dim(S) + dim(dual) = 2n.
SymplecticCode symplectic_dual(const SymplecticCode& s);

struct SymplecticParams {
  SymplecticCode code;
  int dim_code = 0;
  int dim_dual = 0;
  int K_pair = 0;  // dim(dual) - dim(code); twice K_css for nested pairs
  int K_css = 0;   // k1 - k2
  // The dual minus the code is empty exactly when they coincide; the pair
  // distance is then undefined and d_pair holds a zero sentinel.
  bool no_logical_operators = false;
  // Min pair weight over dual-minus-code vectors: exhaustive when the dual
  // span fits opts.pair_cap, otherwise a seeded random sample of size
  // sample_size (d_pair.exact false, value is the best weight seen).
  DistanceBound d_pair;
  // Component-style comparison value min{d_M(C1), d_M(dual(C2))}.
  DistanceBound d_component;
  std::int64_t sample_size = 0;  // 0 when the enumeration was exhaustive
};

SymplecticParams build_symplectic(const LinearCode& c1, const LinearCode& c2,
                                  const SearchOptions& opts = {});

// Quantum Singleton bound, Hamming metric only: attains iff
// K = n - 2 d_H + 2; slack is the shortfall.
struct SingletonCheck {
  bool attains = false;
  int slack = 0;
};

SingletonCheck check_singleton(int n, int K, int d_h, std::int64_t p);

}  // namespace mannheim
