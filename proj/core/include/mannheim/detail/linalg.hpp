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

// Row-reduction helpers over the integer labels 0..p-1. Everything here
// works on plain label vectors; callers translate to and from Gaussian
// residues at the boundary.

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace mannheim::detail {

using LabelVec = std::vector<std::int64_t>;
using LabelMat = std::vector<LabelVec>;

// Reduced row echelon form. rows holds the nonzero rows with pivot 1 and
// zeros above and below each pivot; pivots[i] is the column of rows[i].
struct Rref {
  LabelMat rows;
  std::vector<int> pivots;
};

Rref rref(LabelMat m, std::int64_t p);

// Basis of {x : r . x = 0 for every row r}, one vector per free column of
// the row space. Rows may be empty, in which case the identity comes back.
LabelMat nullspace(const LabelMat& rows, std::size_t n, std::int64_t p);

// Reduces v against the echelon rows in place and reports whether the
// remainder is zero, i.e. whether v lies in the row space.
bool in_row_space(const Rref& r, LabelVec v, std::int64_t p);

// Same reduction but returns the remainder for callers that need the coset
// representative rather than a membership bit.
LabelVec reduce_against(const Rref& r, LabelVec v, std::int64_t p);

// Visits every vector in the row span exactly once, zero included, in a
// deterministic odometer order. Amortized one row addition per visit.
void foreach_in_span(const LabelMat& rows, std::size_t n, std::int64_t p,
                     const std::function<void(const LabelVec&)>& fn);

// p^k clamped: returns p^k when it is at most limit, otherwise limit + 1.
__int128 pow_clamped(std::int64_t p, int k, __int128 limit);

}  // namespace mannheim::detail
