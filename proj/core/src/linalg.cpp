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

#include "mannheim/detail/linalg.hpp"

#include <algorithm>

namespace mannheim::detail {

namespace {

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t p) {
  std::int64_t acc = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) acc = acc * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return acc;
}

std::int64_t mod_inv(std::int64_t a, std::int64_t p) { return mod_pow(a, p - 2, p); }

}  // namespace

Rref rref(LabelMat m, std::int64_t p) {
  Rref out;
  if (m.empty()) return out;
  const std::size_t n = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    std::int64_t inv = mod_inv(m[row][col], p);
    for (std::size_t j = col; j < n; ++j) m[row][j] = m[row][j] * inv % p;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      std::int64_t c = m[i][col];
      for (std::size_t j = col; j < n; ++j) {
        m[i][j] = ((m[i][j] - c * m[row][j]) % p + p) % p;
      }
    }
    out.pivots.push_back(static_cast<int>(col));
    ++row;
  }
  m.resize(row);
  out.rows = std::move(m);
  return out;
}

LabelMat nullspace(const LabelMat& rows, std::size_t n, std::int64_t p) {
  Rref r = rref(rows, p);
  std::vector<bool> is_pivot(n, false);
  for (int c : r.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  LabelMat basis;
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    LabelVec v(n, 0);
    v[free_col] = 1;
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
      std::int64_t c = r.rows[i][free_col];
      if (c != 0) v[static_cast<std::size_t>(r.pivots[i])] = (p - c) % p;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

LabelVec reduce_against(const Rref& r, LabelVec v, std::int64_t p) {
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    std::int64_t c = v[static_cast<std::size_t>(r.pivots[i])];
    if (c == 0) continue;
    for (std::size_t j = static_cast<std::size_t>(r.pivots[i]); j < v.size(); ++j) {
      v[j] = ((v[j] - c * r.rows[i][j]) % p + p) % p;
    }
  }
  return v;
}

bool in_row_space(const Rref& r, LabelVec v, std::int64_t p) {
  LabelVec rem = reduce_against(r, std::move(v), p);
  return std::all_of(rem.begin(), rem.end(), [](std::int64_t x) { return x == 0; });
}

void foreach_in_span(const LabelMat& rows, std::size_t n, std::int64_t p,
                     const std::function<void(const LabelVec&)>& fn) {
  LabelVec cur(n, 0);
  fn(cur);
  if (rows.empty()) return;
  const std::size_t k = rows.size();
  std::vector<std::int64_t> digits(k, 0);
  while (true) {
    std::size_t d = 0;
    while (d < k && digits[d] == p - 1) ++d;
    if (d == k) break;
    for (std::size_t j = 0; j < d; ++j) digits[j] = 0;
    ++digits[d];
    // Rolling a digit from p-1 to 0 shifts its contribution by (1-p) times
    // the row, which is one extra row addition mod p, same as the carry.
    for (std::size_t j = 0; j <= d; ++j) {
      for (std::size_t t = 0; t < n; ++t) {
        cur[t] += rows[j][t];
        if (cur[t] >= p) cur[t] -= p;
      }
    }
    fn(cur);
  }
}

__int128 pow_clamped(std::int64_t p, int k, __int128 limit) {
  __int128 total = 1;
  for (int i = 0; i < k; ++i) {
    total *= p;
    if (total > limit) return limit + 1;
  }
  return total;
}

}  // namespace mannheim::detail
