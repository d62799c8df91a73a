/*
 * Copyright 2026 The commfibre Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "commfibre/linalg.hpp"

#include "commfibre/error.hpp"

namespace commfibre::linalg {

Echelon rref(const Field& f, std::vector<Vec> rows) {
  Echelon out;
  if (rows.empty()) return out;
  const std::size_t ncols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c].code == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const FieldElement s = f.inv(rows[r][c]);
    for (auto& x : rows[r]) x = f.mul(x, s);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].code == 0) continue;
      const FieldElement factor = rows[i][c];
      for (std::size_t j = 0; j < ncols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
    }
    out.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  out.rows = std::move(rows);
  return out;
}

std::size_t rank(const Field& f, std::vector<Vec> rows) { return rref(f, std::move(rows)).rows.size(); }

std::vector<Vec> nullspace(const Field& f, const std::vector<Vec>& rows, std::size_t ncols) {
  Echelon e = rref(f, rows);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vec x(ncols, f.zero());
    x[free] = f.one();
    for (std::size_t r = 0; r < e.rows.size(); ++r) x[e.pivots[r]] = f.neg(e.rows[r][free]);
    basis.push_back(std::move(x));
  }
  return rref(f, std::move(basis)).rows;
}

std::optional<Vec> coordinates(const Field& f, const Echelon& basis, std::span<const FieldElement> v) {
  Vec coeffs(basis.rows.size());
  Vec residual(v.begin(), v.end());
  for (std::size_t r = 0; r < basis.rows.size(); ++r) {
    coeffs[r] = residual[basis.pivots[r]];
    if (coeffs[r].code == 0) continue;
    for (std::size_t j = 0; j < residual.size(); ++j)
      residual[j] = f.sub(residual[j], f.mul(coeffs[r], basis.rows[r][j]));
  }
  if (!is_zero(residual)) return std::nullopt;
  return coeffs;
}

bool in_span(const Field& f, const Echelon& basis, std::span<const FieldElement> v) {
  return coordinates(f, basis, v).has_value();
}

}  // namespace commfibre::linalg
