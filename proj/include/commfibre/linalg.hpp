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

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "commfibre/field.hpp"

// Small dense linear algebra over F_q, rows as vectors.
namespace commfibre::linalg {

struct Echelon {
  std::vector<Vec> rows;             // reduced, nonzero, pivot-ordered
  std::vector<std::size_t> pivots;   // pivot column of each row
};

/// Reduced row echelon form with pivots at the earliest possible columns.
Echelon rref(const Field& f, std::vector<Vec> rows);

std::size_t rank(const Field& f, std::vector<Vec> rows);

/// Basis of {x : row . x = 0 for every row}, each of length ncols, in
/// reduced echelon form.
std::vector<Vec> nullspace(const Field& f, const std::vector<Vec>& rows, std::size_t ncols);

/// Coordinates of v with respect to the rows of an Echelon basis, or
/// nullopt when v is outside their span.
std::optional<Vec> coordinates(const Field& f, const Echelon& basis, std::span<const FieldElement> v);

/// True when v lies in the span of the echelon rows.
bool in_span(const Field& f, const Echelon& basis, std::span<const FieldElement> v);

}  // namespace commfibre::linalg
