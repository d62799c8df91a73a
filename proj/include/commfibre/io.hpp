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
#include <string>
#include <string_view>

#include "json.hpp"

#include "commfibre/algebra.hpp"
#include "commfibre/oracle.hpp"
#include "commfibre/zeta.hpp"

namespace commfibre {

inline constexpr std::string_view kVersion = "commfibre 0.1.0";

/// Parses the line-oriented algebra format:
///
///   # comment
///   field p=<int> k=<int> [poly=<c0,...,ck>]
///   gens <name> <name> ...
///   bracket <name> <name> : <term> [+ <term>]...
///
/// where a term is `<coeff>*<name>` or `<name>` and a coefficient is an
/// integer in [0, p) or `[c0,...,c_{k-1}]` (constant first). Errors carry
/// the 1-based line number.
FullLieAlgebra parse_algebra_file(std::string_view text);

/// Inverse of parse_algebra_file, listing brackets for i < j.
std::string format_algebra_file(const FullLieAlgebra& alg);

using Json = nlohmann::ordered_json;

/// Field element as JSON: an integer over a prime field, otherwise the
/// coordinate list.
Json element_json(const Field& f, FieldElement x);
Json vector_json(const Field& f, std::span<const FieldElement> v);

/// The machine-readable report. The verification block is present only
/// when a comparison is supplied.
Json build_report(const std::string& source, const LiePresentation& pres, const FibreReport& report,
                  const std::optional<ComparisonReport>& comparison = std::nullopt);

Json comparison_json(const Field& f, const ComparisonReport& cmp);

/// Human-readable rendering of a report document. Exact values are printed
/// alongside six-significant-digit decimals.
std::string render_table(const Json& doc);

/// Parses "num/den" back to an exact rational.
Rational parse_rational(const std::string& text);

}  // namespace commfibre
