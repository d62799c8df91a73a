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

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "commfibre/algebra.hpp"
#include "commfibre/enumeration.hpp"

namespace commfibre {

using Integer = mpz_class;
using Rational = mpq_class;

/// Twisted zeta value zeta_G(s, g) = sum_chi chi(g) / chi(1)^s with its
/// per-stratum parts zeta^i_G(s, g) = |G/G'| q^{-i(1+s)} (K^i - V^i / (q - 1)).
struct ZetaValue {
  unsigned s = 1;
  Vec g;
  std::vector<Rational> strata;
  Rational total;
};

Rational zeta_stratum(const LiePresentation& pres, const KVVectors& kv, std::size_t i, unsigned s);
ZetaValue zeta_value(const LiePresentation& pres, const KVVectors& kv, unsigned s);
ZetaValue zeta_total(const LiePresentation& pres, std::span<const FieldElement> g, unsigned s,
                     const EnumerationOptions& opts = {});

/// k(G) = zeta_G(1, 1). Throws non-integral-class-number.
Integer class_number(const LiePresentation& pres, const RankProfile& profile);
Integer class_number(const LiePresentation& pres, const EnumerationOptions& opts = {});

/// Exponent of chi(1) in the character formula for N_t: the t-fold
/// convolution of the single-commutator distribution gives 2t - 1.
constexpr unsigned word_exponent(unsigned t) noexcept { return 2 * t - 1; }

/// N_t(g) = |G|^{2t-1} zeta_G(2t-1, g). Throws negative-or-fractional-count.
Integer fibre_count(const LiePresentation& pres, const KVVectors& kv, unsigned t);
Integer fibre_count(const LiePresentation& pres, std::span<const FieldElement> g, unsigned t,
                    const EnumerationOptions& opts = {});
/// P_t(g) = N_t(g) / |G|^{2t} = zeta_G(2t-1, g) / |G|.
Rational fibre_prob(const LiePresentation& pres, const KVVectors& kv, unsigned t);
Rational fibre_prob(const LiePresentation& pres, std::span<const FieldElement> g, unsigned t,
                    const EnumerationOptions& opts = {});

/// D[i] = number of irreducible characters of degree q^i. Throws
/// non-integral-degree-count.
std::vector<Integer> degree_counts(const LiePresentation& pres, const RankProfile& profile);

/// Square of the upper bound on ||P_t - U||_1 over G':
/// (|G'| / |G|) sum_{i >= 1} D[i] q^{-2ti}.
Rational uniformity_bound_squared(const LiePresentation& pres, const std::vector<Integer>& degrees, unsigned t);

/// |G'| sum_{g in G'} (P_t(g) - 1/|G'|)^2 from the degrees, i.e.
/// (|G'| / |G|) sum_{i >= 1} D[i] q^{-2(2t-1)i}. Never larger than
/// uniformity_bound_squared; equal at t = 1.
Rational sharp_bound_squared(const LiePresentation& pres, const std::vector<Integer>& degrees, unsigned t);

/// The exact L1 distance sum_{g in G'} |P_t(g) - 1/|G'||.
Rational l1_distance(const LiePresentation& pres, const Classification& cls, unsigned t);

/// sum_{g in G'} P_t(g)^2, evaluated over the KV classes.
Rational second_moment(const LiePresentation& pres, const Classification& cls, unsigned t);
/// 1/|G'| + (1/|G|) sum_{i >= 1} D[i] q^{-2(2t-1)i}.
Rational second_moment_from_degrees(const LiePresentation& pres, const std::vector<Integer>& degrees, unsigned t);

/// zeta_{G1 x G2}(s, (g1, g2)) = zeta_{G1}(s, g1) zeta_{G2}(s, g2).
/// Throws mismatched-s. Per-stratum parts are not combined.
Rational direct_product(const ZetaValue& lhs, const ZetaValue& rhs);

/// One row of a fibre report: either the identity or a KV class.
struct FibreRow {
  Vec g;
  bool identity = false;
  std::uint64_t multiplicity = 1;
  std::vector<std::uint64_t> K;
  std::vector<std::uint64_t> V;
  ZetaValue zeta;       // zeta_G(t, g)
  ZetaValue word_zeta;  // zeta_G(2t-1, g)
  Integer count;
  Rational probability;
};

struct FibreSection {
  unsigned t = 1;
  std::vector<FibreRow> rows;
  Integer total_mass;  // sum of N_t over G'
  Rational bound_squared;
  Rational sharp_bound_squared;
  Rational l1;
  Rational second_moment;
  Rational second_moment_expected;
  bool bound_holds = false;
};

struct FibreReport {
  Integer group_order;
  Integer abelianization_order;
  Integer derived_order;
  RankProfile profile;
  Classification classes;
  Integer class_number;
  std::vector<Integer> degrees;
  std::vector<FibreSection> sections;
};

/// Theorem-side pipeline for the requested word lengths t.
FibreReport analyze(const LiePresentation& pres, const std::vector<unsigned>& ts, const EnumerationOptions& opts = {});

Integer power(std::uint64_t base, std::uint64_t exp);

std::string format_rational(const Rational& r);
/// Decimal rendering with the given number of significant digits.
std::string format_decimal(const Rational& r, int digits = 6);
std::string format_sqrt_decimal(const Rational& r, int digits = 6);

}  // namespace commfibre
