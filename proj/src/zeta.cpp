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

#include "commfibre/zeta.hpp"

#include <cstdio>

#include "commfibre/error.hpp"

namespace commfibre {

namespace {

KVVectors identity_kv(const LiePresentation& pres, const RankProfile& profile) {
  return {Vec(pres.b, pres.field.zero()), profile.R, std::vector<std::uint64_t>(profile.R.size(), 0)};
}

KVVectors class_kv(const KVClass& c) { return {c.representative, c.K, c.V}; }

Rational qpow_signed(std::uint64_t q, long long e) {
  Rational r(power(q, static_cast<std::uint64_t>(e < 0 ? -e : e)));
  if (e < 0) r = 1 / r;
  return r;
}

Integer to_integer(std::uint64_t x) {
  Integer z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(x), 0, 0, &x);
  return z;
}

}  // namespace

Integer power(std::uint64_t base, std::uint64_t exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), to_integer(base).get_mpz_t(), exp);
  return out;
}

Rational zeta_stratum(const LiePresentation& pres, const KVVectors& kv, std::size_t i, unsigned s) {
  const std::uint64_t q = pres.field.q();
  Rational term = Rational(to_integer(kv.K.at(i))) - Rational(to_integer(kv.V.at(i)), to_integer(q - 1));
  term.canonicalize();
  Rational r = Rational(power(q, pres.n - pres.b)) * qpow_signed(q, -static_cast<long long>(i) * (1 + s)) * term;
  r.canonicalize();
  return r;
}

ZetaValue zeta_value(const LiePresentation& pres, const KVVectors& kv, unsigned s) {
  if (s == 0) throw Error(ErrorCode::BadParam, "s must be a positive integer");
  ZetaValue z{s, kv.g, {}, 0};
  for (std::size_t i = 0; i < kv.K.size(); ++i) {
    z.strata.push_back(zeta_stratum(pres, kv, i, s));
    z.total += z.strata.back();
  }
  z.total.canonicalize();
  return z;
}

ZetaValue zeta_total(const LiePresentation& pres, std::span<const FieldElement> g, unsigned s,
                     const EnumerationOptions& opts) {
  return zeta_value(pres, kv_vectors(pres, g, opts), s);
}

Integer class_number(const LiePresentation& pres, const RankProfile& profile) {
  const Rational k = zeta_value(pres, identity_kv(pres, profile), 1).total;
  if (k.get_den() != 1 || k <= 0)
    throw Error(ErrorCode::NonIntegralClassNumber, "zeta(1, 1) = " + format_rational(k));
  return k.get_num();
}

Integer class_number(const LiePresentation& pres, const EnumerationOptions& opts) {
  return class_number(pres, rank_profile(pres, opts));
}

Integer fibre_count(const LiePresentation& pres, const KVVectors& kv, unsigned t) {
  if (t == 0) throw Error(ErrorCode::BadParam, "t must be a positive integer");
  const ZetaValue zeta = zeta_value(pres, kv, word_exponent(t));
  Rational n = Rational(power(pres.field.q(), pres.n * word_exponent(t))) * zeta.total;
  n.canonicalize();
  if (n.get_den() != 1 || n < 0)
    throw Error(ErrorCode::NegativeOrFractionalCount, "N_t(g) = " + format_rational(n));
  return n.get_num();
}

Integer fibre_count(const LiePresentation& pres, std::span<const FieldElement> g, unsigned t,
                    const EnumerationOptions& opts) {
  return fibre_count(pres, kv_vectors(pres, g, opts), t);
}

Rational fibre_prob(const LiePresentation& pres, const KVVectors& kv, unsigned t) {
  if (t == 0) throw Error(ErrorCode::BadParam, "t must be a positive integer");
  Rational p = zeta_value(pres, kv, word_exponent(t)).total / Rational(power(pres.field.q(), pres.n));
  p.canonicalize();
  return p;
}

Rational fibre_prob(const LiePresentation& pres, std::span<const FieldElement> g, unsigned t,
                    const EnumerationOptions& opts) {
  return fibre_prob(pres, kv_vectors(pres, g, opts), t);
}

std::vector<Integer> degree_counts(const LiePresentation& pres, const RankProfile& profile) {
  const std::uint64_t q = pres.field.q();
  std::vector<Integer> out;
  for (std::size_t i = 0; i < profile.R.size(); ++i) {
    Rational d = qpow_signed(q, static_cast<long long>(pres.n - pres.b) - 2 * static_cast<long long>(i)) *
                 Rational(to_integer(profile.R[i]));
    d.canonicalize();
    if (d.get_den() != 1)
      throw Error(ErrorCode::NonIntegralDegreeCount, "D[" + std::to_string(i) + "] = " + format_rational(d));
    out.push_back(d.get_num());
  }
  return out;
}

namespace {

// sum_{i >= 1} D[i] q^{-2 e i}
Rational nonlinear_mass(const LiePresentation& pres, const std::vector<Integer>& degrees, unsigned e) {
  Rational s = 0;
  for (std::size_t i = 1; i < degrees.size(); ++i)
    s += Rational(degrees[i]) * qpow_signed(pres.field.q(), -2 * static_cast<long long>(e * i));
  s.canonicalize();
  return s;
}

template <typename Fn>
void for_each_derived_row(const LiePresentation& pres, const Classification& cls, unsigned t, Fn&& fn) {
  fn(fibre_prob(pres, identity_kv(pres, cls.profile), t), std::uint64_t{1});
  for (const auto& c : cls.classes) fn(fibre_prob(pres, class_kv(c), t), c.multiplicity);
}

}  // namespace

Rational uniformity_bound_squared(const LiePresentation& pres, const std::vector<Integer>& degrees, unsigned t) {
  const std::uint64_t q = pres.field.q();
  Rational r = Rational(power(q, pres.b), power(q, pres.n)) * nonlinear_mass(pres, degrees, t);
  r.canonicalize();
  return r;
}

Rational sharp_bound_squared(const LiePresentation& pres, const std::vector<Integer>& degrees, unsigned t) {
  const std::uint64_t q = pres.field.q();
  Rational r = Rational(power(q, pres.b), power(q, pres.n)) * nonlinear_mass(pres, degrees, word_exponent(t));
  r.canonicalize();
  return r;
}

Rational l1_distance(const LiePresentation& pres, const Classification& cls, unsigned t) {
  const Rational uniform(1, power(pres.field.q(), pres.b));
  Rational sum = 0;
  for_each_derived_row(pres, cls, t, [&](const Rational& p, std::uint64_t mult) {
    sum += abs(p - uniform) * Rational(to_integer(mult));
  });
  sum.canonicalize();
  return sum;
}

Rational second_moment(const LiePresentation& pres, const Classification& cls, unsigned t) {
  Rational sum = 0;
  for_each_derived_row(pres, cls, t, [&](const Rational& p, std::uint64_t mult) {
    sum += p * p * Rational(to_integer(mult));
  });
  sum.canonicalize();
  return sum;
}

Rational second_moment_from_degrees(const LiePresentation& pres, const std::vector<Integer>& degrees, unsigned t) {
  const std::uint64_t q = pres.field.q();
  Rational r = Rational(1, power(q, pres.b)) + nonlinear_mass(pres, degrees, word_exponent(t)) / Rational(power(q, pres.n));
  r.canonicalize();
  return r;
}

Rational direct_product(const ZetaValue& lhs, const ZetaValue& rhs) {
  if (lhs.s != rhs.s) throw Error(ErrorCode::MismatchedT, "zeta values at different s");
  Rational r = lhs.total * rhs.total;
  r.canonicalize();
  return r;
}

FibreReport analyze(const LiePresentation& pres, const std::vector<unsigned>& ts, const EnumerationOptions& opts) {
  const std::uint64_t q = pres.field.q();
  FibreReport report;
  report.group_order = power(q, pres.n);
  report.abelianization_order = power(q, pres.n - pres.b);
  report.derived_order = power(q, pres.b);
  report.classes = classify_elements(pres, opts);
  report.profile = report.classes.profile;
  report.class_number = class_number(pres, report.profile);
  report.degrees = degree_counts(pres, report.profile);

  for (unsigned t : ts) {
    FibreSection sec;
    sec.t = t;
    auto add_row = [&](const KVVectors& kv, bool identity, std::uint64_t mult) {
      FibreRow row;
      row.g = kv.g;
      row.identity = identity;
      row.multiplicity = mult;
      row.K = kv.K;
      row.V = kv.V;
      row.zeta = zeta_value(pres, kv, t);
      row.word_zeta = zeta_value(pres, kv, word_exponent(t));
      row.count = fibre_count(pres, kv, t);
      row.probability = fibre_prob(pres, kv, t);
      sec.total_mass += row.count * to_integer(mult);
      sec.rows.push_back(std::move(row));
    };
    add_row(identity_kv(pres, report.profile), true, 1);
    for (const auto& c : report.classes.classes) add_row(class_kv(c), false, c.multiplicity);
    sec.bound_squared = uniformity_bound_squared(pres, report.degrees, t);
    sec.sharp_bound_squared = sharp_bound_squared(pres, report.degrees, t);
    sec.l1 = l1_distance(pres, report.classes, t);
    sec.second_moment = second_moment(pres, report.classes, t);
    sec.second_moment_expected = second_moment_from_degrees(pres, report.degrees, t);
    sec.bound_holds = sec.l1 * sec.l1 <= sec.bound_squared;
    report.sections.push_back(std::move(sec));
  }
  return report;
}

std::string format_rational(const Rational& r) {
  Rational c = r;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

namespace {

std::string format_float(const mpf_class& x, int digits) {
  char buf[128];
  gmp_snprintf(buf, sizeof(buf), "%.*Fg", digits, x.get_mpf_t());
  return buf;
}

}  // namespace

std::string format_decimal(const Rational& r, int digits) {
  return format_float(mpf_class(r, 256), digits);
}

std::string format_sqrt_decimal(const Rational& r, int digits) {
  mpf_class x(r, 256);
  return format_float(sqrt(x), digits);
}

}  // namespace commfibre
