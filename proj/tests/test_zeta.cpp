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

#include "commfibre/algebra.hpp"
#include "commfibre/enumeration.hpp"
#include "commfibre/error.hpp"
#include "commfibre/zeta.hpp"
#include "doctest.h"

using namespace commfibre;

namespace {

LiePresentation pres_of(const char* name, int p, int k = 1) {
  const Field f = make_field(p, k);
  return reduce(std::string(name) == "elliptic9" ? builtin(name, f, 1) : builtin(name, f));
}

Rational qpow(long q, long e) {
  Rational r = 1;
  for (long i = 0; i < (e < 0 ? -e : e); ++i) r *= q;
  return e < 0 ? Rational(1) / r : r;
}

}  // namespace

TEST_CASE("heisenberg zeta values") {
  for (auto [p, k] : {std::pair{3, 1}, {5, 1}, {3, 2}}) {
    const auto pres = pres_of("heisenberg", p, k);
    const long q = pres.field.q();
    for (unsigned s = 1; s <= 3; ++s) {
      const auto z0 = zeta_total(pres, Vec{pres.field.zero()}, s);
      CHECK(z0.total == qpow(q, 2) + qpow(q, 1 - static_cast<long>(s)) * (q - 1));
      CHECK(z0.strata[1] == qpow(q, 1 - static_cast<long>(s)) * (q - 1));
      const auto z1 = zeta_total(pres, Vec{pres.field.one()}, s);
      CHECK(z1.total == qpow(q, 2) - qpow(q, 1 - static_cast<long>(s)));
      CHECK(z1.strata[1] == -qpow(q, 1 - static_cast<long>(s)));
    }
  }
}

TEST_CASE("class numbers") {
  CHECK(class_number(pres_of("heisenberg", 3)) == 11);
  CHECK(class_number(pres_of("quadric7", 3)) == 171);
  CHECK(class_number(pres_of("quadric8", 3)) == 417);
  CHECK(class_number(pres_of("elliptic9", 5)) == 16421);
}

TEST_CASE("fibre counts") {
  const auto pres = pres_of("heisenberg", 3);
  const Vec zero{pres.field.zero()}, one{pres.field.one()};
  CHECK(fibre_count(pres, zero, 1) == 297);
  CHECK(fibre_count(pres, one, 1) == 216);
  CHECK(fibre_count(pres, zero, 2) == 181521);
  CHECK(fibre_count(pres, one, 2) == 174960);
  CHECK(fibre_count(pres, zero, 2) + 2 * fibre_count(pres, one, 2) == 531441);
  CHECK(fibre_prob(pres, zero, 1) == Rational(11, 27));
  CHECK_THROWS_AS(fibre_count(pres, zero, 0), Error);
}

TEST_CASE("degree counts") {
  const auto h = pres_of("heisenberg", 5);
  const auto dh = degree_counts(h, rank_profile(h));
  CHECK(dh == std::vector<Integer>{25, 4});

  const auto q7 = pres_of("quadric7", 3);
  const auto d7 = degree_counts(q7, rank_profile(q7));
  CHECK(d7 == std::vector<Integer>{81, 72, 18});
  // sum D[i] q^{2i} = |G|
  CHECK(d7[0] + d7[1] * 9 + d7[2] * 81 == 2187);
}

TEST_CASE("uniformity bound and L1 distance") {
  const auto pres = pres_of("heisenberg", 3);
  const auto cls = classify_elements(pres);
  const auto d = degree_counts(pres, cls.profile);
  CHECK(uniformity_bound_squared(pres, d, 1) == Rational(2, 81));
  CHECK(sharp_bound_squared(pres, d, 1) == Rational(2, 81));
  CHECK(l1_distance(pres, cls, 1) == Rational(4, 27));
  CHECK(l1_distance(pres, cls, 2) == Rational(4, 243));
  // Later t: the stated bound still holds but is no longer tight.
  CHECK(sharp_bound_squared(pres, d, 2) < uniformity_bound_squared(pres, d, 2));
}

TEST_CASE("second moment identity and bound on every builtin") {
  for (const char* name : {"heisenberg", "quadric7", "quadric8", "elliptic9"}) {
    const auto pres = pres_of(name, 3);
    const auto cls = classify_elements(pres);
    const auto d = degree_counts(pres, cls.profile);
    for (unsigned t = 1; t <= 3; ++t) {
      CHECK(second_moment(pres, cls, t) == second_moment_from_degrees(pres, d, t));
      const Rational l1 = l1_distance(pres, cls, t);
      CHECK(l1 * l1 <= sharp_bound_squared(pres, d, t));
      CHECK(sharp_bound_squared(pres, d, t) <= uniformity_bound_squared(pres, d, t));
    }
  }
}

TEST_CASE("identity fibre is at least 1/|G|") {
  for (const char* name : {"heisenberg", "quadric7", "quadric8", "elliptic9"}) {
    const auto pres = pres_of(name, 3);
    const Rational floor = Rational(1) / qpow(pres.field.q(), pres.n);
    for (unsigned t = 1; t <= 3; ++t) CHECK(fibre_prob(pres, Vec(pres.b, pres.field.zero()), t) >= floor);
  }
}

TEST_CASE("direct products") {
  const Field f = make_field(3, 1);
  const auto h = reduce(builtin("heisenberg", f));
  const auto hh = reduce(direct_sum(builtin("heisenberg", f), builtin("heisenberg", f)));
  REQUIRE(hh.b == 2);
  for (unsigned s = 1; s <= 2; ++s) {
    for (std::uint32_t g1 = 0; g1 < 3; ++g1)
      for (std::uint32_t g2 = 0; g2 < 3; ++g2) {
        const auto lhs = zeta_total(h, Vec{FieldElement{g1}}, s);
        const auto rhs = zeta_total(h, Vec{FieldElement{g2}}, s);
        // f-basis of the sum is (y1, y1') in that order.
        CHECK(zeta_total(hh, Vec{FieldElement{g1}, FieldElement{g2}}, s).total == direct_product(lhs, rhs));
      }
  }
  const auto z1 = zeta_total(h, Vec{f.zero()}, 1);
  const auto z2 = zeta_total(h, Vec{f.zero()}, 2);
  CHECK_THROWS_AS(direct_product(z1, z2), Error);
}

TEST_CASE("analyze") {
  const auto pres = pres_of("quadric8", 3);
  const auto report = analyze(pres, {1, 2});
  CHECK(report.class_number == 417);
  CHECK(report.group_order == 6561);
  CHECK(report.derived_order == 81);
  REQUIRE(report.sections.size() == 2);
  for (const auto& sec : report.sections) {
    CHECK(sec.total_mass == power(6561, 2 * sec.t));
    CHECK(sec.bound_holds);
    CHECK(sec.second_moment == sec.second_moment_expected);
  }
}

TEST_CASE("formatting") {
  CHECK(format_rational(Rational(11)) == "11/1");
  CHECK(format_rational(Rational(-4, 6)) == "-2/3");
  CHECK(format_decimal(Rational(1, 3)) == "0.333333");
  CHECK(format_sqrt_decimal(Rational(4, 9)) == "0.666667");
  CHECK(power(3, 4) == 81);
}
