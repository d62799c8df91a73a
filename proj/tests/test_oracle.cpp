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

#include <random>

#include "commfibre/algebra.hpp"
#include "commfibre/error.hpp"
#include "commfibre/oracle.hpp"
#include "doctest.h"

using namespace commfibre;

namespace {

Vec random_vec(const Field& f, std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> pick(0, f.q() - 1);
  Vec v(n);
  for (auto& e : v) e = FieldElement{pick(rng)};
  return v;
}

FullLieAlgebra filiform(const Field& f) {
  FullLieAlgebra alg(f, {"x1", "x2", "x3", "x4"});
  Vec x3(4, f.zero()), x4(4, f.zero());
  x3[2] = f.one();
  x4[3] = f.one();
  alg.set_bracket(0, 1, x3);
  alg.set_bracket(0, 2, x4);
  return alg;
}

}  // namespace

TEST_CASE("heisenberg commutator") {
  const Field f = make_field(3, 1);
  const LazardGroup g(builtin("heisenberg", f));
  const Vec x1{f.one(), f.zero(), f.zero()}, x2{f.zero(), f.one(), f.zero()};
  CHECK(g.commutator_bch(x1, x2) == Vec{f.zero(), f.zero(), f.one()});
  CHECK(g.commutator(x1, x2) == Vec{f.zero(), f.zero(), f.one()});
  CHECK(g.order() == 27);
}

TEST_CASE("BCH group laws") {
  std::mt19937 rng(7);
  const Field f3 = make_field(3, 1);
  const Field f5 = make_field(5, 1);
  for (const LazardGroup& g : {LazardGroup(builtin("quadric7", f3)), LazardGroup(builtin("heisenberg", make_field(3, 2))),
                               LazardGroup(filiform(f5))}) {
    const Field& f = g.field();
    const Vec zero(g.dim(), f.zero());
    for (int trial = 0; trial < 300; ++trial) {
      const Vec u = random_vec(f, g.dim(), rng), v = random_vec(f, g.dim(), rng), w = random_vec(f, g.dim(), rng);
      CHECK(g.multiply(g.multiply(u, v), w) == g.multiply(u, g.multiply(v, w)));
      CHECK(g.multiply(u, g.inverse(u)) == zero);
      CHECK(g.multiply(u, zero) == u);
      CHECK(g.power(u, f.p()) == zero);
      CHECK(g.commutator(u, v) == g.commutator_bch(u, v));
      CHECK(g.conjugate(zero, u) == u);
    }
  }
}

TEST_CASE("class-3 groups are supported only below p") {
  CHECK(LazardGroup(filiform(make_field(5, 1))).nilpotency_class() == 3);
  CHECK_THROWS_AS(LazardGroup(filiform(make_field(3, 1))), Error);
}

TEST_CASE("brute-force fibres") {
  const Field f = make_field(3, 1);
  const LazardGroup g(builtin("heisenberg", f));
  const auto tables = brute_fibres(g, 2);
  REQUIRE(tables.size() == 2);
  const Vec identity(3, f.zero());
  const Vec y1{f.zero(), f.zero(), f.one()};
  CHECK(tables[0].at(f, identity) == 297);
  CHECK(tables[0].at(f, y1) == 216);
  CHECK(tables[0].at(f, Vec{f.one(), f.zero(), f.zero()}) == 0);
  CHECK(tables[0].total() == 729);
  CHECK(tables[1].total() == 531441);
  CHECK(tables[1].at(f, identity) == 181521);
  CHECK(oracle_derived_subgroup(g, tables[0]).size() == 3);
}

TEST_CASE("conjugacy classes") {
  const Field f = make_field(3, 1);
  CHECK(conjugacy_count(builtin("heisenberg", f)) == 11);
  CHECK(conjugacy_count(builtin("quadric7", f)) == 171);
  CHECK(conjugacy_count(filiform(make_field(5, 1))) > 0);
}

TEST_CASE("oracle budget") {
  OracleOptions opts;
  opts.budget = 100;
  CHECK_THROWS_AS(brute_fibres(builtin("heisenberg", make_field(3, 1)), 1, opts), Error);
}

TEST_CASE("theorem and oracle agree") {
  const auto h9 = compare(builtin("heisenberg", make_field(3, 2)), 2);
  CHECK(h9.ok());
  CHECK(h9.mismatches.empty());
  CHECK(h9.oracle_class_number == 89);  // q^2 + q - 1

  OracleOptions slow;
  slow.class2_fast_path = false;
  CHECK(compare(builtin("heisenberg", make_field(5, 1)), 3, slow).ok());
}
