# Copyright 2026 The commfibre Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

from fractions import Fraction

import pytest

import commfibre as cf


def test_field():
    f = cf.Field(3, 2)
    assert f.q == 9
    assert f.modulus == [1, 0, 1]
    x = f.element([0, 1])
    assert f.mul(x, f.inv(x)) == f.element([1, 0])


def test_field_errors():
    with pytest.raises(cf.CommfibreError) as info:
        cf.Field(4)
    assert info.value.code == "not-prime"
    with pytest.raises(cf.CommfibreError) as info:
        cf.Field(2)
    assert info.value.code == "even-p"


def test_heisenberg():
    alg = cf.builtin("heisenberg", 3)
    pres = cf.reduce(alg)
    assert (pres.n, pres.a, pres.b) == (3, 2, 1)
    assert cf.rank_profile(pres) == [1, 2]
    assert cf.kv_vectors(pres, [1]) == ([1, 0], [0, 2])
    assert cf.zeta(pres, [0], 1) == 11
    assert cf.zeta(pres, [1], 2) == Fraction(26, 3)
    assert cf.class_number(pres) == 11
    assert cf.fibre_count(pres, [0], 1) == 297
    assert cf.fibre_count(pres, [1], 2) == 174960
    assert cf.fibre_prob(pres, [0], 1) == Fraction(11, 27)
    assert cf.degree_counts(pres) == [9, 2]
    assert cf.uniformity_bound_squared(pres, 1) == Fraction(2, 81)
    assert cf.l1_distance(pres, 1) == Fraction(4, 27)


def test_oracle():
    alg = cf.builtin("heisenberg", 3)
    table = cf.brute_fibres(alg, 1)
    assert table[(0, 0, 0)] == 297
    assert table[(0, 0, 1)] == 216
    assert sum(table.values()) == 27**2
    assert cf.conjugacy_count(cf.builtin("quadric7")) == 171
    report = cf.verify(cf.builtin("heisenberg", 3, 2), 2)
    assert report["ok"] and report["mismatches"] == 0


def test_parse_and_round_trip():
    text = "field p=3 k=1\ngens x1 x2 y1\nbracket x1 x2 : y1\n"
    alg = cf.parse(text)
    assert alg == cf.builtin("heisenberg")
    assert cf.parse(alg.to_text()) == alg
    with pytest.raises(cf.CommfibreError) as info:
        cf.parse("field p=3 k=1\ngens a b\nbracket a c : b\n")
    assert info.value.code == "unknown-generator"


def test_classes_and_report():
    pres = cf.reduce(cf.builtin("quadric8"))
    mults = sorted(c["multiplicity"] for c in cf.classify(pres))
    assert mults == [32, 48]
    doc = cf.analyze(cf.builtin("heisenberg"), ts=[1, 2], verify=True)
    assert doc["class_number"] == "11"
    assert doc["verification"]["mismatches"] == []


def test_direct_sum_multiplicative():
    h = cf.builtin("heisenberg")
    hp = cf.reduce(h)
    hh = cf.reduce(cf.direct_sum(h, h))
    for g1 in range(3):
        for g2 in range(3):
            for s in (1, 2):
                assert cf.zeta(hh, [g1, g2], s) == cf.zeta(hp, [g1], s) * cf.zeta(hp, [g2], s)


def test_elliptic_requires_alpha():
    with pytest.raises(cf.CommfibreError):
        cf.builtin("elliptic9", 5)
    assert cf.validate(cf.builtin("elliptic9", 5, alpha=2))["ok"]
