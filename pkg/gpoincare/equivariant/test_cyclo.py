"""
.. moduleauthor:: the gpoincare authors


Copyright 2026 the gpoincare authors

This program is free software: you can redistribute it and/or modify
it under the terms of the GNU General Public License as published by
the Free Software Foundation, either version 3 of the License, or
(at your option) any later version.

This program is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with this program.  If not, see <http://www.gnu.org/licenses/>.

"""
import random
from fractions import Fraction

import pytest

from . import cyclo
from .exceptions import ModulusMismatch


def test_field_degree():
    "Euler's phi for a few moduli"
    assert cyclo.field_degree(1) == 1
    assert cyclo.field_degree(2) == 1
    assert cyclo.field_degree(3) == 2
    assert cyclo.field_degree(7) == 6
    assert cyclo.field_degree(15) == 8


def test_zeta_has_order_n():
    "zeta_N^N = 1 and no smaller positive power is 1"
    for modulus in (3, 5, 6, 15):
        zeta = cyclo.CycloNum.zeta_power(modulus, 1)
        powers = [zeta ** k for k in range(1, modulus + 1)]
        assert powers[-1] == cyclo.CycloNum.one(modulus)
        assert all(p != 1 for p in powers[:-1])


def test_sum_of_roots_of_unity_vanishes():
    "1 + zeta + ... + zeta^(N-1) = 0"
    modulus = 15
    total = cyclo.CycloNum.zero(modulus)
    for k in range(modulus):
        total = total + cyclo.CycloNum.zeta_power(modulus, k)
    assert total.is_zero()


def test_field_axioms_on_random_elements():
    "associativity, distributivity and inverses on random elements of Q(zeta_15)"
    rng = random.Random(15)
    modulus = 15

    def sample():
        return cyclo.CycloNum(modulus, [Fraction(rng.randint(-5, 5), rng.randint(1, 4))
                                        for _ in range(cyclo.field_degree(modulus))])

    for _ in range(1000):
        a, b, c = sample(), sample(), sample()
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        if not a.is_zero():
            assert a * a.inverse() == 1
            assert (b / a) * a == b


def test_rationals_mix_with_cyclonums():
    "ints and Fractions coerce into the field"
    zeta = cyclo.CycloNum.zeta_power(7, 1)
    assert (zeta + 1) - 1 == zeta
    assert 2 * zeta == zeta + zeta
    assert (zeta * Fraction(1, 3)).scale(3) == zeta
    assert cyclo.CycloNum.rational(7, 5).is_rational()
    assert not zeta.is_rational()


def test_root_of_unity_embedding():
    "zeta_3 inside Q(zeta_15) is zeta_15^5"
    assert cyclo.root_of_unity(15, 3, 1) == cyclo.CycloNum.zeta_power(15, 5)
    with pytest.raises(ModulusMismatch):
        cyclo.root_of_unity(15, 4, 1)


def test_modulus_mismatch():
    "elements of different fields do not combine"
    with pytest.raises(ModulusMismatch):
        cyclo.CycloNum.one(3) + cyclo.CycloNum.one(5)


def test_division_by_zero():
    "zero has no inverse"
    with pytest.raises(ZeroDivisionError):
        cyclo.CycloNum.zero(5).inverse()


def test_sort_key_is_total():
    "distinct elements have distinct sort keys"
    values = {cyclo.CycloNum.zeta_power(15, k) for k in range(15)}
    assert len({v.sort_key() for v in values}) == 15
