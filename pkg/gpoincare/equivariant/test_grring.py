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

import pytest

from . import grring
from .exceptions import DegreeZeroFactor, InconsistentAction, NotAUnit
from .groups import AbelianGroup, Subgroup


def constant_class(stabilizer, w, alpha=None):
    group = stabilizer.group
    alpha = group.character(alpha if alpha is not None else group.identity)
    return grring.GRClass.canonical(stabilizer, {c: w for c in stabilizer.coset_reps}, alpha)


def test_canonical_class_is_independent_of_base_point():
    "rotating the labels of a free Z3-orbit gives the same class"
    group = AbelianGroup([3])
    free = group.trivial()
    alpha = group.character([0])
    first = grring.GRClass.canonical(free, {(0,): (1,), (1,): (2,), (2,): (3,)}, alpha)
    second = grring.GRClass.canonical(free, {(0,): (2,), (1,): (3,), (2,): (1,)}, alpha)
    assert first == second
    assert first.w == ((1,), (2,), (3,))
    assert first.degree == 1
    assert first.orbit_size == 3


def test_product_of_two_orbits_in_z6():
    "Z6/<3> times Z6/<2> is one free orbit with w = 3"
    group = AbelianGroup([6])
    first = constant_class(Subgroup.generated(group, [(3,)]), (1,))
    second = constant_class(Subgroup.generated(group, [(2,)]), (2,))
    product = grring.class_product(first, second)
    assert len(product) == 1
    assert product[0].stabilizer.is_trivial()
    assert set(product[0].w) == {(3,)}


def test_products_count_points():
    "|X x Y| = |X| |Y| for random transitive Z12-sets"
    rng = random.Random(12)
    group = AbelianGroup([12])
    for _ in range(15):
        h1 = Subgroup.generated(group, [(rng.choice([0, 1, 2, 3, 4, 6]),)])
        h2 = Subgroup.generated(group, [(rng.choice([0, 1, 2, 3, 4, 6]),)])
        first = constant_class(h1, (rng.randint(1, 3),))
        second = constant_class(h2, (rng.randint(1, 3),))
        product = grring.class_product(first, second)
        assert sum(c.orbit_size for c in product) == first.orbit_size * second.orbit_size
        assert all(c.degree == first.degree + second.degree for c in product)


def test_gr_set_canonicalization():
    "an explicit set with two orbits splits into two classes"
    group = AbelianGroup([2])
    points = ["a", "b", "c"]
    swap = {"a": "b", "b": "a", "c": "c"}

    def act(g, p):
        return swap[p] if g == (1,) else p

    w = {"a": (1,), "b": (1,), "c": (2,)}
    alpha = {p: group.character([0]) for p in points}
    classes = grring.GRSet(group, points, act, w, alpha).canonicalize()
    assert [(c.orbit_size, c.w) for c in classes] == [(2, ((1,), (1,))), (1, ((2,),))]
    series = grring.GRSeries.from_gr_set(grring.GRSet(group, points, act, w, alpha), 1, 5)
    assert series.cardinality() == 3


def test_gr_set_with_broken_action():
    "an action map that is not a group action is rejected"
    group = AbelianGroup([2])

    def act(g, p):
        return "b" if g == (1,) else p

    alpha = {p: group.character([0]) for p in "ab"}
    with pytest.raises(InconsistentAction):
        grring.GRSet(group, ["a", "b"], act, {"a": (1,), "b": (1,)}, alpha).canonicalize()


def test_geometric_expansion():
    "(1 - T)^-1 over the trivial group is 1 + T + T^2 + ..."
    group = AbelianGroup([])
    base = constant_class(group.whole(), (1,))
    series = grring.expand_factor(base, -1, 4)
    assert [c.degree for c, _ in series.items()] == [0, 1, 2, 3, 4]
    assert all(value == 1 for _, value in series.items())


def test_degree_zero_factor():
    "(1 - T)^-1 with w(T) = 0 has no expansion"
    group = AbelianGroup([3])
    flat = constant_class(group.trivial(), (0,))
    with pytest.raises(DegreeZeroFactor):
        grring.expand_factor(flat, -1, 3)
    with pytest.raises(DegreeZeroFactor):
        grring.AcampoForm.build(group, 1, [(flat, 1)])


def test_acampo_round_trip():
    "factoring the expansion of a form gives the form back"
    group = AbelianGroup([3])
    point = constant_class(group.whole(), (1,), [1])
    free = constant_class(group.trivial(), (2,))
    form = grring.AcampoForm.build(group, 1, [(point, -1), (free, 1), (point, 0)])
    assert form.exponent_of(point) == -1
    assert len(form.factors) == 2
    series = form.expand(6)
    assert series.in_unit_coset()
    assert grring.acampo_factor(series) == form


def test_acampo_factor_needs_a_unit():
    "2 is not in 1 + M"
    group = AbelianGroup([3])
    with pytest.raises(NotAUnit):
        grring.acampo_factor(grring.GRSeries.unit(group, 1, 3) * 2)


def test_forget_group():
    "a free Z3-orbit of w = 2 forgets to 3 t^2"
    group = AbelianGroup([3])
    free = constant_class(group.trivial(), (2,))
    form = grring.AcampoForm.build(group, 1, [(free, 1)])
    plain = grring.forget_g(form, 4)
    assert plain.terms() == [((0,), 1), ((2,), -3)]


def test_int_series():
    "(1 - t1 t2)^-1 (1 - t1^2 t2^2) = 1 + t1 t2"
    product = grring.IntSeries.geometric((1, 1), -1, 6) * grring.IntSeries.geometric((2, 2), 1, 6)
    assert product.terms() == [((0, 0), 1), ((1, 1), 1)]
    geometric = grring.IntSeries.geometric((1,), -1, 3)
    assert geometric.terms() == [((0,), 1), ((1,), 1), ((2,), 1), ((3,), 1)]
    assert (geometric - geometric).is_zero()


def random_form(rng, group, r):
    subgroups = sorted({Subgroup.generated(group, [g]) for g in group.elements},
                       key=lambda h: h.sorted_elements())
    factors = []
    for _ in range(rng.randint(1, 3)):
        stabilizer = rng.choice(subgroups)
        w = tuple(rng.randint(0, 2) for _ in range(r))
        if not sum(w):
            w = (1,) + w[1:]
        alpha = group.character(rng.choice(group.elements))
        factors.append((constant_class(stabilizer, w, alpha.residues), rng.choice([-2, -1, 1, 2])))
    return grring.AcampoForm.build(group, r, factors)


def test_random_acampo_round_trips():
    "factor(expand(F)) = F for random forms over small groups"
    rng = random.Random(6)
    for orders in ([2], [3], [2, 2], [4]):
        group = AbelianGroup(orders)
        for _ in range(25):
            form = random_form(rng, group, rng.choice([1, 2]))
            assert grring.acampo_factor(form.expand(6)) == form


def test_forget_is_multiplicative():
    "forgetting the group commutes with products"
    rng = random.Random(66)
    group = AbelianGroup([3])
    for _ in range(100):
        first = random_form(rng, group, 2).expand(5)
        second = random_form(rng, group, 2).expand(5)
        assert grring.forget_g(first * second) == grring.forget_g(first) * grring.forget_g(second)
