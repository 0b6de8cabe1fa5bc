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

from . import blowup
from .curves import Branch, GroupAction2, act_on_branch, implicitize
from .cyclo import CycloNum
from .exceptions import BadChartValue, CoincidentBranches, CurvetteGenericityError
from .groups import AbelianGroup
from .polynomials import Poly1


def action_of(orders, chi_x, chi_y):
    group = AbelianGroup(orders)
    return GroupAction2(group, group.character(chi_x), group.character(chi_y))


def branch(x_coeffs, y_coeffs, modulus, name):
    return Branch(Poly1(modulus, x_coeffs), Poly1(modulus, y_coeffs), name)


def example_one():
    action = action_of([15], [3], [5])
    branches = [branch([0, 1], [], 15, "C1"), branch([], [0, 1], 15, "C2"),
                branch([0, 1], [0, 0, 1], 15, "C3")]
    return blowup.resolve(action, branches)


def test_example_one_components():
    "two component orbits, both fixed by the whole group"
    res = example_one()
    assert len(res.components) == 2
    first, second = res.components
    assert first.stabilizer.is_whole() and second.stabilizer.is_whole()
    assert first.generic_stabilizer.is_trivial() and second.generic_stabilizer.is_trivial()
    assert [c.self_intersection for c in res.components] == [-2, -1]
    assert [c.discrepancy for c in res.components] == [1, 2]
    assert second.base.component == 1
    assert second.base.position == blowup.ZERO
    assert len(res.all_copies()) == 2
    assert res.ancestors(2) == {1}


def test_example_one_arrows():
    "the axes end on special points, the parabola orbit on a free point of E2"
    res = example_one()
    c1, c2, c3 = res.arrows
    assert (c1.copy.component, c1.position) == (2, blowup.ZERO)
    assert (c2.copy.component, c2.position) == (1, blowup.INFINITY)
    assert c3.copy.component == 2
    assert c3.position not in (blowup.ZERO, blowup.INFINITY)
    assert c3.stabilizer.is_trivial()
    assert c3.orbit_size == 15
    assert [c1.orbit_size, c2.orbit_size] == [1, 1]


def test_example_one_removed_points():
    "E1 loses both special points, E2 loses them and one free orbit"
    res = example_one()
    assert res.removed_positions(1) == [blowup.ZERO, blowup.INFINITY]
    removed = res.removed_positions(2)
    assert removed[:2] == [blowup.ZERO, blowup.INFINITY]
    assert len(removed) == 3
    assert res.position_orbit_size(2, removed[2]) == 15


def test_cusp_resolution():
    "the minimal resolution of y^2 = x^3"
    action = action_of([], [], [])
    cusp = branch([0, 0, 1], [0, 0, 0, 1], 1, "cusp")
    res = blowup.resolve(action, [cusp])
    assert [c.self_intersection for c in res.components] == [-3, -2, -1]
    assert [c.discrepancy for c in res.components] == [1, 2, 4]
    assert res.arrows[0].copy.component == 3
    assert res.ancestors(3) == {1, 2}
    assert set(res.intersections) == {
        (blowup.ComponentCopy(3, ()), blowup.ComponentCopy(2, ())),
        (blowup.ComponentCopy(3, ()), blowup.ComponentCopy(1, ())),
    }


def test_pushdown_curvette_on_cusp():
    "the curvette of E3 at chart value 2 is t -> (2t^2, 2t^3)"
    action = action_of([], [], [])
    cusp = branch([0, 0, 1], [0, 0, 0, 1], 1, "cusp")
    res = blowup.resolve(action, [cusp])
    curvette = blowup.pushdown_curvette(res, 3, CycloNum.rational(1, 2))
    assert curvette.x_param == Poly1(1, [0, 0, 2])
    assert curvette.y_param == Poly1(1, [0, 0, 0, 2])
    assert curvette.evaluate(implicitize(cusp).equation).order == 6
    with pytest.raises(BadChartValue):
        blowup.pushdown_curvette(res, 3, CycloNum.rational(1, 1))
    with pytest.raises(BadChartValue):
        blowup.pushdown_curvette(res, 3, blowup.ZERO)


def test_generic_values_avoid_strict_transforms():
    "chart value 1 on E3 carries the cusp and is skipped"
    action = action_of([], [], [])
    res = blowup.resolve(action, [branch([0, 0, 1], [0, 0, 0, 1], 1, "cusp")])
    values = blowup.generic_values(res, 3, 2)
    assert values == [CycloNum.rational(1, 2), CycloNum.rational(1, 3)]


def test_coincident_branches():
    "the same curve twice needs allow_repeated"
    action = action_of([], [], [])
    line = branch([0, 1], [], 1, "L")
    twice = branch([0, 2], [], 1, "L'")
    with pytest.raises(CoincidentBranches):
        blowup.resolve(action, [line, twice])
    res = blowup.resolve(action, [line, twice], allow_repeated=True)
    assert len(res.arrows) == 2


def test_divisorial_example_three():
    "both pairs are separated on E2, which carries the mark"
    action = action_of([15], [3], [5])
    pair = (branch([0, 1], [0, 0, 1], 15, "L1"), branch([0, 1], [0, 0, -1], 15, "L2"))
    res = blowup.resolve(action, [pair], mode=blowup.DIVISORIAL)
    assert len(res.components) == 2
    assert res.marked == {0: blowup.ComponentCopy(2, (0,))}
    assert res.component(2).marked == [0]
    assert not res.arrows


def test_divisorial_pair_of_one_curve():
    "a curvette pair must consist of two different curves"
    action = action_of([15], [3], [5])
    pair = (branch([0, 1], [0, 0, 1], 15, "L1"), branch([0, 2], [0, 0, 4], 15, "L2"))
    with pytest.raises(CurvetteGenericityError):
        blowup.resolve(action, [pair], mode=blowup.DIVISORIAL)


def test_apply_chart():
    "chart A is (u, uv), chart B is (uv, u)"
    t = Poly1.t(1)
    zero = Poly1.zero(1)
    assert blowup.apply_chart((blowup.CHART_A,), t, zero) == (t, zero)
    assert blowup.apply_chart((blowup.CHART_B,), t, zero) == (zero, t)
    x, y = blowup.apply_chart((blowup.CHART_A, blowup.translation(3)), t, zero)
    assert (x, y) == (t, t * 3)


def resolution_shape(res):
    return sorted((c.self_intersection, c.discrepancy, c.stabilizer.order,
                   c.generic_stabilizer.order) for c in res.components)


def test_resolution_commutes_with_the_action():
    "moving every branch by the same g gives the same resolution"
    rng = random.Random(1515)
    action = action_of([15], [3], [5])
    shapes = [([0, 1], [0, 0, 1]), ([0, 0, 1], [0, 1]), ([0, 0, 1], [0, 0, 0, 1]),
              ([0, 1], [0, 0, 1, 1]), ([0, 1], [])]
    for _ in range(12):
        branches = [branch(x, y, 15, "C%s" % k)
                    for k, (x, y) in enumerate(rng.sample(shapes, 2))]
        g = (rng.randrange(15),)
        moved = [act_on_branch(g, b, action) for b in branches]
        first, second = blowup.resolve(action, branches), blowup.resolve(action, moved)
        assert resolution_shape(first) == resolution_shape(second)
        assert len(first.arrows) == len(second.arrows)
