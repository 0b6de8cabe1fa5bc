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
import pytest

from . import blowup, generic
from .curves import Branch, GroupAction2, implicitize
from .cyclo import CycloNum
from .exceptions import NotSemiInvariant
from .groups import AbelianGroup
from .polynomials import INFINITE_ORDER, Poly1


def cusp_resolution():
    group = AbelianGroup([])
    action = GroupAction2(group, group.character([]), group.character([]))
    cusp = Branch(Poly1(1, [0, 0, 1]), Poly1(1, [0, 0, 0, 1]), "cusp")
    return blowup.resolve(action, [cusp]), cusp


def test_generic_curvette_on_cusp():
    "the curvette of E3 at chart value c is t -> (c t^2, c t^3)"
    res, cusp = cusp_resolution()
    curvette = blowup.pushdown_curvette(res, 3, generic.GENERIC_VALUE)
    assert isinstance(curvette, generic.GenericCurvette)
    space = curvette.space
    assert curvette.x_param == space.c * space.t ** 2
    assert curvette.y_param == space.c * space.t ** 3
    assert curvette.specialize(CycloNum.rational(1, 2)) == (
        space.poly1(Poly1(1, [0, 0, 2])), space.poly1(Poly1(1, [0, 0, 0, 2])))
    assert curvette.order_along(implicitize(cusp).equation) == 6


def test_generic_curvette_agrees_with_samples():
    "the generic curvette meets a curvette of its component like the samples do"
    res, _ = cusp_resolution()
    for ident in (1, 2, 3):
        symbolic = blowup.pushdown_curvette(res, ident, generic.GENERIC_VALUE)
        first, second, third = blowup.generic_values(res, ident, 3)
        equation = implicitize(blowup.pushdown_curvette(res, ident, third)).equation
        for value in (first, second):
            sample = blowup.pushdown_curvette(res, ident, value)
            assert symbolic.order_along(equation) == sample.order_along(equation)


def test_generic_equation_and_character():
    "t -> (t, c t^2) has equation y - c x^2, semi-invariant iff chi_y = 2 chi_x"
    space = generic.generic_ring(15)
    curvette = generic.GenericCurvette(15, space.t, space.c * space.t ** 2)
    assert curvette.support() == [(0, 1), (2, 0)]
    group = AbelianGroup([15])
    good = GroupAction2(group, group.character([3]), group.character([6]))
    assert curvette.character(group.whole(), good).canonical_residues() == (6,)
    bad = GroupAction2(group, group.character([3]), group.character([5]))
    with pytest.raises(NotSemiInvariant):
        curvette.character(group.whole(), bad)
    assert curvette.character(group.trivial(), bad).is_trivial()


def test_parameters_are_reduced():
    "z^3 = 1 in Q(zeta_3) and the zero element has infinite order"
    space = generic.generic_ring(3)
    curvette = generic.GenericCurvette(3, space.z ** 3 * space.t, space.ring.zero)
    assert curvette.x_param == space.t
    assert curvette.equation == space.y
    assert generic.t_order(space.ring.zero) == INFINITE_ORDER
    assert generic.t_order(space.reduce(space.z ** 2 + space.z + 1) * space.t) == INFINITE_ORDER
