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

from . import curves
from .cyclo import CycloNum
from .exceptions import InputError, ModulusMismatch, NonPrimitiveBranch, NotSemiInvariant
from .groups import AbelianGroup
from .polynomials import Poly1, Poly2


def z15_action():
    group = AbelianGroup([15])
    return curves.GroupAction2(group, group.character([3]), group.character([5]))


def branch(x_coeffs, y_coeffs, modulus=15, name="C"):
    return curves.Branch(Poly1(modulus, x_coeffs), Poly1(modulus, y_coeffs), name)


def test_action_validation():
    "non-faithful actions and foreign moduli are rejected"
    group = AbelianGroup([6])
    with pytest.raises(InputError):
        curves.GroupAction2(group, group.character([2]), group.character([4]))
    with pytest.raises(ModulusMismatch):
        curves.GroupAction2(group, group.character([1]), group.character([1]), modulus=4)
    scalar = curves.GroupAction2(AbelianGroup([3]), AbelianGroup([3]).character([1]),
                                 AbelianGroup([3]).character([1]))
    assert scalar.is_scalar_action()
    assert not z15_action().is_scalar_action()


def test_branch_validation():
    "branches pass through the origin and are not constant"
    with pytest.raises(InputError):
        branch([1, 1], [0, 1])
    with pytest.raises(InputError):
        branch([], [])
    assert branch([0, 0, 1], [0, 0, 0, 1]).multiplicity == 2
    assert branch([0, 1], [0, 0, 1]).is_smooth()


def test_implicit_equations():
    "axes, a parabola and the cusp"
    x, y = Poly2.x(15), Poly2.y(15)
    assert curves.implicitize(branch([0, 1], [])).equation == y
    assert curves.implicitize(branch([], [0, 1])).equation == x
    assert curves.implicitize(branch([0, 1], [0, 0, 1])).equation == y - x * x
    assert curves.implicitize(branch([0, 0, 1], [0, 0, 0, 1])).equation == y * y - x * x * x


def test_non_primitive_parametrizations():
    "t -> (t^2, t^4) and t -> (t^2, 0) cover their image twice"
    with pytest.raises(NonPrimitiveBranch):
        curves.implicitize(branch([0, 0, 1], [0, 0, 0, 0, 1]))
    with pytest.raises(NonPrimitiveBranch):
        curves.implicitize(branch([0, 0, 1], []))


def test_intersection_multiplicities():
    "line against parabola and cusp against its tangent"
    line = branch([0, 1], [])
    parabola = branch([0, 1], [0, 0, 1])
    cusp = branch([0, 0, 1], [0, 0, 0, 1])
    assert curves.intersection_multiplicity(line, parabola) == 2
    assert curves.intersection_multiplicity(parabola, line) == 2
    assert curves.intersection_multiplicity(cusp, line) == 3
    assert curves.intersection_multiplicity(cusp, branch([], [0, 1])) == 2


def test_isotropy_and_orbits():
    "axes are invariant, the parabola has a free orbit of 15 curves"
    action = z15_action()
    assert curves.branch_isotropy(branch([0, 1], []), action).is_whole()
    assert curves.branch_isotropy(branch([], [0, 1]), action).is_whole()
    parabola = branch([0, 1], [0, 0, 1])
    assert curves.branch_isotropy(parabola, action).is_trivial()
    shifted = curves.orbit(parabola, action)
    assert len(shifted) == 15
    assert len({curves.implicitize(b).equation for _, b in shifted}) == 15


def test_shift_between():
    "g.C is found from C, and unrelated curves are not"
    action = z15_action()
    parabola = branch([0, 1], [0, 0, 1])
    g = (4,)
    moved = curves.act_on_branch(g, parabola, action)
    found = curves.shift_between(parabola, moved, action)
    assert curves.same_curve(curves.act_on_branch(found, parabola, action), moved)
    assert curves.shift_between(parabola, branch([0, 1], [0, 0, 2]), action) is None


def test_semi_invariance_character():
    "the character of x^i y^j is i chi_x + j chi_y"
    action = z15_action()
    whole = action.group.whole()
    x, y = Poly2.x(15), Poly2.y(15)
    assert curves.semi_invariant_character(x, whole, action) == action.chi_x
    assert curves.semi_invariant_character(x * y, whole, action) == action.chi_x + action.chi_y
    with pytest.raises(NotSemiInvariant):
        curves.semi_invariant_character(y - x * x, whole, action)
    trivial = action.group.trivial()
    assert curves.semi_invariant_character(y - x * x, trivial, action).is_trivial()


def random_branch(rng, name):
    c = CycloNum.zeta_power(15, rng.randrange(15)) * rng.choice([1, 2, -1])
    shape = rng.randrange(4)
    if shape == 0:
        return branch([0, 1], [0] * rng.choice([2, 3]) + [c], name=name)
    if shape == 1:
        return branch([0] * rng.choice([2, 3]) + [c], [0, 1], name=name)
    if shape == 2:
        return branch([0, 0, 1], [0, 0, 0, c], name=name)
    return branch([0, 1], [0, 0, 1, c], name=name)


def test_intersection_multiplicity_is_symmetric_and_invariant():
    "I(C, D) = I(D, C) = I(gC, gD) on random branches under Z15"
    rng = random.Random(315)
    action = z15_action()
    for _ in range(40):
        first, second = random_branch(rng, "C"), random_branch(rng, "D")
        value = curves.intersection_multiplicity(first, second)
        assert curves.intersection_multiplicity(second, first) == value
        g = (rng.randrange(15),)
        moved = [curves.act_on_branch(g, b, action) for b in (first, second)]
        assert curves.intersection_multiplicity(*moved) == value


def random_semi_invariant(rng):
    "x^i y^j times a polynomial in the invariants x^5 and y^3"
    x, y = Poly2.x(15), Poly2.y(15)
    x5 = x * x * x * x * x
    y3 = y * y * y
    invariant = Poly2.constant(15, rng.randint(1, 3)) + x5.scale(rng.randint(-2, 2)) + \
        y3.scale(rng.randint(-2, 2))
    monomial = Poly2.constant(15, 1)
    for factor in [x] * rng.randint(0, 2) + [y] * rng.randint(0, 2):
        monomial = monomial * factor
    return monomial * invariant


def test_semi_invariance_character_is_additive():
    "chi(f g) = chi(f) + chi(g) and f o g = zeta^chi(g) f on random semi-invariants"
    rng = random.Random(35)
    action = z15_action()
    whole = action.group.whole()
    for _ in range(30):
        f, h = random_semi_invariant(rng), random_semi_invariant(rng)
        chi_f = curves.semi_invariant_character(f, whole, action)
        chi_h = curves.semi_invariant_character(h, whole, action)
        assert curves.semi_invariant_character(f * h, whole, action) == chi_f + chi_h
        g = (rng.randrange(15),)
        assert curves.act_on_equation(g, f, action) == \
            f.scale(CycloNum.zeta_power(15, chi_f.value(g)))
