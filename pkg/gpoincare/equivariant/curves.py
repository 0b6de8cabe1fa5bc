"""
Branches of plane curves given by polynomial parametrizations, and the
diagonal action of a finite abelian group on them.

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
import logging
from dataclasses import dataclass, field
from functools import lru_cache

from .cyclo import CycloNum, root_of_unity
from .exceptions import InputError, ModulusMismatch, NonPrimitiveBranch, NotSemiInvariant
from .groups import Subgroup
from .polynomials import Poly1, Poly2, resultant

logger = logging.getLogger(__name__)

# chart values at which the generic fibre of a parametrization is sampled
FIBRE_SAMPLES = (2, 3, 5)


class GroupAction2:
    """g acts by (x, y) -> (zeta^chi_x(g) x, zeta^chi_y(g) y), zeta = zeta_e."""

    def __init__(self, group, chi_x, chi_y, modulus=None):
        self.group = group
        self.chi_x = chi_x
        self.chi_y = chi_y
        self.modulus = modulus if modulus is not None else group.exponent
        if self.modulus % group.exponent:
            raise ModulusMismatch("modulus %s is not a multiple of the group exponent %s"
                                  % (self.modulus, group.exponent))
        kernel = chi_x.kernel().intersect(chi_y.kernel())
        if not kernel.is_trivial():
            raise InputError("the action is not faithful: %s elements act trivially" % kernel.order)

    def exponents(self, g):
        """Exponents of zeta_N by which g scales x and y."""
        step = self.modulus // self.group.exponent
        return self.chi_x.value(g) * step, self.chi_y.value(g) * step

    def scalars(self, g):
        e = self.group.exponent
        return (root_of_unity(self.modulus, e, self.chi_x.value(g)),
                root_of_unity(self.modulus, e, self.chi_y.value(g)))

    def is_scalar(self, g):
        return self.chi_x.value(g) == self.chi_y.value(g)

    def is_scalar_action(self):
        return all(self.is_scalar(g) for g in self.group.elements)

    def __eq__(self, other):
        return (isinstance(other, GroupAction2) and self.group == other.group
                and self.chi_x == other.chi_x and self.chi_y == other.chi_y
                and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.group, self.chi_x, self.chi_y, self.modulus))

    def __repr__(self):
        return "GroupAction2(Z%s, chi_x=%s, chi_y=%s)" % (
            list(self.group.orders), list(self.chi_x.residues), list(self.chi_y.residues))


@dataclass(frozen=True)
class Branch:
    x_param: Poly1
    y_param: Poly1
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if self.x_param.modulus != self.y_param.modulus:
            raise ModulusMismatch("branch %s mixes coefficient fields" % self.name)
        if self.x_param.is_zero() and self.y_param.is_zero():
            raise InputError("branch %s is the constant parametrization" % self.name)
        if not (self.x_param.coeff(0).is_zero() and self.y_param.coeff(0).is_zero()):
            raise InputError("branch %s does not pass through the origin" % self.name)

    @property
    def modulus(self):
        return self.x_param.modulus

    @property
    def multiplicity(self):
        return min(self.x_param.order, self.y_param.order)

    def is_smooth(self):
        return self.multiplicity == 1

    def evaluate(self, equation):
        return equation.evaluate(self.x_param, self.y_param)

    def order_along(self, equation):
        return self.evaluate(equation).order

    def renamed(self, name):
        return Branch(self.x_param, self.y_param, name)

    def __str__(self):
        return "%s(%s, %s)" % (self.name, self.x_param, self.y_param)


@dataclass(frozen=True)
class ImplicitCurve:
    equation: Poly2
    branch: Branch


def _generic_fibre_degree(x_param, y_param):
    """Number of parameter values over a generic point of the image."""
    degrees = []
    for sample in FIBRE_SAMPLES:
        value = CycloNum.rational(x_param.modulus, sample)
        common = (x_param - x_param(value)).gcd(y_param - y_param(value))
        degrees.append(common.degree)
    return min(degrees)


@lru_cache(maxsize=None)
def implicit_equation(x_param, y_param):
    """Reduced generator of the ideal of the image of t -> (x(t), y(t))."""
    modulus = x_param.modulus
    if x_param.is_zero() or y_param.is_zero():
        moving = y_param if x_param.is_zero() else x_param
        if moving.order != 1:
            raise NonPrimitiveBranch("axis parametrization %s is not injective" % moving)
        return Poly2.x(modulus) if x_param.is_zero() else Poly2.y(modulus)
    fibre = _generic_fibre_degree(x_param, y_param)
    if fibre > 1:
        raise NonPrimitiveBranch("parametrization (%s, %s) covers its image %s times; "
                                 "the resultant is a proper power" % (x_param, y_param, fibre))
    f = [Poly2.x(modulus)] + [Poly2.constant(modulus, -c) for c in x_param.coeffs[1:]]
    g = [Poly2.y(modulus)] + [Poly2.constant(modulus, -c) for c in y_param.coeffs[1:]]
    equation = resultant(f, g).normalized()
    assert equation.evaluate(x_param, y_param).is_zero()
    logger.debug("implicit equation of (%s, %s): %s", x_param, y_param, equation)
    return equation


def implicitize(branch):
    """@post: the equation vanishes identically on the parametrization"""
    return ImplicitCurve(implicit_equation(branch.x_param, branch.y_param), branch)


def intersection_multiplicity(first, second):
    """ord_t of the equation of `second` along `first`; inf for equal branches."""
    return first.evaluate(implicitize(second).equation).order


def act_on_branch(g, branch, action):
    sx, sy = action.scalars(g)
    return Branch(branch.x_param.scale(sx), branch.y_param.scale(sy), branch.name)


def act_on_equation(g, equation, action):
    """The pull-back f o g."""
    ex, ey = action.exponents(g)
    return equation.scaled(ex, ey)


def same_curve(first, second):
    return implicitize(first).equation == implicitize(second).equation


def branch_isotropy(branch, action):
    """Elements mapping the branch to itself as a germ."""
    equation = implicitize(branch).equation
    fixing = [g for g in action.group.elements
              if act_on_equation(g, equation, action).ratio_to(equation) is not None]
    return Subgroup(action.group, fixing)


def orbit(branch, action):
    """[(g, g.branch)] over canonical coset representatives of G/Iso(branch)."""
    isotropy = branch_isotropy(branch, action)
    return [(g, act_on_branch(g, branch, action)) for g in isotropy.coset_reps]


def shift_between(first, second, action):
    """Some g with g.first = second as germs, or None."""
    target = implicitize(second).equation
    source = implicitize(first).equation
    for g in action.group.elements:
        moved = act_on_equation(action.group.neg(g), source, action).normalized()
        if moved == target:
            return g
    return None


def semi_invariant_character(f, subgroup, action):
    """The character lambda of H with f o h = zeta^lambda(h) f.

    Every monomial x^i y^j is an eigenvector with character
    i chi_x + j chi_y; f is semi-invariant iff all monomials of its
    support agree on H.
    """
    equation = f.equation if isinstance(f, ImplicitCurve) else f
    if equation.is_zero():
        raise ValueError("the zero polynomial has no semi-invariance character")
    characters = {(i * action.chi_x + j * action.chi_y).restrict(subgroup)
                  for i, j in equation.support()}
    if len(characters) != 1:
        raise NotSemiInvariant("%s is not semi-invariant under a subgroup of order %s"
                               % (equation, subgroup.order))
    return characters.pop()
