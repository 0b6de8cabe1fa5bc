"""
.. moduleauthor:: the gpoincare authors

Curvettes through a generic point of an exceptional component.

The chart value of the point is kept as an indeterminate c, so orders and
characters are those of a generic curvette rather than of a sample.
Computations run in Q[t, x, y, c, z] and every result is reduced modulo
Phi_N(z); a reduced element vanishes iff it vanishes in Q(zeta_N)[t, x, y, c].

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
from functools import cached_property, lru_cache

import sympy
from sympy.polys.domains import QQ
from sympy.polys.rings import ring

from .cyclo import cyclotomic_dup
from .exceptions import NotSemiInvariant
from .polynomials import INFINITE_ORDER, T_SYMBOL, X_SYMBOL, Y_SYMBOL, Z_SYMBOL

logger = logging.getLogger(__name__)

C_SYMBOL = sympy.Symbol("c")

# the indeterminate chart value, usable wherever a position is expected
GENERIC_VALUE = "c"


class GenericRing:
    """Q[t, x, y, c, z] together with the cyclotomic reducer Phi_N(z)."""

    def __init__(self, modulus):
        self.modulus = modulus
        self.ring, self.t, self.x, self.y, self.c, self.z = ring(
            [T_SYMBOL, X_SYMBOL, Y_SYMBOL, C_SYMBOL, Z_SYMBOL], QQ)
        dup = cyclotomic_dup(modulus)
        degree = len(dup) - 1
        self.phi = sum((self.z ** (degree - k) * c for k, c in enumerate(dup)), self.ring.zero)

    def reduce(self, element):
        return element.rem(self.phi)

    def cyclo(self, value):
        """A CycloNum as a polynomial in z."""
        return sum((self.z ** k * c for k, c in enumerate(value.coeffs) if c), self.ring.zero)

    def poly1(self, poly):
        """A Poly1 as a polynomial in t and z."""
        return sum((self.cyclo(c) * self.t ** k for k, c in enumerate(poly.coeffs)),
                   self.ring.zero)

    def poly2(self, poly):
        """A Poly2 as a polynomial in x, y and z."""
        return sum((self.cyclo(c) * self.x ** i * self.y ** j for (i, j), c in poly.terms.items()),
                   self.ring.zero)

    def chart_value(self, value):
        if value == GENERIC_VALUE:
            return self.c
        return self.cyclo(value)


@lru_cache(maxsize=None)
def generic_ring(modulus):
    return GenericRing(modulus)


def t_order(element):
    """Least power of t in a reduced element; infinite for zero."""
    if not element:
        return INFINITE_ORDER
    return min(monom[0] for monom in element.itermonoms())


class GenericCurvette:
    """t -> (x(t, c), y(t, c)), the curvette at the chart value c."""

    def __init__(self, modulus, x_param, y_param, name="L"):
        self.space = generic_ring(modulus)
        self.modulus = modulus
        self.x_param = self.space.reduce(x_param)
        self.y_param = self.space.reduce(y_param)
        self.name = name

    def substitute(self, element):
        """element(x(t, c), y(t, c)), reduced."""
        space = self.space
        return space.reduce(element.compose([(space.x, self.x_param), (space.y, self.y_param)]))

    def order_along(self, equation):
        """ord_t of a Poly2 along the curvette, for generic c."""
        return t_order(self.substitute(self.space.poly2(equation)))

    @cached_property
    def equation(self):
        """Res_t(x - x(t, c), y - y(t, c)) in Q(zeta_N)[x, y, c]."""
        space = self.space
        if not self.x_param:
            return space.x
        if not self.y_param:
            return space.y
        result = sympy.resultant(X_SYMBOL - self.x_param.as_expr(),
                                 Y_SYMBOL - self.y_param.as_expr(), T_SYMBOL)
        equation = space.reduce(space.ring.from_expr(sympy.expand(result)))
        logger.debug("generic implicit equation of %s: %s", self.name, equation)
        return equation

    def support(self):
        """Monomials x^i y^j present in the equation for generic c."""
        return sorted({(monom[1], monom[2]) for monom in self.equation.itermonoms()})

    def character(self, subgroup, action):
        """Semi-invariance character of the generic equation under `subgroup`."""
        characters = {(i * action.chi_x + j * action.chi_y).restrict(subgroup)
                      for i, j in self.support()}
        if len(characters) != 1:
            raise NotSemiInvariant("generic curvette %s is not semi-invariant under a subgroup "
                                   "of order %s" % (self.name, subgroup.order))
        return characters.pop()

    def specialize(self, value):
        """(x(t, value), y(t, value)) for a CycloNum chart value."""
        space = self.space
        point = space.cyclo(value)
        return (space.reduce(self.x_param.compose(space.c, point)),
                space.reduce(self.y_param.compose(space.c, point)))

    def __str__(self):
        return "%s(%s, %s)" % (self.name, self.x_param.as_expr(), self.y_param.as_expr())
