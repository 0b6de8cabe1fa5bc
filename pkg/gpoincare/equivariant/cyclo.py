"""
Exact arithmetic in the cyclotomic field Q(zeta_N).

Elements are stored densely in the power basis of Q[z]/Phi_N(z); the
polynomial arithmetic itself is done by sympy's dense univariate routines.

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
from fractions import Fraction
from functools import lru_cache

from sympy.polys.densearith import dup_mul, dup_rem
from sympy.polys.densebasic import dup_strip
from sympy.polys.domains import QQ, ZZ
from sympy.polys.euclidtools import dup_invert
from sympy.polys.factortools import dup_zz_cyclotomic_poly
from sympy.polys.polyerrors import NotInvertible

from .exceptions import ModulusMismatch

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def cyclotomic_dup(modulus):
    """Phi_N as a dense list over QQ, highest degree first."""
    assert modulus >= 1
    return [QQ(int(c)) for c in dup_zz_cyclotomic_poly(modulus, ZZ)]


def field_degree(modulus):
    return len(cyclotomic_dup(modulus)) - 1


def to_qq(value):
    """Coerce int, Fraction or a QQ element to QQ."""
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    return QQ(value)


class CycloNum:
    """An element of Q(zeta_N).

    coeffs[k] is the rational coefficient of zeta_N^k, 0 <= k < phi(N).
    """
    __slots__ = ("modulus", "coeffs")

    def __init__(self, modulus, coeffs):
        coeffs = tuple(to_qq(c) for c in coeffs)
        if len(coeffs) != field_degree(modulus):
            raise ValueError("expected %s coordinates for N=%s, got %s"
                             % (field_degree(modulus), modulus, len(coeffs)))
        self.modulus = modulus
        self.coeffs = coeffs

    @classmethod
    def from_dup(cls, modulus, dup):
        """Reduce a dense list (highest degree first) modulo Phi_N."""
        rem = dup_rem(dup_strip(list(dup)), cyclotomic_dup(modulus), QQ)
        ascending = list(reversed(rem))
        ascending += [QQ(0)] * (field_degree(modulus) - len(ascending))
        return cls(modulus, ascending)

    @classmethod
    def rational(cls, modulus, value):
        coeffs = [QQ(0)] * field_degree(modulus)
        coeffs[0] = to_qq(value)
        return cls(modulus, coeffs)

    @classmethod
    def zero(cls, modulus):
        return cls.rational(modulus, 0)

    @classmethod
    def one(cls, modulus):
        return cls.rational(modulus, 1)

    @classmethod
    def zeta_power(cls, modulus, exponent):
        return _zeta_power(modulus, exponent % modulus)

    def _to_dup(self):
        return dup_strip(list(reversed(self.coeffs)))

    def _coerce(self, other):
        if isinstance(other, CycloNum):
            if other.modulus != self.modulus:
                raise ModulusMismatch("cannot combine elements of Q(zeta_%s) and Q(zeta_%s)"
                                      % (self.modulus, other.modulus))
            return other
        if isinstance(other, (int, Fraction)) or QQ.of_type(other):
            return CycloNum.rational(self.modulus, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CycloNum(self.modulus, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return CycloNum(self.modulus, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return CycloNum(self.modulus, [-a for a in self.coeffs])

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_rational():
            return other.scale(self.coeffs[0])
        if other.is_rational():
            return self.scale(other.coeffs[0])
        return CycloNum.from_dup(self.modulus, dup_mul(self._to_dup(), other._to_dup(), QQ))

    __rmul__ = __mul__

    def scale(self, rational):
        rational = to_qq(rational)
        return CycloNum(self.modulus, [a * rational for a in self.coeffs])

    def inverse(self):
        """@pre: self != 0"""
        if self.is_zero():
            raise ZeroDivisionError("division by zero in Q(zeta_%s)" % self.modulus)
        if self.is_rational():
            return CycloNum.rational(self.modulus, QQ(1) / self.coeffs[0])
        try:
            inv = dup_invert(self._to_dup(), cyclotomic_dup(self.modulus), QQ)
        except NotInvertible:
            # Phi_N is irreducible, a nonzero element is always a unit
            raise AssertionError("non-invertible nonzero element %s" % self)
        return CycloNum.from_dup(self.modulus, inv)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CycloNum.one(self.modulus)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def is_zero(self):
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def is_rational(self):
        return not any(self.coeffs[1:])

    def to_rational(self):
        """@pre: self.is_rational()"""
        assert self.is_rational()
        return self.coeffs[0]

    def __eq__(self, other):
        other = self._coerce(other) if not isinstance(other, CycloNum) else other
        if not isinstance(other, CycloNum):
            return NotImplemented
        return self.modulus == other.modulus and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.modulus, self.coeffs))

    def sort_key(self):
        """Canonical total order used for deterministic output."""
        return tuple((int(c.numerator), int(c.denominator)) for c in self.coeffs)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            elif c == 1:
                terms.append("z^%d" % k if k > 1 else "z")
            else:
                terms.append("(%s)*z^%d" % (c, k) if k > 1 else "(%s)*z" % c)
        return " + ".join(terms) if terms else "0"

    def __repr__(self):
        return "CycloNum(%s, %s)" % (self.modulus, self)


@lru_cache(maxsize=None)
def _zeta_power(modulus, exponent):
    return CycloNum.from_dup(modulus, [QQ(1)] + [QQ(0)] * exponent)


def root_of_unity(modulus, order, exponent):
    """zeta_order^exponent inside Q(zeta_modulus).

    @pre: order divides modulus
    """
    if modulus % order:
        raise ModulusMismatch("zeta_%s does not lie in Q(zeta_%s)" % (order, modulus))
    return CycloNum.zeta_power(modulus, (modulus // order) * exponent)

