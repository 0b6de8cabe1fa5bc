"""
Polynomials over Q(zeta_N): univariate in t, bivariate in (x, y), local
rational functions of t, and Sylvester resultants.

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
import math
from collections import defaultdict

import sympy
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.subresultants_qq_zz import sylvester

from .cyclo import CycloNum
from .exceptions import ModulusMismatch

logger = logging.getLogger(__name__)

ZERO_DEGREE = -1
INFINITE_ORDER = math.inf

T_SYMBOL, X_SYMBOL, Y_SYMBOL, Z_SYMBOL = sympy.symbols("t x y z")


def _as_cyclo(modulus, value):
    if isinstance(value, CycloNum):
        if value.modulus != modulus:
            raise ModulusMismatch("coefficient in Q(zeta_%s), expected Q(zeta_%s)"
                                  % (value.modulus, modulus))
        return value
    return CycloNum.rational(modulus, value)


class Poly1:
    """Polynomial in t; coeffs[k] multiplies t^k, no trailing zeros."""
    __slots__ = ("modulus", "coeffs")

    def __init__(self, modulus, coeffs=()):
        coeffs = [_as_cyclo(modulus, c) for c in coeffs]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.modulus = modulus
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, modulus):
        return cls(modulus)

    @classmethod
    def constant(cls, modulus, value):
        return cls(modulus, [value])

    @classmethod
    def monomial(cls, modulus, value, exponent):
        return cls(modulus, [0] * exponent + [value])

    @classmethod
    def t(cls, modulus):
        return cls.monomial(modulus, 1, 1)

    @classmethod
    def from_expr(cls, modulus, expr):
        """Read a sympy polynomial expression in t and z."""
        poly = sympy.Poly(sympy.expand(expr), T_SYMBOL, Z_SYMBOL, domain=QQ)
        by_power = defaultdict(dict)
        for (k, e), c in poly.terms():
            by_power[k][e] = QQ.convert(c)
        if not by_power:
            return cls.zero(modulus)
        coeffs = [CycloNum.zero(modulus)] * (max(by_power) + 1)
        for k, zpoly in by_power.items():
            top = max(zpoly)
            coeffs[k] = CycloNum.from_dup(modulus, [zpoly.get(e, QQ(0)) for e in range(top, -1, -1)])
        return cls(modulus, coeffs)

    def is_zero(self):
        return not self.coeffs

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    @property
    def order(self):
        for k, c in enumerate(self.coeffs):
            if not c.is_zero():
                return k
        return INFINITE_ORDER

    def coeff(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return CycloNum.zero(self.modulus)

    def low_coeff(self):
        """Coefficient of t^order; @pre: self != 0"""
        assert not self.is_zero()
        return self.coeffs[self.order]

    def lead_coeff(self):
        assert not self.is_zero()
        return self.coeffs[-1]

    def _same(self, other):
        if other.modulus != self.modulus:
            raise ModulusMismatch("Q(zeta_%s) vs Q(zeta_%s)" % (self.modulus, other.modulus))

    def __add__(self, other):
        if not isinstance(other, Poly1):
            other = Poly1.constant(self.modulus, other)
        self._same(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly1(self.modulus, [self.coeff(k) + other.coeff(k) for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return Poly1(self.modulus, [-c for c in self.coeffs])

    def __sub__(self, other):
        if not isinstance(other, Poly1):
            other = Poly1.constant(self.modulus, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly1):
            return self.scale(other)
        self._same(other)
        if self.is_zero() or other.is_zero():
            return Poly1.zero(self.modulus)
        out = [CycloNum.zero(self.modulus)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return Poly1(self.modulus, out)

    __rmul__ = __mul__

    def scale(self, value):
        value = _as_cyclo(self.modulus, value)
        return Poly1(self.modulus, [c * value for c in self.coeffs])

    def __pow__(self, exponent):
        assert exponent >= 0
        result = Poly1.constant(self.modulus, 1)
        for _ in range(exponent):
            result = result * self
        return result

    def __call__(self, value):
        """Horner evaluation at a CycloNum, or composition with a Poly1."""
        if isinstance(value, Poly1):
            result = Poly1.zero(self.modulus)
        else:
            value = _as_cyclo(self.modulus, value)
            result = CycloNum.zero(self.modulus)
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    def shift_down(self, k):
        """Divide by t^k. @pre: t^k divides self"""
        assert self.is_zero() or self.order >= k
        return Poly1(self.modulus, self.coeffs[k:])

    def truncate(self, n):
        """Drop every power t^k with k >= n."""
        return Poly1(self.modulus, self.coeffs[:n])

    def monic(self):
        return self.scale(self.lead_coeff().inverse())

    def divmod(self, other):
        """Euclidean division over the field. @pre: other != 0"""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        quotient = [CycloNum.zero(self.modulus)] * max(len(self.coeffs) - len(other.coeffs) + 1, 1)
        remainder = list(self.coeffs)
        inv = other.lead_coeff().inverse()
        while len(remainder) >= len(other.coeffs) and remainder:
            shift = len(remainder) - len(other.coeffs)
            factor = remainder[-1] * inv
            quotient[shift] = factor
            for k, c in enumerate(other.coeffs):
                remainder[shift + k] = remainder[shift + k] - factor * c
            remainder.pop()
            while remainder and remainder[-1].is_zero():
                remainder.pop()
        return Poly1(self.modulus, quotient), Poly1(self.modulus, remainder)

    def gcd(self, other):
        """Monic gcd; the gcd of two zero polynomials is zero."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        return a if a.is_zero() else a.monic()

    def __eq__(self, other):
        if not isinstance(other, Poly1):
            return NotImplemented
        return self.modulus == other.modulus and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.modulus, self.coeffs))

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            mono = "" if k == 0 else ("t" if k == 1 else "t^%d" % k)
            if not mono:
                terms.append("(%s)" % c)
            elif c == 1:
                terms.append(mono)
            else:
                terms.append("(%s)*%s" % (c, mono))
        return " + ".join(terms) if terms else "0"

    def __repr__(self):
        return "Poly1(%s)" % self


class Poly2:
    """Sparse polynomial in (x, y); terms maps (i, j) to a nonzero CycloNum."""
    __slots__ = ("modulus", "terms")

    def __init__(self, modulus, terms=None):
        clean = {}
        for mono, c in (terms or {}).items():
            c = _as_cyclo(modulus, c)
            if not c.is_zero():
                clean[tuple(mono)] = c
        self.modulus = modulus
        self.terms = clean

    @classmethod
    def x(cls, modulus):
        return cls(modulus, {(1, 0): 1})

    @classmethod
    def y(cls, modulus):
        return cls(modulus, {(0, 1): 1})

    @classmethod
    def constant(cls, modulus, value):
        return cls(modulus, {(0, 0): value})

    def is_zero(self):
        return not self.terms

    def support(self):
        return sorted(self.terms)

    @property
    def total_degree(self):
        return max((i + j for i, j in self.terms), default=ZERO_DEGREE)

    def __add__(self, other):
        out = defaultdict(lambda: CycloNum.zero(self.modulus))
        for mono, c in self.terms.items():
            out[mono] = out[mono] + c
        for mono, c in other.terms.items():
            out[mono] = out[mono] + c
        return Poly2(self.modulus, out)

    def __neg__(self):
        return Poly2(self.modulus, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Poly2):
            return self.scale(other)
        out = defaultdict(lambda: CycloNum.zero(self.modulus))
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in other.terms.items():
                out[(i1 + i2, j1 + j2)] = out[(i1 + i2, j1 + j2)] + a * b
        return Poly2(self.modulus, out)

    def scale(self, value):
        value = _as_cyclo(self.modulus, value)
        return Poly2(self.modulus, {m: c * value for m, c in self.terms.items()})

    def evaluate(self, x_value, y_value):
        """Substitute Poly1 values for x and y."""
        result = Poly1.zero(self.modulus)
        x_powers, y_powers = {0: Poly1.constant(self.modulus, 1)}, {0: Poly1.constant(self.modulus, 1)}
        for i, j in self.support():
            if i not in x_powers:
                x_powers[i] = x_value ** i
            if j not in y_powers:
                y_powers[j] = y_value ** j
            result = result + (x_powers[i] * y_powers[j]).scale(self.terms[(i, j)])
        return result

    def scaled(self, x_exponent, y_exponent):
        """f(zeta_N^a x, zeta_N^b y) for exponents a, b of zeta_N."""
        return Poly2(self.modulus, {
            (i, j): c * CycloNum.zeta_power(self.modulus, i * x_exponent + j * y_exponent)
            for (i, j), c in self.terms.items()})

    def normalized(self):
        """Scale so that the coefficient of the least monomial is 1."""
        if self.is_zero():
            return self
        return self.scale(self.terms[self.support()[0]].inverse())

    def ratio_to(self, other):
        """The c with self = c * other, or None if not proportional."""
        if self.is_zero() or other.is_zero() or set(self.terms) != set(other.terms):
            return None
        first = self.support()[0]
        ratio = self.terms[first] / other.terms[first]
        for mono, c in self.terms.items():
            if c != other.terms[mono] * ratio:
                return None
        return ratio

    def to_expr(self):
        return sympy.Add(*[cyclo_to_expr(c) * X_SYMBOL ** i * Y_SYMBOL ** j
                           for (i, j), c in sorted(self.terms.items())])

    @classmethod
    def from_expr(cls, modulus, expr):
        """Read a sympy expression in x, y, z, reducing z modulo Phi_N."""
        poly = sympy.Poly(sympy.expand(expr), X_SYMBOL, Y_SYMBOL, Z_SYMBOL, domain=QQ)
        by_mono = defaultdict(dict)
        for (i, j, k), c in poly.terms():
            by_mono[(i, j)][k] = QQ.convert(c)
        terms = {}
        for mono, zpoly in by_mono.items():
            top = max(zpoly)
            dup = [zpoly.get(k, QQ(0)) for k in range(top, -1, -1)]
            terms[mono] = CycloNum.from_dup(modulus, dup)
        return cls(modulus, terms)

    def __eq__(self, other):
        if not isinstance(other, Poly2):
            return NotImplemented
        return self.modulus == other.modulus and self.terms == other.terms

    def __hash__(self):
        return hash((self.modulus, tuple(sorted(self.terms.items()))))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j), c in sorted(self.terms.items()):
            mono = "*".join(p for p in (
                "" if i == 0 else ("x" if i == 1 else "x^%d" % i),
                "" if j == 0 else ("y" if j == 1 else "y^%d" % j)) if p)
            parts.append("(%s)*%s" % (c, mono) if mono else "(%s)" % c)
        return " + ".join(parts)

    def __repr__(self):
        return "Poly2(%s)" % self


class RatFunc:
    """num/den with the common power of t cancelled and den's lowest coefficient 1."""
    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        if den is None:
            den = Poly1.constant(num.modulus, 1)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = num, Poly1.constant(num.modulus, 1)
            return
        shift = min(num.order, den.order)
        num, den = num.shift_down(shift), den.shift_down(shift)
        unit = den.low_coeff().inverse()
        self.num, self.den = num.scale(unit), den.scale(unit)

    @property
    def modulus(self):
        return self.num.modulus

    @classmethod
    def constant(cls, modulus, value):
        return cls(Poly1.constant(modulus, value))

    def is_zero(self):
        return self.num.is_zero()

    @property
    def order(self):
        if self.is_zero():
            return INFINITE_ORDER
        return self.num.order - self.den.order

    def leading_coeff(self):
        """Coefficient of t^order in the Laurent expansion. @pre: self != 0"""
        return self.num.low_coeff() / self.den.low_coeff()

    def _lift(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly1):
            return RatFunc(other)
        return RatFunc.constant(self.modulus, other)

    def __add__(self, other):
        other = self._lift(other)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other):
        other = self._lift(other)
        return RatFunc(self.num * other.den - other.num * self.den, self.den * other.den)

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __mul__(self, other):
        other = self._lift(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        other = self._lift(other)
        if other.is_zero():
            raise ZeroDivisionError("rational function division by zero")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        # normalization is not unique up to common polynomial factors
        return hash((self.modulus, self.order))

    def __repr__(self):
        return "RatFunc((%s)/(%s))" % (self.num, self.den)


def cyclo_to_expr(value):
    return sympy.Add(*[QQ.to_sympy(c) * Z_SYMBOL ** k for k, c in enumerate(value.coeffs) if c])


def _t_expr(coeffs):
    """Polynomial in t whose coefficients are Poly2 or CycloNum values."""
    terms = []
    for k, c in enumerate(coeffs):
        expr = c.to_expr() if isinstance(c, Poly2) else cyclo_to_expr(c)
        terms.append(expr * T_SYMBOL ** k)
    return sympy.Add(*terms)


def resultant(f, g):
    """Res_t(f, g) as a Poly2 in (x, y).

    f and g are Poly1 values or ascending lists of Poly2 coefficients.
    The Sylvester matrix is built by sympy and its determinant taken over
    the polynomial ring Q[x, y, z]; z is reduced modulo Phi_N afterwards.

    @pre: f != 0 and g != 0
    """
    f_coeffs = f.coeffs if isinstance(f, Poly1) else list(f)
    g_coeffs = g.coeffs if isinstance(g, Poly1) else list(g)
    moduli = {c.modulus for c in list(f_coeffs) + list(g_coeffs)}
    if len(moduli) > 1:
        raise ModulusMismatch("resultant of polynomials over different fields")
    f_expr, g_expr = _t_expr(f_coeffs), _t_expr(g_coeffs)
    if f_expr == 0 or g_expr == 0:
        raise ValueError("resultant of a zero polynomial")
    modulus = moduli.pop()
    if sympy.degree(f_expr, T_SYMBOL) == 0 and sympy.degree(g_expr, T_SYMBOL) == 0:
        return Poly2.constant(modulus, 1)
    matrix = sylvester(f_expr, g_expr, T_SYMBOL)
    logger.debug("Sylvester matrix of size %s", matrix.shape)
    domain_matrix = DomainMatrix.from_Matrix(matrix)
    det = domain_matrix.domain.to_sympy(domain_matrix.det())
    return Poly2.from_expr(modulus, det)
