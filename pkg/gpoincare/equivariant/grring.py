"""
The Grothendieck ring of finite (G, r)-sets for a finite abelian G.

A (G, r)-set is a G-set X with a function w: X -> Z^r_{>=0} and, for every
point x, a character alpha_x of its stabilizer.  Transitive ones are
classified by GRClass; GRSeries is a truncated formal combination of
classes and AcampoForm is a finite signed product of factors (1 - T)^s.

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
from dataclasses import dataclass
from functools import cached_property, lru_cache

from sympy.polys.domains import ZZ
from sympy.polys.rings import ring

from .exceptions import DegreeZeroFactor, GroupMismatch, InconsistentAction, InputError, NotAUnit, \
    RoundTripError
from .groups import Subgroup

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GRClass:
    """Isomorphism class of a transitive (G, r)-set.

    `w` lists w(c.x0) for the canonical coset representatives c of G/H,
    for the base point x0 that makes this tuple lexicographically least.
    """
    stabilizer: object
    w: tuple
    alpha: object

    @classmethod
    def canonical(cls, stabilizer, values, alpha):
        """@pre: values maps every coset representative of G/H to a w-vector"""
        reps = stabilizer.coset_reps
        group = stabilizer.group
        labelings = [tuple(tuple(values[stabilizer.coset_rep(group.add(c, b))]) for c in reps)
                     for b in reps]
        if alpha.domain != stabilizer:
            alpha = alpha.restrict(stabilizer)
        return cls(stabilizer, min(labelings), alpha)

    @classmethod
    def unit(cls, group, r):
        whole = group.whole()
        return cls(whole, ((0,) * r,), group.character(group.identity))

    @property
    def group(self):
        return self.stabilizer.group

    @property
    def r(self):
        return len(self.w[0])

    @property
    def orbit_size(self):
        return len(self.w)

    @cached_property
    def degree(self):
        """Minimal total w-degree over the orbit."""
        return min(sum(v) for v in self.w)

    @cached_property
    def _positions(self):
        return {c: k for k, c in enumerate(self.stabilizer.coset_reps)}

    def w_at(self, g):
        return self.w[self._positions[self.stabilizer.coset_rep(g)]]

    def is_unit(self):
        return self.stabilizer.is_whole() and self.degree == 0 and self.alpha.is_trivial()

    def sort_key(self):
        return (self.degree, self.w, self.stabilizer.key(), self.alpha.sort_key())

    def __repr__(self):
        return "GRClass(|G/H|=%s, w=%s, alpha=%s)" % (
            self.orbit_size, [list(v) for v in self.w], list(self.alpha.canonical_residues()))


class GRSet:
    """An explicit finite (G, r)-set.

    `act(g, x)` is the action map; `w` and `alpha` are dicts keyed by point.
    """

    def __init__(self, group, points, act, w, alpha):
        self.group = group
        self.points = list(points)
        self.act = act
        self.w = w
        self.alpha = alpha

    @classmethod
    def from_orbit(cls, stabilizer, values, alpha):
        """The orbit G/H with points labelled by canonical coset representatives."""
        group = stabilizer.group
        return cls(group, stabilizer.coset_reps,
                   lambda g, p: stabilizer.coset_rep(group.add(g, p)),
                   dict(values), {p: alpha for p in stabilizer.coset_reps})

    def _check_action(self):
        identity = self.group.identity
        point_set = set(self.points)
        for p in self.points:
            if self.act(identity, p) != p:
                raise InconsistentAction("the identity moves %r" % (p,))
            for g in self.group.elements:
                image = self.act(g, p)
                if image not in point_set:
                    raise InconsistentAction("%r is moved outside the set" % (p,))
                for h in self.group.elements:
                    if self.act(h, image) != self.act(self.group.add(g, h), p):
                        raise InconsistentAction("the action map is not a group action at %r" % (p,))

    def canonicalize(self):
        """Orbit decomposition: one GRClass per orbit, sorted."""
        self._check_action()
        seen = set()
        classes = []
        for base in self.points:
            if base in seen:
                continue
            stabilizer = Subgroup(self.group, [g for g in self.group.elements
                                               if self.act(g, base) == base])
            values = {}
            for c in stabilizer.coset_reps:
                point = self.act(c, base)
                seen.add(point)
                values[c] = self.w[point]
                if self.alpha[point] != self.alpha[base]:
                    raise InconsistentAction("alpha is not constant along the orbit of %r" % (base,))
            classes.append(GRClass.canonical(stabilizer, values, self.alpha[base]))
        return sorted(classes, key=GRClass.sort_key)


@lru_cache(maxsize=65536)
def class_product(first, second):
    """Orbits of the diagonal action on the product of two transitive (G, r)-sets.

    The orbit of (x0, b.y0) has stabilizer H1 & H2, w(g) = w1(g) + w2(g + b)
    and alpha = alpha1 + alpha2 restricted; b runs over G/(H1 + H2).
    """
    h1, h2 = first.stabilizer, second.stabilizer
    group = h1.group
    meet = h1.intersect(h2)
    alpha = first.alpha.restrict(meet) + second.alpha.restrict(meet)
    result = []
    for b in h1.join(h2).coset_reps:
        values = {c: tuple(u + v for u, v in zip(first.w_at(c), second.w_at(group.add(c, b))))
                  for c in meet.coset_reps}
        result.append(GRClass.canonical(meet, values, alpha))
    return tuple(result)


class GRSeries:
    """Finite integer combination of classes, truncated at total degree `bound`."""

    def __init__(self, group, r, bound, coeffs=None):
        self.group = group
        self.r = r
        self.bound = bound
        self.coeffs = {}
        for cls, value in (coeffs or {}).items():
            if value and cls.degree <= bound:
                self.coeffs[cls] = self.coeffs.get(cls, 0) + value

    @classmethod
    def unit(cls, group, r, bound):
        return cls(group, r, bound, {GRClass.unit(group, r): 1})

    @classmethod
    def from_class(cls, gr_class, bound, coeff=1):
        return cls(gr_class.group, gr_class.r, bound, {gr_class: coeff})

    @classmethod
    def from_gr_set(cls, gr_set, r, bound):
        coeffs = defaultdict(int)
        for gr_class in gr_set.canonicalize():
            coeffs[gr_class] += 1
        return cls(gr_set.group, r, bound, coeffs)

    def _check(self, other):
        if other.group != self.group:
            raise GroupMismatch("series over different groups")
        if other.r != self.r or other.bound != self.bound:
            raise InputError("series with r=%s, D=%s and r=%s, D=%s cannot be combined"
                             % (self.r, self.bound, other.r, other.bound))

    def _new(self, coeffs):
        return GRSeries(self.group, self.r, self.bound, coeffs)

    def __add__(self, other):
        self._check(other)
        coeffs = dict(self.coeffs)
        for cls, value in other.coeffs.items():
            coeffs[cls] = coeffs.get(cls, 0) + value
        return self._new(coeffs)

    def __neg__(self):
        return self._new({cls: -value for cls, value in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return self._new({cls: other * value for cls, value in self.coeffs.items()})
        self._check(other)
        coeffs = defaultdict(int)
        for first, a in self.coeffs.items():
            for second, b in other.coeffs.items():
                if first.degree + second.degree > self.bound:
                    continue
                for product in class_product(first, second):
                    coeffs[product] += a * b
        return self._new(coeffs)

    __rmul__ = __mul__

    def coefficient(self, gr_class):
        return self.coeffs.get(gr_class, 0)

    def items(self):
        """(class, coefficient) pairs in canonical order."""
        return sorted(self.coeffs.items(), key=lambda item: item[0].sort_key())

    def is_zero(self):
        return not self.coeffs

    def in_unit_coset(self):
        """S in 1 + M: unit coefficient 1 and no other class of degree 0."""
        unit = GRClass.unit(self.group, self.r)
        if self.coefficient(unit) != 1:
            return False
        return all(cls.degree > 0 for cls in self.coeffs if cls != unit)

    def cardinality(self):
        """Signed number of points."""
        return sum(cls.orbit_size * value for cls, value in self.coeffs.items())

    def __eq__(self, other):
        return (isinstance(other, GRSeries) and self.group == other.group and self.r == other.r
                and self.bound == other.bound and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.group, self.r, self.bound, frozenset(self.coeffs.items())))

    def __repr__(self):
        return "GRSeries(D=%s, %s classes)" % (self.bound, len(self.coeffs))


def expand_factor(gr_class, exponent, bound):
    """(1 - T)^s truncated at `bound`."""
    if gr_class.degree == 0 and exponent < 0:
        raise DegreeZeroFactor("(1 - T)^%s with w(T) = 0 has no finite expansion" % exponent)
    unit = GRSeries.unit(gr_class.group, gr_class.r, bound)
    base = GRSeries.from_class(gr_class, bound)
    result = unit
    power = unit
    k = 0
    while True:
        k += 1
        if exponent >= 0 and k > exponent:
            break
        power = power * base
        if power.is_zero():
            break
        if exponent >= 0:
            coeff = (-1) ** k * math.comb(exponent, k)
        else:
            coeff = math.comb(-exponent + k - 1, k)
        result = result + power * coeff
    return result


@dataclass(frozen=True)
class AcampoForm:
    """prod (1 - T)^s over `factors`, a canonically sorted tuple of (T, s)."""
    group: object
    r: int
    factors: tuple

    @classmethod
    def build(cls, group, r, factors):
        exponents = defaultdict(int)
        for gr_class, exponent in factors:
            exponents[gr_class] += exponent
        kept = [(c, s) for c, s in exponents.items() if s]
        for gr_class, _ in kept:
            if gr_class.degree == 0:
                raise DegreeZeroFactor("A'Campo factor %r has w = 0" % (gr_class,))
        return cls(group, r, tuple(sorted(kept, key=lambda item: item[0].sort_key())))

    def expand(self, bound):
        result = GRSeries.unit(self.group, self.r, bound)
        for gr_class, exponent in self.factors:
            result = result * expand_factor(gr_class, exponent, bound)
        return result

    def exponent_of(self, gr_class):
        return dict(self.factors).get(gr_class, 0)

    def is_trivial(self):
        return not self.factors


def acampo_factor(series):
    """The unique A'Campo form expanding to `series` up to its bound.

    Degree by degree the residual has the shape 1 + sum c_T T + (higher),
    so T enters with exponent -c_T.
    """
    if not series.in_unit_coset():
        raise NotAUnit("the series is not of the form 1 + (terms with w != 0)")
    unit = GRClass.unit(series.group, series.r)
    residual = series
    factors = []
    for degree in range(1, series.bound + 1):
        peeled = [(c, -v) for c, v in residual.items() if c != unit and c.degree == degree]
        for gr_class, exponent in peeled:
            residual = residual * expand_factor(gr_class, -exponent, series.bound)
        factors.extend(peeled)
        assert all(c.degree > degree for c in residual.coeffs if c != unit)
    form = AcampoForm.build(series.group, series.r, factors)
    if form.expand(series.bound) != series:
        raise RoundTripError("A'Campo form does not expand back to the series")
    logger.debug("factored a series with %s classes into %s factors",
                 len(series.coeffs), len(form.factors))
    return form


@lru_cache(maxsize=None)
def _series_ring(r):
    names = ",".join("t%s" % (i + 1) for i in range(r))
    return ring(names, ZZ)[0]


class IntSeries:
    """Integer power series in t_1..t_r truncated at total degree `bound`."""

    def __init__(self, r, bound, poly=None):
        self.r = r
        self.bound = bound
        self.ring = _series_ring(r)
        poly = poly if poly is not None else self.ring.zero
        self.poly = self.ring.from_dict({m: c for m, c in poly.items() if sum(m) <= bound})

    @classmethod
    def from_terms(cls, r, bound, terms):
        series_ring = _series_ring(r)
        return cls(r, bound, series_ring.from_dict({tuple(m): ZZ(c) for m, c in terms.items() if c}))

    @classmethod
    def one(cls, r, bound):
        return cls(r, bound, _series_ring(r).one)

    @classmethod
    def monomial(cls, exponents, bound, coeff=1):
        return cls.from_terms(len(exponents), bound, {tuple(exponents): coeff})

    def _check(self, other):
        if other.r != self.r or other.bound != self.bound:
            raise InputError("integer series with different shapes")

    def __add__(self, other):
        self._check(other)
        return IntSeries(self.r, self.bound, self.poly + other.poly)

    def __sub__(self, other):
        self._check(other)
        return IntSeries(self.r, self.bound, self.poly - other.poly)

    def __neg__(self):
        return IntSeries(self.r, self.bound, -self.poly)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntSeries(self.r, self.bound, self.poly * other)
        self._check(other)
        return IntSeries(self.r, self.bound, self.poly * other.poly)

    __rmul__ = __mul__

    def one_minus_power(self, exponent):
        """(1 - self)^s. @pre: no constant term"""
        assert self.coeff((0,) * self.r) == 0
        one = IntSeries.one(self.r, self.bound)
        result = one
        power = one
        k = 0
        while True:
            k += 1
            if exponent >= 0 and k > exponent:
                break
            power = power * self
            if power.is_zero():
                break
            if exponent >= 0:
                coeff = (-1) ** k * math.comb(exponent, k)
            else:
                coeff = math.comb(-exponent + k - 1, k)
            result = result + power * coeff
        return result

    @classmethod
    def geometric(cls, exponents, power, bound):
        """(1 - t^exponents)^power."""
        return cls.monomial(exponents, bound).one_minus_power(power)

    def coeff(self, exponents):
        return int(self.poly.get(tuple(exponents), 0))

    def terms(self):
        """(exponents, coefficient) in graded lexicographic order."""
        return sorted(((m, int(c)) for m, c in self.poly.items()), key=lambda mc: (sum(mc[0]), mc[0]))

    def is_zero(self):
        return not self.poly

    def __eq__(self, other):
        return (isinstance(other, IntSeries) and self.r == other.r
                and self.bound == other.bound and self.poly == other.poly)

    def __hash__(self):
        return hash((self.r, self.bound, tuple(self.terms())))

    def __str__(self):
        return str(self.poly.as_expr()) if self.poly else "0"

    def __repr__(self):
        return "IntSeries(%s + O(deg %s))" % (self, self.bound + 1)


def forget_class(gr_class, bound):
    """Sum of t^w(x) over the orbit."""
    terms = defaultdict(int)
    for values in gr_class.w:
        terms[values] += 1
    return IntSeries.from_terms(gr_class.r, bound, terms)


def forget_g(series, bound=None):
    """The non-equivariant image of a GRSeries or AcampoForm."""
    if isinstance(series, AcampoForm):
        if bound is None:
            raise ValueError("forgetting an A'Campo form needs a bound")
        series = series.expand(bound)
    result = IntSeries(series.r, series.bound)
    for gr_class, value in series.items():
        result = result + forget_class(gr_class, series.bound) * value
    return result
