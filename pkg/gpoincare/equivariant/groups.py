"""
Finite abelian groups given as products of cyclic factors, their
subgroups and their characters, all in additive notation.

A character with residues (a_1, ..., a_k) sends g to
sum a_j g_j (e / n_j) mod e, read as a power of zeta_e where e is the
group exponent.

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
import itertools
import logging
import math
from functools import cached_property, lru_cache

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import hermite_normal_form

from .exceptions import GroupMismatch

logger = logging.getLogger(__name__)


class AbelianGroup:
    """Z/n_1 x ... x Z/n_k; elements are residue tuples."""

    def __init__(self, orders):
        orders = tuple(int(n) for n in orders)
        if any(n < 1 for n in orders):
            raise ValueError("cyclic factor orders must be positive: %s" % (orders,))
        self.orders = orders

    @property
    def rank(self):
        return len(self.orders)

    @property
    def order(self):
        return math.prod(self.orders)

    @property
    def exponent(self):
        return math.lcm(*self.orders) if self.orders else 1

    @property
    def identity(self):
        return (0,) * self.rank

    @cached_property
    def elements(self):
        """All elements in lexicographic order."""
        return tuple(itertools.product(*(range(n) for n in self.orders)))

    def normalize(self, g):
        if len(g) != self.rank:
            raise GroupMismatch("element %s does not belong to Z%s" % (g, self.orders))
        return tuple(int(a) % n for a, n in zip(g, self.orders))

    def add(self, g, h):
        return tuple((a + b) % n for a, b, n in zip(g, h, self.orders))

    def neg(self, g):
        return tuple((-a) % n for a, n in zip(g, self.orders))

    def sub(self, g, h):
        return self.add(g, self.neg(h))

    def times(self, m, g):
        return tuple((m * a) % n for a, n in zip(g, self.orders))

    def element_order(self, g):
        return math.lcm(*(n // math.gcd(a, n) for a, n in zip(g, self.orders))) if g else 1

    def whole(self):
        return _whole(self)

    def trivial(self):
        return _trivial(self)

    def character(self, residues):
        return Character(self, residues)

    def characters(self):
        return [Character(self, r) for r in self.elements]

    def __eq__(self, other):
        return isinstance(other, AbelianGroup) and self.orders == other.orders

    def __hash__(self):
        return hash(("AbelianGroup", self.orders))

    def __repr__(self):
        return "AbelianGroup(%s)" % (list(self.orders),)


@lru_cache(maxsize=None)
def _whole(group):
    return Subgroup(group, group.elements)


@lru_cache(maxsize=None)
def _trivial(group):
    return Subgroup(group, [group.identity])


@lru_cache(maxsize=4096)
def _hnf_basis(group, generators):
    """Hermite normal form of the lattice spanned by the generators and n_j e_j."""
    if group.rank == 0:
        return ()
    columns = [list(g) for g in generators]
    for j, n in enumerate(group.orders):
        columns.append([n if i == j else 0 for i in range(group.rank)])
    rows = [[ZZ(col[i]) for col in columns] for i in range(group.rank)]
    matrix = DomainMatrix(rows, (group.rank, len(columns)), ZZ)
    basis = hermite_normal_form(matrix)
    return tuple(tuple(int(v) for v in row) for row in basis.to_list())


class Subgroup:
    """A subgroup, identified by the Hermite normal form of its preimage lattice."""

    def __init__(self, group, elements):
        self.group = group
        self.elements = frozenset(elements)
        assert group.order % len(self.elements) == 0, "Lagrange violated"

    @cached_property
    def basis(self):
        return _hnf_basis(self.group, tuple(sorted(self.elements)))

    @classmethod
    def generated(cls, group, generators):
        elements = {group.identity}
        for g in generators:
            g = group.normalize(g)
            multiples = [group.times(m, g) for m in range(group.element_order(g))]
            elements = {group.add(e, h) for e in elements for h in multiples}
        return cls(group, elements)

    @classmethod
    def from_elements(cls, group, elements):
        return cls(group, {group.normalize(e) for e in elements})

    @property
    def order(self):
        return len(self.elements)

    def _check(self, other):
        if other.group != self.group:
            raise GroupMismatch("subgroups of different groups")

    def index_in(self, other=None):
        """[other : self]; other defaults to the whole group."""
        if other is None:
            return self.group.order // self.order
        self._check(other)
        assert self.elements <= other.elements
        return other.order // self.order

    def contains(self, g):
        return tuple(g) in self.elements

    def is_subgroup_of(self, other):
        self._check(other)
        return self.elements <= other.elements

    def intersect(self, other):
        self._check(other)
        return Subgroup(self.group, self.elements & other.elements)

    def join(self, other):
        self._check(other)
        return Subgroup.generated(self.group, sorted(self.elements | other.elements))

    def sorted_elements(self):
        return sorted(self.elements)

    def coset_rep(self, g):
        """Lexicographically least element of g + H."""
        return min(self.group.add(g, h) for h in self.elements)

    @cached_property
    def coset_reps(self):
        """Canonical representatives of G/H in increasing order."""
        return tuple(sorted({self.coset_rep(g) for g in self.group.elements}))

    def coset_reps_in(self, bigger):
        """Canonical representatives of bigger/H."""
        return tuple(sorted({self.coset_rep(g) for g in bigger.elements}))

    def is_whole(self):
        return self.order == self.group.order

    def is_trivial(self):
        return self.order == 1

    def key(self):
        return self.basis

    def generators(self):
        """Columns of the canonical basis, reduced to group elements."""
        if self.group.rank == 0:
            return []
        columns = zip(*self.basis)
        gens = {self.group.normalize(col) for col in columns}
        gens.discard(self.group.identity)
        return sorted(gens)

    def __eq__(self, other):
        return isinstance(other, Subgroup) and self.group == other.group and self.elements == other.elements

    def __hash__(self):
        return hash((self.group, self.elements))

    def __repr__(self):
        return "Subgroup(order=%s, generators=%s)" % (self.order, self.generators())


class Character:
    """A character of G, possibly restricted to a subgroup (its domain)."""

    def __init__(self, group, residues, domain=None):
        self.group = group
        self.residues = group.normalize(residues)
        self.domain = domain if domain is not None else group.whole()
        if self.domain.group != group:
            raise GroupMismatch("character domain belongs to another group")

    def value(self, g):
        e = self.group.exponent
        return sum(a * x * (e // n) for a, x, n in zip(self.residues, g, self.group.orders)) % e

    def values(self):
        return tuple(self.value(g) for g in self.domain.sorted_elements())

    def _combine(self, other, sign):
        if other.group != self.group:
            raise GroupMismatch("characters of different groups")
        residues = tuple(a + sign * b for a, b in zip(self.residues, other.residues))
        return Character(self.group, residues, self.domain.intersect(other.domain))

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return Character(self.group, self.group.neg(self.residues), self.domain)

    def __rmul__(self, m):
        return Character(self.group, self.group.times(m, self.residues), self.domain)

    def restrict(self, subgroup):
        assert subgroup.is_subgroup_of(self.domain)
        return Character(self.group, self.residues, subgroup)

    def kernel(self, subgroup=None):
        """{h in H : chi(h) = 0}; H defaults to the domain."""
        subgroup = subgroup if subgroup is not None else self.domain
        return Subgroup(self.group, {h for h in subgroup.elements if self.value(h) == 0})

    def is_trivial(self):
        return not any(self.values())

    def canonical_residues(self):
        """Lexicographically least residues inducing the same values on the domain."""
        return _canonical_residues(self.group, self.domain, self.values())

    def sort_key(self):
        return (self.domain.key(), self.canonical_residues())

    def __eq__(self, other):
        return (isinstance(other, Character) and self.group == other.group
                and self.domain == other.domain and self.values() == other.values())

    def __hash__(self):
        return hash((self.group, self.domain, self.values()))

    def __repr__(self):
        return "Character(%s on order-%s subgroup)" % (list(self.canonical_residues()), self.domain.order)


@lru_cache(maxsize=4096)
def _canonical_residues(group, domain, values):
    points = domain.sorted_elements()
    for residues in group.elements:
        candidate = Character(group, residues, domain)
        if all(candidate.value(g) == v for g, v in zip(points, values)):
            return residues
    raise AssertionError("values %s are not a character" % (values,))
