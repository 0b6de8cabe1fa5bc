"""
Equivariant and plain Poincare series of collections of curve or divisorial
valuations, the jets oracle, shifted collections and the recovery of the
plane representation from an equivariant series.

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
from dataclasses import dataclass, field
from functools import cached_property

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from .blowup import CURVES, INFINITY, MODES, ZERO, resolve
from .curves import act_on_branch, branch_isotropy, implicitize, shift_between
from .cyclo import CycloNum, field_degree
from .exceptions import (GraphInvariantError, GroupMismatch, InputError, JetBoundExceeded,
                         NoQualifyingFactor)
from .generic import GenericCurvette
from .grring import AcampoForm, GRClass, GRSet, IntSeries
from .resgraph import GENERIC, ResolutionGraph, euler_bookkeeping, stratify

logger = logging.getLogger(__name__)


class ValuationSet:
    """r curve valuations (mode curves) or r divisorial valuations given by curvette pairs.

    The resolution, its graph and its strata are computed on first use.
    """

    def __init__(self, action, mode, sources, allow_repeated=False, generic_samples=2):
        if mode not in MODES:
            raise InputError("unknown mode %r" % mode)
        if not sources:
            raise InputError("a valuation set needs at least one valuation")
        self.action = action
        self.mode = mode
        self.sources = list(sources)
        self.allow_repeated = allow_repeated
        self.generic_samples = generic_samples

    @property
    def r(self):
        return len(self.sources)

    @property
    def group(self):
        return self.action.group

    @cached_property
    def resolution(self):
        return resolve(self.action, self.sources, self.mode, self.allow_repeated)

    @cached_property
    def graph(self):
        return ResolutionGraph(self.resolution)

    @cached_property
    def strata(self):
        found = stratify(self.graph, self.generic_samples)
        if not euler_bookkeeping(self.graph, found):
            raise GraphInvariantError("Euler characteristic bookkeeping failed")
        return found

    def __repr__(self):
        return "ValuationSet(r=%s, mode=%s, %r)" % (self.r, self.mode, self.action)


def stratum_class(stratum):
    """T_Xi: the transitive (G, r)-set of the stratum's orbit."""
    orbit = GRSet.from_orbit(stratum.stabilizer, stratum.w, stratum.alpha)
    classes = orbit.canonicalize()
    assert len(classes) == 1
    return classes[0]


def equivariant_poincare(valuations, bound):
    """P^G as the product of (1 - T_Xi)^(-chi(Xi)) and its truncated expansion."""
    factors = [(stratum_class(s), -s.chi) for s in valuations.strata if s.chi]
    form = AcampoForm.build(valuations.group, valuations.r, factors)
    logger.info("equivariant series with %s factors from %s strata",
                len(form.factors), len(valuations.strata))
    return form, form.expand(bound)


def _generic_strata(valuations):
    return {s.component: s for s in valuations.strata if s.kind == GENERIC}


def plain_poincare(valuations, bound):
    """prod over all component copies of (1 - t^w)^(-chi(E°)), forgetting the group."""
    graph = valuations.graph
    res = graph.res
    generic = _generic_strata(valuations)
    removed = {copy: 0 for copy in graph.copies}
    for a, b, count in graph.adjacency():
        removed[a] += count
        removed[b] += count
    if valuations.mode == CURVES:
        points = {(a.copy, a.position, a.stabilizer.coset_rep(a.shift)) for a in res.arrows}
        for copy, _, _ in points:
            removed[copy] += 1
    result = IntSeries.one(valuations.r, bound)
    for copy in graph.copies:
        chi = 2 - removed[copy]
        if not chi:
            continue
        stratum = generic[copy.component]
        w = stratum.w[stratum.stabilizer.coset_rep(copy.shift)]
        result = result * IntSeries.geometric(w, -chi, bound)
    return result


@dataclass
class ShiftedValuations:
    valuations: ValuationSet
    labels: list


def extend_to_shifts(valuations):
    """The collection indexed by {1..r} x G with v_(i,g)(f) = v_i(f o g), i.e. the curves g.C_i."""
    group = valuations.group
    labels = [(i, g) for i in range(valuations.r) for g in group.elements]
    sources = []
    for i, g in labels:
        source = valuations.sources[i]
        if valuations.mode == CURVES:
            sources.append(act_on_branch(g, source, valuations.action).renamed("%s@%s" % (
                source.name, list(g))))
        else:
            sources.append(tuple(act_on_branch(g, member, valuations.action) for member in source))
    shifted = ValuationSet(valuations.action, valuations.mode, sources, allow_repeated=True,
                           generic_samples=valuations.generic_samples)
    return ShiftedValuations(shifted, labels)


def shift_form(form, labels):
    """Transform P^G of a collection to P^G of its shift extension: w'_(i,g)(k) = w_i(k - g)."""
    group = form.group
    factors = []
    for gr_class, exponent in form.factors:
        stabilizer = gr_class.stabilizer
        values = {c: tuple(gr_class.w_at(group.sub(c, g))[i] for i, g in labels)
                  for c in stabilizer.coset_reps}
        factors.append((GRClass.canonical(stabilizer, values, gr_class.alpha), exponent))
    return AcampoForm.build(group, len(labels), factors)


class _JetRanks:
    """l(v) = dim O / {f : v_i(f) >= v_i} for curve valuations, by linear algebra on jets."""

    def __init__(self, branches, degree_cap):
        self.branches = branches
        self.degree_cap = degree_cap
        self.modulus = branches[0].modulus
        self.width = field_degree(self.modulus)
        self.multiplicities = [b.multiplicity for b in branches]
        self.cache = {}

    def jet_degree(self, v):
        """Least k with every monomial of degree k + 1 in the ideal."""
        k = max([-(-vi // m) - 1 for vi, m in zip(v, self.multiplicities)] + [0])
        if k + 1 > self.degree_cap:
            raise JetBoundExceeded("jet degree %s needed for v=%s exceeds the cap %s"
                                   % (k + 1, list(v), self.degree_cap))
        return k

    def _rank(self, v, degree):
        zetas = [CycloNum.zeta_power(self.modulus, e) for e in range(self.width)]
        rows = []
        for total in range(degree + 1):
            for a in range(total + 1):
                images = []
                for branch, vi in zip(self.branches, v):
                    value = (branch.x_param ** a * branch.y_param ** (total - a)).truncate(vi)
                    images.append([value.coeff(j) for j in range(vi)])
                for zeta in zetas:
                    row = []
                    for image in images:
                        for coeff in image:
                            row.extend((coeff * zeta).coeffs)
                    rows.append(row)
        columns = self.width * sum(v)
        if not columns:
            return 0
        matrix = DomainMatrix([[QQ(c) for c in row] for row in rows], (len(rows), columns), QQ)
        rank = matrix.rank()
        assert rank % self.width == 0
        return rank // self.width

    def __call__(self, v):
        v = tuple(max(vi, 0) for vi in v)
        if v not in self.cache:
            k = self.jet_degree(v)
            rank = self._rank(v, k)
            if self._rank(v, k + 1) != rank:
                raise JetBoundExceeded("jet ranks did not stabilize at degree %s for v=%s"
                                       % (k, list(v)))
            logger.debug("l(%s) = %s from %s-jets", list(v), rank, k)
            self.cache[v] = rank
        return self.cache[v]


def jets_oracle(valuations, bound, degree_cap=40):
    """Plain series of curve valuations from the codimensions of their ideals.

    With c(v) = l(v + 1) - l(v) and L(t) = sum c(v) t^v over Z^r,
    P(t) = L(t) prod (t_i - 1) / (t_1 ... t_r - 1).
    """
    if valuations.mode != CURVES:
        raise InputError("the jets oracle handles curve valuations only")
    ranks = _JetRanks(valuations.sources, degree_cap)
    r = valuations.r
    ones = (1,) * r

    def jump(u):
        return ranks(tuple(a + b for a, b in zip(u, ones))) - ranks(u)

    terms = {}
    for v in itertools.product(range(bound + 1), repeat=r):
        if sum(v) > bound:
            continue
        total = 0
        for eps in itertools.product((0, 1), repeat=r):
            total += (-1) ** sum(eps) * jump(tuple(a - b for a, b in zip(v, eps)))
        if total:
            terms[v] = total
    numerator = IntSeries.from_terms(r, bound, terms)
    diagonal = IntSeries.monomial(ones, bound)
    return numerator * diagonal.one_minus_power(-1) * ((-1) ** (r + 1))


def compare_series(first, second):
    """(equal, witness) for two A'Campo forms or two GRSeries."""
    if first.group != second.group:
        raise GroupMismatch("series over different groups")
    if first.r != second.r:
        raise InputError("series in %s and %s variables" % (first.r, second.r))
    if isinstance(first, AcampoForm):
        one, two = dict(first.factors), dict(second.factors)
    else:
        if first.bound != second.bound:
            raise InputError("series truncated at different bounds")
        one, two = first.coeffs, second.coeffs
    differing = sorted((c for c in set(one) | set(two) if one.get(c, 0) != two.get(c, 0)),
                       key=GRClass.sort_key)
    if not differing:
        return True, None
    witness = differing[0]
    return False, (witness, one.get(witness, 0), two.get(witness, 0))


@dataclass
class InferredAction:
    """The action read off P^G.

    `candidates` lists every (chi_x, chi_y) reproducing the one-point factors,
    in canonical order; chi_x and chi_y are the first of them.
    """
    chi_x: object
    chi_y: object
    scalar: bool = False
    tails: dict = field(default_factory=dict)
    candidates: list = field(default_factory=list)

    def recovered(self):
        """True when the one-point factors determine the action."""
        return len(self.candidates) == 1


def _lowest_monomials(curvette):
    if isinstance(curvette, GenericCurvette):
        support = curvette.support()
    else:
        support = implicitize(curvette).equation.support()
    low = min(i + j for i, j in support)
    return tuple((i, j) for i, j in support if i + j == low)


def one_point_strata(graph):
    """(w, chi, lowest curvette monomials, smooth curvette) per one-point stratum with chi != 0."""
    identity = graph.group.identity
    return sorted((tuple(s.w[identity]), s.chi, _lowest_monomials(s.curvettes[0]),
                   graph.has_smooth_curvette(s.component))
                  for s in stratify(graph) if s.chi and s.stabilizer.is_whole())


def _one_point_factors(form):
    return {(gr_class.w[0], gr_class.alpha.canonical_residues()): exponent
            for gr_class, exponent in form.factors if gr_class.orbit_size == 1}


def _predicted_factors(strata, chi_x, chi_y):
    """One-point factors of P^G if the action were (chi_x, chi_y); None if a curvette breaks."""
    predicted = {}
    for w, chi, monomials, _ in strata:
        characters = {i * chi_x + j * chi_y for i, j in monomials}
        if len(characters) != 1:
            return None
        key = (w, characters.pop().canonical_residues())
        predicted[key] = predicted.get(key, 0) - chi
    return {key: exponent for key, exponent in predicted.items() if exponent}


def infer_representation(form, graph, group=None):
    """Read the characters of the action off the one-point factors of P^G.

    A one-point stratum contributes (1 - T^w [alpha])^(-chi), where alpha is
    the character of the lowest-degree monomials of its curvette equation.
    Every faithful diagonal action whose predicted one-point factors equal
    those of `form` is a candidate; the graph only supplies w, chi and the
    curvette supports, the characters come from the series.
    """
    group = group if group is not None else graph.group
    if form.group != group or graph.group != group:
        raise GroupMismatch("series and graph belong to different groups")
    strata = one_point_strata(graph)
    if not any(smooth for *_, smooth in strata):
        raise NoQualifyingFactor("no one-point stratum on a component with a smooth curvette")
    observed = _one_point_factors(form)
    scalar = not graph.res.component(1).has_special_points()
    candidates = []
    for chi_x, chi_y in itertools.product(group.characters(), repeat=2):
        if scalar != (chi_x == chi_y):
            continue
        if not chi_x.kernel().intersect(chi_y.kernel()).is_trivial():
            continue
        if _predicted_factors(strata, chi_x, chi_y) == observed:
            candidates.append((chi_x, chi_y))
    if not candidates:
        raise NoQualifyingFactor("no faithful diagonal action reproduces the one-point factors")
    candidates.sort(key=lambda pair: (pair[0].sort_key(), pair[1].sort_key()))
    chi_x, chi_y = candidates[0]
    if len(candidates) > 1:
        logger.warning("%s actions reproduce the one-point factors", len(candidates))
    tails = {"scalar": chi_x} if scalar else {ZERO: chi_y, INFINITY: chi_x}
    return InferredAction(chi_x, chi_y, scalar=scalar, tails=tails, candidates=candidates)


@dataclass
class BranchReport:
    name: str
    multiplicity: int
    isotropy_order: int
    orbit_size: int


@dataclass
class HypothesisReport:
    passed: bool
    reasons: list
    branches: list


def check_determination_hypotheses(branches, action):
    """No two branches in one G-orbit and no smooth branch fixed by a non-scalar element."""
    reasons = []
    rows = []
    for branch in branches:
        implicitize(branch)
        isotropy = branch_isotropy(branch, action)
        rows.append(BranchReport(branch.name, branch.multiplicity, isotropy.order,
                                 isotropy.index_in()))
        if branch.is_smooth():
            moving = [g for g in isotropy.sorted_elements() if not action.is_scalar(g)]
            if moving:
                reasons.append("smooth invariant branch under non-scalar element: %s is fixed by %s"
                               % (branch.name, list(moving[0])))
    for first, second in itertools.combinations(branches, 2):
        if shift_between(first, second, action) is not None:
            reasons.append("branches %s and %s lie in one G-orbit" % (first.name, second.name))
    return HypothesisReport(not reasons, reasons, rows)


def semigroup_series(generators, bound):
    """Sum of t^s over the numerical semigroup generated by `generators`, up to `bound`."""
    members = {0}
    for s in range(1, bound + 1):
        if any(s - g in members for g in generators if s - g >= 0):
            members.add(s)
    return IntSeries.from_terms(1, bound, {(s,): 1 for s in members})

