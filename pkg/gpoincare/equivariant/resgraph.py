"""
Decorated dual graphs of equivariant resolutions: intersection matrix,
stratification of the quotient of the exceptional divisor, the (w, alpha)
data of every stratum and the comparison of G-topologies.

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
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional

import networkx as nx
from networkx.algorithms import isomorphism
from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix

from .blowup import CURVES, DIVISORIAL, INFINITY, ZERO, ComponentCopy, generic_values, \
    position_key, position_label, pushdown_curvette
from .curves import act_on_equation, implicitize, semi_invariant_character
from .exceptions import AlphaMismatch, GraphInvariantError, GroupMismatch
from .generic import GENERIC_VALUE, GenericCurvette

logger = logging.getLogger(__name__)

POINT = "point"
GENERIC = "generic"


@dataclass
class Stratum:
    kind: str
    component: int
    chi: int
    stabilizer: object
    w: dict
    alpha: object
    position: object = None
    curvettes: list = field(default_factory=list)

    def w_list(self):
        """w over the canonical coset representatives of G/G_x, in order."""
        return [self.w[g] for g in self.stabilizer.coset_reps]

    @property
    def orbit_size(self):
        return self.stabilizer.index_in()


class ResolutionGraph:
    """Quotient and expanded dual graph of an EqResolution."""

    def __init__(self, resolution):
        self.res = resolution
        self.copies = resolution.all_copies()
        self.index = {copy: k for k, copy in enumerate(self.copies)}
        self.matrix = self._build_matrix()
        self.determinant, self.neg_inverse = intersection_matrix(self)

    @property
    def action(self):
        return self.res.action

    @property
    def group(self):
        return self.res.group

    @property
    def mode(self):
        return self.res.mode

    @property
    def components(self):
        return self.res.components

    def _build_matrix(self):
        n = len(self.copies)
        rows = [[0] * n for _ in range(n)]
        for copy in self.copies:
            k = self.index[copy]
            rows[k][k] = self.res.component(copy.component).self_intersection
        for (first, second), stabilizer in sorted(self.res.intersections.items()):
            for g in stabilizer.coset_reps:
                a = self.index[self.res.act_on_copy(g, first)]
                b = self.index[self.res.act_on_copy(g, second)]
                rows[a][b] += 1
                rows[b][a] += 1
        return rows

    def rep_copy(self, ident):
        return ComponentCopy(ident, self.group.identity)

    def entry(self, first, second):
        """(-M^-1) between two component copies."""
        return self.neg_inverse[self.index[first]][self.index[second]]

    def self_entry(self, ident):
        copy = self.rep_copy(ident)
        return self.entry(copy, copy)

    def adjacency(self):
        """Pairs of copies joined by an edge, with the number of intersection points."""
        edges = []
        for a, row in enumerate(self.matrix):
            for b in range(a + 1, len(row)):
                if row[b]:
                    edges.append((self.copies[a], self.copies[b], row[b]))
        return edges

    def is_greater(self, later, earlier):
        """later > earlier in the partial order of the blow-up history."""
        return earlier in self.res.ancestors(later)

    def tail_position(self, ident):
        """Position on E_1 of the tail containing E_ident; None for E_1 itself."""
        comp = self.res.component(ident)
        while comp.base.component is not None and comp.base.component != 1:
            comp = self.res.component(comp.base.component)
        if comp.ident == 1:
            return None
        return comp.base.position

    def has_smooth_curvette(self, ident):
        return self.entry(self.rep_copy(ident), self.rep_copy(1)) == 1

    def __repr__(self):
        return "ResolutionGraph(%s copies of %s components)" % (len(self.copies), len(self.components))


def intersection_matrix(graph):
    """det M and -M^-1 as integer lists, checking definiteness and unimodularity."""
    n = len(graph.copies)
    matrix = DomainMatrix([[ZZ(v) for v in row] for row in graph.matrix], (n, n), ZZ)
    negated = -matrix
    for k in range(1, n + 1):
        if negated.extract(list(range(k)), list(range(k))).det() <= 0:
            raise GraphInvariantError("intersection matrix is not negative definite")
    det = int(matrix.det())
    if det not in (1, -1):
        raise GraphInvariantError("intersection matrix has determinant %s" % det)
    inverse = (-matrix.to_field().inv()).to_list()
    neg_inverse = []
    for row in inverse:
        values = []
        for value in row:
            if value.denominator != 1 or value <= 0:
                raise GraphInvariantError("-M^-1 has the entry %s" % value)
            values.append(int(value.numerator))
        neg_inverse.append(values)
    return det, neg_inverse


def _point_characters(graph, ident, position):
    """Tracked (gamma_u, gamma_v) and stabilizer at a special point or a generic point."""
    comp = graph.res.component(ident)
    if position in (ZERO, INFINITY):
        point = comp.points[position]
        return point.stabilizer, point.gamma_u, point.gamma_v
    generic = comp.generic_stabilizer
    return generic, comp.base.gamma_u.restrict(generic), comp.tangent_character.restrict(generic)


def w_vector(graph, ident, position, curvette, sources):
    """w on the orbit of the point: {coset rep g of G/G_x: w(g.x)}.

    In mode curves w_i(g.x) = I(C_i, g.L) = ord_t (f_i o g)(L(t)); in mode
    divisorial w_i(g.x) = (-M^-1)(g.E_sigma, E_i).
    """
    stabilizer = _point_characters(graph, ident, position)[0]
    action = graph.action
    values = {}
    for g in stabilizer.coset_reps:
        if graph.mode == CURVES:
            row = []
            for branch in sources:
                equation = act_on_equation(g, implicitize(branch).equation, action)
                order = curvette.order_along(equation)
                if order == float("inf"):
                    raise GraphInvariantError("curvette at E%s is a component of the curve" % ident)
                row.append(order)
        else:
            copy = graph.res.act_on_copy(g, graph.rep_copy(ident))
            row = [graph.entry(copy, graph.res.marked[i]) for i in range(len(sources))]
        values[g] = tuple(row)
    return values


def check_divisorial_w(graph, curvette, w, sources):
    """w read from -M^-1 equals min(I(g.L, L_i1), I(g.L, L_i2)).

    I(g.L, M) is the order of f_M o g along L.
    """
    action = graph.action
    for g, row in w.items():
        for i, pair in enumerate(sources):
            direct = min(curvette.order_along(act_on_equation(g, implicitize(member).equation,
                                                              action))
                         for member in pair)
            if direct != row[i]:
                raise GraphInvariantError("w_%s at %s: -M^-1 gives %s, curvettes give %s"
                                          % (i, g, row[i], direct))


def alpha_direct(graph, stratum_point, curvette):
    """Semi-invariance character of the curvette equation under G_x."""
    stabilizer = _point_characters(graph, *stratum_point)[0]
    if isinstance(curvette, GenericCurvette):
        return curvette.character(stabilizer, graph.action)
    return semi_invariant_character(implicitize(curvette), stabilizer, graph.action)


def alpha_from_graph(graph, stratum_point):
    """alpha = m gamma_u + gamma_v with gamma_v solved from the 2-form relation.

    The pull-back of dx^dy is phi u^nu du^dv near the point, so
    chi_x + chi_y = (nu + 1) gamma_u + gamma_v on G_x.
    """
    ident, position = stratum_point
    stabilizer, gamma_u, tracked_v = _point_characters(graph, ident, position)
    comp = graph.res.component(ident)
    form = (graph.action.chi_x + graph.action.chi_y).restrict(stabilizer)
    gamma_v = form - (comp.discrepancy + 1) * gamma_u
    if gamma_v != tracked_v:
        raise GraphInvariantError("tangent character at E%s %s: tracked %s, solved %s"
                                  % (ident, position_label(position) if position else "generic",
                                     tracked_v, gamma_v))
    return graph.self_entry(ident) * gamma_u + gamma_v


def _cross_checked_alpha(graph, ident, position, curvette):
    direct = alpha_direct(graph, (ident, position), curvette)
    derived = alpha_from_graph(graph, (ident, position))
    if direct != derived:
        raise AlphaMismatch("alpha at E%s %s: direct %s, from graph %s"
                            % (ident, position_label(position) if position else "generic",
                               direct, derived))
    logger.debug("alpha at E%s %s = %s", ident, position, direct)
    return direct


def _sources(graph):
    return graph.res.branches


def removed_count(graph, ident):
    res = graph.res
    return sum(res.position_orbit_size(ident, p) for p in res.removed_positions(ident))


def stratify(graph, generic_samples=2):
    """Strata of the smooth part of the quotient divisor with their (chi, w, alpha)."""
    res = graph.res
    strata = []
    for comp in res.components:
        ident = comp.ident
        removed = res.removed_positions(ident)
        special = res.special_positions(ident)
        excluded = list(removed) + [p for p in special if p not in removed]
        count = sum(res.position_orbit_size(ident, p) for p in excluded)
        chi, rest = divmod(2 - count, comp.free_index)
        if rest:
            raise GraphInvariantError("E%s: %s points outside the free part is not divisible by %s"
                                      % (ident, 2 - count, comp.free_index))
        strata.append(_generic_stratum(graph, comp, chi, generic_samples))
        for position in special:
            if position not in removed:
                strata.append(_point_stratum(graph, comp, position))
    logger.info("%s strata on %s component orbits", len(strata), len(res.components))
    return strata


def _evaluate(graph, ident, position, curvette):
    w = w_vector(graph, ident, position, curvette, _sources(graph))
    if graph.mode == DIVISORIAL:
        check_divisorial_w(graph, curvette, w, _sources(graph))
    alpha = _cross_checked_alpha(graph, ident, position, curvette)
    return w, alpha


def _generic_stratum(graph, comp, chi, samples):
    """Evaluate at the indeterminate chart value; sample values must agree."""
    curvette = pushdown_curvette(graph.res, comp.ident, GENERIC_VALUE)
    w, alpha = _evaluate(graph, comp.ident, None, curvette)
    curvettes = [curvette]
    for value in generic_values(graph.res, comp.ident, samples):
        sample = pushdown_curvette(graph.res, comp.ident, value)
        if _evaluate(graph, comp.ident, None, sample) != (w, alpha):
            raise GraphInvariantError("E%s: chart value %s gives w/alpha other than the generic "
                                      "curvette" % (comp.ident, value))
        curvettes.append(sample)
    return Stratum(kind=GENERIC, component=comp.ident, chi=chi,
                   stabilizer=comp.generic_stabilizer, w=w, alpha=alpha, curvettes=curvettes)


def _point_stratum(graph, comp, position):
    curvette = pushdown_curvette(graph.res, comp.ident, position)
    w, alpha = _evaluate(graph, comp.ident, position, curvette)
    return Stratum(kind=POINT, component=comp.ident, chi=1, stabilizer=comp.stabilizer,
                   w=w, alpha=alpha, position=position, curvettes=[curvette])


def euler_bookkeeping(graph, strata):
    """Strata plus removed points reconstruct chi = 2 on every component copy."""
    total = sum(s.chi * s.orbit_size for s in strata)
    total += sum(removed_count(graph, c.ident) * c.orbit_size for c in graph.components)
    return total == 2 * len(graph.copies)


# -- comparison of G-topologies ------------------------------------------------


def _character_key(character):
    return character.sort_key()


def _host_node(graph, ident, position):
    comp = graph.res.component(ident)
    if position in (ZERO, INFINITY) and comp.has_special_points():
        return ("P", ident, position)
    return ("E", ident)


def decorated_graph(graph):
    """Quotient graph with the data that determines the G-topology.

    Special points are separate nodes, so the correspondence between the
    tails at E_1 and the special points of E_1 is part of the structure.
    """
    res = graph.res
    dg = nx.DiGraph()
    for comp in res.components:
        dg.add_node(("E", comp.ident), label=(
            "component", comp.stabilizer.key(), comp.generic_stabilizer.key(),
            comp.self_intersection, tuple(sorted(comp.marked))))
        if comp.has_special_points():
            for position in (ZERO, INFINITY):
                point = comp.points[position]
                dg.add_node(("P", comp.ident, position), label=(
                    "special", _character_key(point.gamma_u), _character_key(point.gamma_v)))
                dg.add_edge(("E", comp.ident), ("P", comp.ident, position), kind="on")
    for comp in res.components:
        base = comp.base
        if base.component is not None:
            dg.add_edge(_host_node(graph, base.component, base.position), ("E", comp.ident),
                        kind="blown-up")
        if base.other is not None:
            dg.add_edge(("E", base.other.component), ("E", comp.ident), kind="blown-up-corner")
    for (first, second), stabilizer in res.intersections.items():
        dg.add_edge(("E", first.component), ("E", second.component),
                    kind=("meets", stabilizer.key()))
    for arrow in res.arrows:
        dg.add_node(("A", arrow.source), label=("arrow", arrow.source, arrow.stabilizer.key(),
                                                arrow.orbit_size))
        dg.add_edge(_host_node(graph, arrow.copy.component, arrow.position),
                    ("A", arrow.source), kind="arrow")
    return dg


@dataclass
class TopologyVerdict:
    equivalent: bool
    witness: Optional[dict] = None
    obstruction: Optional[str] = None


def _tail_summary(graph):
    """For every point of E_1 a tail hangs from: the arrows and marks of that tail."""
    res = graph.res
    summary = {}
    for comp in res.components:
        marks = [("mark", i) for i in comp.marked]
        arrows = [("arrow", a.source) for a in res.arrows_on(comp.ident)]
        if comp.ident == 1:
            for arrow in res.arrows_on(1):
                key = _tail_key(graph, arrow.position)
                summary.setdefault(key, set()).add(("arrow", arrow.source))
            summary.setdefault(("E1",), set()).update(marks)
            continue
        key = _tail_key(graph, graph.tail_position(comp.ident))
        summary.setdefault(key, set()).update(marks + arrows)
    return {k: sorted(v) for k, v in summary.items()}


def _tail_key(graph, position):
    first = graph.res.component(1)
    if position in (ZERO, INFINITY) and first.has_special_points():
        point = first.points[position]
        return ("special", _character_key(point.gamma_u), _character_key(point.gamma_v))
    return ("ordinary",)


def _obstruction(first, second, dg1, dg2):
    tails1, tails2 = _tail_summary(first), _tail_summary(second)
    for key in sorted(set(tails1) | set(tails2), key=repr):
        if tails1.get(key, []) != tails2.get(key, []):
            if key[0] == "special":
                where = "the special point of E1 with (gamma_u, gamma_v) residues (%s, %s)" % (
                    list(key[1][1]), list(key[2][1]))
            else:
                where = "the %s points of E1" % key[0]
            return "tail correspondence differs at %s: %s vs %s" % (
                where, tails1.get(key, []), tails2.get(key, []))
    labels1 = Counter(d["label"] for _, d in dg1.nodes(data=True))
    labels2 = Counter(d["label"] for _, d in dg2.nodes(data=True))
    if labels1 != labels2:
        diff = sorted((labels1 - labels2) + (labels2 - labels1), key=repr)[0]
        return "decoration %r occurs a different number of times" % (diff,)
    return "no decoration-preserving isomorphism of the quotient graphs"


def compare_topology(first, second):
    """Decide whether two resolution graphs carry the same G-topology."""
    if first.action != second.action:
        raise GroupMismatch("topology comparison needs the same action")
    dg1, dg2 = decorated_graph(first), decorated_graph(second)
    matcher = isomorphism.DiGraphMatcher(
        dg1, dg2,
        node_match=lambda a, b: a["label"] == b["label"],
        edge_match=lambda a, b: a["kind"] == b["kind"])
    if matcher.is_isomorphic():
        witness = {k[1]: v[1] for k, v in matcher.mapping.items() if k[0] == "E"}
        return TopologyVerdict(True, witness=dict(sorted(witness.items())))
    return TopologyVerdict(False, obstruction=_obstruction(first, second, dg1, dg2))


def curve_counts(graph):
    """Per copy: the number of curves (mode curves) or marked shifts (mode divisorial) on it."""
    res = graph.res
    counts = Counter()
    if graph.mode == CURVES:
        for comp in res.components:
            per_copy = sum(p.stabilizer.index_in(comp.stabilizer) * len(p.strict)
                           for p in comp.points.values())
            for copy in res.copies(comp.ident):
                counts[copy] = per_copy
    else:
        for i, copy in sorted(res.marked.items()):
            for g in graph.group.elements:
                counts[res.act_on_copy(g, copy)] += 1
    return counts


def expanded_graph(graph):
    """The non-equivariant dual graph of the reduction, arrows counted per vertex."""
    counts = curve_counts(graph)
    eg = nx.Graph()
    for copy in graph.copies:
        k = graph.index[copy]
        eg.add_node(copy, label=(graph.matrix[k][k], counts[copy]))
    for a, b, weight in graph.adjacency():
        eg.add_edge(a, b, weight=weight)
    return eg


def compare_combinatorial(first, second):
    """Combinatorial equivalence of the reductions, with unlabeled arrows."""
    g1, g2 = expanded_graph(first), expanded_graph(second)
    matcher = isomorphism.GraphMatcher(
        g1, g2,
        node_match=lambda a, b: a["label"] == b["label"],
        edge_match=lambda a, b: a["weight"] == b["weight"])
    if matcher.is_isomorphic():
        witness = {"E%s@%s" % (k.component, list(k.shift)): "E%s@%s" % (v.component, list(v.shift))
                   for k, v in sorted(matcher.mapping.items())}
        return TopologyVerdict(True, witness=witness)
    return TopologyVerdict(False, obstruction="the expanded graphs are not isomorphic "
                                              "with matching self-intersections and arrow counts")


def sorted_positions(positions):
    return sorted(positions, key=position_key)
