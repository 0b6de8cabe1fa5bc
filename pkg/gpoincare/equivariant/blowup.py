"""
G-equivariant embedded resolution by iterated blow-ups.

Only one representative of every G-orbit of infinitely near points is
tracked.  Every tracked point carries local coordinates (u, v) in which the
component it lies on is {u = 0} and its stabilizer acts diagonally through
the characters (gamma_u, gamma_v).  Blowing up such a point gives the
charts

    A: (u, v) = (u1, u1 v1)      origin at position ZERO
    B: (u, v) = (u1 v1, u1)      origin at position INFINITY

and a point (0, c) of chart A with c != 0 is recentred by v1 -> v1 + c.

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
from collections import defaultdict, deque
from dataclasses import dataclass, field
from typing import Optional

from .curves import Branch, branch_isotropy, implicit_equation, implicitize, orbit
from .cyclo import CycloNum, root_of_unity
from .exceptions import BadChartValue, CoincidentBranches, CurvetteGenericityError, InputError
from .generic import GENERIC_VALUE, GenericCurvette, generic_ring
from .polynomials import Poly1, RatFunc

logger = logging.getLogger(__name__)

CURVES = "curves"
DIVISORIAL = "divisorial"
MODES = (CURVES, DIVISORIAL)

ZERO = "zero"
INFINITY = "infinity"

CHART_A = ("A",)
CHART_B = ("B",)


def translation(value):
    return ("T", value)


def position_key(position):
    if position == ZERO:
        return (0,)
    if position == INFINITY:
        return (1,)
    return (2, position.sort_key())


def position_label(position):
    return position if position in (ZERO, INFINITY) else str(position)


@dataclass(frozen=True, order=True)
class ComponentCopy:
    """The copy g.E_sigma, g a canonical representative of G/G_sigma."""
    component: int
    shift: tuple


@dataclass
class StrictTransform:
    label: object
    u: RatFunc
    v: RatFunc

    @property
    def multiplicity(self):
        return min(self.u.order, self.v.order)


@dataclass(eq=False)
class InfNearPoint:
    component: Optional[int]
    position: object
    chart: tuple
    stabilizer: object
    gamma_u: object
    gamma_v: object
    other: Optional[ComponentCopy] = None
    strict: list = field(default_factory=list)
    child: Optional[int] = None

    def is_origin(self):
        return self.component is None

    def is_intersection(self):
        return self.other is not None

    def copies(self):
        """Exceptional component copies through the point."""
        found = []
        if self.component is not None:
            found.append(ComponentCopy(self.component, self.stabilizer.group.identity))
        if self.other is not None:
            found.append(self.other)
        return found


@dataclass(eq=False)
class Component:
    ident: int
    stabilizer: object
    generic_stabilizer: object
    tangent_character: object
    discrepancy: int
    self_intersection: int
    base: InfNearPoint
    parents: tuple
    points: dict = field(default_factory=dict)
    marked: list = field(default_factory=list)

    @property
    def orbit_size(self):
        return self.stabilizer.index_in()

    @property
    def free_index(self):
        """[G_sigma : G*_sigma], the size of a generic G_sigma-orbit on E_sigma."""
        return self.generic_stabilizer.index_in(self.stabilizer)

    def has_special_points(self):
        return self.generic_stabilizer != self.stabilizer

    def sorted_points(self):
        return [self.points[k] for k in sorted(self.points, key=position_key)]

    def point(self, position):
        return self.points[position]


@dataclass
class TrackedCurve:
    """One curve of the orbit-closed configuration and the input shifts equal to it."""
    branch: Branch
    labels: list


@dataclass
class Arrow:
    source: int
    copy: ComponentCopy
    position: object
    shift: tuple
    stabilizer: object
    orbit_size: int


@dataclass
class BlowUpStep:
    point: InfNearPoint
    component: int


class EqResolution:
    """Blow-up history and component data of a G-equivariant resolution."""

    def __init__(self, action, mode, branches):
        self.action = action
        self.mode = mode
        self.branches = list(branches)
        self.curves = []
        self.steps = []
        self.components = []
        self.intersections = {}
        self.arrows = []
        self.marked = {}
        self.origin = None

    @property
    def group(self):
        return self.action.group

    @property
    def modulus(self):
        return self.action.modulus

    def component(self, ident):
        return self.components[ident - 1]

    def copies(self, ident):
        comp = self.component(ident)
        return [ComponentCopy(ident, g) for g in comp.stabilizer.coset_reps]

    def all_copies(self):
        return [copy for comp in self.components for copy in self.copies(comp.ident)]

    def act_on_copy(self, g, copy):
        comp = self.component(copy.component)
        return ComponentCopy(copy.component, comp.stabilizer.coset_rep(self.group.add(g, copy.shift)))

    def ancestors(self, ident):
        """Components every modification containing E_ident must contain."""
        found = set()
        stack = [c.component for c in self.component(ident).parents]
        while stack:
            other = stack.pop()
            if other not in found:
                found.add(other)
                stack.extend(c.component for c in self.component(other).parents)
        return found

    def position_orbit(self, ident, value):
        """The G_sigma-orbit of the chart value c != 0 on E_ident."""
        comp = self.component(ident)
        e = self.group.exponent
        return {value * root_of_unity(self.modulus, e, comp.tangent_character.value(h))
                for h in comp.stabilizer.elements}

    def position_rep(self, ident, value):
        if value in (ZERO, INFINITY):
            return value
        return min(self.position_orbit(ident, value), key=position_key)

    def position_orbit_size(self, ident, position):
        if position in (ZERO, INFINITY):
            return 1
        return self.component(ident).free_index

    def chart_at(self, ident, position):
        base = self.component(ident).base
        if position == ZERO:
            return base.chart + (CHART_A,)
        if position == INFINITY:
            return base.chart + (CHART_B,)
        return base.chart + (CHART_A, translation(position))

    def is_removed(self, point):
        """Intersection with another component or with a tracked strict transform."""
        return point.is_intersection() or point.child is not None or bool(point.strict)

    def removed_positions(self, ident):
        return [p.position for p in self.component(ident).sorted_points() if self.is_removed(p)]

    def special_positions(self, ident):
        comp = self.component(ident)
        return [ZERO, INFINITY] if comp.has_special_points() else []

    def arrows_on(self, ident):
        return [a for a in self.arrows if a.copy.component == ident]

    def __repr__(self):
        return "EqResolution(%s components, mode=%s)" % (len(self.components), self.mode)


class _Resolver:
    """Single-use state machine producing one EqResolution."""

    def __init__(self, action, branches, mode, allow_repeated):
        if mode not in MODES:
            raise InputError("unknown mode %r" % mode)
        self.res = EqResolution(action, mode, branches)
        self.action = action
        self.group = action.group
        self.allow_repeated = allow_repeated

    def run(self):
        origin = InfNearPoint(component=None, position=None, chart=(),
                              stabilizer=self.group.whole(),
                              gamma_u=self.action.chi_x, gamma_v=self.action.chi_y,
                              strict=self._initial_transforms())
        self.res.origin = origin
        queue = deque([origin])
        while queue:
            point = queue.popleft()
            if point.is_origin() or self._violates(point):
                queue.extend(self._blow_up(point))
        if self.res.mode == CURVES:
            self._certify_normal_crossings()
            self._collect_arrows()
        else:
            missing = [i for i in range(len(self.res.branches)) if i not in self.res.marked]
            assert not missing, "curvette pairs %s never separated" % missing
        logger.info("resolved %s branches in mode %s with %s component orbits",
                    len(self.res.branches), self.res.mode, len(self.res.components))
        return self.res

    def _initial_transforms(self):
        modulus = self.action.modulus
        transforms = []
        if self.res.mode == CURVES:
            seen = {}
            for i, branch in enumerate(self.res.branches):
                implicitize(branch)
                for j in range(i):
                    if implicit_equation(branch.x_param, branch.y_param) == implicit_equation(
                            self.res.branches[j].x_param, self.res.branches[j].y_param):
                        if not self.allow_repeated:
                            raise CoincidentBranches("branches %s and %s define the same curve"
                                                     % (self.res.branches[j].name, branch.name))
                for g, shifted in orbit(branch, self.action):
                    key = implicit_equation(shifted.x_param, shifted.y_param)
                    if key not in seen:
                        seen[key] = len(self.res.curves)
                        self.res.curves.append(TrackedCurve(shifted, []))
                    self.res.curves[seen[key]].labels.append((i, g))
            for index, curve in enumerate(self.res.curves):
                transforms.append(StrictTransform(index, RatFunc(curve.branch.x_param),
                                                  RatFunc(curve.branch.y_param)))
        else:
            for i, pair in enumerate(self.res.branches):
                first, second = pair
                implicitize(first)
                implicitize(second)
                if implicit_equation(first.x_param, first.y_param) == implicit_equation(
                        second.x_param, second.y_param):
                    raise CurvetteGenericityError("curvette pair %s consists of one curve" % i)
                fixing = branch_isotropy(first, self.action).intersect(
                    branch_isotropy(second, self.action))
                for g in fixing.coset_reps:
                    for member, curvette in enumerate(pair):
                        sx, sy = self.action.scalars(g)
                        transforms.append(StrictTransform(
                            (i, g, member),
                            RatFunc(curvette.x_param.scale(sx)),
                            RatFunc(curvette.y_param.scale(sy))))
        assert all(t.u.modulus == modulus for t in transforms)
        return transforms

    def _violates(self, point):
        if not point.strict:
            return False
        if self.res.mode == DIVISORIAL:
            instances = defaultdict(int)
            for st in point.strict:
                instances[st.label[:2]] += 1
            return any(count > 1 for count in instances.values())
        if point.is_intersection() or len(point.strict) > 1:
            return True
        return point.strict[0].u.order != 1

    def _blow_up(self, point):
        res = self.res
        stabilizer = point.stabilizer
        delta = point.gamma_v - point.gamma_u
        generic = delta.kernel()
        ident = len(res.components) + 1
        parents = tuple(point.copies())
        discrepancy = 1 + sum(res.component(c.component).discrepancy for c in parents)
        for copy in parents:
            other = res.component(copy.component)
            other.self_intersection -= stabilizer.index_in(other.stabilizer)
        if point.is_intersection():
            del res.intersections[(parents[0], point.other)]
        component = Component(ident=ident, stabilizer=stabilizer, generic_stabilizer=generic,
                              tangent_character=delta, discrepancy=discrepancy,
                              self_intersection=-1, base=point, parents=parents)
        res.components.append(component)
        res.steps.append(BlowUpStep(point, ident))
        point.child = ident
        here = ComponentCopy(ident, self.group.identity)
        for copy in parents:
            res.intersections[(here, copy)] = stabilizer
        logger.debug("blew up %s on E%s: E%s with |G_sigma|=%s, |G*|=%s, nu=%s",
                     position_label(point.position) if point.position is not None else "origin",
                     point.component, ident, stabilizer.order, generic.order, discrepancy)

        routed = defaultdict(list)
        for st in point.strict:
            if st.u.order < st.v.order:
                routed[ZERO].append(StrictTransform(st.label, st.u, st.v / st.u))
            elif st.u.order > st.v.order:
                routed[INFINITY].append(StrictTransform(st.label, st.v, st.u / st.v))
            else:
                value = st.v.leading_coeff() / st.u.leading_coeff()
                routed[value].append(StrictTransform(st.label, st.u, st.v / st.u - value))
        # the transforms now live on E_new
        point.strict = []
        if res.mode == DIVISORIAL:
            self._separate_pairs(point, component, routed)

        zero = InfNearPoint(component=ident, position=ZERO, chart=point.chart + (CHART_A,),
                            stabilizer=stabilizer, gamma_u=point.gamma_u,
                            gamma_v=point.gamma_v - point.gamma_u,
                            other=point.other, strict=routed.pop(ZERO, []))
        infinity = InfNearPoint(component=ident, position=INFINITY, chart=point.chart + (CHART_B,),
                                stabilizer=stabilizer, gamma_u=point.gamma_v,
                                gamma_v=point.gamma_u - point.gamma_v,
                                other=parents[0] if point.component is not None else None,
                                strict=routed.pop(INFINITY, []))
        component.points[ZERO] = zero
        component.points[INFINITY] = infinity
        new_points = [zero, infinity]
        reps = sorted({res.position_rep(ident, value) for value in routed}, key=position_key)
        for value in reps:
            # transforms through p form a G_p-closed set, so every occupied orbit occupies its rep
            assert routed[value], "orbit of %s occupied away from its representative" % value
            assert (point.gamma_v - point.gamma_u).restrict(generic).is_trivial()
            fresh = InfNearPoint(component=ident, position=value,
                                 chart=point.chart + (CHART_A, translation(value)),
                                 stabilizer=generic, gamma_u=point.gamma_u.restrict(generic),
                                 gamma_v=(point.gamma_v - point.gamma_u).restrict(generic),
                                 strict=routed[value])
            component.points[value] = fresh
            new_points.append(fresh)
        return new_points

    def _separate_pairs(self, point, component, routed):
        """Mark E_new for every curvette pair it separates and stop tracking that pair."""
        where = {}
        for position, transforms in routed.items():
            for st in transforms:
                where[st.label] = (position, st)
        instances = sorted({label[:2] for label in where}, key=lambda k: (k[0], k[1]))
        for i, g in instances:
            first, second = where.get((i, g, 0)), where.get((i, g, 1))
            if first is None or second is None or first[0] == second[0]:
                continue
            for position, st in (first, second):
                on_other = (position == ZERO and point.is_intersection()) or \
                           (position == INFINITY and not point.is_origin())
                if on_other or st.u.order != 1:
                    raise CurvetteGenericityError(
                        "curvettes of pair %s do not meet E%s transversally at smooth points"
                        % (i, component.ident))
                routed[position].remove(st)
            copy = ComponentCopy(component.ident,
                                 component.stabilizer.coset_rep(self.group.neg(g)))
            previous = self.res.marked.setdefault(i, copy)
            assert previous == copy
            if i not in component.marked and copy.shift == self.group.identity:
                component.marked.append(i)
            logger.debug("pair %s separated on %s", i, copy)
        for position in [p for p, transforms in routed.items() if not transforms]:
            del routed[position]

    def _certify_normal_crossings(self):
        for comp in self.res.components:
            for point in comp.points.values():
                if point.strict:
                    assert len(point.strict) == 1 and not point.is_intersection()
                    assert point.strict[0].u.order == 1

    def _collect_arrows(self):
        res = self.res
        seen = set()
        for comp in res.components:
            for point in comp.sorted_points():
                for st in point.strict:
                    for i, g in res.curves[st.label].labels:
                        if i in seen:
                            continue
                        seen.add(i)
                        back = self.group.neg(g)
                        isotropy = branch_isotropy(res.branches[i], self.action)
                        res.arrows.append(Arrow(
                            source=i,
                            copy=ComponentCopy(comp.ident, comp.stabilizer.coset_rep(back)),
                            position=point.position, shift=back,
                            stabilizer=point.stabilizer, orbit_size=isotropy.index_in()))
        res.arrows.sort(key=lambda a: a.source)
        assert len(res.arrows) == len(res.branches)


def resolve(action, branches, mode=CURVES, allow_repeated=False):
    """G-equivariant resolution of the orbit-closed configuration.

    In mode "curves" `branches` is a list of Branch; in mode "divisorial"
    it is a list of curvette pairs, and the first component separating the
    two curvettes of pair i is recorded in `marked[i]`.
    """
    return _Resolver(action, branches, mode, allow_repeated).run()


def apply_chart(chart, u_param, v_param):
    """Push a local parametrization at the end of `chart` down to (x, y)."""
    for step in reversed(chart):
        if step[0] == "A":
            u_param, v_param = u_param, u_param * v_param
        elif step[0] == "B":
            u_param, v_param = u_param * v_param, u_param
        else:
            v_param = v_param + step[1]
    return u_param, v_param


def generic_values(res, ident, count):
    """The first `count` small positive integers whose orbit avoids every removed or special point."""
    excluded = {res.position_rep(ident, p) for p in res.removed_positions(ident)
                if p not in (ZERO, INFINITY)}
    values = []
    for n in itertools.count(1):
        value = CycloNum.rational(res.modulus, n)
        if res.position_rep(ident, value) not in excluded:
            values.append(value)
        if len(values) == count:
            return values


def pushdown_curvette(res, ident, position, name=None):
    """The curvette through `position` on E_ident, transversal to it, as a Branch.

    With position GENERIC_VALUE the chart value stays an indeterminate and
    a GenericCurvette is returned.

    @pre: the point lies in the smooth part of the divisor and carries no
    strict transform
    """
    comp = res.component(ident)
    if position == GENERIC_VALUE:
        space = generic_ring(res.modulus)
        chart = [step if step[0] != "T" else ("T", space.chart_value(step[1]))
                 for step in res.chart_at(ident, GENERIC_VALUE)]
        x_param, y_param = apply_chart(chart, space.t, space.ring.zero)
        return GenericCurvette(res.modulus, x_param, y_param, name or "L%s" % ident)
    if position in (ZERO, INFINITY):
        point = comp.points[position]
        if res.is_removed(point):
            raise BadChartValue("position %s on E%s is not a smooth free point" % (position, ident))
    else:
        if not isinstance(position, CycloNum) or position.is_zero():
            raise BadChartValue("chart value %r is not a nonzero field element" % (position,))
        rep = res.position_rep(ident, position)
        if rep in comp.points and res.is_removed(comp.points[rep]):
            raise BadChartValue("chart value %s on E%s hits a removed point" % (position, ident))
    modulus = res.modulus
    x_param, y_param = apply_chart(res.chart_at(ident, position),
                                   Poly1.t(modulus), Poly1.zero(modulus))
    return Branch(x_param, y_param, name or "L%s" % ident)
