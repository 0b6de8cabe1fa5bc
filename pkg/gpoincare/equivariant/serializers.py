"""
JSON payloads and DOT rendering of resolutions, series and reports.

Payloads are plain dicts and lists in canonical order; the commands dump
them with sorted keys so that output is byte-stable.

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
import json

from django.core.serializers.json import DjangoJSONEncoder
from django.template.loader import render_to_string

from .blowup import INFINITY, ZERO, position_label


def dumps(payload):
    return json.dumps(payload, cls=DjangoJSONEncoder, sort_keys=True, indent=2) + "\n"


def subgroup_data(subgroup):
    return {"order": subgroup.order, "generators": [list(g) for g in subgroup.generators()]}


def character_data(character):
    return list(character.canonical_residues())


def copy_label(copy):
    return "E%s@%s" % (copy.component, list(copy.shift))


def action_data(action):
    return {
        "group": list(action.group.orders),
        "chi_x": list(action.chi_x.residues),
        "chi_y": list(action.chi_y.residues),
        "modulus": action.modulus,
    }


def _point_data(res, point):
    return {
        "position": position_label(point.position),
        "stabilizer": subgroup_data(point.stabilizer),
        "gamma_u": character_data(point.gamma_u),
        "gamma_v": character_data(point.gamma_v),
        "removed": res.is_removed(point),
        "child": point.child,
    }


def _tail_label(position):
    if position is None:
        return None
    return position_label(position) if position in (ZERO, INFINITY) else "ordinary"


def component_data(graph, comp):
    res = graph.res
    base = comp.base
    return {
        "id": comp.ident,
        "stabilizer": subgroup_data(comp.stabilizer),
        "generic_stabilizer": subgroup_data(comp.generic_stabilizer),
        "orbit_size": comp.orbit_size,
        "free_index": comp.free_index,
        "discrepancy": comp.discrepancy,
        "self_intersection": comp.self_intersection,
        "base": {"component": base.component,
                 "position": position_label(base.position) if base.position is not None else None},
        "special_points": [_point_data(res, comp.points[p]) for p in res.special_positions(comp.ident)],
        "removed_points": [position_label(p) for p in res.removed_positions(comp.ident)],
        "marked": sorted(comp.marked),
        "tail": _tail_label(graph.tail_position(comp.ident)),
        "smooth_curvette": graph.has_smooth_curvette(comp.ident),
        "later_than": sorted(res.ancestors(comp.ident)),
    }


def stratum_data(stratum):
    return {
        "kind": stratum.kind,
        "component": stratum.component,
        "position": position_label(stratum.position) if stratum.position is not None else None,
        "chi": stratum.chi,
        "stabilizer": subgroup_data(stratum.stabilizer),
        "orbit_size": stratum.orbit_size,
        "w": [list(v) for v in stratum.w_list()],
        "alpha": character_data(stratum.alpha),
    }


def expanded_data(graph):
    return {
        "copies": [copy_label(c) for c in graph.copies],
        "matrix": graph.matrix,
        "neg_inverse": graph.neg_inverse,
        "determinant": graph.determinant,
        "edges": [[copy_label(a), copy_label(b), n] for a, b, n in graph.adjacency()],
    }


def graph_data(graph, strata=None, expanded=False):
    res = graph.res
    payload = {
        "action": action_data(graph.action),
        "mode": graph.mode,
        "components": [component_data(graph, c) for c in res.components],
        "edges": [{"from": copy_label(a), "to": copy_label(b), "stabilizer": subgroup_data(h)}
                  for (a, b), h in sorted(res.intersections.items())],
        "arrows": [{
            "source": a.source,
            "name": res.branches[a.source].name,
            "copy": copy_label(a.copy),
            "position": position_label(a.position),
            "stabilizer": subgroup_data(a.stabilizer),
            "orbit_size": a.orbit_size,
        } for a in res.arrows],
        "marked": {str(i): copy_label(c) for i, c in sorted(res.marked.items())},
    }
    if strata is not None:
        payload["strata"] = [stratum_data(s) for s in strata]
    if expanded:
        payload["expanded"] = expanded_data(graph)
    return payload


def class_data(gr_class):
    return {
        "stabilizer": subgroup_data(gr_class.stabilizer),
        "orbit_size": gr_class.orbit_size,
        "w": [list(v) for v in gr_class.w],
        "degree": gr_class.degree,
        "alpha": character_data(gr_class.alpha),
    }


def form_data(form):
    return {
        "group": list(form.group.orders),
        "r": form.r,
        "factors": [{"class": class_data(c), "exponent": s} for c, s in form.factors],
    }


def gr_series_data(series):
    return {
        "bound": series.bound,
        "terms": [{"class": class_data(c), "coefficient": v} for c, v in series.items()],
    }


def int_series_data(series):
    return {
        "r": series.r,
        "bound": series.bound,
        "terms": [{"exponents": list(m), "coefficient": c} for m, c in series.terms()],
    }


def verdict_data(verdict):
    return {"equivalent": verdict.equivalent, "witness": verdict.witness,
            "obstruction": verdict.obstruction}


def inferred_data(inferred):
    return {
        "chi_x": character_data(inferred.chi_x),
        "chi_y": character_data(inferred.chi_y),
        "candidates": [[character_data(chi_x), character_data(chi_y)]
                       for chi_x, chi_y in inferred.candidates],
        "scalar": inferred.scalar,
        "recovered": inferred.recovered(),
        "tails": {k: character_data(v) for k, v in sorted(inferred.tails.items())},
    }


def hypotheses_data(report):
    return {
        "passed": report.passed,
        "reasons": list(report.reasons),
        "branches": [{"name": b.name, "multiplicity": b.multiplicity,
                      "isotropy_order": b.isotropy_order, "orbit_size": b.orbit_size}
                     for b in report.branches],
    }


def _vertex_label(comp):
    return "E%s\\n|G|=%s nu=%s\\n%s" % (comp.ident, comp.stabilizer.order, comp.discrepancy,
                                         comp.self_intersection)


def render_dot(graph, name="resolution", expanded=False):
    """DOT text of the quotient graph, or of the expanded graph with every copy."""
    res = graph.res
    if expanded:
        vertices = [{"id": "E%s_%s" % (c.component, "_".join(str(a) for a in c.shift)),
                     "label": "%s\\n%s" % (copy_label(c), res.component(c.component).self_intersection),
                     "marked": c in res.marked.values()} for c in graph.copies]
        ids = {c: v["id"] for c, v in zip(graph.copies, vertices)}
        edges = [{"source": ids[a], "target": ids[b], "label": str(n) if n > 1 else ""}
                 for a, b, n in graph.adjacency()]
        arrows = [{"source": a.source, "vertex": ids[a.copy], "label": res.branches[a.source].name}
                  for a in res.arrows]
    else:
        vertices = [{"id": "E%s" % c.ident, "label": _vertex_label(c), "marked": bool(c.marked)}
                    for c in res.components]
        edges = [{"source": "E%s" % a.component, "target": "E%s" % b.component,
                  "label": "|G/H|=%s" % h.index_in() if h.index_in() > 1 else ""}
                 for (a, b), h in sorted(res.intersections.items())]
        arrows = [{"source": a.source, "vertex": "E%s" % a.copy.component,
                   "label": "%s x%s" % (res.branches[a.source].name, a.orbit_size)}
                  for a in res.arrows]
    return render_to_string("equivariant/resolution.dot", {
        "name": name, "vertices": vertices, "edges": edges, "arrows": arrows,
    })
