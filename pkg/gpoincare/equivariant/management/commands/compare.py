"""
Compare two scenes by their series, their G-topology or their reductions.

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

from ..base import SceneCommand
from ...exceptions import GroupMismatch
from ...poincare import compare_series, equivariant_poincare
from ...resgraph import compare_combinatorial, compare_topology
from ...serializers import class_data, verdict_data

logger = logging.getLogger(__name__)


class Command(SceneCommand):
    help = "Compare the equivariant series (default) or the resolution graphs of two scenes."
    scene_count = 2

    def add_arguments(self, parser):
        super().add_arguments(parser)
        kind = parser.add_mutually_exclusive_group()
        kind.add_argument("--series", action="store_true", help="compare A'Campo forms (default)")
        kind.add_argument("--topology", action="store_true",
                          help="compare decorated quotient graphs")
        kind.add_argument("--combinatorial", action="store_true",
                          help="compare expanded graphs with unlabeled arrows")

    def run(self, scenes, options):
        first, second = scenes
        if first.action != second.action:
            raise GroupMismatch("%s and %s use different actions" % (first.name, second.name))
        one, two = self.valuations(first), self.valuations(second)
        payload = {"scenes": [first.name, second.name]}
        if options.get("topology"):
            payload["kind"] = "topology"
            payload.update(verdict_data(compare_topology(one.graph, two.graph)))
        elif options.get("combinatorial"):
            payload["kind"] = "combinatorial"
            payload.update(verdict_data(compare_combinatorial(one.graph, two.graph)))
        else:
            bound = self.degree_bound(first, options)
            equal, witness = compare_series(equivariant_poincare(one, bound)[0],
                                            equivariant_poincare(two, bound)[0])
            payload["kind"] = "series"
            payload["equal"] = equal
            payload["witness"] = None if witness is None else {
                "class": class_data(witness[0]), "exponents": [witness[1], witness[2]]}
        logger.info("compared %s and %s (%s)", first.name, second.name, payload["kind"])
        return payload
