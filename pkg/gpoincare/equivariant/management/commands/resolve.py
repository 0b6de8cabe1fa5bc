"""
Resolve a scene and print its decorated resolution graph.

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
from ...serializers import graph_data, render_dot

logger = logging.getLogger(__name__)


class Command(SceneCommand):
    help = "Equivariant resolution of a scene: quotient graph, strata and optionally the expanded graph."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--dot", metavar="PATH", help="also render the graph as DOT to PATH")
        parser.add_argument("--expanded", action="store_true",
                            help="include every copy of every component and the intersection matrix")

    def run(self, scenes, options):
        scene = scenes[0]
        valuations = self.valuations(scene)
        graph = valuations.graph
        logger.info("%s: %s component orbits, %s copies", scene.name,
                    len(graph.components), len(graph.copies))
        if options.get("dot"):
            self.write(render_dot(graph, scene.name, options.get("expanded", False)), options["dot"])
        payload = graph_data(graph, valuations.strata, expanded=options.get("expanded", False))
        payload["scene"] = scene.name
        return payload
