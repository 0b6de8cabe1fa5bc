"""
Equivariant or plain Poincare series of a scene.

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
from ...poincare import equivariant_poincare, plain_poincare
from ...serializers import action_data, form_data, gr_series_data, int_series_data

logger = logging.getLogger(__name__)


class Command(SceneCommand):
    help = "Poincare series of the valuations of a scene."

    def add_arguments(self, parser):
        super().add_arguments(parser)
        kind = parser.add_mutually_exclusive_group()
        kind.add_argument("--plain", action="store_true", help="the series with the group forgotten")
        kind.add_argument("--equivariant", action="store_true", help="the equivariant series (default)")
        parser.add_argument("--factor", action="store_true", help="only the A'Campo form")

    def run(self, scenes, options):
        scene = scenes[0]
        bound = self.degree_bound(scene, options)
        valuations = self.valuations(scene)
        payload = {"scene": scene.name, "action": action_data(scene.action), "mode": scene.mode,
                   "r": valuations.r, "bound": bound}
        if options.get("plain"):
            payload["plain"] = int_series_data(plain_poincare(valuations, bound))
            return payload
        form, series = equivariant_poincare(valuations, bound)
        payload["form"] = form_data(form)
        if not options.get("factor"):
            payload["series"] = gr_series_data(series)
        logger.info("%s: %s A'Campo factors", scene.name, len(form.factors))
        return payload
