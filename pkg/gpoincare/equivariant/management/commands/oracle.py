"""
Plain Poincare series from the codimensions of the valuation ideals.

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
from ..base import SceneCommand, config
from ...poincare import jets_oracle, plain_poincare
from ...serializers import int_series_data


class Command(SceneCommand):
    help = "Jets oracle: the plain series computed by linear algebra on jet spaces."

    def run(self, scenes, options):
        scene = scenes[0]
        bound = self.degree_bound(scene, options)
        valuations = self.valuations(scene)
        oracle = jets_oracle(valuations, bound, config("JETS_DEGREE_CAP"))
        return {
            "scene": scene.name,
            "series": int_series_data(oracle),
            "agrees_with_resolution": oracle == plain_poincare(valuations, bound),
        }
