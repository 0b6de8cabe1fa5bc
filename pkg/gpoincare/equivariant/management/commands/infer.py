"""
Recover the characters of the plane representation from the equivariant series.

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
from ..base import SceneCommand
from ...poincare import equivariant_poincare, infer_representation
from ...serializers import action_data, inferred_data


class Command(SceneCommand):
    help = "Read chi_x and chi_y off the one-point factors of the equivariant series."

    def run(self, scenes, options):
        scene = scenes[0]
        valuations = self.valuations(scene)
        form, _ = equivariant_poincare(valuations, self.degree_bound(scene, options))
        inferred = infer_representation(form, valuations.graph, scene.action.group)
        payload = {"scene": scene.name, "input": action_data(scene.action)}
        payload.update(inferred_data(inferred))
        payload["matches_input"] = (scene.action.chi_x, scene.action.chi_y) in inferred.candidates
        return payload
