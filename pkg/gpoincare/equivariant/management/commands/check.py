"""
Check the hypotheses under which the equivariant series determines the topology.

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
from ...blowup import CURVES
from ...exceptions import InputError
from ...poincare import check_determination_hypotheses
from ...serializers import hypotheses_data


class Command(SceneCommand):
    help = "Flag branches in one G-orbit and smooth branches fixed by a non-scalar element."

    def run(self, scenes, options):
        scene = scenes[0]
        if scene.mode != CURVES:
            raise InputError("check applies to collections of curves")
        payload = {"scene": scene.name}
        payload.update(hypotheses_data(check_determination_hypotheses(scene.branches, scene.action)))
        return payload
