"""
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

import pytest

from . import scene
from .blowup import CURVES, DIVISORIAL
from .cyclo import CycloNum
from .exceptions import NonPrimitiveBranch, SceneError
from .polynomials import Poly1


def scene_text(**changes):
    data = {
        "version": 1,
        "group": [3],
        "chi_x": [1],
        "chi_y": [2],
        "branches": [{"name": "L", "x": "t", "y": "z*t^2"}],
    }
    data.update(changes)
    return json.dumps(data)


def test_load_minimal_scene():
    "z stands for the primitive root of unity of the modulus"
    loaded = scene.loads_scene(scene_text(), "mini")
    assert loaded.name == "mini"
    assert loaded.mode == CURVES
    assert loaded.degree_bound is None
    (branch,) = loaded.sources
    assert branch.name == "L"
    assert branch.y_param == Poly1(3, [0, 0, CycloNum.zeta_power(3, 1)])


def test_bundled_scenes_load():
    "every bundled scene parses and validates"
    for name in ("example1", "example1-primed", "example2", "example2-primed", "example3-v",
                 "example3-vprime", "cusp", "transversal-lines", "tangent-lines", "scalar-line"):
        loaded = scene.load_scene(name)
        assert loaded.sources
    assert scene.load_scene("example3-v").mode == DIVISORIAL
    assert scene.load_scene("cusp").degree_bound == 12


def test_scene_from_search_directory(tmp_path):
    "scene directories are searched before the bundled scenes"
    (tmp_path / "mine.json").write_text(scene_text(degree_bound=3), encoding="utf-8")
    loaded = scene.load_scene("mine", [str(tmp_path)])
    assert loaded.degree_bound == 3
    assert scene.find_scene(str(tmp_path / "mine.json")) == str(tmp_path / "mine.json")


def test_invalid_json_reports_position():
    "syntax errors carry line and column"
    with pytest.raises(SceneError) as info:
        scene.loads_scene('{"version": 1,\n  "group": [3,]}')
    assert info.value.line == 2


def test_malformed_scenes():
    "schema violations are scene errors"
    bad = [
        scene_text(version=2),
        scene_text(group=[0]),
        scene_text(chi_x=[1, 2]),
        scene_text(mode="other"),
        scene_text(branches=[]),
        scene_text(branches=[{"x": "t"}]),
        scene_text(branches=[{"x": "t + 1", "y": "t^2"}]),
        scene_text(branches=[{"x": "t", "y": "__import__('os')"}]),
        scene_text(branches=[{"x": "t", "y": "t^^2"}]),
        scene_text(degree_bound=-1),
        scene_text(modulus=0),
    ]
    for text in bad:
        with pytest.raises(SceneError):
            scene.loads_scene(text)


def test_non_primitive_branch_is_a_precondition():
    "t -> (t^2, t^4) is refused at load time"
    with pytest.raises(NonPrimitiveBranch):
        scene.loads_scene(scene_text(branches=[{"x": "t^2", "y": "t^4"}]))


def test_mode_override():
    "reading a divisorial scene as curves finds no branches"
    with pytest.raises(SceneError):
        scene.load_scene("example3-v", mode=CURVES)


def test_unknown_scene():
    "missing scenes are reported by name"
    with pytest.raises(SceneError):
        scene.find_scene("no-such-scene")
