"""
Loading of scene files: the group, its action on the plane, the branches
or curvette pairs and the truncation bound of one computation.

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
import logging
import os
import re
from dataclasses import dataclass, field
from typing import Optional

from sympy import SympifyError
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from sympy.polys.polyerrors import CoercionFailed, PolynomialError

from .blowup import CURVES, MODES
from .curves import Branch, GroupAction2, implicitize
from .exceptions import GPoincareError, SceneError
from .groups import AbelianGroup
from .poincare import ValuationSet
from .polynomials import T_SYMBOL, Z_SYMBOL, Poly1

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1
BUNDLED_SCENES = os.path.join(os.path.dirname(os.path.abspath(__file__)), "scenes")

_ALLOWED = re.compile(r"^[0-9tz+\-*/^() ]+$")
_TRANSFORMATIONS = standard_transformations + (convert_xor,)


@dataclass
class Scene:
    name: str
    action: GroupAction2
    mode: str
    branches: list = field(default_factory=list)
    divisors: list = field(default_factory=list)
    degree_bound: Optional[int] = None

    @property
    def sources(self):
        return self.branches if self.mode == CURVES else self.divisors

    def valuations(self, generic_samples=2, allow_repeated=False):
        return ValuationSet(self.action, self.mode, self.sources,
                            allow_repeated=allow_repeated, generic_samples=generic_samples)


def parse_polynomial(text, modulus, where):
    """A polynomial in t with coefficients in Q(zeta_N), z standing for zeta_N."""
    if not isinstance(text, str) or not _ALLOWED.match(text):
        raise SceneError("%s: %r is not a polynomial in t and z" % (where, text))
    try:
        expr = parse_expr(text, local_dict={"t": T_SYMBOL, "z": Z_SYMBOL},
                          transformations=_TRANSFORMATIONS, evaluate=True)
        return Poly1.from_expr(modulus, expr)
    except (SyntaxError, TypeError, ValueError, ZeroDivisionError, CoercionFailed,
            PolynomialError, SympifyError) as exc:
        raise SceneError("%s: cannot read %r (%s)" % (where, text, exc)) from exc


def _residues(data, key, rank):
    values = data.get(key)
    if not isinstance(values, list) or len(values) != rank or \
            not all(isinstance(v, int) for v in values):
        raise SceneError("%r must be a list of %s integers" % (key, rank))
    return values


def _branch(entry, modulus, where):
    if not isinstance(entry, dict) or "x" not in entry or "y" not in entry:
        raise SceneError("%s must be an object with keys 'x' and 'y'" % where)
    name = entry.get("name", where)
    try:
        return Branch(parse_polynomial(entry["x"], modulus, where + ".x"),
                      parse_polynomial(entry["y"], modulus, where + ".y"), name)
    except SceneError:
        raise
    except GPoincareError as exc:
        raise SceneError("%s: %s" % (where, exc)) from exc


def scene_from_dict(data, name="scene", mode=None):
    """Build and validate a Scene from decoded JSON."""
    if not isinstance(data, dict):
        raise SceneError("a scene is a JSON object")
    if data.get("version") != SCHEMA_VERSION:
        raise SceneError("unsupported scene version %r" % data.get("version"))
    orders = data.get("group", [])
    if not isinstance(orders, list) or not all(isinstance(n, int) and n > 0 for n in orders):
        raise SceneError("'group' must be a list of positive integers")
    group = AbelianGroup(orders)
    chi_x = group.character(_residues(data, "chi_x", group.rank))
    chi_y = group.character(_residues(data, "chi_y", group.rank))
    modulus = data.get("modulus")
    if modulus is not None and (not isinstance(modulus, int) or modulus < 1):
        raise SceneError("'modulus' must be a positive integer")
    action = GroupAction2(group, chi_x, chi_y, modulus)
    mode = mode or data.get("mode", CURVES)
    if mode not in MODES:
        raise SceneError("unknown mode %r" % mode)
    bound = data.get("degree_bound")
    if bound is not None and (not isinstance(bound, int) or bound < 0):
        raise SceneError("'degree_bound' must be a non-negative integer")
    scene = Scene(name, action, mode, degree_bound=bound)
    if mode == CURVES:
        entries = data.get("branches")
        if not isinstance(entries, list) or not entries:
            raise SceneError("mode curves needs a non-empty 'branches' list")
        for k, entry in enumerate(entries):
            branch = _branch(entry, action.modulus, "branches[%s]" % k)
            # primitivity is checked at load
            implicitize(branch)
            scene.branches.append(branch)
    else:
        entries = data.get("divisors")
        if not isinstance(entries, list) or not entries:
            raise SceneError("mode divisorial needs a non-empty 'divisors' list")
        for k, pair in enumerate(entries):
            if not isinstance(pair, list) or len(pair) != 2:
                raise SceneError("divisors[%s] must be a pair of curvettes" % k)
            members = tuple(_branch(entry, action.modulus, "divisors[%s][%s]" % (k, m))
                            for m, entry in enumerate(pair))
            for member in members:
                implicitize(member)
            scene.divisors.append(members)
    logger.debug("loaded scene %s: %r, %s %s", name, action, len(scene.sources), mode)
    return scene


def find_scene(reference, search_dirs=()):
    """Path of a scene given as a path or as a bundled name."""
    if os.path.isfile(reference):
        return reference
    filename = reference if reference.endswith(".json") else reference + ".json"
    for directory in list(search_dirs) + [BUNDLED_SCENES]:
        candidate = os.path.join(directory, filename)
        if os.path.isfile(candidate):
            return candidate
    raise SceneError("scene %r not found" % reference)


def load_scene(reference, search_dirs=(), mode=None):
    path = find_scene(reference, search_dirs)
    with open(path, encoding="utf-8") as handle:
        text = handle.read()
    return loads_scene(text, os.path.splitext(os.path.basename(path))[0], mode)


def loads_scene(text, name="scene", mode=None):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SceneError("invalid JSON: %s" % exc.msg, exc.lineno, exc.colno) from exc
    return scene_from_dict(data, name, mode)

