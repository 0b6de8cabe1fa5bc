"""
Shared plumbing of the scene commands: argument parsing, configuration
lookup, error translation and output.

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

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from ..blowup import MODES
from ..exceptions import GPoincareError
from ..scene import load_scene
from ..serializers import dumps

logger = logging.getLogger(__name__)


def config(key):
    """A value of settings.GPOINCARE, the one place the defaults live."""
    return settings.GPOINCARE[key]


class SceneCommand(BaseCommand):
    """A command reading `scene_count` scenes and printing one JSON document."""
    scene_count = 1

    def add_arguments(self, parser):
        parser.add_argument("scenes", nargs=self.scene_count, metavar="SCENE",
                            help="scene file, or the name of a bundled scene")
        parser.add_argument("--degree-bound", type=int, dest="degree_bound",
                            help="truncation bound on the total degree")
        parser.add_argument("--json", dest="json_path", metavar="PATH",
                            help="write the JSON output to PATH instead of stdout")
        parser.add_argument("--mode", choices=MODES, help="override the mode of the scene")

    def degree_bound(self, scene, options):
        if options.get("degree_bound") is not None:
            return options["degree_bound"]
        if scene.degree_bound is not None:
            return scene.degree_bound
        return config("DEGREE_BOUND")

    def valuations(self, scene, allow_repeated=False):
        return scene.valuations(generic_samples=config("GENERIC_SAMPLES"),
                                allow_repeated=allow_repeated)

    def run(self, scenes, options):
        raise NotImplementedError

    def write(self, text, path=None):
        if path:
            with open(path, "w", encoding="utf-8") as handle:
                handle.write(text)
            logger.info("wrote %s", path)
        else:
            self.stdout.write(text, ending="")

    def handle(self, *args, **options):
        try:
            scenes = [load_scene(reference, config("SCENE_DIRS"), options.get("mode"))
                      for reference in options["scenes"]]
            payload = self.run(scenes, options)
        except GPoincareError as exc:
            logger.debug("%s failed: %s", type(self).__module__, exc)
            raise CommandError(str(exc), returncode=exc.exit_code) from exc
        self.write(dumps(payload), options.get("json_path"))
