"""
Error hierarchy of the equivariant app.

Every error carries the exit code the management commands report for it:
2 for bad input, 3 for a failed mathematical precondition and 4 for an
internal cross-check that did not hold.

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


class GPoincareError(Exception):
    exit_code = 1


class InputError(GPoincareError):
    exit_code = 2


class SceneError(InputError):
    """Malformed scene file; line and column are set for JSON syntax errors."""

    def __init__(self, message, line=None, column=None):
        if line is not None:
            message = "%s (line %s, column %s)" % (message, line, column)
        super().__init__(message)
        self.line = line
        self.column = column


class ModulusMismatch(InputError):
    pass


class GroupMismatch(InputError):
    pass


class InconsistentAction(InputError):
    """A G-set whose action map or alpha decoration is not consistent."""


class PreconditionError(GPoincareError):
    exit_code = 3


class NonPrimitiveBranch(PreconditionError):
    pass


class CoincidentBranches(PreconditionError):
    pass


class CurvetteGenericityError(PreconditionError):
    pass


class NotSemiInvariant(PreconditionError):
    pass


class BadChartValue(PreconditionError):
    pass


class NotAUnit(PreconditionError):
    pass


class DegreeZeroFactor(PreconditionError):
    pass


class JetBoundExceeded(PreconditionError):
    pass


class NoQualifyingFactor(PreconditionError):
    pass


class CrossCheckError(GPoincareError):
    exit_code = 4


class AlphaMismatch(CrossCheckError):
    pass


class GraphInvariantError(CrossCheckError):
    pass


class RoundTripError(CrossCheckError):
    pass
