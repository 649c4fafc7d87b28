# Copyright (C) 2026  lhydro developers
#
# This program is free software; you can redistribute it and/or
# modify it under the terms of the GNU General Public License
# as published by the Free Software Foundation; either version 2
# of the License, or (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program; if not, write to the Free Software
# Foundation, Inc.,
# 51 Franklin Street, Fifth Floor, Boston, MA  02110-1301, USA.


class LatticeError(ValueError):
    """Invalid lattice, degree or operand combination."""


class DenseLimitError(LatticeError):
    def __init__(self, n, limit):
        self.n = n
        self.limit = limit
        super().__init__(
            "Dense path requested for n={0}, only n <= {1} is supported".format(
                n, limit
            )
        )


class SolverError(Exception):
    def __init__(self, message, residual=None, iterations=None):
        self.residual = residual
        self.iterations = iterations
        super().__init__(message)


class SolverNotConverged(SolverError):
    pass


class InconsistentSourceError(SolverError):
    """Poisson source with a harmonic component; no solution exists."""


class InstabilityError(ArithmeticError):
    def __init__(self, step, message=None):
        self.step = step
        super().__init__(
            message
            or "Non-finite field after step {0}, reduce dt".format(step)
        )


class ConfigError(ValueError):
    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = "line {0}: {1}".format(lineno, message)
        super().__init__(message)


class SnapshotFormatError(ValueError):
    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = "line {0}: {1}".format(lineno, message)
        super().__init__(message)
