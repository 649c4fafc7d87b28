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

"""
Run configuration: ``key = value`` lines with ``#`` comments, read through
configparser under an implied ``[run]`` section.
"""

import configparser
import logging
import math
import os
import re
from dataclasses import dataclass, fields

from lhydro.core.dynamics import DEFAULT_DT_MAX, SCHEMES
from lhydro.core.errors import ConfigError
from lhydro.core.hodge import SolverOptions
from lhydro.core.lattice import LatticeConfig

logger = logging.getLogger(__name__)

SECTION = "run"
INIT_KINDS = ("taylor_green", "random_solenoidal", "shear")
DEFAULT_CONFIG = os.path.join(os.path.dirname(os.path.dirname(__file__)), "lhydro.cfg")


@dataclass(frozen=True)
class RunConfig:
    n: int = 4
    h: float = 1.0
    nu: float = 0.01
    dt: float = 0.0
    dt_max: float = DEFAULT_DT_MAX
    t_end: float = 1.0
    scheme: str = "rk4"
    nonlinear: bool = True
    init: str = "taylor_green"
    seed: int = 0
    amplitude: float = 1.0
    output_every: int = 10
    out_dir: str = "output"
    solver_tol: float = 1e-10
    json_log: bool = False

    def lattice(self) -> LatticeConfig:
        return LatticeConfig(self.n, self.h)

    def solver_options(self) -> SolverOptions:
        return SolverOptions(tol=self.solver_tol)

    @property
    def init_file(self):
        if self.init.startswith("file:"):
            return self.init[len("file:"):]
        return None


KEYS = tuple(f.name for f in fields(RunConfig))
_TYPES = {f.name: f.type for f in fields(RunConfig)}


def _line_of(text, key):
    pattern = re.compile(r"^\s*{0}\s*[=:]".format(re.escape(key)))
    for lineno, line in enumerate(text.splitlines(), start=1):
        if pattern.match(line):
            return lineno
    return None


def _convert(section, key, lineno):
    kind = _TYPES[key]
    try:
        if kind in (int, "int"):
            return section.getint(key)
        if kind in (float, "float"):
            return section.getfloat(key)
        if kind in (bool, "bool"):
            return section.getboolean(key)
    except ValueError as e:
        raise ConfigError("invalid value for {0}: {1}".format(key, e), lineno)
    return section.get(key)


def parse_config(text: str) -> RunConfig:
    parser = configparser.ConfigParser(
        comment_prefixes=("#",),
        inline_comment_prefixes=("#",),
        interpolation=None,
        default_section="__defaults__",
    )
    # keys are case sensitive
    parser.optionxform = str
    try:
        parser.read_string("[{0}]\n{1}".format(SECTION, text))
    except configparser.ParsingError as e:
        lineno, line = e.errors[0]
        raise ConfigError("cannot parse {0}".format(line.strip()), lineno - 1)
    except (configparser.DuplicateOptionError, configparser.DuplicateSectionError) as e:
        raise ConfigError(e.message, e.lineno - 1 if e.lineno else None)
    except configparser.Error as e:
        raise ConfigError(e.message)

    if parser.sections() != [SECTION]:
        extra = [s for s in parser.sections() if s != SECTION]
        raise ConfigError(
            "sections are not supported: [{0}]".format(extra[0]),
            _line_of_section(text, extra[0]),
        )

    section = parser[SECTION]
    values = {}
    for key in section:
        lineno = _line_of(text, key)
        if key not in KEYS:
            raise ConfigError("unknown key {0!r}".format(key), lineno)
        value = _convert(section, key, lineno)
        if isinstance(value, float) and not math.isfinite(value):
            raise ConfigError("{0} must be finite".format(key), lineno)
        values[key] = value

    config = RunConfig(**values)
    _validate(config, text)
    logger.debug("Parsed run configuration %s.", config)
    return config


def _line_of_section(text, name):
    for lineno, line in enumerate(text.splitlines(), start=1):
        if line.strip() == "[{0}]".format(name):
            return lineno
    return None


def _validate(config: RunConfig, text: str):
    def fail(key, message):
        raise ConfigError(message, _line_of(text, key))

    if config.n < 4:
        fail("n", "n must be >= 4")
    if config.n % 2:
        fail("n", "n must be even")
    if not config.h > 0:
        fail("h", "h must be positive")
    if config.nu < 0:
        fail("nu", "nu must be >= 0")
    if config.dt < 0:
        fail("dt", "dt must be >= 0 (0 selects it automatically)")
    if not config.dt_max > 0:
        fail("dt_max", "dt_max must be positive")
    if config.t_end < 0:
        fail("t_end", "t_end must be >= 0")
    if config.scheme not in SCHEMES:
        fail("scheme", "scheme must be one of {0}".format(", ".join(sorted(SCHEMES))))
    if config.init not in INIT_KINDS and not config.init_file:
        fail(
            "init",
            "init must be one of {0} or file:<path>".format(", ".join(INIT_KINDS)),
        )
    if config.seed < 0:
        fail("seed", "seed must be an unsigned integer")
    if config.output_every < 1:
        fail("output_every", "output_every must be >= 1")
    if not config.solver_tol > 0:
        fail("solver_tol", "solver_tol must be positive")
    if not config.out_dir:
        fail("out_dir", "out_dir must not be empty")


def read_config(path: str) -> RunConfig:
    try:
        with open(path, "r") as config_file:
            text = config_file.read()
    except OSError as e:
        raise ConfigError("cannot read {0}: {1}".format(path, e.strerror))
    return parse_config(text)


def _render_value(value) -> str:
    if isinstance(value, bool):
        return "True" if value else "False"
    if isinstance(value, float):
        return repr(value)
    return str(value)


def render_config(config: RunConfig) -> str:
    """Canonical text of a configuration: every key, in declaration order."""
    return "".join(
        "{0} = {1}\n".format(key, _render_value(getattr(config, key))) for key in KEYS
    )
