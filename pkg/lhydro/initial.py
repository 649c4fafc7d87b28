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
Initial velocity fields. Every generator's output is projected onto the
divergence free chains before use.

Random fields draw from numpy's PCG64 bit generator (PCG XSL RR 128/64)
seeded with the configured seed; the uniform samples are consumed in the
field's storage order (component, i, j, k).
"""

import logging

import numpy as np

from lhydro.core.dynamics import project_divergence_free
from lhydro.core.errors import SnapshotFormatError
from lhydro.core.fields import VectorField, braces, unbraces
from lhydro.utils.config import RunConfig
from lhydro.utils.snapshot import read_snapshot

logger = logging.getLogger(__name__)


def random_generator(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def taylor_green(config: RunConfig) -> VectorField:
    lattice = config.lattice()
    i, j, _ = np.indices(lattice.shape)
    x = 2.0 * np.pi * i / config.n
    y = 2.0 * np.pi * j / config.n
    values = np.zeros((3,) + lattice.shape)
    values[0] = np.sin(x) * np.cos(y)
    values[1] = -np.cos(x) * np.sin(y)
    return VectorField(config.amplitude * values, lattice)


def random_solenoidal(config: RunConfig) -> VectorField:
    lattice = config.lattice()
    rng = random_generator(config.seed)
    values = rng.uniform(-1.0, 1.0, size=(3,) + lattice.shape)
    return VectorField(config.amplitude * values, lattice)


def shear(config: RunConfig) -> VectorField:
    """(cos(2 pi j / n), 0, 0): a divergence free eigenmode of Delta."""
    lattice = config.lattice()
    _, j, _ = np.indices(lattice.shape)
    values = np.zeros((3,) + lattice.shape)
    values[0] = np.cos(2.0 * np.pi * j / config.n)
    return VectorField(config.amplitude * values, lattice)


def shear_eigenvalue(n: int) -> float:
    return 2.0 - 2.0 * np.cos(4.0 * np.pi / n)


GENERATORS = {
    "taylor_green": taylor_green,
    "random_solenoidal": random_solenoidal,
    "shear": shear,
}


def from_file(config: RunConfig) -> VectorField:
    snapshot = read_snapshot(config.init_file, expected_n=config.n)
    if snapshot.field.config.h != config.h:
        raise SnapshotFormatError(
            "snapshot spacing h={0} does not match h={1}".format(
                snapshot.field.config.h, config.h
            )
        )
    return VectorField(snapshot.field.values, config.lattice())


def make_initial(config: RunConfig) -> VectorField:
    if config.init_file:
        field = from_file(config)
    else:
        field = GENERATORS[config.init](config)
    logger.info("Initial condition %s on n=%s.", config.init, config.n)
    projected = project_divergence_free(braces(field), config.solver_options())
    return unbraces(projected)
