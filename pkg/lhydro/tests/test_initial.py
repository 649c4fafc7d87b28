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

import dataclasses
import os
import shutil
import tempfile
import unittest

import fs
import numpy as np
import pytest

from lhydro.core.errors import SnapshotFormatError
from lhydro.core.fields import braces, divergence
from lhydro.core.hodge import harmonic_project
from lhydro.initial import (
    make_initial,
    random_generator,
    random_solenoidal,
    shear,
    shear_eigenvalue,
    taylor_green,
)
from lhydro.core import laplacian
from lhydro.utils.config import RunConfig
from lhydro.utils.snapshot import write_snapshot


def test_generator_is_pcg64():
    a = random_generator(5).uniform(size=4)
    b = np.random.Generator(np.random.PCG64(5)).uniform(size=4)
    assert np.array_equal(a, b)


def test_random_field_is_deterministic():
    config = RunConfig(init="random_solenoidal", seed=11)
    first = make_initial(config)
    second = make_initial(config)
    assert np.array_equal(first.values, second.values)
    other = make_initial(dataclasses.replace(config, seed=12))
    assert not np.array_equal(first.values, other.values)


def test_random_field_is_bounded_before_projection():
    field = random_solenoidal(RunConfig(amplitude=0.5, seed=3))
    assert np.abs(field.values).max() <= 0.5


@pytest.mark.parametrize("init", ("taylor_green", "random_solenoidal", "shear"))
@pytest.mark.parametrize("n", (4, 6))
def test_initial_fields_are_divergence_free(init, n):
    config = RunConfig(n=n, init=init, seed=1)
    field = make_initial(config)
    assert divergence(field).norm() <= 1e-8 * max(field.norm(), 1.0)
    assert divergence(field).norm() <= config.solver_tol * field.norm()


def test_zero_amplitude():
    for init in ("taylor_green", "random_solenoidal", "shear"):
        field = make_initial(RunConfig(init=init, amplitude=0.0))
        assert field.norm() == 0.0


def test_taylor_green_values():
    field = taylor_green(RunConfig(n=4, amplitude=2.0))
    assert field.at((1, 0, 0)) == pytest.approx([2.0, 0.0, 0.0])
    assert field.at((0, 1, 0)) == pytest.approx([0.0, -2.0, 0.0])
    assert np.all(field.values[2] == 0.0)


@pytest.mark.parametrize("n", (4, 6, 8))
def test_shear_is_an_eigenmode(n):
    u = braces(shear(RunConfig(n=n)))
    residual = laplacian(u) - shear_eigenvalue(n) * u
    assert residual.norm() <= 1e-12 * u.norm()
    assert harmonic_project(u).norm() <= 1e-12 * u.norm()


class TestInitialFromFile(unittest.TestCase):
    def setUp(self):
        self.run_dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.run_dir)

    def write(self, field):
        with fs.open_fs(self.run_dir) as run_fs:
            write_snapshot(run_fs, "snapshot_0.csv", field, 0.0)
        return os.path.join(self.run_dir, "snapshot_0.csv")

    def test_file_init_reads_and_projects(self):
        source = taylor_green(RunConfig(n=4))
        path = self.write(source)
        field = make_initial(RunConfig(n=4, init="file:" + path))
        self.assertLess(np.abs(field.values - source.values).max(), 1e-12)

    def test_file_extent_must_match(self):
        path = self.write(taylor_green(RunConfig(n=6)))
        with self.assertRaises(SnapshotFormatError):
            make_initial(RunConfig(n=4, init="file:" + path))

    def test_file_spacing_must_match(self):
        path = self.write(taylor_green(RunConfig(n=4, h=0.5)))
        with self.assertRaises(SnapshotFormatError):
            make_initial(RunConfig(n=4, h=1.0, init="file:" + path))

    def test_missing_file(self):
        path = os.path.join(self.run_dir, "nothing.csv")
        with self.assertRaises(SnapshotFormatError):
            make_initial(RunConfig(n=4, init="file:" + path))
