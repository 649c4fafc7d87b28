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

import os
import shutil
import tempfile
import unittest

import pytest

from lhydro.core.errors import ConfigError
from lhydro.utils.config import (
    DEFAULT_CONFIG,
    KEYS,
    RunConfig,
    parse_config,
    read_config,
    render_config,
)

DATA = os.path.join(os.path.dirname(__file__), "data")


def test_minimal_config_uses_defaults():
    config = parse_config("n = 4\nh = 1.0")
    assert config == RunConfig()
    assert config.nu == 0.01
    assert config.solver_tol == 1e-10
    assert config.amplitude == 1.0
    assert config.seed == 0
    assert config.dt == 0.0


def test_comments_and_blank_lines():
    config = parse_config("# header\n\nn = 6   # inline\nnu = 0.5\n")
    assert config.n == 6
    assert config.nu == 0.5


def test_types_are_converted():
    config = parse_config("nonlinear = False\njson_log = yes\nseed = 7\ninit = shear\n")
    assert config.nonlinear is False
    assert config.json_log is True
    assert config.seed == 7
    assert config.init == "shear"


def test_file_init():
    config = parse_config("init = file:/tmp/snapshot_3.csv")
    assert config.init_file == "/tmp/snapshot_3.csv"
    assert RunConfig().init_file is None


@pytest.mark.parametrize(
    "text, lineno, fragment",
    (
        ("n = 5", 1, "n must be even"),
        ("# comment\nn = 2", 2, "n must be >= 4"),
        ("nu = 0.1\ncolour = blue", 2, "unknown key"),
        ("n = 4\nh = inf", 2, "h must be finite"),
        ("nu = nan", 1, "nu must be finite"),
        ("t_end = -1", 1, "t_end"),
        ("output_every = 0", 1, "output_every"),
        ("scheme = leapfrog", 1, "scheme"),
        ("init = vortex", 1, "init"),
        ("n = four", 1, "invalid value for n"),
        ("h = 0", 1, "h must be positive"),
        ("n = 4\nn = 6", 2, "n"),
        ("seed = -3", 1, "seed"),
        ("solver_tol = 0", 1, "solver_tol"),
    ),
)
def test_invalid_config(text, lineno, fragment):
    with pytest.raises(ConfigError) as exc_info:
        parse_config(text)
    assert exc_info.value.lineno == lineno
    assert str(exc_info.value).startswith("line {0}: ".format(lineno))
    assert fragment in str(exc_info.value)


def test_line_without_value():
    with pytest.raises(ConfigError) as exc_info:
        parse_config("n = 4\nthis is not a key value line\n")
    assert exc_info.value.lineno == 2


def test_sections_rejected():
    with pytest.raises(ConfigError) as exc_info:
        parse_config("n = 4\n[extra]\nh = 1.0\n")
    assert exc_info.value.lineno == 2


def test_render_lists_every_key_in_order():
    text = render_config(RunConfig())
    lines = text.splitlines()
    assert [line.split(" = ")[0] for line in lines] == list(KEYS)
    assert "nonlinear = True" in lines
    assert "solver_tol = 1e-10" in lines
    assert parse_config(text) == RunConfig()


def test_packaged_defaults():
    assert read_config(DEFAULT_CONFIG) == RunConfig()


class TestConfigFiles(unittest.TestCase):
    def setUp(self):
        self.config_dir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.config_dir)

    def test_canonical_file_round_trips(self):
        with open(os.path.join(DATA, "full.cfg"), "r") as config_file:
            original = config_file.read()
        config = read_config(os.path.join(DATA, "full.cfg"))
        self.assertEqual(render_config(config), original)

        copy = os.path.join(self.config_dir, "copy.cfg")
        with open(copy, "w") as config_file:
            config_file.write(render_config(config))
        self.assertEqual(read_config(copy), config)

    def test_odd_extent_reports_line(self):
        with self.assertRaises(ConfigError) as context:
            read_config(os.path.join(DATA, "odd_n.cfg"))
        self.assertEqual(context.exception.lineno, 4)
        self.assertIn("n must be even", str(context.exception))

    def test_minimal_file(self):
        config = read_config(os.path.join(DATA, "minimal.cfg"))
        self.assertEqual(config, RunConfig())

    def test_missing_file(self):
        with self.assertRaises(ConfigError):
            read_config(os.path.join(self.config_dir, "missing.cfg"))
