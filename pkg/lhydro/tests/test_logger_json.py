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

from os import path

import unittest
import tempfile
import shutil
import json

import fs
import numpy as np

from lhydro.core.dynamics import Diagnostics
from lhydro.core.loggers.helpers import json_default
from lhydro.core.loggers.json_log import JsonLogger


def sample_event(step=3):
    return {
        "step": step,
        "t": 0.375,
        "diagnostics": Diagnostics(
            kinetic_energy=1.5,
            divergence_norm=2.0 ** -40,
            momentum=(0.0, 1.0, -2.0),
            enstrophy=0.25,
            hodge_norms=(0.0, 1.75, 0.5),
        ),
    }


class TestJsonLogger(unittest.TestCase):
    def setUp(self):
        self.logging_dir = tempfile.mkdtemp()
        self.logging_fs = fs.open_fs(self.logging_dir)

    def tearDown(self):
        self.logging_fs.close()
        shutil.rmtree(self.logging_dir)

    def test_log_event(self):
        filename = path.join(self.logging_dir, "test.json")
        run_label = "taylor_green"

        json_logger = JsonLogger(self.logging_fs, "test.json", run_label)
        json_logger.log(sample_event())
        json_logger.close()

        with open(filename, "r") as logfile:
            e = json.load(logfile)
            self.assertEqual(e["run"], run_label)
            self.assertEqual(e["step"], 3)
            self.assertEqual(e["t"], 0.375)
            self.assertEqual(e["kinetic_energy"], 1.5)
            self.assertEqual(e["divergence_norm"], 2.0 ** -40)
            self.assertEqual(e["enstrophy"], 0.25)
            self.assertEqual([e["px"], e["py"], e["pz"]], [0.0, 1.0, -2.0])
            self.assertEqual(
                e["hodge_norms"], {"exact": 0.0, "coexact": 1.75, "harmonic": 0.5}
            )

    def test_one_object_per_line(self):
        json_logger = JsonLogger(self.logging_fs)
        for step in range(4):
            json_logger.log(sample_event(step))
        json_logger.close()

        with open(path.join(self.logging_dir, "diagnostics.json"), "r") as logfile:
            steps = [json.loads(line)["step"] for line in logfile]
        self.assertEqual(steps, [0, 1, 2, 3])

    def test_json_default(self):
        self.assertEqual(json_default(np.int64(4)), 4)
        self.assertEqual(json_default(np.float64(0.5)), 0.5)
        self.assertEqual(json_default(np.arange(3)), [0, 1, 2])
        self.assertIsNone(json_default(object()))
