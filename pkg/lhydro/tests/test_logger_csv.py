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

import unittest

import fs

from lhydro.core.log_worker import LogWorker
from lhydro.core.loggers.csv_log import CsvLogger
from lhydro.tests.test_logger_json import sample_event
from lhydro.utils.config import RunConfig

HEADER = "step,t,kinetic_energy,divergence_norm,enstrophy,px,py,pz"


class TestCsvLogger(unittest.TestCase):
    def setUp(self):
        self.logging_fs = fs.open_fs("mem://")

    def tearDown(self):
        self.logging_fs.close()

    def test_header_and_rows(self):
        csv_logger = CsvLogger(self.logging_fs)
        csv_logger.log(sample_event(0))
        csv_logger.log(sample_event(10))
        csv_logger.close()

        lines = self.logging_fs.readtext("diagnostics.csv").splitlines()
        self.assertEqual(lines[0], HEADER)
        self.assertEqual(lines[1], "0,0.375,1.5,9.0949470177292824e-13,0.25,0,1,-2")
        self.assertTrue(lines[2].startswith("10,"))
        self.assertEqual(len(lines), 3)


class TestLogWorker(unittest.TestCase):
    def setUp(self):
        self.logging_fs = fs.open_fs("mem://")

    def tearDown(self):
        self.logging_fs.close()

    def test_csv_only_by_default(self):
        worker = LogWorker(RunConfig(), self.logging_fs)
        worker.log(sample_event())
        worker.stop()
        self.assertTrue(self.logging_fs.exists("diagnostics.csv"))
        self.assertFalse(self.logging_fs.exists("diagnostics.json"))
        self.assertEqual(worker.events, 1)

    def test_json_log_enabled(self):
        worker = LogWorker(RunConfig(json_log=True), self.logging_fs, run_label="shear")
        worker.log(sample_event())
        worker.log(sample_event(4))
        worker.stop()
        lines = self.logging_fs.readtext("diagnostics.json").splitlines()
        self.assertEqual(len(lines), 2)
        self.assertIn('"run": "shear"', lines[0])
