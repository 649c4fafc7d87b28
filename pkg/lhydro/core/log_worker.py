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


import logging

from lhydro.core.loggers.csv_log import CsvLogger
from lhydro.core.loggers.json_log import JsonLogger

logger = logging.getLogger(__name__)


class LogWorker(object):
    """Hands every diagnostics event of a run to the enabled loggers."""

    def __init__(self, config, out_fs, run_label=None):
        self.config = config
        self.csv_logger = CsvLogger(out_fs)
        self.json_logger = None

        if config.json_log:
            self.json_logger = JsonLogger(out_fs, run_label=run_label)

        self.events = 0

    def log(self, event):
        logger.debug(
            "Diagnostics at step %s: %s", event["step"], event["diagnostics"]
        )
        self.csv_logger.log(event)

        if self.json_logger:
            self.json_logger.log(event)

        self.events += 1

    def stop(self):
        self.csv_logger.close()
        if self.json_logger:
            self.json_logger.close()
        logger.info("Logged %s diagnostics events.", self.events)
