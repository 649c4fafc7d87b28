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


from .helpers import event_row

COLUMNS = (
    "step",
    "t",
    "kinetic_energy",
    "divergence_norm",
    "enstrophy",
    "px",
    "py",
    "pz",
)


def _format(value):
    if isinstance(value, int):
        return str(value)
    return "%.17g" % value


class CsvLogger(object):
    def __init__(self, out_fs, filename="diagnostics.csv"):
        self.filename = filename
        self.fileHandle = out_fs.open(filename, "w")
        self.fileHandle.write(",".join(COLUMNS) + "\n")

    def log(self, event):
        row = event_row(event)
        self.fileHandle.write(",".join(_format(row[c]) for c in COLUMNS) + "\n")
        self.fileHandle.flush()

    def close(self):
        self.fileHandle.close()
