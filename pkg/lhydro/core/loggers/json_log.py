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


import json

from .helpers import event_row, json_default


class JsonLogger(object):
    def __init__(self, out_fs, filename="diagnostics.json", run_label=None):
        self.filename = filename
        self.fileHandle = out_fs.open(filename, "w")
        self.run_label = run_label

    def log(self, event):
        data = event_row(event)
        diagnostics = event["diagnostics"]
        exact, coexact, harmonic = diagnostics.hodge_norms
        data["hodge_norms"] = {
            "exact": exact,
            "coexact": coexact,
            "harmonic": harmonic,
        }
        data["run"] = self.run_label

        json.dump(data, self.fileHandle, default=json_default, sort_keys=True)
        self.fileHandle.write("\n")
        self.fileHandle.flush()

    def close(self):
        self.fileHandle.close()
