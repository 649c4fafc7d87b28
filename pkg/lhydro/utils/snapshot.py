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
Snapshot files::

    lhydro v1, n=<n>, h=<h>, t=<t>
    i,j,k,vx,vy,vz            (n**3 lines, i then j then k ascending)

All reals are written with 17 significant digits, which reproduces every
double exactly, so write -> read -> write is byte identical.
"""

import logging
import os
import re
from typing import NamedTuple, Optional

import fs
import fs.errors
import natsort
import numpy as np

from lhydro.core.errors import LatticeError, SnapshotFormatError
from lhydro.core.fields import VectorField
from lhydro.core.lattice import LatticeConfig

logger = logging.getLogger(__name__)

HEADER = "lhydro v1, n={0}, h={1}, t={2}"
HEADER_RE = re.compile(
    r"^lhydro v1, n=(?P<n>[0-9]+), h=(?P<h>[^,\s]+), t=(?P<t>[^,\s]+)$"
)
SNAPSHOT_RE = re.compile(r"^snapshot_[0-9]+\.csv$")


def format_real(value) -> str:
    return "%.17g" % value


class Snapshot(NamedTuple):
    field: VectorField
    t: float


def snapshot_name(step: int) -> str:
    return "snapshot_{0}.csv".format(step)


def format_snapshot(field: VectorField, t: float) -> str:
    config = field.config
    lines = [HEADER.format(config.n, format_real(config.h), format_real(t))]
    values = field.values
    n = config.n
    for i in range(n):
        for j in range(n):
            for k in range(n):
                vx, vy, vz = values[:, i, j, k]
                lines.append(
                    "{0},{1},{2},{3},{4},{5}".format(
                        i, j, k, format_real(vx), format_real(vy), format_real(vz)
                    )
                )
    return "\n".join(lines) + "\n"


def parse_snapshot(text: str, expected_n: Optional[int] = None) -> Snapshot:
    lines = text.splitlines()
    if not lines:
        raise SnapshotFormatError("empty snapshot")
    match = HEADER_RE.match(lines[0].strip())
    if not match:
        raise SnapshotFormatError("bad header {0!r}".format(lines[0]), 1)
    try:
        n = int(match.group("n"))
        h = float(match.group("h"))
        t = float(match.group("t"))
        config = LatticeConfig(n, h)
    except (ValueError, LatticeError) as e:
        raise SnapshotFormatError("bad header: {0}".format(e), 1)
    if expected_n is not None and n != expected_n:
        raise SnapshotFormatError(
            "snapshot has n={0}, configuration expects n={1}".format(n, expected_n), 1
        )

    data = [line for line in lines[1:]]
    if len(data) != config.sites:
        raise SnapshotFormatError(
            "expected {0} data lines, found {1}".format(config.sites, len(data))
        )
    values = np.empty((3,) + config.shape)
    expected = np.ndindex(*config.shape)
    for lineno, (line, site) in enumerate(zip(data, expected), start=2):
        parts = line.strip().split(",")
        if len(parts) != 6:
            raise SnapshotFormatError("expected 6 fields, found {0}".format(len(parts)), lineno)
        try:
            index = tuple(int(p) for p in parts[:3])
            vector = [float(p) for p in parts[3:]]
        except ValueError as e:
            raise SnapshotFormatError(str(e), lineno)
        if index != site:
            raise SnapshotFormatError(
                "expected site {0}, found {1}".format(site, index), lineno
            )
        if not all(np.isfinite(vector)):
            raise SnapshotFormatError("non-finite velocity", lineno)
        values[:, index[0], index[1], index[2]] = vector
    return Snapshot(VectorField(values, config), t)


def _split(path):
    directory, name = os.path.split(os.path.abspath(path))
    return directory, name


def read_snapshot(path: str, expected_n: Optional[int] = None) -> Snapshot:
    directory, name = _split(path)
    try:
        with fs.open_fs(directory) as snapshot_fs:
            text = snapshot_fs.readtext(name)
    except (fs.errors.FSError, UnicodeDecodeError) as e:
        raise SnapshotFormatError("cannot read snapshot {0}: {1}".format(path, e))
    logger.debug("Read snapshot %s.", path)
    return parse_snapshot(text, expected_n)


def write_snapshot(out_fs, name: str, field: VectorField, t: float):
    out_fs.writetext(name, format_snapshot(field, t))
    logger.info("Wrote snapshot %s (t=%s).", name, format_real(t))


def latest_snapshot(directory: str) -> str:
    """Path of the last snapshot of a run directory in natural order."""
    try:
        with fs.open_fs(directory) as run_fs:
            names = [name for name in run_fs.listdir("/") if SNAPSHOT_RE.match(name)]
    except fs.errors.FSError as e:
        raise SnapshotFormatError("cannot list {0}: {1}".format(directory, e))
    if not names:
        raise SnapshotFormatError("no snapshots in {0}".format(directory))
    return os.path.join(directory, natsort.natsorted(names)[-1])
