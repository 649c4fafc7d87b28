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
The triply periodic lattice and the cells of side 2h built on it.

Cell ordering: a degree-k cell is addressed by its center site and, for
edges and faces, an axis tag. Flat indices are axis-major, then site
lexicographic with k varying fastest::

    index = axis * n**3 + (i * n + j) * n + k

so a per-site 3-vector field stored as an array of shape (3, n, n, n) is a
degree-1 chain after a plain reshape.
"""

import math
from dataclasses import dataclass
from typing import Dict, Iterator, NamedTuple, Optional, Tuple

import numpy as np

from lhydro.core.errors import LatticeError

AXES = ("x", "y", "z")
DEGREES = (0, 1, 2, 3)


@dataclass(frozen=True)
class LatticeConfig:
    n: int
    h: float = 1.0
    # fixed right-handed global orientation of (x, y, z)
    orientation: str = "xyz"

    def __post_init__(self):
        if isinstance(self.n, bool) or int(self.n) != self.n:
            raise LatticeError("n must be an integer, got {0!r}".format(self.n))
        object.__setattr__(self, "n", int(self.n))
        if self.n < 4 or self.n % 2:
            raise LatticeError("n must be even and >= 4, got {0}".format(self.n))
        if not math.isfinite(self.h) or self.h <= 0:
            raise LatticeError("h must be positive and finite, got {0}".format(self.h))
        if self.orientation != "xyz":
            raise LatticeError("Only the right-handed orientation 'xyz' is supported")

    @property
    def sites(self) -> int:
        return self.n ** 3

    @property
    def shape(self) -> Tuple[int, int, int]:
        return (self.n, self.n, self.n)


class SiteIndex(NamedTuple):
    i: int
    j: int
    k: int

    @classmethod
    def of(cls, coords, n: int) -> "SiteIndex":
        i, j, k = coords
        return cls(int(i) % n, int(j) % n, int(k) % n)

    def shifted(self, axis: int, offset: int, n: int) -> "SiteIndex":
        coords = list(self)
        coords[axis] += offset
        return SiteIndex.of(coords, n)

    def parity(self) -> "ParityClass":
        return ParityClass(self.i % 2, self.j % 2, self.k % 2)


class ParityClass(NamedTuple):
    px: int
    py: int
    pz: int

    @property
    def label(self) -> int:
        return self.px * 4 + self.py * 2 + self.pz

    @classmethod
    def from_label(cls, label: int) -> "ParityClass":
        return cls((label >> 2) & 1, (label >> 1) & 1, label & 1)

    @classmethod
    def all(cls):
        return [cls.from_label(label) for label in range(8)]

    def __add__(self, other):
        return ParityClass(
            (self.px + other[0]) % 2, (self.py + other[1]) % 2, (self.pz + other[2]) % 2
        )


def _axis_offset(axis: int) -> Tuple[int, int, int]:
    offset = [0, 0, 0]
    offset[axis] = 1
    return tuple(offset)


@dataclass(frozen=True)
class CellId:
    degree: int
    center: SiteIndex
    axis: Optional[int] = None

    def __post_init__(self):
        _check_degree(self.degree)
        object.__setattr__(self, "center", SiteIndex(*self.center))
        if self.degree in (1, 2):
            if self.axis not in (0, 1, 2):
                raise LatticeError(
                    "Degree {0} cells need an axis tag in 0..2".format(self.degree)
                )
        elif self.axis is not None:
            raise LatticeError("Degree {0} cells carry no axis tag".format(self.degree))

    @classmethod
    def vertex(cls, center) -> "CellId":
        return cls(0, SiteIndex(*center))

    @classmethod
    def edge(cls, center, axis: int) -> "CellId":
        return cls(1, SiteIndex(*center), axis)

    @classmethod
    def face(cls, center, axis: int) -> "CellId":
        return cls(2, SiteIndex(*center), axis)

    @classmethod
    def cube(cls, center) -> "CellId":
        return cls(3, SiteIndex(*center))

    def __str__(self):
        name = ("vertex", "edge", "face", "cube")[self.degree]
        if self.axis is None:
            return "{0}{1}".format(name, tuple(self.center))
        return "{0}{1}[{2}]".format(name, tuple(self.center), AXES[self.axis])


def _check_degree(degree, allowed=DEGREES):
    if degree not in allowed:
        raise LatticeError(
            "Degree must be one of {0}, got {1!r}".format(tuple(allowed), degree)
        )


def dims(config: LatticeConfig, degree: int) -> int:
    """Number of canonical generators of L_degree."""
    _check_degree(degree)
    if degree in (1, 2):
        return 3 * config.sites
    return config.sites


def site_index(site, config: LatticeConfig) -> int:
    i, j, k = SiteIndex.of(site, config.n)
    return (i * config.n + j) * config.n + k


def cell_index(cell: CellId, config: LatticeConfig) -> int:
    site = site_index(cell.center, config)
    if cell.axis is None:
        return site
    return cell.axis * config.sites + site


def cell_at(index: int, degree: int, config: LatticeConfig) -> CellId:
    size = dims(config, degree)
    if not 0 <= index < size:
        raise LatticeError("Cell index {0} out of range for degree {1}".format(index, degree))
    axis, site = divmod(index, config.sites)
    center = SiteIndex(*np.unravel_index(site, config.shape))
    center = SiteIndex(int(center.i), int(center.j), int(center.k))
    return CellId(degree, center, axis if degree in (1, 2) else None)


def site_coordinates(config: LatticeConfig) -> np.ndarray:
    """(3, n**3) integer coordinates of the sites in canonical order."""
    return np.indices(config.shape).reshape(3, -1)


def shift_sites(config: LatticeConfig, axis: int, offset: int) -> np.ndarray:
    """Flat index of site s + offset*e_axis for every site s, periodically."""
    coords = site_coordinates(config)
    coords[axis] = (coords[axis] + offset) % config.n
    return np.ravel_multi_index(tuple(coords), config.shape)


def component_of(cell: CellId) -> ParityClass:
    """
    Label of the connected subcomplex a cell belongs to. Boundary and
    coboundary never mix labels, so the complex splits into 8 tori of extent
    n/2 per axis.
    """
    parity = cell.center.parity()
    if cell.degree == 3:
        return parity
    if cell.degree == 2:
        return parity + _axis_offset(cell.axis)
    if cell.degree == 1:
        return parity + (1, 1, 1) + _axis_offset(cell.axis)
    return parity + (1, 1, 1)


def component_labels(config: LatticeConfig, degree: int) -> np.ndarray:
    """Vectorised component_of: integer label 0..7 per canonical cell."""
    _check_degree(degree)
    parity = site_coordinates(config) % 2
    if degree in (0, 1):
        parity = (parity + 1) % 2
    if degree in (0, 3):
        return parity[0] * 4 + parity[1] * 2 + parity[2]
    labels = []
    for axis in range(3):
        shifted = parity.copy()
        shifted[axis] = (shifted[axis] + 1) % 2
        labels.append(shifted[0] * 4 + shifted[1] * 2 + shifted[2])
    return np.concatenate(labels)


@dataclass(frozen=True, eq=False)
class Chain:
    """
    Real coefficients on the canonical (positively oriented) generators of
    L_degree. The opposite orientation of a cell is the negated coefficient.
    """

    degree: int
    coeffs: np.ndarray
    config: LatticeConfig

    def __post_init__(self):
        _check_degree(self.degree)
        coeffs = np.asarray(self.coeffs)
        if coeffs.ndim != 1 or coeffs.size != dims(self.config, self.degree):
            raise LatticeError(
                "Degree {0} chain needs {1} coefficients, got shape {2}".format(
                    self.degree, dims(self.config, self.degree), coeffs.shape
                )
            )
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zeros(cls, config: LatticeConfig, degree: int, dtype=float) -> "Chain":
        return cls(degree, np.zeros(dims(config, degree), dtype=dtype), config)

    @classmethod
    def from_cells(
        cls, config: LatticeConfig, degree: int, values: Dict[CellId, float], dtype=float
    ) -> "Chain":
        chain = np.zeros(dims(config, degree), dtype=dtype)
        for cell, value in values.items():
            if cell.degree != degree:
                raise LatticeError("{0} is not a degree {1} cell".format(cell, degree))
            chain[cell_index(cell, config)] += value
        return cls(degree, chain, config)

    @classmethod
    def indicator(cls, cell: CellId, config: LatticeConfig, dtype=float) -> "Chain":
        return cls.from_cells(config, cell.degree, {cell: 1}, dtype=dtype)

    def coefficient(self, cell: CellId, orientation: int = 1) -> float:
        if cell.degree != self.degree:
            raise LatticeError("{0} is not a degree {1} cell".format(cell, self.degree))
        return orientation * self.coeffs[cell_index(cell, self.config)]

    def support(self) -> Iterator[Tuple[CellId, float]]:
        for index in np.flatnonzero(self.coeffs):
            yield cell_at(int(index), self.degree, self.config), self.coeffs[index]

    def like(self, coeffs) -> "Chain":
        return Chain(self.degree, coeffs, self.config)

    def _check_compatible(self, other: "Chain"):
        if not isinstance(other, Chain):
            raise LatticeError("Expected a Chain, got {0!r}".format(type(other)))
        if other.degree != self.degree or other.config != self.config:
            raise LatticeError(
                "Incompatible chains: degree {0} on {1} vs degree {2} on {3}".format(
                    self.degree, self.config, other.degree, other.config
                )
            )

    def __add__(self, other):
        self._check_compatible(other)
        return self.like(self.coeffs + other.coeffs)

    def __sub__(self, other):
        self._check_compatible(other)
        return self.like(self.coeffs - other.coeffs)

    def __neg__(self):
        return self.like(-self.coeffs)

    def __mul__(self, scalar):
        return self.like(self.coeffs * scalar)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return self.like(self.coeffs / scalar)

    def dot(self, other: "Chain") -> float:
        """Cellular inner product; the canonical generators are orthonormal."""
        self._check_compatible(other)
        return float(np.dot(self.coeffs, other.coeffs))

    def norm(self) -> float:
        return float(np.linalg.norm(self.coeffs))

    def is_zero(self) -> bool:
        return not np.any(self.coeffs)

    def __repr__(self):
        return "Chain(degree={0}, n={1}, norm={2:.6g})".format(
            self.degree, self.config.n, self.norm()
        )
