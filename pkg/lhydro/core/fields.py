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

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from lhydro.core import boundary, coboundary, star
from lhydro.core.errors import LatticeError
from lhydro.core.lattice import Chain, CellId, LatticeConfig, SiteIndex, site_index


@dataclass(frozen=True, eq=False)
class VectorField:
    """
    Lattice vector field: one 3-vector per site, the mean velocity over the
    side-2h cube centred there. Stored component-major, shape (3, n, n, n).
    """

    values: np.ndarray
    config: LatticeConfig

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        if values.shape != (3,) + self.config.shape:
            raise LatticeError(
                "Vector field needs shape {0}, got {1}".format(
                    (3,) + self.config.shape, values.shape
                )
            )
        object.__setattr__(self, "values", values)

    @classmethod
    def zeros(cls, config: LatticeConfig) -> "VectorField":
        return cls(np.zeros((3,) + config.shape), config)

    @classmethod
    def uniform(cls, config: LatticeConfig, vector) -> "VectorField":
        values = np.empty((3,) + config.shape)
        values[:] = np.asarray(vector, dtype=float)[:, None, None, None]
        return cls(values, config)

    def at(self, site) -> np.ndarray:
        i, j, k = SiteIndex.of(site, self.config.n)
        return self.values[:, i, j, k].copy()

    def is_finite(self) -> bool:
        return bool(np.all(np.isfinite(self.values)))

    def max_speed(self) -> float:
        return float(np.sqrt((self.values ** 2).sum(axis=0)).max())

    def norm(self) -> float:
        return float(np.linalg.norm(self.values))

    def __add__(self, other):
        return VectorField(self.values + other.values, self.config)

    def __sub__(self, other):
        return VectorField(self.values - other.values, self.config)

    def __mul__(self, scalar):
        return VectorField(self.values * scalar, self.config)

    __rmul__ = __mul__


@dataclass(frozen=True, eq=False)
class VectorValuedCochain:
    """
    A 3-vector per canonical face (degree 2) or cube (degree 3), kept as three
    parallel scalar chains, one per tangent direction. Reversing a cell's
    orientation negates its value.
    """

    degree: int
    components: Tuple[Chain, Chain, Chain]

    def __post_init__(self):
        if self.degree not in (2, 3):
            raise LatticeError("Vector valued cochains live in degree 2 or 3")
        if len(self.components) != 3 or any(c.degree != self.degree for c in self.components):
            raise LatticeError("Expected three degree {0} component chains".format(self.degree))

    @property
    def config(self) -> LatticeConfig:
        return self.components[0].config

    def at(self, cell: CellId, orientation: int = 1) -> np.ndarray:
        return np.array([c.coefficient(cell, orientation) for c in self.components])

    def coboundary(self) -> "VectorValuedCochain":
        """Sum over the outward oriented faces of each cube, per component."""
        if self.degree != 2:
            raise LatticeError("Only face valued cochains have a coboundary here")
        return VectorValuedCochain(3, tuple(coboundary(c) for c in self.components))


def braces(field: VectorField) -> Chain:
    """The chain with V(q)_d on the edge of direction d centred at q."""
    return Chain(1, field.values.reshape(-1).copy(), field.config)


def unbraces(chain: Chain) -> VectorField:
    if chain.degree != 1:
        raise LatticeError("Only degree 1 chains correspond to vector fields")
    return VectorField(
        np.asarray(chain.coeffs, dtype=float).reshape((3,) + chain.config.shape),
        chain.config,
    )


def face_velocity(
    field: VectorField, face: CellId, orientation: int = 1
) -> Tuple[np.ndarray, float]:
    """
    (V_F, v_F) for a face of side 2h: V_F = 2h V(center), v_F its component
    along the oriented normal. Reversing the face flips v_F only.
    """
    if face.degree != 2:
        raise LatticeError("{0} is not a face".format(face))
    face_vector = 2.0 * field.config.h * field.at(face.center)
    return face_vector, float(orientation * face_vector[face.axis])


def momentum_flux(field: VectorField) -> VectorValuedCochain:
    """V_F * v_F on every canonical face: (2h)^2 V_d(q) V(q) on face(q, d)."""
    scale = (2.0 * field.config.h) ** 2
    # flux[c, d] = component c on the faces of normal d
    flux = scale * field.values[:, None] * field.values[None, :]
    config = field.config
    return VectorValuedCochain(
        2, tuple(Chain(2, flux[c].reshape(-1), config) for c in range(3))
    )


def nonlinear_term(field: VectorField) -> Chain:
    """{star delta (V_F v_F)}: net momentum transfer into each cube."""
    cube_values = momentum_flux(field).coboundary()
    site_values = np.stack([star(c).coeffs for c in cube_values.components])
    return Chain(1, site_values.reshape(-1), field.config)


def nonlinear_term_reference(field: VectorField) -> Chain:
    """
    Cell-by-cell evaluation of the transport term: for every cube, add the
    flux of its six faces with outward signs and place the sum at the
    centre. Slow; kept as an independent check of nonlinear_term.
    """
    config = field.config
    n = config.n
    values = np.zeros((3,) + config.shape)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                center = SiteIndex(i, j, k)
                total = np.zeros(3)
                for axis in range(3):
                    for outward in (1, -1):
                        face = CellId.face(center.shifted(axis, outward, n), axis)
                        face_vector, normal = face_velocity(field, face, outward)
                        total += face_vector * normal
                values[:, i, j, k] = total
    # star on cubes is positive: the cube orientation agrees with space
    return Chain(1, values.reshape(-1), config)


def divergence(field: VectorField) -> Chain:
    return boundary(braces(field))


def gradient(scalar: Chain) -> Chain:
    """Difference of the values at the two endpoints of each edge."""
    if scalar.degree != 0:
        raise LatticeError("Gradient takes a degree 0 chain")
    return coboundary(scalar)


def curl(field: VectorField) -> VectorField:
    return unbraces(star(coboundary(braces(field))))


def scalar_laplacian(scalar: Chain) -> Chain:
    """
    Seven point stencil at distance 2h: neighbours minus six times the centre.
    This is -(boundary delta) in the positive semidefinite convention.
    """
    if scalar.degree != 0:
        raise LatticeError("The scalar Laplacian takes a degree 0 chain")
    values = np.asarray(scalar.coeffs).reshape(scalar.config.shape)
    result = -6 * values
    for axis in range(3):
        result = result + np.roll(values, 2, axis=axis) + np.roll(values, -2, axis=axis)
    return scalar.like(result.reshape(-1))


def site_value(scalar: Chain, site) -> float:
    if scalar.degree not in (0, 3):
        raise LatticeError("Site values belong to degree 0 or 3 chains")
    return scalar.coeffs[site_index(site, scalar.config)]
