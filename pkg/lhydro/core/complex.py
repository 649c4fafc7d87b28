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

import itertools
import logging
from typing import Dict, Optional

import numpy as np
import scipy.sparse as sparse

from lhydro.core.errors import LatticeError
from lhydro.core.lattice import (
    Chain,
    LatticeConfig,
    _check_degree,
    component_labels,
    dims,
    shift_sites,
)

logger = logging.getLogger(__name__)

# Sign of star on each source degree. With outward cube boundaries and
# right-hand face circulation, star(delta) = boundary(star) forces
# s1 = -s0, s2 = s1, s3 = -s2; vertex -> cube is taken positive.
STAR_SIGNS = {0: 1, 1: -1, 2: -1, 3: 1}


def in_plane_axes(normal: int):
    """(a, b) such that (normal, a, b) is a cyclic permutation of (x, y, z)."""
    return (normal + 1) % 3, (normal + 2) % 3


class CubicalComplex(object):
    """
    The overlapping side-2h cubical complex of a periodic lattice with all
    operators assembled once as integer sparse matrices. Instances are
    immutable after construction; applying an operator never mutates it.
    """

    def __init__(self, config: LatticeConfig, star_signs: Optional[Dict[int, int]] = None):
        self.config = config
        self.star_signs = dict(STAR_SIGNS if star_signs is None else star_signs)
        logger.debug("Assembling cubical complex for n=%s.", config.n)
        self._boundary = {
            1: self._assemble_edge_boundary(),
            2: self._assemble_face_boundary(),
            3: self._assemble_cube_boundary(),
        }
        self._coboundary = {
            k: self._boundary[k + 1].T.tocsr() for k in (0, 1, 2)
        }
        self._star = {
            k: sparse.identity(dims(config, k), dtype=np.int64, format="csr")
            * self.star_signs[k]
            for k in (0, 1, 2, 3)
        }
        self._laplacian = {k: self._assemble_laplacian(k) for k in (0, 1, 2, 3)}
        self._labels = {k: component_labels(config, k) for k in (0, 1, 2, 3)}

    def _shift(self, axis, offset):
        return shift_sites(self.config, axis, offset)

    def _coo(self, rows, cols, data, shape):
        matrix = sparse.coo_matrix(
            (np.concatenate(data), (np.concatenate(rows), np.concatenate(cols))),
            shape=shape,
            dtype=np.int64,
        ).tocsr()
        matrix.eliminate_zeros()
        return matrix

    def _assemble_edge_boundary(self):
        # edge(q, d) -> vertex(q + e_d) - vertex(q - e_d)
        sites = self.config.sites
        base = np.arange(sites)
        rows, cols, data = [], [], []
        for axis in range(3):
            column = axis * sites + base
            for offset, sign in ((1, 1), (-1, -1)):
                rows.append(self._shift(axis, offset))
                cols.append(column)
                data.append(np.full(sites, sign))
        return self._coo(rows, cols, data, (sites, 3 * sites))

    def _assemble_face_boundary(self):
        # face(q, d), circulation about +d:
        #   +edge(q - e_b, a) + edge(q + e_a, b) - edge(q + e_b, a) - edge(q - e_a, b)
        sites = self.config.sites
        base = np.arange(sites)
        rows, cols, data = [], [], []
        for normal in range(3):
            a, b = in_plane_axes(normal)
            column = normal * sites + base
            terms = (
                (a, self._shift(b, -1), 1),
                (b, self._shift(a, 1), 1),
                (a, self._shift(b, 1), -1),
                (b, self._shift(a, -1), -1),
            )
            for axis, site, sign in terms:
                rows.append(axis * sites + site)
                cols.append(column)
                data.append(np.full(sites, sign))
        return self._coo(rows, cols, data, (3 * sites, 3 * sites))

    def _assemble_cube_boundary(self):
        # cube(q) -> sum_d face(q + e_d, d) - face(q - e_d, d), outward normals
        sites = self.config.sites
        base = np.arange(sites)
        rows, cols, data = [], [], []
        for axis in range(3):
            for offset, sign in ((1, 1), (-1, -1)):
                rows.append(axis * sites + self._shift(axis, offset))
                cols.append(base)
                data.append(np.full(sites, sign))
        return self._coo(rows, cols, data, (3 * sites, sites))

    def _assemble_laplacian(self, degree):
        size = dims(self.config, degree)
        laplacian = sparse.csr_matrix((size, size), dtype=np.int64)
        if degree < 3:
            laplacian = laplacian + self._boundary[degree + 1] @ self._coboundary[degree]
        if degree > 0:
            laplacian = laplacian + self._coboundary[degree - 1] @ self._boundary[degree]
        laplacian = laplacian.tocsr()
        laplacian.eliminate_zeros()
        return laplacian

    # assembled matrices --

    def boundary_matrix(self, degree: int):
        _check_degree(degree, (1, 2, 3))
        return self._boundary[degree]

    def coboundary_matrix(self, degree: int):
        _check_degree(degree, (0, 1, 2))
        return self._coboundary[degree]

    def star_matrix(self, degree: int):
        _check_degree(degree)
        return self._star[degree]

    def laplacian_matrix(self, degree: int):
        _check_degree(degree)
        return self._laplacian[degree]

    def labels(self, degree: int) -> np.ndarray:
        _check_degree(degree)
        return self._labels[degree]

    def restrict(self, matrix, row_degree: int, col_degree: int, label: int):
        """Block of an operator between the cells of one parity component."""
        rows = np.flatnonzero(self._labels[row_degree] == label)
        cols = np.flatnonzero(self._labels[col_degree] == label)
        return matrix[rows][:, cols]

    # operators on chains --

    def _own(self, chain: Chain):
        if chain.config != self.config:
            raise LatticeError(
                "Chain lives on {0}, complex on {1}".format(chain.config, self.config)
            )

    def boundary(self, chain: Chain) -> Chain:
        self._own(chain)
        if chain.degree == 0:
            raise LatticeError("The boundary of a degree 0 chain is undefined")
        return Chain(
            chain.degree - 1, self._boundary[chain.degree] @ chain.coeffs, self.config
        )

    def coboundary(self, chain: Chain) -> Chain:
        self._own(chain)
        if chain.degree == 3:
            raise LatticeError("The coboundary of a degree 3 chain is undefined")
        return Chain(
            chain.degree + 1, self._coboundary[chain.degree] @ chain.coeffs, self.config
        )

    def star(self, chain: Chain) -> Chain:
        self._own(chain)
        return Chain(3 - chain.degree, self._star[chain.degree] @ chain.coeffs, self.config)

    def laplacian(self, chain: Chain) -> Chain:
        self._own(chain)
        return Chain(chain.degree, self._laplacian[chain.degree] @ chain.coeffs, self.config)


def derive_star_signs(config: LatticeConfig) -> Dict[int, int]:
    """
    Solve for the per-degree star signs. Every candidate in {-1, +1}^4 with
    vertex -> cube positive is tried against star(delta) = boundary(star),
    star(boundary) = delta(star) and star(star) = id on the assembled
    matrices; exactly one candidate survives.
    """
    complex_ = CubicalComplex(config)
    found = []
    for signs in itertools.product((1, -1), repeat=3):
        candidate = {0: 1, 1: signs[0], 2: signs[1], 3: signs[2]}
        if not star_identities_hold(complex_, candidate):
            continue
        found.append(candidate)
    if len(found) != 1:
        raise LatticeError("Star signs are not unique: {0}".format(found))
    logger.debug("Derived star signs %s for n=%s.", found[0], config.n)
    return found[0]


def star_identities_hold(complex_: CubicalComplex, signs: Dict[int, int]) -> bool:
    star = {
        k: sparse.identity(dims(complex_.config, k), dtype=np.int64, format="csr")
        * signs[k]
        for k in range(4)
    }
    for k in range(3):
        # star_{k+1} delta_k  vs  boundary_{3-k} star_k   (L_k -> L_{2-k})
        lhs = star[k + 1] @ complex_.coboundary_matrix(k)
        rhs = complex_.boundary_matrix(3 - k) @ star[k]
        if (lhs - rhs).count_nonzero():
            return False
    for k in range(1, 4):
        # star_{k-1} boundary_k  vs  delta_{3-k} star_k   (L_k -> L_{4-k})
        lhs = star[k - 1] @ complex_.boundary_matrix(k)
        rhs = complex_.coboundary_matrix(3 - k) @ star[k]
        if (lhs - rhs).count_nonzero():
            return False
    for k in range(4):
        if (star[3 - k] @ star[k] - sparse.identity(star[k].shape[0], dtype=np.int64)).count_nonzero():
            return False
    return True
