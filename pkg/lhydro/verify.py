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
Structural self-checks of the complex, its operators and the Hodge solver.
Algebraic identities are checked exactly on the integer matrices; solver
results are checked against relative tolerances.
"""

import logging
import sys
from typing import List, NamedTuple

import numpy as np
import scipy.linalg
import scipy.sparse as sparse

from lhydro.core import laplacian
from lhydro.core.complex import STAR_SIGNS, CubicalComplex
from lhydro.core.errors import DenseLimitError
from lhydro.core.fields import VectorField, nonlinear_term, nonlinear_term_reference, scalar_laplacian
from lhydro.core.hodge import (
    DENSE_LIMIT,
    SolverOptions,
    analytic_eigenvalues_deg0,
    dense_nullspace,
    harmonic_basis,
    harmonic_rank,
    hodge_decompose,
)
from lhydro.core.lattice import Chain, LatticeConfig, dims
from lhydro.initial import random_generator

logger = logging.getLogger(__name__)

HARMONIC_RANKS = (8, 24, 24, 8)
HODGE_TOL = 1e-10
ORACLE_TOL = 1e-12
SPECTRUM_TOL = 1e-9


class CheckResult(NamedTuple):
    name: str
    passed: bool
    detail: str


def _is_zero(matrix) -> bool:
    return sparse.csr_matrix(matrix).count_nonzero() == 0


class VerificationSuite(object):
    def __init__(
        self,
        config: LatticeConfig,
        samples: int = 20,
        seed: int = 0,
        corrupt_star: bool = False,
    ):
        if config.n > DENSE_LIMIT:
            raise DenseLimitError(config.n, DENSE_LIMIT)
        self.config = config
        self.samples = samples
        self.rng = random_generator(seed)
        signs = dict(STAR_SIGNS)
        if corrupt_star:
            # debug hook: a wrong sign on edges must be caught
            signs[1] = -signs[1]
        self.complex = CubicalComplex(config, star_signs=signs)
        self.opts = SolverOptions(tol=HODGE_TOL)

    checks = (
        "dims",
        "boundary_squared",
        "coboundary_squared",
        "coboundary_is_transpose",
        "star_intertwines",
        "star_involution",
        "harmonic_ranks",
        "harmonic_basis",
        "hodge",
        "component_partition",
        "laplacian_commutes",
        "analytic_spectrum",
        "nonlinear_oracle",
        "stencil",
    )

    def run(self, out=None) -> List[CheckResult]:
        out = out or sys.stdout
        results = []
        for name in self.checks:
            try:
                passed, detail = getattr(self, "check_" + name)()
            except Exception as e:
                logger.exception("Check %s raised.", name)
                passed, detail = False, "raised {0}: {1}".format(type(e).__name__, e)
            result = CheckResult(name, bool(passed), detail)
            out.write(
                "{0} {1}: {2}\n".format("PASS" if passed else "FAIL", name, detail)
            )
            results.append(result)
        return results

    def _random_chain(self, degree):
        return Chain(
            degree, self.rng.standard_normal(dims(self.config, degree)), self.config
        )

    def check_dims(self):
        n = self.config.n
        found = tuple(dims(self.config, k) for k in range(4))
        expected = (n ** 3, 3 * n ** 3, 3 * n ** 3, n ** 3)
        shapes = tuple(self.complex.boundary_matrix(k).shape for k in (1, 2, 3))
        ok = found == expected and shapes == (
            (expected[0], expected[1]),
            (expected[1], expected[2]),
            (expected[2], expected[3]),
        )
        return ok, "dims {0}".format(found)

    def check_boundary_squared(self):
        b = self.complex.boundary_matrix
        ok = _is_zero(b(1) @ b(2)) and _is_zero(b(2) @ b(3))
        return ok, "exact on integer matrices"

    def check_coboundary_squared(self):
        d = self.complex.coboundary_matrix
        ok = _is_zero(d(1) @ d(0)) and _is_zero(d(2) @ d(1))
        return ok, "exact on integer matrices"

    def check_coboundary_is_transpose(self):
        ok = all(
            _is_zero(
                self.complex.coboundary_matrix(k) - self.complex.boundary_matrix(k + 1).T
            )
            for k in range(3)
        )
        return ok, "delta_k == boundary_(k+1)^T"

    def check_star_intertwines(self):
        c = self.complex
        failures = []
        for k in range(3):
            lhs = c.star_matrix(k + 1) @ c.coboundary_matrix(k)
            rhs = c.boundary_matrix(3 - k) @ c.star_matrix(k)
            if not _is_zero(lhs - rhs):
                failures.append("star delta != boundary star on degree {0}".format(k))
        for k in range(1, 4):
            lhs = c.star_matrix(k - 1) @ c.boundary_matrix(k)
            rhs = c.coboundary_matrix(3 - k) @ c.star_matrix(k)
            if not _is_zero(lhs - rhs):
                failures.append("star boundary != delta star on degree {0}".format(k))
        return not failures, "; ".join(failures) or "all degrees"

    def check_star_involution(self):
        c = self.complex
        failures = [
            k
            for k in range(4)
            if not _is_zero(
                c.star_matrix(3 - k) @ c.star_matrix(k)
                - sparse.identity(dims(self.config, k), dtype=np.int64)
            )
        ]
        return not failures, "failing degrees {0}".format(failures) if failures else "all degrees"

    def check_harmonic_ranks(self):
        ranks = tuple(harmonic_rank(self.config, k) for k in range(4))
        return ranks == HARMONIC_RANKS, "ranks {0}".format(ranks)

    def check_harmonic_basis(self):
        worst = 0.0
        for k in range(4):
            closed = harmonic_basis(self.config, k)
            dense = dense_nullspace(self.config, k)
            if closed.shape[1] != dense.shape[1]:
                return False, "degree {0}: {1} vs {2} vectors".format(
                    k, closed.shape[1], dense.shape[1]
                )
            worst = max(
                worst,
                np.abs(dense - closed @ (closed.T @ dense)).max(),
                np.abs(closed - dense @ (dense.T @ closed)).max(),
            )
        return worst <= HODGE_TOL, "mutual projection residual {0:.2e}".format(worst)

    def check_hodge(self):
        worst = 0.0
        for k in range(4):
            for _ in range(self.samples):
                chain = self._random_chain(k)
                scale = chain.norm()
                parts = hodge_decompose(chain, self.opts)
                reconstruction, orthogonality = parts.residuals(chain)
                cycles = []
                if k > 0:
                    cycles.append(self.complex.boundary(parts.harmonic).norm())
                if k < 3:
                    cycles.append(self.complex.coboundary(parts.harmonic).norm())
                worst = max(
                    worst,
                    reconstruction / scale,
                    orthogonality / scale ** 2,
                    max(cycles) / scale,
                )
        return worst <= HODGE_TOL, "worst relative residual {0:.2e}".format(worst)

    def check_component_partition(self):
        c = self.complex
        half = self.config.n // 2
        for k in (1, 2, 3):
            matrix = sparse.coo_matrix(c.boundary_matrix(k))
            if np.any(c.labels(k - 1)[matrix.row] != c.labels(k)[matrix.col]):
                return False, "boundary mixes components in degree {0}".format(k)
        for k in range(4):
            counts = np.bincount(c.labels(k), minlength=8)
            # each component is a copy of the n/2 lattice
            expected = (1 if k in (0, 3) else 3) * half ** 3
            if counts.size != 8 or np.any(counts != expected):
                return False, "component sizes {0} in degree {1}".format(counts, k)
        matrix = c.laplacian_matrix(0)
        labels = c.labels(0)
        order = np.argsort(labels, kind="stable")
        permuted = matrix[order][:, order].toarray()
        block = half ** 3
        first = permuted[:block, :block]
        for label in range(8):
            rows = slice(label * block, (label + 1) * block)
            if not np.array_equal(permuted[rows, rows], first):
                return False, "block {0} differs".format(label)
            off = permuted[rows].copy()
            off[:, rows] = 0
            if np.any(off):
                return False, "block {0} couples to other components".format(label)
        return True, "8 components of {0} sites".format(block)

    def check_laplacian_commutes(self):
        c = self.complex
        for k in (1, 2, 3):
            lhs = c.laplacian_matrix(k - 1) @ c.boundary_matrix(k)
            rhs = c.boundary_matrix(k) @ c.laplacian_matrix(k)
            if not _is_zero(lhs - rhs):
                return False, "Delta boundary != boundary Delta in degree {0}".format(k)
        return True, "exact on integer matrices"

    def check_analytic_spectrum(self):
        dense = self.complex.laplacian_matrix(0).toarray().astype(float)
        numeric = np.sort(scipy.linalg.eigvalsh(dense))
        analytic = analytic_eigenvalues_deg0(self.config, full=True)
        error = np.abs(numeric - analytic).max()
        return error <= SPECTRUM_TOL, "max eigenvalue error {0:.2e}".format(error)

    def check_nonlinear_oracle(self):
        worst = 0.0
        # the cell-by-cell oracle is slow; a handful of fields suffices
        for _ in range(max(1, min(self.samples, 5))):
            field = VectorField(
                self.rng.uniform(-1.0, 1.0, size=(3,) + self.config.shape), self.config
            )
            fast = nonlinear_term(field)
            slow = nonlinear_term_reference(field)
            worst = max(worst, (fast - slow).norm() / max(slow.norm(), 1e-300))
        return worst <= ORACLE_TOL, "worst relative difference {0:.2e}".format(worst)

    def check_stencil(self):
        for _ in range(self.samples):
            values = self.rng.integers(-1000, 1000, size=dims(self.config, 0))
            scalar = Chain(0, values, self.config)
            if not np.array_equal(scalar_laplacian(scalar).coeffs, -laplacian(scalar).coeffs):
                return False, "stencil differs from -(boundary delta)"
        return True, "stencil == -(boundary delta), exact"


def run_suite(config: LatticeConfig, out=None, **kwargs) -> bool:
    results = VerificationSuite(config, **kwargs).run(out)
    failed = [r.name for r in results if not r.passed]
    if failed:
        logger.error("Verification failed: %s", ", ".join(failed))
    else:
        logger.info("All %s checks passed for n=%s.", len(results), config.n)
    return not failed
