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
Hodge decomposition L_k = im boundary + im delta + ker Delta in the cellular
inner product, and inversion of Delta on the complement of its kernel.

The kernel is known in closed form: a chain is harmonic iff it is constant
on every parity component (degrees 0 and 3, 8 classes) or on every
(parity component, axis) pair (degrees 1 and 2, 24 classes). Projection onto
it is therefore a per-class mean, and the iterative solver works on the
projected operator, which is positive definite.
"""

import functools
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
import scipy.linalg
from scipy.sparse.linalg import LinearOperator, cg

from lhydro.core import get_complex, boundary, coboundary
from lhydro.core.errors import (
    DenseLimitError,
    InconsistentSourceError,
    LatticeError,
    SolverError,
    SolverNotConverged,
)
from lhydro.core.lattice import Chain, LatticeConfig, _check_degree, dims

logger = logging.getLogger(__name__)

# Iterations between progress reports of the conjugate gradient loop.
REPORT_EVERY = 50
# Largest n for which dense factorisations are attempted.
DENSE_LIMIT = 8
# Singular values below this count towards the nullity of Delta.
NULLITY_THRESHOLD = 1e-8


@dataclass(frozen=True)
class SolverOptions:
    tol: float = 1e-10
    max_iter: Optional[int] = None

    def __post_init__(self):
        if not self.tol > 0:
            raise LatticeError("tol must be positive, got {0}".format(self.tol))
        if self.max_iter is not None and self.max_iter < 1:
            raise LatticeError("max_iter must be >= 1, got {0}".format(self.max_iter))

    def iteration_cap(self, size: int) -> int:
        # 10 sweeps over the cells unless capped explicitly
        return self.max_iter if self.max_iter is not None else 10 * size


@dataclass(frozen=True, eq=False)
class HodgeParts:
    exact: Chain
    coexact: Chain
    harmonic: Chain

    def total(self) -> Chain:
        return self.exact + self.coexact + self.harmonic

    def norms(self) -> Tuple[float, float, float]:
        return self.exact.norm(), self.coexact.norm(), self.harmonic.norm()

    def residuals(self, chain: Chain) -> Tuple[float, float]:
        """(reconstruction error, largest pairwise inner product), absolute."""
        reconstruction = (chain - self.total()).norm()
        orthogonality = max(
            abs(self.exact.dot(self.coexact)),
            abs(self.exact.dot(self.harmonic)),
            abs(self.coexact.dot(self.harmonic)),
        )
        return reconstruction, orthogonality


@functools.lru_cache(maxsize=32)
def harmonic_groups(config: LatticeConfig, degree: int):
    """
    Group id per cell such that ker Delta is spanned by the group
    indicators: the parity component, split by axis in degrees 1 and 2.
    """
    labels = get_complex(config).labels(degree)
    if degree in (1, 2):
        axis = np.arange(dims(config, degree)) // config.sites
        groups = axis * 8 + labels
    else:
        groups = labels.copy()
    counts = np.bincount(groups)
    groups.setflags(write=False)
    counts.setflags(write=False)
    return groups, counts


def _harmonic_part(values: np.ndarray, groups, counts) -> np.ndarray:
    means = np.bincount(groups, weights=values, minlength=counts.size) / counts
    return means[groups]


def harmonic_basis(config: LatticeConfig, degree: int) -> np.ndarray:
    """Orthonormal basis of ker Delta as the columns of a dense matrix."""
    _check_degree(degree)
    groups, counts = harmonic_groups(config, degree)
    basis = np.zeros((groups.size, counts.size))
    basis[np.arange(groups.size), groups] = 1.0
    return basis / np.sqrt(counts)


def harmonic_project(chain: Chain) -> Chain:
    groups, counts = harmonic_groups(chain.config, chain.degree)
    return chain.like(_harmonic_part(np.asarray(chain.coeffs, dtype=float), groups, counts))


def remove_harmonic(chain: Chain) -> Chain:
    return chain - harmonic_project(chain)


def solve_laplacian(chain: Chain, opts: Optional[SolverOptions] = None) -> Chain:
    """
    Return y orthogonal to ker Delta with Delta y = chain - harmonic(chain),
    by conjugate gradients on the kernel-projected operator.
    """
    opts = opts or SolverOptions()
    config, degree = chain.config, chain.degree
    matrix = get_complex(config).laplacian_matrix(degree)
    groups, counts = harmonic_groups(config, degree)

    def project(values):
        return values - _harmonic_part(values, groups, counts)

    rhs = project(np.asarray(chain.coeffs, dtype=float))
    rhs_norm = np.linalg.norm(rhs)
    if rhs_norm == 0.0:
        return Chain.zeros(config, degree)

    size = rhs.size
    operator = LinearOperator(
        (size, size), matvec=lambda x: project(matrix @ project(x)), dtype=float
    )
    iterations = [0]

    def monitor(xk):
        iterations[0] += 1
        if iterations[0] % REPORT_EVERY == 0:
            residual = np.linalg.norm(matrix @ project(xk) - rhs) / rhs_norm
            logger.debug(
                "Laplacian solve, degree %s: iteration %s, relative residual %.3e",
                degree,
                iterations[0],
                residual,
            )

    cap = opts.iteration_cap(size)
    solution, info = cg(
        operator, rhs, rtol=opts.tol, atol=0.0, maxiter=cap, callback=monitor
    )
    solution = project(solution)
    residual = np.linalg.norm(matrix @ solution - rhs) / rhs_norm
    if info > 0:
        raise SolverNotConverged(
            "Laplacian solve did not converge in {0} iterations "
            "(relative residual {1:.3e})".format(cap, residual),
            residual=residual,
            iterations=iterations[0],
        )
    if info < 0 or not np.isfinite(residual):
        raise SolverError(
            "Laplacian solve broke down (info={0})".format(info),
            residual=residual,
            iterations=iterations[0],
        )
    logger.debug(
        "Laplacian solve, degree %s: converged in %s iterations, relative residual %.3e",
        degree,
        iterations[0],
        residual,
    )
    return chain.like(solution)


def hodge_decompose(chain: Chain, opts: Optional[SolverOptions] = None) -> HodgeParts:
    config, degree = chain.config, chain.degree
    harmonic = harmonic_project(chain)
    potential = solve_laplacian(chain, opts)
    if degree < 3:
        exact = boundary(coboundary(potential))
    else:
        exact = Chain.zeros(config, degree)
    if degree > 0:
        coexact = coboundary(boundary(potential))
    else:
        coexact = Chain.zeros(config, degree)
    parts = HodgeParts(exact, coexact, harmonic)
    if logger.isEnabledFor(logging.DEBUG):
        reconstruction, orthogonality = parts.residuals(chain)
        logger.debug(
            "Hodge decomposition, degree %s: reconstruction %.3e, orthogonality %.3e",
            degree,
            reconstruction,
            orthogonality,
        )
    return parts


def solve_poisson_deg0(rhs: Chain, opts: Optional[SolverOptions] = None) -> Chain:
    """Return P orthogonal to ker Delta with -Delta P = rhs."""
    if rhs.degree != 0:
        raise LatticeError("Poisson source must be a degree 0 chain")
    opts = opts or SolverOptions()
    rhs_norm = rhs.norm()
    if rhs_norm == 0.0:
        return Chain.zeros(rhs.config, 0)
    harmonic_norm = harmonic_project(rhs).norm()
    if harmonic_norm > opts.tol * rhs_norm:
        raise InconsistentSourceError(
            "Poisson source has a harmonic component of relative size {0:.3e}".format(
                harmonic_norm / rhs_norm
            ),
            residual=harmonic_norm / rhs_norm,
        )
    return -solve_laplacian(rhs, opts)


# dense paths  --


def _dense_laplacian(config: LatticeConfig, degree: int) -> np.ndarray:
    _check_degree(degree)
    if config.n > DENSE_LIMIT:
        raise DenseLimitError(config.n, DENSE_LIMIT)
    return get_complex(config).laplacian_matrix(degree).toarray().astype(float)


def harmonic_rank(config: LatticeConfig, degree: int) -> int:
    """Numerical nullity of the assembled Laplacian."""
    singular_values = scipy.linalg.svdvals(_dense_laplacian(config, degree))
    return int(np.count_nonzero(singular_values < NULLITY_THRESHOLD))


def dense_nullspace(config: LatticeConfig, degree: int) -> np.ndarray:
    eigenvalues, eigenvectors = scipy.linalg.eigh(_dense_laplacian(config, degree))
    return eigenvectors[:, eigenvalues < NULLITY_THRESHOLD]


def solve_laplacian_dense(chain: Chain) -> Chain:
    """Pseudo-inverse of Delta applied to chain, via eigendecomposition."""
    eigenvalues, eigenvectors = scipy.linalg.eigh(
        _dense_laplacian(chain.config, chain.degree)
    )
    inverse = np.where(eigenvalues < NULLITY_THRESHOLD, 0.0, 1.0 / np.maximum(eigenvalues, NULLITY_THRESHOLD))
    solution = eigenvectors @ (inverse * (eigenvectors.T @ chain.coeffs))
    return chain.like(solution)


def analytic_eigenvalues_deg0(config: LatticeConfig, full: bool = False) -> np.ndarray:
    """
    Spectrum of the degree 0 Laplacian on one parity component, a torus of
    extent M = n/2: sum over axes of 2 - 2 cos(2 pi k_axis / M). With
    full=True the 8 identical component spectra are returned together.
    """
    extent = config.n // 2
    per_axis = 2.0 - 2.0 * np.cos(2.0 * np.pi * np.arange(extent) / extent)
    grid = per_axis[:, None, None] + per_axis[None, :, None] + per_axis[None, None, :]
    eigenvalues = np.sort(grid.ravel())
    if full:
        return np.sort(np.tile(eigenvalues, 8))
    return eigenvalues
