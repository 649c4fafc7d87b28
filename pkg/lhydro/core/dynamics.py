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
Time evolution of the velocity chain u = {V_L}:

    du/dt = {star delta (V_F v_F)} + delta P - nu Delta u,   boundary(u) = 0

with P chosen so that the first two terms together have zero boundary.
"""

import logging
from dataclasses import dataclass, replace
from typing import Optional, Tuple

import numpy as np

from lhydro.core import boundary, coboundary, laplacian, star
from lhydro.core.errors import InstabilityError, LatticeError
from lhydro.core.fields import nonlinear_term, unbraces
from lhydro.core.hodge import (
    SolverOptions,
    hodge_decompose,
    remove_harmonic,
    solve_laplacian,
    solve_poisson_deg0,
)
from lhydro.core.lattice import Chain, LatticeConfig

logger = logging.getLogger(__name__)

# suggest_dt safety constants
# The transport term carries a (2h)^2 flux factor, so its rate is about
# 28 max|V| at h = 1; 0.05 keeps RK4 inside its imaginary-axis limit.
ADVECTIVE_SAFETY = 0.05
# (2h)^2 / 32 / nu at h = 1 times the spectral radius 12 of Delta is 1.5,
# inside the real-axis limit of both schemes
VISCOUS_SAFETY = 1.0 / 32.0
DEFAULT_DT_MAX = 0.1

PROJECTION_OPTIONS = SolverOptions(tol=1e-10)


@dataclass(frozen=True, eq=False)
class SimState:
    t: float
    u: Chain
    nu: float
    dt: float
    # False drops the transport and pressure terms (pure diffusion)
    nonlinear: bool = True
    step_index: int = 0

    def __post_init__(self):
        if self.u.degree != 1:
            raise LatticeError("The velocity is a degree 1 chain")
        if not self.nu >= 0:
            raise LatticeError("nu must be >= 0, got {0}".format(self.nu))
        if not self.dt > 0:
            raise LatticeError("dt must be > 0, got {0}".format(self.dt))

    @property
    def config(self) -> LatticeConfig:
        return self.u.config


@dataclass(frozen=True)
class Diagnostics:
    kinetic_energy: float
    divergence_norm: float
    momentum: Tuple[float, float, float]
    enstrophy: float
    # (exact, coexact, harmonic)
    hodge_norms: Tuple[float, float, float]


def _pressure_for(transport: Chain, opts: Optional[SolverOptions]) -> Chain:
    # boundary(transport) lies in im boundary; only roundoff is harmonic
    source = remove_harmonic(boundary(transport))
    return solve_poisson_deg0(source, opts)


def compute_pressure(u: Chain, opts: Optional[SolverOptions] = None) -> Chain:
    """P with -Delta P = boundary {star delta (V_F v_F)}, free of harmonics."""
    return _pressure_for(nonlinear_term(unbraces(u)), opts)


def rhs(
    u: Chain, nu: float, opts: Optional[SolverOptions] = None, nonlinear: bool = True
) -> Chain:
    result = -nu * laplacian(u)
    if nonlinear:
        transport = nonlinear_term(unbraces(u))
        pressure = _pressure_for(transport, opts)
        result = transport + coboundary(pressure) + result
    return result


def project_divergence_free(u: Chain, opts: Optional[SolverOptions] = None) -> Chain:
    """u - delta Delta^-1 boundary u; only the im delta Hodge part changes."""
    source = boundary(u)
    if source.is_zero():
        return u
    return u - coboundary(solve_laplacian(source, opts or PROJECTION_OPTIONS))


def _euler(u, dt, derivative):
    return u + dt * derivative(u)


def _rk4(u, dt, derivative):
    k1 = derivative(u)
    k2 = derivative(u + (0.5 * dt) * k1)
    k3 = derivative(u + (0.5 * dt) * k2)
    k4 = derivative(u + dt * k3)
    return u + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


SCHEMES = {"euler": _euler, "rk4": _rk4}


def step(
    state: SimState, scheme: str = "rk4", opts: Optional[SolverOptions] = None
) -> SimState:
    try:
        integrate = SCHEMES[scheme]
    except KeyError:
        raise LatticeError(
            "Unknown scheme {0!r}, expected one of {1}".format(scheme, sorted(SCHEMES))
        )

    def derivative(u):
        return rhs(u, state.nu, opts, state.nonlinear)

    next_index = state.step_index + 1
    with np.errstate(over="ignore", invalid="ignore"):
        u = integrate(state.u, state.dt, derivative)
    if not np.all(np.isfinite(u.coeffs)):
        logger.error("Non-finite velocity at step %s (dt=%s).", next_index, state.dt)
        raise InstabilityError(next_index)
    u = project_divergence_free(u, PROJECTION_OPTIONS)
    logger.debug("Step %s done, t=%.6g.", next_index, state.t + state.dt)
    return replace(state, t=state.t + state.dt, u=u, step_index=next_index)


def suggest_dt(state: SimState, dt_max: float = DEFAULT_DT_MAX) -> float:
    """
    min(c_adv 2h / max|V|, c_visc (2h)^2 / nu); a vanishing scale drops out
    and dt_max is returned only when both do.
    """
    spacing = 2.0 * state.config.h
    speed = unbraces(state.u).max_speed()
    bounds = []
    if speed > 0:
        bounds.append(ADVECTIVE_SAFETY * spacing / speed)
    if state.nu > 0:
        bounds.append(VISCOUS_SAFETY * spacing ** 2 / state.nu)
    if not bounds:
        return dt_max
    return min(bounds)


def diagnostics(state: SimState, opts: Optional[SolverOptions] = None) -> Diagnostics:
    u = state.u
    momentum = u.coeffs.reshape(3, -1).sum(axis=1)
    return Diagnostics(
        kinetic_energy=0.5 * u.norm() ** 2,
        divergence_norm=boundary(u).norm(),
        momentum=tuple(float(p) for p in momentum),
        enstrophy=star(coboundary(u)).norm() ** 2,
        hodge_norms=hodge_decompose(u, opts).norms(),
    )
