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

import functools
import math

import numpy as np
import pytest

from lhydro.core import boundary, coboundary
from lhydro.core.dynamics import (
    ADVECTIVE_SAFETY,
    VISCOUS_SAFETY,
    SimState,
    compute_pressure,
    diagnostics,
    project_divergence_free,
    rhs,
    step,
    suggest_dt,
)
from lhydro.core.errors import InstabilityError, LatticeError
from lhydro.core.fields import VectorField, braces, nonlinear_term, unbraces
from lhydro.core.hodge import harmonic_project
from lhydro.core.lattice import Chain, LatticeConfig
from lhydro.initial import random_solenoidal, shear, shear_eigenvalue
from lhydro.utils.config import RunConfig


def projected_random(n=4, amplitude=0.05, seed=0):
    field = random_solenoidal(RunConfig(n=n, amplitude=amplitude, seed=seed))
    return project_divergence_free(braces(field))


def shear_state(nu, dt, n=4, nonlinear=False):
    return SimState(0.0, braces(shear(RunConfig(n=n))), nu, dt, nonlinear)


def run(state, steps, scheme="rk4"):
    for _ in range(steps):
        state = step(state, scheme)
    return state


def test_state_validation():
    u = braces(VectorField.zeros(LatticeConfig(4)))
    with pytest.raises(LatticeError):
        SimState(0.0, u, -1.0, 0.1)
    with pytest.raises(LatticeError):
        SimState(0.0, u, 0.1, 0.0)
    with pytest.raises(LatticeError):
        SimState(0.0, Chain.zeros(LatticeConfig(4), 2), 0.1, 0.1)


def test_unknown_scheme():
    state = shear_state(0.1, 0.1)
    with pytest.raises(LatticeError):
        step(state, "leapfrog")


def test_projection():
    config = LatticeConfig(4)
    rng = np.random.default_rng(1)
    u = Chain(1, rng.standard_normal(192), config)
    v = project_divergence_free(u)
    assert boundary(v).norm() <= 1e-10 * u.norm()
    # idempotent, harmonic part untouched
    assert (project_divergence_free(v) - v).norm() <= 1e-10 * u.norm()
    assert (harmonic_project(v) - harmonic_project(u)).norm() <= 1e-12 * u.norm()


def test_projection_removes_gradients():
    config = LatticeConfig(4)
    f = Chain(0, np.random.default_rng(2).standard_normal(64), config)
    assert project_divergence_free(coboundary(f)).norm() <= 1e-9 * f.norm()


def test_pressure_restores_zero_divergence():
    u = projected_random()
    transport = nonlinear_term(unbraces(u))
    pressure = compute_pressure(u)
    assert transport.norm() > 0
    residual = boundary(transport + coboundary(pressure))
    assert residual.norm() <= 1e-8 * transport.norm()
    assert harmonic_project(pressure).norm() <= 1e-9 * pressure.norm()


def test_rhs_is_divergence_free():
    u = projected_random(seed=3)
    derivative = rhs(u, 0.05)
    assert boundary(derivative).norm() <= 1e-8 * derivative.norm()


def test_uniform_flow_is_a_fixed_point():
    config = LatticeConfig(4)
    u = braces(VectorField.uniform(config, (1.0, -0.5, 0.25)))
    assert rhs(u, 0.1).norm() <= 1e-12 * u.norm()
    state = run(SimState(0.0, u, 0.1, 0.05), 5)
    assert (state.u - u).norm() <= 1e-12 * u.norm()
    assert state.t == pytest.approx(0.25)
    assert state.step_index == 5


def test_divergence_stays_small_over_rk4_run():
    state = SimState(0.0, projected_random(amplitude=0.02), 0.01, 0.01)
    for _ in range(100):
        state = step(state, "rk4")
        assert boundary(state.u).norm() <= 1e-7 * state.u.norm()


@pytest.mark.parametrize("n", (4, 6))
def test_viscous_decay_of_shear_mode(n):
    nu, dt, steps = 0.1, 0.01, 100
    state = shear_state(nu, dt, n=n)
    initial = state.u
    state = run(state, steps)
    expected = math.exp(-nu * shear_eigenvalue(n) * steps * dt)
    ratio = state.u.dot(initial) / initial.dot(initial)
    assert ratio == pytest.approx(expected, rel=1e-2)
    assert ratio == pytest.approx(expected, rel=1e-8)


def test_shear_decays_with_transport_enabled():
    nu, dt, steps = 0.1, 0.01, 100
    diffused = run(shear_state(nu, dt), steps)
    transported = run(shear_state(nu, dt, nonlinear=True), steps)
    assert (diffused.u - transported.u).norm() <= 1e-12 * diffused.u.norm()


def test_kinetic_energy_decay():
    nu, dt, steps = 0.1, 0.02, 50
    state = shear_state(nu, dt)
    before = diagnostics(state).kinetic_energy
    state = run(state, steps)
    after = diagnostics(state).kinetic_energy
    expected = math.exp(-2 * nu * shear_eigenvalue(4) * steps * dt)
    assert after / before == pytest.approx(expected, rel=1e-2)


def final_error(scheme, dt, t_end=1.0, nu=0.1):
    steps = int(round(t_end / dt))
    state = shear_state(nu, dt)
    exact = state.u * math.exp(-nu * shear_eigenvalue(4) * t_end)
    return (run(state, steps, scheme).u - exact).norm()


@pytest.mark.parametrize("scheme, order, spread", (("euler", 1.0, 0.2), ("rk4", 4.0, 0.3)))
def test_integrator_order(scheme, order, spread):
    slope = math.log2(final_error(scheme, 0.1) / final_error(scheme, 0.05))
    assert abs(slope - order) <= spread


@pytest.mark.parametrize("alpha", (3.0, -0.5))
def test_rhs_is_quadratic(alpha):
    u = projected_random(seed=5)
    expected = alpha ** 2 * rhs(u, 0.0)
    scaled = rhs(alpha * u, 0.0)
    assert (scaled - expected).norm() <= 1e-10 * expected.norm()


@functools.lru_cache(maxsize=None)
def transported_reference(t_end=1.0, nu=0.01, dt=0.005):
    steps = int(round(t_end / dt))
    return run(SimState(0.0, projected_random(), nu, dt), steps).u


def transported_error(scheme, dt, t_end=1.0, nu=0.01):
    steps = int(round(t_end / dt))
    state = SimState(0.0, projected_random(), nu, dt)
    return (run(state, steps, scheme).u - transported_reference(t_end, nu)).norm()


@pytest.mark.parametrize("scheme, order, spread", (("euler", 1.0, 0.2), ("rk4", 4.0, 0.3)))
def test_integrator_order_with_transport(scheme, order, spread):
    slope = math.log2(transported_error(scheme, 0.1) / transported_error(scheme, 0.05))
    assert abs(slope - order) <= spread


def test_instability_is_reported():
    state = shear_state(1e100, 1.0)
    with pytest.raises(InstabilityError) as exc_info:
        run(state, 10, "euler")
    assert 1 <= exc_info.value.step <= 10


def test_suggest_dt():
    config = LatticeConfig(4, h=0.5)
    still = braces(VectorField.zeros(config))
    assert suggest_dt(SimState(0.0, still, 0.0, 1.0), dt_max=0.3) == 0.3
    assert suggest_dt(SimState(0.0, still, 0.5, 1.0)) == pytest.approx(
        VISCOUS_SAFETY * 1.0 / 0.5
    )
    moving = braces(VectorField.uniform(config, (0.0, 3.0, 4.0)))
    assert suggest_dt(SimState(0.0, moving, 0.0, 1.0)) == pytest.approx(
        ADVECTIVE_SAFETY * 1.0 / 5.0
    )
    both = SimState(0.0, moving, 1e3, 1.0)
    assert suggest_dt(both) == pytest.approx(VISCOUS_SAFETY * 1.0 / 1e3)


def test_diagnostics_of_zero_state():
    state = SimState(0.0, braces(VectorField.zeros(LatticeConfig(4))), 0.1, 0.1)
    result = diagnostics(state)
    assert result.kinetic_energy == 0.0
    assert result.divergence_norm == 0.0
    assert result.momentum == (0.0, 0.0, 0.0)
    assert result.enstrophy == 0.0
    assert result.hodge_norms == (0.0, 0.0, 0.0)


def test_diagnostics_of_uniform_flow():
    config = LatticeConfig(4)
    state = SimState(0.0, braces(VectorField.uniform(config, (1.0, 2.0, 3.0))), 0.1, 0.1)
    result = diagnostics(state)
    assert result.momentum == (64.0, 128.0, 192.0)
    assert result.kinetic_energy == pytest.approx(0.5 * 64 * 14)
    assert result.enstrophy == 0.0
    # a uniform flow is harmonic
    exact, coexact, harmonic = result.hodge_norms
    assert harmonic == pytest.approx(math.sqrt(64 * 14))
    assert exact == coexact == 0.0


def test_diagnostics_hodge_norms_add_up():
    state = SimState(0.0, projected_random(seed=9), 0.1, 0.1)
    exact, coexact, harmonic = diagnostics(state).hodge_norms
    assert exact ** 2 + coexact ** 2 + harmonic ** 2 == pytest.approx(
        state.u.norm() ** 2, rel=1e-9
    )
