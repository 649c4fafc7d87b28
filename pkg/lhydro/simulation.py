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

import logging
import math

from lhydro.core.dynamics import SimState, diagnostics, step, suggest_dt
from lhydro.core.fields import braces, unbraces
from lhydro.core.log_worker import LogWorker
from lhydro.initial import make_initial
from lhydro.utils.config import RunConfig
from lhydro.utils.snapshot import snapshot_name, write_snapshot

logger = logging.getLogger(__name__)


def number_of_steps(t_end: float, dt: float) -> int:
    if t_end <= 0:
        return 0
    # tolerate t_end being a float multiple of dt
    return max(1, int(math.ceil(t_end / dt - 1e-9)))


class Simulation(object):
    """
    One run of a configuration: initial condition, fixed step size, and a
    diagnostics row plus a snapshot at step 0, every output_every steps and
    the final step. Single owner of its state and output files.
    """

    def __init__(self, config: RunConfig, out_fs):
        self.config = config
        self.out_fs = out_fs
        self.opts = config.solver_options()
        self.state = None
        self.steps = 0

    def _initial_state(self) -> SimState:
        config = self.config
        u = braces(make_initial(config))
        dt = config.dt
        if dt == 0:
            initial_state = SimState(0.0, u, config.nu, config.dt_max, config.nonlinear)
            dt = suggest_dt(initial_state, config.dt_max)
            logger.info("Selected dt=%s from the stability bounds.", dt)
        self.steps = number_of_steps(config.t_end, dt)
        if self.steps:
            # land exactly on t_end
            adjusted = config.t_end / self.steps
            if config.dt and not math.isclose(adjusted, config.dt, rel_tol=1e-9):
                logger.info(
                    "Shortened dt=%s to %s to land on t_end=%s.",
                    config.dt,
                    adjusted,
                    config.t_end,
                )
            dt = adjusted
        return SimState(0.0, u, config.nu, dt, config.nonlinear)

    def _output(self, worker: LogWorker):
        state = self.state
        worker.log(
            {
                "step": state.step_index,
                "t": state.t,
                "diagnostics": diagnostics(state, self.opts),
            }
        )
        write_snapshot(
            self.out_fs, snapshot_name(state.step_index), unbraces(state.u), state.t
        )

    def run(self) -> SimState:
        config = self.config
        self.state = self._initial_state()
        logger.info(
            "Running n=%s, nu=%s, dt=%s for %s steps (%s).",
            config.n,
            config.nu,
            self.state.dt,
            self.steps,
            config.scheme,
        )
        worker = LogWorker(config, self.out_fs, run_label=config.init)
        try:
            self._output(worker)
            for _ in range(self.steps):
                self.state = step(self.state, config.scheme, self.opts)
                index = self.state.step_index
                if index % config.output_every == 0 or index == self.steps:
                    self._output(worker)
        finally:
            worker.stop()
        logger.info("Run finished at t=%s.", self.state.t)
        return self.state
