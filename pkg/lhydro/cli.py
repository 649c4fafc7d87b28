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
Command line front-end::

    lhydro verify    [--config FILE] [--samples N] [--corrupt-star]
    lhydro simulate  [--config FILE] [--out DIR]
    lhydro decompose [--config FILE] --snapshot FILE_OR_DIR
    lhydro config    [--config FILE]

Exit codes: 0 success, 1 failed check or aborted run, 2 usage or input error.
"""

import argparse
import dataclasses
import logging
import os
import sys

import fs
import fs.errors

import lhydro
from lhydro.core import boundary
from lhydro.core.errors import (
    ConfigError,
    DenseLimitError,
    InstabilityError,
    SnapshotFormatError,
    SolverError,
)
from lhydro.core.fields import braces
from lhydro.core.hodge import hodge_decompose
from lhydro.simulation import Simulation
from lhydro.utils.config import DEFAULT_CONFIG, read_config, render_config
from lhydro.utils.snapshot import format_real, latest_snapshot, read_snapshot
from lhydro.verify import run_suite

logger = logging.getLogger("lhydro")

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def reset_logging():
    """Detach the handlers installed by setup_logging."""
    root_logger = logging.getLogger()
    for handler in list(root_logger.handlers):
        if getattr(handler, "_lhydro", False):
            root_logger.removeHandler(handler)
            handler.close()


def setup_logging(log_file=None, verbose=False):
    reset_logging()
    root_logger = logging.getLogger()

    log_format = logging.Formatter("%(asctime)-15s %(message)s")
    console_log = logging.StreamHandler(sys.stderr)
    console_log.setLevel(logging.DEBUG if verbose else logging.INFO)
    console_log.setFormatter(log_format)
    console_log._lhydro = True
    root_logger.addHandler(console_log)

    if log_file:
        file_log = logging.FileHandler(log_file)
        file_log.setLevel(logging.DEBUG)
        file_log.setFormatter(log_format)
        file_log._lhydro = True
        root_logger.addHandler(file_log)

    root_logger.setLevel(logging.DEBUG)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="lhydro",
        description="Cubical lattice model of incompressible hydrodynamics.",
    )
    parser.add_argument(
        "--version", action="version", version="%(prog)s " + lhydro.__version__
    )

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--config",
        dest="config",
        default=None,
        help="Run configuration (key = value). Defaults to the packaged lhydro.cfg.",
    )
    common.add_argument(
        "-v", "--verbose", action="store_true", default=False, help="Log debug output."
    )
    common.add_argument(
        "--logfile", dest="logfile", default=None, help="Also log to this file."
    )

    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True

    verify = commands.add_parser(
        "verify", parents=[common], help="Run the structural self-checks."
    )
    verify.add_argument(
        "--samples",
        type=int,
        default=50,
        help="Random inputs per randomized check (default: 50).",
    )
    verify.add_argument(
        "--corrupt-star",
        dest="corrupt_star",
        action="store_true",
        default=False,
        help=argparse.SUPPRESS,
    )

    simulate = commands.add_parser(
        "simulate", parents=[common], help="Integrate the velocity field in time."
    )
    simulate.add_argument(
        "--out", dest="out", default=None, help="Output directory, overrides out_dir."
    )

    decompose = commands.add_parser(
        "decompose", parents=[common], help="Hodge decomposition of a snapshot."
    )
    decompose.add_argument(
        "--snapshot",
        dest="snapshot",
        required=True,
        help="Snapshot file, or run directory whose latest snapshot is used.",
    )

    commands.add_parser(
        "config", parents=[common], help="Print the configuration in canonical form."
    )
    return parser


def load_config(args):
    path = args.config or DEFAULT_CONFIG
    config = read_config(path)
    logger.debug("Using configuration %s.", path)
    if getattr(args, "out", None):
        config = dataclasses.replace(config, out_dir=args.out)
    return config


def cmd_verify(config, args, out=None):
    if args.samples < 1:
        raise ConfigError("--samples must be >= 1")
    passed = run_suite(
        config.lattice(),
        out=out,
        samples=args.samples,
        seed=config.seed,
        corrupt_star=args.corrupt_star,
    )
    return EXIT_OK if passed else EXIT_FAILURE


def cmd_simulate(config, args, out=None):
    try:
        out_fs = fs.open_fs(config.out_dir, create=True)
    except fs.errors.CreateFailed as e:
        logger.error("Cannot write to %s: %s", config.out_dir, e)
        return EXIT_USAGE
    with out_fs:
        try:
            Simulation(config, out_fs).run()
        except InstabilityError as e:
            logger.error("Run aborted at step %s: %s", e.step, e)
            return EXIT_FAILURE
        except SolverError as e:
            logger.error(
                "Run aborted, solver failed after %s iterations: %s", e.iterations, e
            )
            return EXIT_FAILURE
    return EXIT_OK


def cmd_decompose(config, args, out=None):
    out = out or sys.stdout
    path = args.snapshot
    if os.path.isdir(path):
        path = latest_snapshot(path)
    snapshot = read_snapshot(path, expected_n=config.n)
    u = braces(snapshot.field)
    parts = hodge_decompose(u, config.solver_options())
    exact, coexact, harmonic = parts.norms()
    logger.info("Decomposed %s (t=%s).", path, format_real(snapshot.t))
    out.write("snapshot = {0}\n".format(path))
    out.write("t = {0}\n".format(format_real(snapshot.t)))
    out.write("norm = {0}\n".format(format_real(u.norm())))
    out.write("exact = {0}\n".format(format_real(exact)))
    out.write("coexact = {0}\n".format(format_real(coexact)))
    out.write("harmonic = {0}\n".format(format_real(harmonic)))
    out.write("divergence = {0}\n".format(format_real(boundary(u).norm())))
    return EXIT_OK


def cmd_config(config, args, out=None):
    (out or sys.stdout).write(render_config(config))
    return EXIT_OK


COMMANDS = {
    "verify": cmd_verify,
    "simulate": cmd_simulate,
    "decompose": cmd_decompose,
    "config": cmd_config,
}


def main(argv=None, out=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code

    setup_logging(args.logfile, args.verbose)
    try:
        config = load_config(args)
        return COMMANDS[args.command](config, args, out)
    except (ConfigError, SnapshotFormatError, DenseLimitError) as e:
        logger.error("%s", e)
        return EXIT_USAGE
    except SolverError as e:
        logger.error("%s", e)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
