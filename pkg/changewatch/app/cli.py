# @Copyright: CEA-LIST/DIASI/SIALV/LVA (2023)
# @Author: CEA-LIST/DIASI/SIALV/LVA <pixano@cea.fr>
# @License: CECILL-C
#
# This software is a collaborative computer program whose purpose is to
# detect and characterize transient changes in sequential data streams.
# This software is governed by the CeCILL-C license under French law and
# abiding by the rules of distribution of free software. You can use,
# modify and/ or redistribute the software under the terms of the CeCILL-C
# license as circulated by CEA, CNRS and INRIA at the following URL
#
# http://www.cecill.info

import functools
import json
import logging
from typing import Any, Callable, Optional

import click

from changewatch.app.config import RunConfig
from changewatch.app.curves import cmd_bcp_curves, cmd_power_curves
from changewatch.app.detect import cmd_detect
from changewatch.app.pressure import HOLD_LENGTHS, cmd_pressure_demo
from changewatch.app.report import cmd_arl
from changewatch.app.tables import cmd_tables
from changewatch.core.errors import InputParseError, NumericalError
from changewatch.data.settings import get_settings
from changewatch.data.writers import write_frame, write_record
from changewatch.detectors.state import Procedure
from changewatch.simulation.calibration import analytic_threshold, calibrate_threshold

_log: logging.Logger = logging.getLogger(__name__)

EXIT_CONFIG = 2
EXIT_INPUT = 3
EXIT_NUMERICAL = 4

output_option = click.option(
    "--output", "output_path", type=str, help="Output CSV, standard output if not given"
)
point_reps_option = click.option(
    "--reps", type=int, default=10_000, help="Replicates per point", show_default=True
)


def handle_errors(command: Callable) -> Callable:
    """Map package errors to exit codes

    Args:
        command (Callable): Command callback

    Returns:
        Callable: Wrapped callback
    """

    @functools.wraps(command)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return command(*args, **kwargs)
        except InputParseError as e:
            click.echo(f"Error: {e}", err=True)
            raise SystemExit(EXIT_INPUT) from e
        except NumericalError as e:
            click.echo(f"Numerical failure: {e}", err=True)
            raise SystemExit(EXIT_NUMERICAL) from e
        except (ValueError, NotImplementedError) as e:
            click.echo(f"Configuration error: {e}", err=True)
            raise SystemExit(EXIT_CONFIG) from e

    return wrapper


def run_options(command: Callable) -> Callable:
    """Detector, threshold and I/O options shared by detect, calibrate and arl

    Args:
        command (Callable): Command callback

    Returns:
        Callable: Decorated callback
    """

    options = [
        click.option(
            "--config",
            "config_path",
            type=click.Path(exists=True),
            help="JSON configuration file, flags win",
        ),
        click.option(
            "--procedure",
            type=click.Choice([procedure.value for procedure in Procedure]),
            help="Detection procedure  [default: mosum]",
        ),
        click.option("--mu", type=float, help="Pre-change mean  [default: 0]"),
        click.option("--amplitude", type=float, help="Mean shift A  [default: 1]"),
        click.option("--sigma", type=float, help="Noise standard deviation  [default: 1]"),
        click.option(
            "--window",
            type=str,
            help="MOSUM window L, or generalized MOSUM bounds l0:l1",
        ),
        click.option("--threshold", type=float, help="Threshold on the statistic scale"),
        click.option("--target-arl", type=float, help="Target ARL, instead of a threshold"),
        click.option("--reps", type=int, help="Monte Carlo replicates"),
        click.option("--seed", type=int, help="Master seed"),
        click.option(
            "--input", "input_path", type=str, help="Input CSV, standard input if not given"
        ),
        click.option(
            "--output",
            "output_path",
            type=str,
            help="Output file, standard output if not given",
        ),
    ]
    for option in reversed(options):
        command = option(command)
    return command


def _run_config(
    config_path: Optional[str],
    input_path: Optional[str],
    output_path: Optional[str],
    **flags: Any,
) -> RunConfig:
    return RunConfig.from_sources(config_path, input=input_path, output=output_path, **flags)


@click.group()
@click.option("--quiet", is_flag=True, help="Hide progress bars and informational logs")
@click.version_option(package_name="changewatch")
def main(quiet: bool):
    """Sequential detection of transient changes in Gaussian streams"""

    logging.basicConfig(
        level=logging.WARNING if quiet else logging.INFO,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )
    if quiet:
        get_settings().progress = False


@main.command()
@run_options
@click.option(
    "--stop-on-first",
    is_flag=True,
    help="Stop at the first alarm instead of restarting",
)
@handle_errors
def detect(stop_on_first: bool, **options: Any):
    """Stream observations through a detector and write one JSON record per alarm"""

    config = _run_config(stop_on_first=stop_on_first or None, **options)
    with click.open_file(config.input or "-", "r") as source:
        with click.open_file(config.output or "-", "w") as sink:
            cmd_detect(config, source, sink)


@main.command()
@run_options
@click.option(
    "--analytic-only",
    is_flag=True,
    help="Invert the analytic approximation without simulation",
)
@handle_errors
def calibrate(analytic_only: bool, **options: Any):
    """Find the threshold whose ARL matches --target-arl"""

    config = _run_config(**options)
    if config.target_arl is None:
        raise click.UsageError("calibrate requires --target-arl")
    detector = config.detector_config()

    with click.open_file(config.output or "-", "w") as sink:
        if analytic_only:
            threshold = analytic_threshold(detector, config.target_arl)
            record = {"threshold": threshold, "target_arl": config.target_arl}
            sink.write(json.dumps(record) + "\n")
            return
        result = calibrate_threshold(
            detector, config.target_arl, seed=config.seed, reps=config.reps
        )
        write_record(
            sink,
            result,
            relative_error=result.relative_error,
            scan_mean=result.estimate.scan_mean,
        )


@main.command()
@run_options
@handle_errors
def arl(**options: Any):
    """Report every analytic ARL estimate for a detector and threshold"""

    config = _run_config(**options)
    threshold = config.resolve_threshold()
    frame = cmd_arl(config.detector_config(), threshold, config.reps, config.seed)
    with click.open_file(config.output or "-", "w") as sink:
        write_frame(frame, sink)


@main.command()
@click.option(
    "--which",
    type=click.IntRange(1, 5),
    required=True,
    help="Table number: 1 CUSUM, 2-3 MOSUM (L = 10, 50), 4-5 generalized MOSUM",
)
@click.option(
    "--reps",
    type=int,
    default=10_000,
    help="Replicates per Monte Carlo cell",
    show_default=True,
)
@click.option("--seed", type=int, default=0, help="Master seed", show_default=True)
@output_option
@handle_errors
def tables(which: int, reps: int, seed: int, output_path: Optional[str]):
    """Reproduce an ARL comparison table"""

    with click.open_file(output_path or "-", "w") as sink:
        write_frame(cmd_tables(which, reps, seed), sink)


@main.command("power-curves")
@click.option(
    "--scenario",
    type=click.Choice(["fig8", "fig9", "fig12", "fig13"]),
    required=True,
    help="fig8/fig9: MOSUM power at h = 3/4, fig12/fig13: three procedures at ARL 500",
)
@point_reps_option
@click.option("--seed", type=int, default=0, help="Master seed", show_default=True)
@output_option
@handle_errors
def power_curves(scenario: str, reps: int, seed: int, output_path: Optional[str]):
    """Emit power data series"""

    with click.open_file(output_path or "-", "w") as sink:
        write_frame(cmd_power_curves(scenario, reps, seed), sink)


@main.command("bcp-curves")
@click.option(
    "--l1",
    type=int,
    default=10,
    help="Upper signal length bound, l0 = 1",
    show_default=True,
)
@click.option("--amplitude", type=float, default=1.0, help="Mean shift A", show_default=True)
@point_reps_option
@click.option("--seed", type=int, default=0, help="Master seed", show_default=True)
@output_option
@handle_errors
def bcp_curves(l1: int, amplitude: float, reps: int, seed: int, output_path: Optional[str]):
    """Emit generalized MOSUM boundary-crossing probabilities and their approximations"""

    with click.open_file(output_path or "-", "w") as sink:
        write_frame(cmd_bcp_curves(l1, reps, seed, amplitude), sink)


@main.command("pressure-demo")
@click.option("--window", type=int, default=75, help="MOSUM window L", show_default=True)
@click.option("--target-arl", type=float, default=5000.0, help="Target ARL", show_default=True)
@click.option("--seed", type=int, default=0, help="Noise seed", show_default=True)
@click.option(
    "--holds",
    type=int,
    default=len(HOLD_LENGTHS),
    help="Number of embedded hold periods",
    show_default=True,
)
@output_option
@handle_errors
def pressure_demo(
    window: int, target_arl: float, seed: int, holds: int, output_path: Optional[str]
):
    """Detect hold periods in a synthetic pressure record with a known trend

    Writes the per-observation series as CSV; alarms go to standard error as JSON lines.
    """

    if not 0 <= holds <= len(HOLD_LENGTHS):
        raise click.BadParameter(f"between 0 and {len(HOLD_LENGTHS)}", param_hint="--holds")
    demo = cmd_pressure_demo(window, target_arl, seed, HOLD_LENGTHS[:holds])
    with click.open_file(output_path or "-", "w") as sink:
        write_frame(demo.series, sink)
    for alarm in demo.alarms:
        click.echo(json.dumps(alarm.to_dict()), err=True)
    click.echo(f"{demo.clusters} alarm cluster(s)", err=True)
