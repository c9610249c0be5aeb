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

import logging
from typing import Callable

import numpy as np
import pandas as pd

from changewatch.analytics.boundary import mosum_arl_standardized
from changewatch.analytics.cusum_arl import cusum_arl_fast
from changewatch.analytics.fredholm import FredholmProblem, solve
from changewatch.analytics.genmosum_arl import approx2_arl, genmosum_arl
from changewatch.core.gaussian import GaussianChangeSpec
from changewatch.core.hypothesis import TransientWindow
from changewatch.detectors.config import DetectorConfig
from changewatch.detectors.state import Procedure
from changewatch.simulation.arl import estimate_arl, estimate_bcp
from changewatch.simulation.plan import RunLengthEstimate, SimulationPlan

_log: logging.Logger = logging.getLogger(__name__)

CUSUM_THRESHOLDS = [9.32, 17.33, 80.65, 159.35, 788.00]
CUSUM_NOMINAL = [50, 100, 500, 1000, 5000]
MOSUM_THRESHOLDS = [2.0, 2.25, 2.5, 2.75, 3.0, 3.25, 3.5]
GENMOSUM_WIDE_THRESHOLDS = [-5.0, -4.5, -4.0, -3.5, -3.0, -2.5, -2.0]
GENMOSUM_SHORT_THRESHOLDS = [2.0, 2.25, 2.5, 2.75, 3.0, 3.25, 3.5]
# Censoring cap, in multiples of the approximate ARL of the column
CAP_FACTOR = 100

UNIT_SPEC = GaussianChangeSpec(amplitude=1.0)


def _frame(grid_name: str, grid: list[float], rows: dict[str, list[float]]) -> pd.DataFrame:
    columns = [f"{grid_name}={value:g}" for value in grid]
    records = [[label, *values] for label, values in rows.items()]
    return pd.DataFrame(records, columns=["row", *columns])


def _simulate(
    config: DetectorConfig, threshold: float, reference: float, reps: int, seed: int
) -> RunLengthEstimate:
    plan = SimulationPlan(
        detector=config,
        threshold=threshold,
        replicates=reps,
        max_steps=int(CAP_FACTOR * max(reference, 100.0)) + config.warmup,
        seed=seed,
    )
    return estimate_arl(plan)


def _rounded(values: list[float]) -> list[float]:
    return [float(np.round(value)) for value in values]


def table_cusum(reps: int, seed: int) -> pd.DataFrame:
    """CUSUM ARL at A = 1: nominal values, fast approximations, integral equation, simulation

    Args:
        reps (int): Replicates per column
        seed (int): Master seed

    Returns:
        pd.DataFrame: Table
    """

    fast = [cusum_arl_fast(h, 1.0) for h in CUSUM_THRESHOLDS]
    proxy = [cusum_arl_fast(h, 1.0, proxy=True) for h in CUSUM_THRESHOLDS]
    integral = [
        solve(FredholmProblem(procedure=Procedure.CUSUM_V, threshold=h, amplitude=1.0)).phi_at_start
        for h in CUSUM_THRESHOLDS
    ]
    config = DetectorConfig(procedure=Procedure.CUSUM_V, spec=UNIT_SPEC)
    estimates = [
        _simulate(config, h, nominal, reps, seed)
        for h, nominal in zip(CUSUM_THRESHOLDS, CUSUM_NOMINAL)
    ]

    return _frame(
        "H",
        CUSUM_THRESHOLDS,
        {
            "nominal ARL": [float(value) for value in CUSUM_NOMINAL],
            "fast approximation": _rounded(fast),
            "fast approximation, exp(-rho A) kappa": _rounded(proxy),
            "integral equation": _rounded(integral),
            "Monte Carlo": _rounded([estimate.mean for estimate in estimates]),
            "Monte Carlo std error": [round(estimate.std_error, 1) for estimate in estimates],
        },
    )


def table_mosum(window: int, reps: int, seed: int) -> pd.DataFrame:
    """MOSUM scan ARL over standardized thresholds: corrected approximation and simulation

    Args:
        window (int): Window length L
        reps (int): Replicates per column
        seed (int): Master seed

    Returns:
        pd.DataFrame: Table
    """

    approximation = [mosum_arl_standardized(h, window) for h in MOSUM_THRESHOLDS]
    config = DetectorConfig(procedure=Procedure.MOSUM, spec=UNIT_SPEC, window=window)
    estimates = [
        _simulate(config, h * np.sqrt(window), reference, reps, seed)
        for h, reference in zip(MOSUM_THRESHOLDS, approximation)
    ]

    return _frame(
        "h",
        MOSUM_THRESHOLDS,
        {
            "corrected approximation": _rounded(approximation),
            "Monte Carlo": _rounded([estimate.scan_mean for estimate in estimates]),
            "Monte Carlo std error": [round(estimate.std_error, 1) for estimate in estimates],
        },
    )


def _simulated_base_arl(
    config: DetectorConfig, threshold: float, reps: int, seed: int
) -> float:
    l1 = config.transient.l1
    f_l1 = estimate_bcp(config, threshold, l1, reps, seed)
    f_2l1 = estimate_bcp(config, threshold, 2 * l1, reps, seed)
    return genmosum_arl(threshold, config.transient, f_l1, f_2l1)


def table_genmosum(
    transient: TransientWindow,
    grid: list[float],
    reps: int,
    seed: int,
    explicit: bool = False,
) -> pd.DataFrame:
    """Generalized MOSUM scan ARL at A = 1: approximations and simulation

    Args:
        transient (TransientWindow): Window bounds l0, l1
        grid (list[float]): Centered-sum thresholds
        reps (int): Replicates per column
        seed (int): Master seed
        explicit (bool, optional): Add the explicit approximation row, l0 = 1 only. Defaults to False.

    Returns:
        pd.DataFrame: Table
    """

    config = DetectorConfig(procedure=Procedure.GENMOSUM, spec=UNIT_SPEC, transient=transient)
    rows: dict[str, list[float]] = {}
    if explicit:
        rows["explicit approximation"] = _rounded(
            [approx2_arl(h, 1.0, transient.l1).value for h in grid]
        )

    simulated_base = [_simulated_base_arl(config, h, reps, seed) for h in grid]
    rows["approximation, simulated base probabilities"] = _rounded(simulated_base)
    estimates = [
        _simulate(config, h, reference, reps, seed) for h, reference in zip(grid, simulated_base)
    ]
    rows["Monte Carlo"] = _rounded([estimate.scan_mean for estimate in estimates])
    rows["Monte Carlo std error"] = [round(estimate.std_error, 1) for estimate in estimates]
    return _frame("H", grid, rows)


TABLES: dict[int, Callable[[int, int], pd.DataFrame]] = {
    1: table_cusum,
    2: lambda reps, seed: table_mosum(10, reps, seed),
    3: lambda reps, seed: table_mosum(50, reps, seed),
    4: lambda reps, seed: table_genmosum(
        TransientWindow(l0=25, l1=50), GENMOSUM_WIDE_THRESHOLDS, reps, seed
    ),
    5: lambda reps, seed: table_genmosum(
        TransientWindow(l0=1, l1=10), GENMOSUM_SHORT_THRESHOLDS, reps, seed, explicit=True
    ),
}


def cmd_tables(which: int, reps: int, seed: int = 0) -> pd.DataFrame:
    """Reproduce one of the ARL comparison tables

    Args:
        which (int): Table number, 1 to 5
        reps (int): Replicates per Monte Carlo cell
        seed (int, optional): Master seed. Defaults to 0.

    Returns:
        pd.DataFrame: Table with one column per threshold
    """

    if which not in TABLES:
        raise ValueError(f"Unknown table {which}, expected one of {sorted(TABLES)}")
    _log.info("Building table %d with %d replicates per cell", which, reps)
    return TABLES[which](reps, seed)
