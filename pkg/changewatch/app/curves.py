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
from typing import Literal

import numpy as np
import pandas as pd
from tqdm.auto import tqdm

from changewatch.analytics.genmosum_arl import approx1_base_probabilities
from changewatch.analytics.power import diffusion_power, discrete_power, empirical_power_mosum
from changewatch.core.gaussian import GaussianChangeSpec
from changewatch.core.hypothesis import TransientWindow
from changewatch.data.settings import get_settings
from changewatch.detectors.config import DetectorConfig
from changewatch.detectors.state import Procedure
from changewatch.simulation.arl import estimate_bcp
from changewatch.simulation.power import estimate_power_three_way, match_thresholds

_log: logging.Logger = logging.getLogger(__name__)

GAMMA_GRID = np.arange(0.5, 4.01, 0.5)
SINGLE_WINDOW_LENGTHS = (5, 20, 100)
SINGLE_WINDOW_THRESHOLDS = {"fig8": 3.0, "fig9": 4.0}
# amplitude, signal length l, generalized MOSUM bounds, range of L
THREE_WAY_SCENARIOS = {
    "fig12": (1.0, 10, TransientWindow(l0=5, l1=20), range(5, 21)),
    "fig13": (0.5, 20, TransientWindow(l0=10, l1=40), range(10, 41)),
}
THREE_WAY_ARL = 500.0

Scenario = Literal["fig8", "fig9", "fig12", "fig13"]


def single_window_power(h: float, reps: int, seed: int) -> pd.DataFrame:
    """Empirical MOSUM power of a window-length signal against both approximations

    Args:
        h (float): Standardized threshold
        reps (int): Replicates per point
        seed (int): Master seed

    Returns:
        pd.DataFrame: One row per (L, γ)
    """

    rows = []
    for window in SINGLE_WINDOW_LENGTHS:
        for gamma in tqdm(
            GAMMA_GRID,
            desc=f"Power at h={h:g}, L={window}",
            disable=not get_settings().progress,
        ):
            amplitude = float(gamma) / np.sqrt(window)
            empirical = empirical_power_mosum(h, amplitude, window, reps=reps, seed=seed)
            rows.append(
                {
                    "L": window,
                    "gamma": float(gamma),
                    "empirical": empirical.probability,
                    "empirical_std_error": empirical.std_error,
                    "discrete": discrete_power(h, amplitude, window),
                    "diffusion": diffusion_power(h, float(gamma)),
                }
            )
    return pd.DataFrame(rows)


def three_way_power(
    amplitude: float,
    l: int,
    transient: TransientWindow,
    windows: range,
    reps: int,
    seed: int,
) -> pd.DataFrame:
    """MOSUM, generalized MOSUM and CUSUM power against λ = l/L at a common ARL

    The generalized MOSUM and CUSUM thresholds do not depend on L and are
    computed once.

    Args:
        amplitude (float): Shift A, in noise units
        l (int): Signal length
        transient (TransientWindow): Generalized MOSUM bounds
        windows (range): MOSUM window lengths L
        reps (int): Replicates per point
        seed (int): Master seed

    Returns:
        pd.DataFrame: One row per L
    """

    shared = match_thresholds(amplitude, windows[0], transient, THREE_WAY_ARL, reps, seed)
    rows = []
    for window in windows:
        thresholds = match_thresholds(
            amplitude, window, transient, THREE_WAY_ARL, reps, seed, h2=shared.h2, h3=shared.h3
        )
        power = estimate_power_three_way(
            amplitude, l, transient, window, THREE_WAY_ARL, reps, seed, thresholds
        )
        rows.append(
            {
                "lambda": power.ratio,
                "L": window,
                "P_S": power.p_s.probability,
                "P_Z": power.p_z.probability,
                "P_V": power.p_v.probability,
                "H1": power.h1,
                "H2": power.h2,
                "H3": power.h3,
            }
        )
    return pd.DataFrame(rows).sort_values("lambda").reset_index(drop=True)


def cmd_power_curves(scenario: Scenario, reps: int, seed: int = 0) -> pd.DataFrame:
    """Data series of the power comparisons

    Args:
        scenario (Scenario): fig8 or fig9 (single window, h = 3 or 4), fig12 or fig13 (three procedures)
        reps (int): Replicates per point
        seed (int, optional): Master seed. Defaults to 0.

    Returns:
        pd.DataFrame: Data series
    """

    _log.info("Power curves %s with %d replicates per point", scenario, reps)
    if scenario in SINGLE_WINDOW_THRESHOLDS:
        return single_window_power(SINGLE_WINDOW_THRESHOLDS[scenario], reps, seed)
    if scenario in THREE_WAY_SCENARIOS:
        return three_way_power(*THREE_WAY_SCENARIOS[scenario], reps=reps, seed=seed)
    raise ValueError(f"Unknown scenario '{scenario}'")


def cmd_bcp_curves(
    l1: int = 10,
    reps: int = 10_000,
    seed: int = 0,
    amplitude: float = 1.0,
) -> pd.DataFrame:
    """Generalized MOSUM boundary-crossing probabilities against their approximations

    For bounds 1:l1 the simulated F(H, l1) and F(H, 2l1) come with their
    explicit approximations; for bounds 25:50 only simulated values are given.

    Args:
        l1 (int, optional): Upper signal length bound with l0 = 1. Defaults to 10.
        reps (int, optional): Replicates per point. Defaults to 10_000.
        seed (int, optional): Master seed. Defaults to 0.
        amplitude (float, optional): Shift A, in noise units. Defaults to 1.0.

    Returns:
        pd.DataFrame: One row per (bounds, H)
    """

    spec = GaussianChangeSpec(amplitude=amplitude)
    curves = [
        (TransientWindow(l0=1, l1=l1), np.arange(0.0, 6.01, 0.5), True),
        (TransientWindow(l0=25, l1=50), np.arange(-6.0, 0.01, 0.5), False),
    ]

    rows = []
    for transient, grid, explicit in curves:
        config = DetectorConfig(procedure=Procedure.GENMOSUM, spec=spec, transient=transient)
        for threshold in grid:
            row = {
                "window": f"{transient.l0}:{transient.l1}",
                "H": float(threshold),
                "empirical_l1": estimate_bcp(config, threshold, transient.l1, reps, seed),
                "empirical_2l1": estimate_bcp(config, threshold, 2 * transient.l1, reps, seed),
                "approx_l1": np.nan,
                "approx_2l1": np.nan,
            }
            if explicit:
                one_window, two_windows = approx1_base_probabilities(
                    threshold, amplitude, transient.l1
                )
                row["approx_l1"], row["approx_2l1"] = one_window.value, two_windows.value
            rows.append(row)
    return pd.DataFrame(rows)
