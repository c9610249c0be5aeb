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
import numpy as np
import pandas as pd

from changewatch.analytics.boundary import mosum_arl
from changewatch.analytics.cusum_arl import cusum_arl_fast, cusum_arl_general, sr_arl_fast
from changewatch.analytics.fredholm import FredholmProblem, Regime, detection_delay, solve
from changewatch.analytics.genmosum_arl import approx2_arl, genmosum_arl
from changewatch.detectors.config import DetectorConfig
from changewatch.detectors.state import Procedure
from changewatch.simulation.arl import estimate_bcp

_log: logging.Logger = logging.getLogger(__name__)


def _likelihood_ratio_rows(
    procedure: Procedure, threshold: float, amplitude: float
) -> list[dict]:
    fredholm = {"procedure": procedure, "threshold": threshold, "amplitude": amplitude}
    null_arl = solve(FredholmProblem(**fredholm)).phi_at_start
    delay = detection_delay(FredholmProblem(**fredholm, regime=Regime.ZERO_DELAY))

    if procedure == Procedure.SR:
        return [
            {
                "method": "fast approximation",
                "quantity": "ARL",
                "value": sr_arl_fast(threshold, amplitude),
            },
            {"method": "integral equation", "quantity": "ARL", "value": null_arl},
            {"method": "integral equation", "quantity": "delay", "value": delay},
        ]
    return [
        {
            "method": "fast approximation",
            "quantity": "ARL",
            "value": cusum_arl_fast(threshold, amplitude),
        },
        {
            "method": "fast approximation, exp(-rho A) kappa",
            "quantity": "ARL",
            "value": cusum_arl_fast(threshold, amplitude, proxy=True),
        },
        {
            "method": "log-scale approximation",
            "quantity": "ARL",
            "value": cusum_arl_general(float(np.log(threshold)), amplitude),
        },
        {"method": "integral equation", "quantity": "ARL", "value": null_arl},
        {"method": "integral equation", "quantity": "delay", "value": delay},
    ]


def cmd_arl(
    config: DetectorConfig, threshold: float, reps: int, seed: int = 0
) -> pd.DataFrame:
    """Every analytic ARL estimate available for a detector and threshold

    Moving-sum rows report the stopping-time ARL, scan index ARL plus warm-up.
    The generalized MOSUM uses the explicit approximation when l0 = 1 and
    simulated base probabilities otherwise.

    Args:
        config (DetectorConfig): Detector
        threshold (float): Threshold on the statistic scale
        reps (int): Replicates of simulated base probabilities
        seed (int, optional): Master seed. Defaults to 0.

    Returns:
        pd.DataFrame: Columns method, quantity, value
    """

    spec = config.spec
    amplitude = spec.standardized_amplitude
    rows: list[dict]
    if config.procedure in (Procedure.CUSUM_V, Procedure.SR):
        rows = _likelihood_ratio_rows(config.procedure, threshold, amplitude)
    elif config.procedure in (Procedure.PAGE_P, Procedure.FULL_LR):
        if threshold <= 0:
            raise ValueError(f"Log-scale threshold must be positive, got {threshold}")
        rows = _likelihood_ratio_rows(Procedure.CUSUM_V, float(np.exp(threshold)), amplitude)
    elif config.procedure == Procedure.MOSUM:
        scan = mosum_arl(threshold, config.window, spec.mu, spec.sigma)
        rows = [
            {
                "method": "corrected approximation",
                "quantity": "ARL",
                "value": scan + config.window,
            }
        ]
    else:
        rows = [_genmosum_row(config, threshold, reps, seed)]

    _log.debug("ARL report for %s at %g: %s", config.procedure.value, threshold, rows)
    return pd.DataFrame(rows, columns=["method", "quantity", "value"])


def _genmosum_row(
    config: DetectorConfig, threshold: float, reps: int, seed: int
) -> dict[str, float | str]:
    transient = config.transient
    if transient.l0 == 1:
        explicit = approx2_arl(
            threshold * config.spec.sigma, config.spec.standardized_amplitude, transient.l1
        )
        return {
            "method": "explicit approximation",
            "quantity": "ARL",
            "value": explicit.value + transient.l1,
        }

    f_l1 = estimate_bcp(config, threshold, transient.l1, reps, seed)
    f_2l1 = estimate_bcp(config, threshold, 2 * transient.l1, reps, seed)
    return {
        "method": "approximation, simulated base probabilities",
        "quantity": "ARL",
        "value": genmosum_arl(threshold, transient, f_l1, f_2l1) + transient.l1,
    }
