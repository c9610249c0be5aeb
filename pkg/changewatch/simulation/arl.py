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
from typing import Optional

import numpy as np

from changewatch.core.errors import CensoringError
from changewatch.core.hypothesis import NoChange
from changewatch.detectors.config import DetectorConfig
from changewatch.simulation.engine import first_crossings
from changewatch.simulation.plan import RunLengthEstimate, SimulationPlan

_log: logging.Logger = logging.getLogger(__name__)


def estimate_run_length(plan: SimulationPlan) -> RunLengthEstimate:
    """Mean stopping time of a plan under its hypothesis

    Args:
        plan (SimulationPlan): Simulation plan

    Returns:
        RunLengthEstimate: Mean stopping time, in observations
    """

    times = first_crossings(
        plan.detector,
        plan.threshold,
        plan.max_steps,
        plan.replicates,
        seed=plan.seed,
        hypothesis=plan.hypothesis,
        n_jobs=plan.n_jobs,
        desc=f"Simulating {plan.detector.procedure.value} run lengths",
    )
    estimate = RunLengthEstimate.from_times(
        times, plan.max_steps, plan.seed, offset=plan.detector.warmup
    )

    if estimate.censored_count == estimate.replicates:
        raise CensoringError(
            f"All {plan.replicates} replicates of {plan.detector.procedure.value} "
            f"at H={plan.threshold} reached the cap of {plan.max_steps} steps"
        )
    if estimate.flagged:
        _log.warning(
            "%d of %d replicates censored at %d steps, mean %.4g biased low",
            estimate.censored_count,
            estimate.replicates,
            plan.max_steps,
            estimate.mean,
        )
    return estimate


def estimate_arl(plan: SimulationPlan) -> RunLengthEstimate:
    """Average run length to false alarm E∞τ

    Args:
        plan (SimulationPlan): Simulation plan with a NoChange hypothesis

    Returns:
        RunLengthEstimate: Mean stopping time, in observations
    """

    if not isinstance(plan.hypothesis, NoChange):
        raise ValueError("Average run length to false alarm requires the NoChange hypothesis")
    return estimate_run_length(plan)


def estimate_bcp(
    config: DetectorConfig,
    threshold: float,
    horizon: int,
    reps: int,
    seed: int = 0,
    n_jobs: Optional[int] = None,
) -> float:
    """Probability that the scan statistic stays below H over scan indices 0..M

    Scan index j is the statistic after warm-up + j observations.

    Args:
        config (DetectorConfig): Detector
        threshold (float): Threshold on the statistic scale
        horizon (int): Horizon M >= 0
        reps (int): Number of replicates
        seed (int, optional): Master seed. Defaults to 0.
        n_jobs (int, optional): Parallel workers. Defaults to settings.

    Returns:
        float: Non-crossing frequency
    """

    if horizon < 0:
        raise ValueError(f"Horizon must be nonnegative, got {horizon}")
    max_steps = max(1, config.warmup) + horizon
    times = first_crossings(
        config,
        threshold,
        max_steps,
        reps,
        seed=seed,
        n_jobs=n_jobs,
        desc=f"Simulating {config.procedure.value} crossings",
    )
    return float(np.mean(times > max_steps))
