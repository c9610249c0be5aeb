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

from changewatch.analytics.boundary import invert_mosum_arl
from changewatch.analytics.fredholm import invert_cusum_arl, invert_sr_arl
from changewatch.analytics.genmosum_arl import approx2_arl
from changewatch.core.changewatch_type import ChangewatchType
from changewatch.core.errors import CalibrationError, ChangewatchError
from changewatch.data.settings import get_settings
from changewatch.detectors.config import DetectorConfig
from changewatch.detectors.state import Procedure
from changewatch.simulation.arl import estimate_arl
from changewatch.simulation.plan import RunLengthEstimate, SimulationPlan

_log: logging.Logger = logging.getLogger(__name__)

MAX_BISECTIONS = 8
MAX_EXPANSIONS = 30
# Censoring cap, in multiples of the target ARL
CAP_FACTOR = 100

_LOG_SCALE = (Procedure.CUSUM_V, Procedure.SR)


class CalibrationResult(ChangewatchType):
    """Threshold calibrated to a target ARL

    Attributes:
        threshold (float): Calibrated threshold on the statistic scale
        estimate (RunLengthEstimate): ARL estimate at the threshold
        target_arl (float): Target ARL
        analytic_threshold (float, optional): Approximation-based starting point
        rounds (int): Simulation rounds used
        converged (bool): Whether the estimate lies within the tolerance of the target
    """

    threshold: float
    estimate: RunLengthEstimate
    target_arl: float
    analytic_threshold: Optional[float] = None
    rounds: int = 0
    converged: bool = True

    @property
    def relative_error(self) -> float:
        """Achieved ARL relative to the target, minus 1

        Returns:
            float: Relative error
        """

        return self.estimate.mean / self.target_arl - 1.0


def _invert_approx2(target_scan_arl: float, amplitude: float, l1: int) -> float:
    grid = np.arange(-5.0, 40.0, 0.25)
    previous = None
    for threshold in grid:
        try:
            value = approx2_arl(threshold, amplitude, l1).value
        except ChangewatchError:
            continue
        if value >= target_scan_arl:
            if previous is None:
                return float(threshold)
            low_h, low_value = previous
            # Interpolate in log ARL between grid points
            weight = np.log(target_scan_arl / low_value) / np.log(value / low_value)
            return float(low_h + weight * (threshold - low_h))
        previous = (threshold, value)
    raise CalibrationError(f"Explicit ARL approximation never reaches {target_scan_arl}")


def analytic_threshold(config: DetectorConfig, target_arl: float) -> float:
    """Threshold whose approximate ARL equals the target

    CUSUM and SR use the integral equation, Page's chart its logarithm, MOSUM
    the corrected moving-sum approximation and the generalized MOSUM the
    explicit approximation with l0 = 1.

    Args:
        config (DetectorConfig): Detector
        target_arl (float): Target ARL, in observations

    Returns:
        float: Threshold on the detector's statistic scale
    """

    spec = config.spec
    amplitude = spec.standardized_amplitude
    if config.procedure == Procedure.CUSUM_V:
        return invert_cusum_arl(target_arl, amplitude)
    if config.procedure in (Procedure.PAGE_P, Procedure.FULL_LR):
        return float(np.log(invert_cusum_arl(target_arl, amplitude)))
    if config.procedure == Procedure.SR:
        return invert_sr_arl(target_arl, amplitude)
    if config.procedure == Procedure.MOSUM:
        return invert_mosum_arl(target_arl - config.window, config.window, spec.mu, spec.sigma)

    # Centered sums of standardized data scale with 1/σ
    l1 = config.transient.l1
    return _invert_approx2(target_arl - l1, amplitude, l1) / spec.sigma


def _initial_step(config: DetectorConfig) -> float:
    if config.procedure in _LOG_SCALE:
        return 0.25
    if config.procedure == Procedure.MOSUM:
        return 0.25 * config.spec.sigma * np.sqrt(config.window)
    if config.procedure == Procedure.GENMOSUM:
        return 1.0 / config.spec.sigma
    return 0.25


def calibrate_threshold(
    config: DetectorConfig,
    target_arl: float,
    tol_rel: float = 0.03,
    seed: int = 0,
    reps: Optional[int] = None,
    n_jobs: Optional[int] = None,
) -> CalibrationResult:
    """Threshold whose simulated ARL matches the target

    The search starts from the analytic threshold, brackets the target at a
    quarter of the replicates, then bisects at full replicates. All
    evaluations reuse the same seed, so the simulated ARL is monotone in the
    threshold.

    Args:
        config (DetectorConfig): Detector
        target_arl (float): Target ARL C, in observations
        tol_rel (float, optional): Accepted |ARL/C − 1|. Defaults to 0.03.
        seed (int, optional): Master seed. Defaults to 0.
        reps (int, optional): Replicates per evaluation. Defaults to settings.
        n_jobs (int, optional): Parallel workers. Defaults to settings.

    Returns:
        CalibrationResult: Calibrated threshold, or the closest one tried with
            converged set to False when the bisections run out
    """

    settings = get_settings()
    reps = reps if reps is not None else settings.reps
    n_jobs = n_jobs if n_jobs is not None else settings.n_jobs
    if target_arl <= config.warmup:
        raise ValueError(f"Target ARL {target_arl} must exceed the warm-up {config.warmup}")

    log_scale = config.procedure in _LOG_SCALE
    to_threshold = np.exp if log_scale else (lambda x: x)
    rounds = 0

    def evaluate(x: float, replicates: int) -> RunLengthEstimate:
        nonlocal rounds
        rounds += 1
        plan = SimulationPlan(
            detector=config,
            threshold=float(to_threshold(x)),
            replicates=replicates,
            max_steps=int(CAP_FACTOR * target_arl),
            seed=seed,
            n_jobs=n_jobs,
        )
        estimate = estimate_arl(plan)
        _log.debug(
            "Calibration round %d: H=%.6g ARL=%.1f (%d reps)",
            rounds,
            plan.threshold,
            estimate.mean,
            replicates,
        )
        return estimate

    try:
        seed_threshold = analytic_threshold(config, target_arl)
    except ChangewatchError as e:
        _log.warning("No analytic starting threshold for %s: %s", config.procedure.value, e)
        seed_threshold = 1.0 if log_scale else 0.0
    start = float(np.log(seed_threshold)) if log_scale else seed_threshold

    # Bracket with a quarter of the replicates
    coarse = max(min(reps, 1000), reps // 4)
    step = _initial_step(config)
    below = evaluate(start, coarse).mean < target_arl
    low = high = start
    for _ in range(MAX_EXPANSIONS):
        if below:
            low, high = high, high + step
            if evaluate(high, coarse).mean >= target_arl:
                break
        else:
            high, low = low, low - step
            if evaluate(low, coarse).mean < target_arl:
                break
        step *= 2.0
    else:
        raise CalibrationError(
            f"Target ARL {target_arl} not bracketed for {config.procedure.value} "
            f"within {MAX_EXPANSIONS} expansions from H={seed_threshold:.6g}"
        )

    best: Optional[tuple[float, RunLengthEstimate]] = None
    for _ in range(MAX_BISECTIONS):
        middle = (low + high) / 2.0
        estimate = evaluate(middle, reps)
        if best is None or abs(estimate.mean - target_arl) < abs(best[1].mean - target_arl):
            best = (middle, estimate)
        if abs(estimate.mean / target_arl - 1.0) <= tol_rel:
            break
        if estimate.mean < target_arl:
            low = middle
        else:
            high = middle

    converged = abs(best[1].mean / target_arl - 1.0) <= tol_rel
    if not converged:
        _log.warning(
            "Calibration of %s stopped after %d bisections at ARL %.1f (target %.1f)",
            config.procedure.value,
            MAX_BISECTIONS,
            best[1].mean,
            target_arl,
        )

    return CalibrationResult(
        threshold=float(to_threshold(best[0])),
        estimate=best[1],
        target_arl=target_arl,
        analytic_threshold=seed_threshold,
        rounds=rounds,
        converged=converged,
    )
