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
from changewatch.analytics.fredholm import invert_cusum_arl
from changewatch.core.changewatch_type import ChangewatchType
from changewatch.core.errors import ConditioningError
from changewatch.core.gaussian import GaussianChangeSpec
from changewatch.core.hypothesis import ChangeAt, TransientWindow
from changewatch.data.settings import get_settings
from changewatch.detectors.config import DetectorConfig
from changewatch.detectors.state import Procedure
from changewatch.simulation.calibration import calibrate_threshold
from changewatch.simulation.engine import first_crossings
from changewatch.simulation.plan import PowerEstimate

_log: logging.Logger = logging.getLogger(__name__)


def estimate_conditional_power(
    config: DetectorConfig,
    threshold: float,
    nu: int,
    l: Optional[int],
    horizon: int,
    reps: int,
    seed: int = 0,
    n_jobs: Optional[int] = None,
) -> PowerEstimate:
    """Probability of an alarm at observations ν+1..ν+T−1 given none up to ν

    The signal of amplitude A occupies observations ν+1..ν+l.

    Args:
        config (DetectorConfig): Detector, its spec sets the signal amplitude
        threshold (float): Threshold on the statistic scale
        nu (int): Change point ν, also the conditioning point
        l (int, optional): Signal length, None for a permanent change
        horizon (int): Window length T >= 2
        reps (int): Number of replicates
        seed (int, optional): Master seed. Defaults to 0.
        n_jobs (int, optional): Parallel workers. Defaults to settings.

    Returns:
        PowerEstimate: Conditional detection frequency
    """

    if horizon < 2:
        raise ValueError(f"Detection window must be at least 2, got {horizon}")
    last = nu + horizon - 1
    times = first_crossings(
        config,
        threshold,
        last,
        reps,
        seed=seed,
        hypothesis=ChangeAt(nu=nu, l=l),
        n_jobs=n_jobs,
        desc=f"Simulating {config.procedure.value} power",
    )

    conditioned = times > nu
    count = int(conditioned.sum())
    if count == 0:
        raise ConditioningError(
            f"No replicate of {config.procedure.value} at H={threshold} stayed below the "
            f"threshold up to {nu}: threshold too low"
        )

    probability = float(np.mean(times[conditioned] <= last))
    return PowerEstimate(
        probability=probability,
        std_error=float(np.sqrt(probability * (1.0 - probability) / count)),
        nu=nu,
        horizon=horizon,
        replicates=reps,
        conditioned=count,
        seed=seed,
        threshold=threshold,
    )


class ThreeWayPower(ChangewatchType):
    """Power of MOSUM, generalized MOSUM and CUSUM at a common ARL

    Attributes:
        amplitude (float): Shift A
        l (int): Signal length
        window (int): MOSUM window length L
        transient (TransientWindow): Generalized MOSUM bounds l0, l1
        target_arl (float): Common ARL C
        h1 (float): MOSUM raw-sum threshold
        h2 (float): Generalized MOSUM centered-sum threshold
        h3 (float): CUSUM V-scale threshold
        p_s (PowerEstimate): MOSUM power
        p_z (PowerEstimate): Generalized MOSUM power
        p_v (PowerEstimate): CUSUM power
    """

    amplitude: float
    l: int
    window: int
    transient: TransientWindow
    target_arl: float
    h1: float
    h2: float
    h3: float
    p_s: PowerEstimate
    p_z: PowerEstimate
    p_v: PowerEstimate

    @property
    def ratio(self) -> float:
        """Signal-to-window ratio λ = l/L

        Returns:
            float: λ
        """

        return self.l / self.window


class MatchedThresholds(ChangewatchType):
    """Thresholds of the three procedures at a common ARL

    Attributes:
        h1 (float): MOSUM raw-sum threshold, from the corrected approximation
        h2 (float): Generalized MOSUM threshold, calibrated by simulation
        h3 (float): CUSUM V-scale threshold, from the integral equation
    """

    h1: float
    h2: float
    h3: float


def match_thresholds(
    amplitude: float,
    window: int,
    transient: TransientWindow,
    target_arl: float = 500.0,
    reps: Optional[int] = None,
    seed: int = 0,
    h2: Optional[float] = None,
    h3: Optional[float] = None,
) -> MatchedThresholds:
    """Thresholds giving MOSUM, generalized MOSUM and CUSUM the same ARL

    Args:
        amplitude (float): Shift A > 0, in noise units
        window (int): MOSUM window length L
        transient (TransientWindow): Generalized MOSUM bounds
        target_arl (float, optional): Common ARL C. Defaults to 500.0.
        reps (int, optional): Calibration replicates. Defaults to settings.
        seed (int, optional): Master seed. Defaults to 0.
        h2 (float, optional): Known generalized MOSUM threshold. Defaults to None.
        h3 (float, optional): Known CUSUM threshold. Defaults to None.

    Returns:
        MatchedThresholds: Thresholds
    """

    spec = GaussianChangeSpec(amplitude=amplitude)
    h1 = invert_mosum_arl(target_arl - window, window)
    if h2 is None:
        h2 = calibrate_threshold(
            DetectorConfig(procedure=Procedure.GENMOSUM, spec=spec, transient=transient),
            target_arl,
            seed=seed,
            reps=reps,
        ).threshold
    if h3 is None:
        h3 = invert_cusum_arl(target_arl, amplitude)
    return MatchedThresholds(h1=h1, h2=h2, h3=h3)


def estimate_power_three_way(
    amplitude: float,
    l: int,
    transient: TransientWindow,
    window: int,
    target_arl: float = 500.0,
    reps: Optional[int] = None,
    seed: int = 0,
    thresholds: Optional[MatchedThresholds] = None,
) -> ThreeWayPower:
    """Power of MOSUM, generalized MOSUM and CUSUM for a transient of length l

    All three procedures run on the same replicates with a common burn-in
    ν = 3·max(L, l1, l) and window T = 2l.

    Args:
        amplitude (float): Shift A > 0, in noise units
        l (int): Signal length
        transient (TransientWindow): Generalized MOSUM bounds
        window (int): MOSUM window length L
        target_arl (float, optional): Common ARL C. Defaults to 500.0.
        reps (int, optional): Replicates. Defaults to settings.
        seed (int, optional): Master seed. Defaults to 0.
        thresholds (MatchedThresholds, optional): Precomputed thresholds. Defaults to None.

    Returns:
        ThreeWayPower: Three power estimates
    """

    reps = reps if reps is not None else get_settings().reps
    if thresholds is None:
        thresholds = match_thresholds(amplitude, window, transient, target_arl, reps, seed)

    spec = GaussianChangeSpec(amplitude=amplitude)
    nu = 3 * max(window, transient.l1, l)
    horizon = 2 * l
    common = {"nu": nu, "l": l, "horizon": horizon, "reps": reps, "seed": seed}

    p_s = estimate_conditional_power(
        DetectorConfig(procedure=Procedure.MOSUM, spec=spec, window=window),
        thresholds.h1,
        **common,
    )
    p_z = estimate_conditional_power(
        DetectorConfig(procedure=Procedure.GENMOSUM, spec=spec, transient=transient),
        thresholds.h2,
        **common,
    )
    p_v = estimate_conditional_power(
        DetectorConfig(procedure=Procedure.CUSUM_V, spec=spec), thresholds.h3, **common
    )
    _log.debug(
        "A=%g l=%d L=%d: P_S=%.3f P_Z=%.3f P_V=%.3f",
        amplitude,
        l,
        window,
        p_s.probability,
        p_z.probability,
        p_v.probability,
    )

    return ThreeWayPower(
        amplitude=amplitude,
        l=l,
        window=window,
        transient=transient,
        target_arl=target_arl,
        h1=thresholds.h1,
        h2=thresholds.h2,
        h3=thresholds.h3,
        p_s=p_s,
        p_z=p_z,
        p_v=p_v,
    )
