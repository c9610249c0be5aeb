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
import math
from typing import Sequence

import numpy as np
import pandas as pd
from pydantic import ConfigDict

from changewatch.app.detect import cluster_alarms
from changewatch.core.changewatch_type import ChangewatchType
from changewatch.core.gaussian import GaussianChangeSpec
from changewatch.core.hypothesis import ChangeAt
from changewatch.detectors.config import DetectorConfig
from changewatch.detectors.state import AlarmEvent, Procedure
from changewatch.simulation.calibration import analytic_threshold
from changewatch.utils.random import make_rng

_log: logging.Logger = logging.getLogger(__name__)

HOLD_LENGTHS = (60, 90, 75)
HOLD_AMPLITUDE = 1.5
TREND_AMPLITUDE = 2.0
TREND_PERIOD = 250.0
EMPTY_HORIZON = 2000
# Distance between holds, in windows
HOLD_SPACING = 2.6
# Largest distance between alarms of one cluster, in windows
CLUSTER_GAP = 1.5


class PressureDemo(ChangewatchType):
    """Outcome of the synthetic pressure-test run

    Attributes:
        series (pd.DataFrame): Per-observation t, z, trend, residual, statistic, threshold, alarm, hold
        holds (list[ChangeAt]): Embedded hold periods
        alarms (list[AlarmEvent]): Alarms in time order
        clusters (int): Number of alarm clusters
        threshold (float): MOSUM raw-sum threshold
    """

    series: pd.DataFrame
    holds: list[ChangeAt]
    alarms: list[AlarmEvent]
    clusters: int
    threshold: float

    model_config = ConfigDict(arbitrary_types_allowed=True)


def hold_schedule(window: int, lengths: Sequence[int]) -> tuple[list[ChangeAt], int]:
    """Place hold periods after one window of burn-in, spaced by HOLD_SPACING windows

    Args:
        window (int): MOSUM window length L
        lengths (Sequence[int]): Hold durations

    Returns:
        tuple[list[ChangeAt], int]: Holds and stream length
    """

    if not lengths:
        return [], EMPTY_HORIZON

    holds = []
    start = window + 10
    for length in lengths:
        holds.append(ChangeAt(nu=start, l=length))
        start += length + math.ceil(HOLD_SPACING * window)
    return holds, int(holds[-1].last_index) + window


def cmd_pressure_demo(
    window: int = 75,
    target_arl: float = 5000.0,
    seed: int = 0,
    lengths: Sequence[int] = HOLD_LENGTHS,
    amplitude: float = HOLD_AMPLITUDE,
) -> PressureDemo:
    """Detect hold periods in a synthetic pressure record with a known periodic trend

    The record is z_t = s_t + y_t with s_t a sinusoid and y_t Gaussian noise
    that rises by the amplitude during each hold. The trend is subtracted and
    MOSUM runs on the residuals, restarting after every alarm.

    Args:
        window (int, optional): MOSUM window length L. Defaults to 75.
        target_arl (float, optional): Target ARL. Defaults to 5000.0.
        seed (int, optional): Seed of the noise. Defaults to 0.
        lengths (Sequence[int], optional): Hold durations. Defaults to HOLD_LENGTHS.
        amplitude (float, optional): Hold shift, in noise units. Defaults to HOLD_AMPLITUDE.

    Returns:
        PressureDemo: Series, alarms and cluster count
    """

    holds, horizon = hold_schedule(window, lengths)
    t = np.arange(1, horizon + 1)
    rng = make_rng(seed)

    shift = np.zeros(horizon)
    for hold in holds:
        shift += hold.mean_shift(t, amplitude)
    trend = TREND_AMPLITUDE * np.sin(2.0 * np.pi * t / TREND_PERIOD)
    z = trend + shift + rng.standard_normal(horizon)
    residual = z - trend

    config = DetectorConfig(
        procedure=Procedure.MOSUM,
        spec=GaussianChangeSpec(amplitude=amplitude),
        window=window,
    )
    threshold = analytic_threshold(config, target_arl)
    detector = config.build()
    state = detector.init_state()
    statistic = np.full(horizon, np.nan)
    alarm_flags = np.zeros(horizon, dtype=bool)
    alarms: list[AlarmEvent] = []
    offset = 0

    for i, y in enumerate(residual):
        detector.update(state, y)
        if state.n >= detector.first_check:
            statistic[i] = state.statistic
        if detector.crossed(state, threshold):
            alarms.append(
                AlarmEvent(
                    n=i + 1,
                    statistic=state.statistic,
                    threshold=threshold,
                    procedure=Procedure.MOSUM,
                    warmup=offset + detector.warmup,
                )
            )
            alarm_flags[i] = True
            offset = i + 1
            state = detector.init_state()

    clusters = cluster_alarms(alarms, CLUSTER_GAP * window)
    in_hold = shift != 0.0
    _log.info(
        "%d hold(s), %d alarm(s) in %d cluster(s) over %d observations",
        len(holds),
        len(alarms),
        len(clusters),
        horizon,
    )

    series = pd.DataFrame(
        {
            "t": t,
            "z": z,
            "trend": trend,
            "residual": residual,
            "statistic": statistic,
            "threshold": threshold,
            "alarm": alarm_flags,
            "hold": in_hold,
        }
    )
    return PressureDemo(
        series=series,
        holds=holds,
        alarms=alarms,
        clusters=len(clusters),
        threshold=threshold,
    )
