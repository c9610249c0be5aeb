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

from abc import ABC, abstractmethod
from typing import Iterable, Optional

import numpy as np

from changewatch.core.gaussian import GaussianChangeSpec
from changewatch.detectors.state import (
    AlarmEvent,
    DetectorState,
    Procedure,
    RunExhausted,
)


class Detector(ABC):
    """Base class for online detectors

    Subclasses implement the recursion in `update`, mutating a DetectorState
    in place. The same recursion serves a single stream or a vectorized batch
    of independent streams.

    Attributes:
        procedure (Procedure): Procedure tag
        spec (GaussianChangeSpec): Gaussian pair
        start_value (float): Statistic before the first observation
    """

    procedure: Procedure
    start_value: float = 0.0

    def __init__(self, spec: GaussianChangeSpec):
        """Initialize detector

        Args:
            spec (GaussianChangeSpec): Gaussian pair
        """

        self.spec = spec

    @property
    def warmup(self) -> int:
        """Observations required before an alarm is legal

        Returns:
            int: Warm-up length
        """

        return 0

    @property
    def first_check(self) -> int:
        """First observation count at which the stopping rule is evaluated

        Returns:
            int: max(1, warm-up)
        """

        return max(1, self.warmup)

    def init_state(self, batch: Optional[int] = None) -> DetectorState:
        """Return the start state

        Args:
            batch (int, optional): Number of parallel streams, None for a single stream. Defaults to None.

        Returns:
            DetectorState: Start state
        """

        shape = () if batch is None else (batch,)
        return DetectorState(
            procedure=self.procedure,
            value=np.full(shape, self.start_value, dtype=float),
            aux=self._init_aux(shape),
            n=0,
        )

    def _init_aux(self, shape: tuple[int, ...]) -> dict:
        return {}

    @abstractmethod
    def update(self, state: DetectorState, y: float | np.ndarray) -> None:
        """Advance the state by one observation, in place

        Args:
            state (DetectorState): State to update
            y (float | np.ndarray): Observation, one per stream
        """

    def step(self, state: DetectorState, y: float | np.ndarray) -> DetectorState:
        """Return the state advanced by one observation

        Args:
            state (DetectorState): Current state, left untouched
            y (float | np.ndarray): Observation, one per stream

        Returns:
            DetectorState: Next state
        """

        if state.procedure != self.procedure:
            raise ValueError(
                f"State of procedure '{state.procedure.value}' given to a '{self.procedure.value}' detector"
            )
        new_state = state.copy()
        self.update(new_state, y)
        return new_state

    def crossed(self, state: DetectorState, threshold: float) -> np.ndarray:
        """Evaluate the stopping rule

        Args:
            state (DetectorState): Current state
            threshold (float): Threshold

        Returns:
            np.ndarray: True where the statistic exceeds the threshold after warm-up
        """

        if state.n < self.first_check:
            return np.zeros(np.shape(state.value), dtype=bool)
        return state.value > threshold

    def statistic_path(self, ys: Iterable[float]) -> np.ndarray:
        """Statistic after each observation of a stream

        Args:
            ys (Iterable[float]): Observations

        Returns:
            np.ndarray: Statistic values, NaN before warm-up
        """

        state = self.init_state()
        path = []
        for y in ys:
            self.update(state, y)
            path.append(state.statistic if state.n >= self.first_check else np.nan)
        return np.array(path)


def run_to_alarm(
    detector: Detector, threshold: float, stream: Iterable[float]
) -> AlarmEvent | RunExhausted:
    """Run a stopping rule over a stream until its first alarm

    Args:
        detector (Detector): Detector
        threshold (float): Threshold on the detector's statistic scale
        stream (Iterable[float]): Observations, consumed lazily

    Returns:
        AlarmEvent | RunExhausted: First alarm, or exhaustion record
    """

    state = detector.init_state()
    for y in stream:
        detector.update(state, y)
        if detector.crossed(state, threshold):
            return AlarmEvent(
                n=state.n,
                statistic=state.statistic,
                threshold=threshold,
                procedure=detector.procedure,
                warmup=detector.warmup,
            )

    return RunExhausted(n_observed=state.n, procedure=detector.procedure)
