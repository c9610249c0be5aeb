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

from typing import Optional

import numpy as np

from changewatch.core.gaussian import GaussianChangeSpec
from changewatch.core.hypothesis import TransientWindow
from changewatch.detectors.detector import Detector
from changewatch.detectors.state import DetectorState, Procedure

# Running sums are rebuilt from their buffer at this period to bound drift
RECOMPUTE_PERIOD = 2**16


class Mosum(Detector):
    """Moving sum of the last L raw observations

    The statistic after n >= L observations is S_{n−L,L} = y_{n−L+1} + ... + y_n.
    Thresholds are on the raw-sum scale, H = μL + h·σ·√L for a standardized
    threshold h.

    Attributes:
        window (int): Window length L
    """

    procedure = Procedure.MOSUM
    start_value = 0.0

    def __init__(self, window: int, spec: Optional[GaussianChangeSpec] = None):
        """Initialize MOSUM detector

        Args:
            window (int): Window length L
            spec (GaussianChangeSpec, optional): Gaussian pair, only used for standardization. Defaults to None.
        """

        if window < 1:
            raise ValueError(f"MOSUM window must be at least 1, got {window}")
        super().__init__(spec if spec is not None else GaussianChangeSpec(amplitude=1.0))
        self.window = window

    @property
    def warmup(self) -> int:
        return self.window

    def _init_aux(self, shape: tuple[int, ...]) -> dict:
        return {"buffer": np.zeros((self.window, *shape))}

    def update(self, state: DetectorState, y: float | np.ndarray) -> None:
        buffer = state.aux["buffer"]
        slot = state.n % buffer.shape[0]
        y = np.asarray(y, dtype=float)

        state.value = state.value + (y - buffer[slot])
        buffer[slot] = y
        state.n += 1

        if state.n % RECOMPUTE_PERIOD == 0:
            state.value = buffer.sum(axis=0)

    def standardize(self, value: float | np.ndarray) -> float | np.ndarray:
        """Standardized statistic ξ = (S − μL)/(σ√L)

        Args:
            value (float | np.ndarray): Raw moving sum

        Returns:
            float | np.ndarray: Standardized moving sum
        """

        return (value - self.spec.mu * self.window) / (
            self.spec.sigma * np.sqrt(self.window)
        )

    def raw_threshold(self, h: float) -> float:
        """Raw-sum threshold H = μL + hσ√L of a standardized threshold

        Args:
            h (float): Standardized threshold

        Returns:
            float: Raw-sum threshold
        """

        return self.spec.mu * self.window + h * self.spec.sigma * np.sqrt(self.window)


class GenMosum(Detector):
    """Generalized moving sum over window lengths l0..l1

    The statistic after n >= l1 observations is the largest suffix sum, over
    suffix lengths l0..l1, of the centered terms (y − μ − A/2)/σ² held in the
    trailing l1-buffer. The llr factor A is dropped, so thresholds are on the
    centered-sum scale.

    Attributes:
        transient (TransientWindow): Window bounds l0, l1
    """

    procedure = Procedure.GENMOSUM
    start_value = 0.0

    def __init__(self, spec: GaussianChangeSpec, transient: TransientWindow):
        """Initialize generalized MOSUM detector

        Args:
            spec (GaussianChangeSpec): Gaussian pair
            transient (TransientWindow): Window bounds l0, l1
        """

        super().__init__(spec)
        self.transient = transient

    @property
    def warmup(self) -> int:
        return self.transient.l1

    def _init_aux(self, shape: tuple[int, ...]) -> dict:
        return {"buffer": np.zeros((self.transient.l1, *shape))}

    def update(self, state: DetectorState, y: float | np.ndarray) -> None:
        buffer = state.aux["buffer"]
        l0, l1 = self.transient.l0, self.transient.l1
        slot = state.n % l1

        buffer[slot] = (
            np.asarray(y, dtype=float) - self.spec.mu - self.spec.amplitude / 2.0
        ) / self.spec.sigma**2
        state.n += 1

        # Most recent term first, then suffix sums of lengths 1..l1
        recent = buffer[(slot - np.arange(l1)) % l1]
        suffix_sums = np.cumsum(recent, axis=0)
        state.value = suffix_sums[l0 - 1 :].max(axis=0)


def step_mosum(state: DetectorState, y: float) -> DetectorState:
    """Advance a MOSUM state by one observation

    Args:
        state (DetectorState): Current state, its buffer length sets L
        y (float): Observation

    Returns:
        DetectorState: Next state
    """

    return Mosum(window=state.aux["buffer"].shape[0]).step(state, y)


def step_genmosum(
    state: DetectorState,
    y: float,
    spec: GaussianChangeSpec,
    window: TransientWindow,
) -> DetectorState:
    """Advance a generalized MOSUM state by one observation

    Args:
        state (DetectorState): Current state
        y (float): Observation
        spec (GaussianChangeSpec): Gaussian pair
        window (TransientWindow): Window bounds l0, l1

    Returns:
        DetectorState: Next state
    """

    return GenMosum(spec, window).step(state, y)
