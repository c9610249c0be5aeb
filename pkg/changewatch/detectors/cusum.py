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

import numpy as np

from changewatch.core.gaussian import GaussianChangeSpec, log_likelihood_ratio
from changewatch.detectors.detector import Detector
from changewatch.detectors.state import DetectorState, Procedure


class CusumV(Detector):
    """CUSUM on the likelihood-ratio scale, V_n = max(V_{n−1}, 1)·g(y_n)/f(y_n), V_0 = 1"""

    procedure = Procedure.CUSUM_V
    start_value = 1.0

    def update(self, state: DetectorState, y: float | np.ndarray) -> None:
        with np.errstate(over="ignore"):
            state.value = np.maximum(state.value, 1.0) * np.exp(
                log_likelihood_ratio(y, self.spec)
            )
        state.n += 1


class PageP(Detector):
    """Page's chart, P_n = max(P_{n−1} + log g(y_n)/f(y_n), 0), P_0 = 0

    P_n = log V_n whenever V_n > 1, so the rule with threshold log H stops
    with the CusumV rule at threshold H > 1.
    """

    procedure = Procedure.PAGE_P
    start_value = 0.0

    def update(self, state: DetectorState, y: float | np.ndarray) -> None:
        state.value = np.maximum(
            state.value + log_likelihood_ratio(y, self.spec), 0.0
        )
        state.n += 1


def step_cusum_v(
    state: DetectorState, y: float, spec: GaussianChangeSpec
) -> DetectorState:
    """Advance a CUSUM state by one observation

    Args:
        state (DetectorState): Current state
        y (float): Observation
        spec (GaussianChangeSpec): Gaussian pair

    Returns:
        DetectorState: Next state
    """

    return CusumV(spec).step(state, y)


def step_page(state: DetectorState, y: float, spec: GaussianChangeSpec) -> DetectorState:
    """Advance a Page chart state by one observation

    Args:
        state (DetectorState): Current state
        y (float): Observation
        spec (GaussianChangeSpec): Gaussian pair

    Returns:
        DetectorState: Next state
    """

    return PageP(spec).step(state, y)
