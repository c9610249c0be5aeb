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


class ShiryaevRoberts(Detector):
    """Shiryaev-Roberts statistic, R_n = (1 + R_{n−1})·g(y_n)/f(y_n), R_0 = 0"""

    procedure = Procedure.SR
    start_value = 0.0

    def update(self, state: DetectorState, y: float | np.ndarray) -> None:
        with np.errstate(over="ignore"):
            state.value = (1.0 + state.value) * np.exp(
                log_likelihood_ratio(y, self.spec)
            )
        state.n += 1


def step_sr(state: DetectorState, y: float, spec: GaussianChangeSpec) -> DetectorState:
    """Advance a Shiryaev-Roberts state by one observation

    Args:
        state (DetectorState): Current state
        y (float): Observation
        spec (GaussianChangeSpec): Gaussian pair

    Returns:
        DetectorState: Next state
    """

    return ShiryaevRoberts(spec).step(state, y)
