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


class FullLR(Detector):
    """Running maximum of the log-likelihood ratio over every window

    W_n = max(W_{n−1}, 0) + llr(y_n) is the best window ending at n and
    K_n = max(K_{n−1}, W_n), with W_0 = K_0 = 0.
    """

    procedure = Procedure.FULL_LR
    start_value = 0.0

    def _init_aux(self, shape: tuple[int, ...]) -> dict:
        return {"walk": np.zeros(shape)}

    def update(self, state: DetectorState, y: float | np.ndarray) -> None:
        walk = np.maximum(state.aux["walk"], 0.0) + log_likelihood_ratio(y, self.spec)
        state.aux["walk"] = walk
        state.value = np.maximum(state.value, walk)
        state.n += 1


def step_full_lr(
    state: DetectorState, y: float, spec: GaussianChangeSpec
) -> DetectorState:
    """Advance a full likelihood-ratio state by one observation

    Args:
        state (DetectorState): Current state
        y (float): Observation
        spec (GaussianChangeSpec): Gaussian pair

    Returns:
        DetectorState: Next state
    """

    return FullLR(spec).step(state, y)
