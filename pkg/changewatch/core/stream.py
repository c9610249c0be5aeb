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
from changewatch.core.hypothesis import Hypothesis, NoChange
from changewatch.utils.random import make_rng


def sample_stream(
    spec: GaussianChangeSpec,
    hypothesis: Optional[Hypothesis] = None,
    n: int = 1,
    rng_seed: Optional[int] = None,
) -> np.ndarray:
    """Simulate observations y_1..y_n under a hypothesis

    Args:
        spec (GaussianChangeSpec): Gaussian pair
        hypothesis (Hypothesis, optional): Change hypothesis. Defaults to NoChange.
        n (int, optional): Stream length. Defaults to 1.
        rng_seed (int, optional): Seed, None for fresh entropy. Defaults to None.

    Returns:
        np.ndarray: Simulated observations
    """

    if n < 1:
        raise ValueError(f"Stream length must be at least 1, got {n}")
    if hypothesis is None:
        hypothesis = NoChange()

    rng = make_rng(rng_seed)
    indices = np.arange(1, n + 1)

    return (
        spec.mu
        + spec.sigma * rng.standard_normal(n)
        + hypothesis.mean_shift(indices, spec.amplitude)
    )
