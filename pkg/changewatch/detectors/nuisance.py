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

from typing import Optional, Sequence

import numpy as np

from changewatch.core.changewatch_type import ChangewatchType
from changewatch.core.hypothesis import TransientWindow


class NuisanceStatistics(ChangewatchType):
    """Window statistics with the pre-change mean replaced by the sample mean

    Attributes:
        z1 (float, optional): Plug-in likelihood ratio maximum, None without A
        z2 (float, optional): Averaged-hypothesis maximum, None without A
        z3 (float): Standardized window-sum maximum, NaN if only l = n is admissible
    """

    z1: Optional[float] = None
    z2: Optional[float] = None
    z3: float


def batch_nuisance_stats(
    ys: Sequence[float] | np.ndarray,
    window: TransientWindow,
    amplitude: Optional[float] = None,
) -> NuisanceStatistics:
    """Maxima over windows (ν, ν+l], l0 <= l <= l1, of the nuisance-mean statistics

    With μ̂ the sample mean of the n observations and s the window sum:

    - z1 = max A·(s − lμ̂ − lA/2)
    - z2 = max A·(s − lμ̂ − l(A/2)(1 − l/n))
    - z3 = max (s − lμ̂)/√(l(1 − l/n)), over l < n

    Args:
        ys (Sequence[float] | np.ndarray): Observations y_1..y_n
        window (TransientWindow): Window bounds l0, l1
        amplitude (float, optional): Shift A, required for z1 and z2. Defaults to None.

    Returns:
        NuisanceStatistics: The three maxima
    """

    ys = np.asarray(ys, dtype=float)
    n = len(ys)
    if n < window.l1:
        raise ValueError(f"Need at least l1 = {window.l1} observations, got {n}")

    mean = ys.mean()
    cumsum = np.concatenate([[0.0], np.cumsum(ys)])
    z1 = z2 = z3 = -np.inf

    for length in range(window.l0, window.l1 + 1):
        centered = (cumsum[length:] - cumsum[:-length]) - length * mean
        best = centered.max()

        if amplitude is not None:
            z1 = max(z1, amplitude * (best - length * amplitude / 2.0))
            z2 = max(
                z2, amplitude * (best - length * (amplitude / 2.0) * (1.0 - length / n))
            )
        if length < n:
            z3 = max(z3, best / np.sqrt(length * (1.0 - length / n)))

    return NuisanceStatistics(
        z1=float(z1) if amplitude is not None else None,
        z2=float(z2) if amplitude is not None else None,
        z3=float(z3) if np.isfinite(z3) else float("nan"),
    )
