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

from typing import Sequence

import numpy as np
from pydantic import ConfigDict, Field

from changewatch.core.changewatch_type import ChangewatchType


class GaussianChangeSpec(ChangewatchType):
    """Gaussian pre-change and post-change pair N(mu, sigma²) / N(mu + amplitude, sigma²)

    Attributes:
        mu (float): Pre-change mean, in observation units
        amplitude (float): Mean shift A > 0, in observation units
        sigma (float): Noise standard deviation
    """

    mu: float = 0.0
    amplitude: float = Field(gt=0.0)
    sigma: float = Field(default=1.0, gt=0.0)

    model_config = ConfigDict(frozen=True)

    @property
    def information(self) -> float:
        """Kullback-Leibler information per observation, A²/(2σ²)

        Both directions coincide for the Gaussian pair.

        Returns:
            float: Information number
        """

        return self.amplitude**2 / (2.0 * self.sigma**2)

    @property
    def standardized_amplitude(self) -> float:
        """Shift in noise units, A/σ

        Returns:
            float: Standardized shift
        """

        return self.amplitude / self.sigma

    def standardized(self) -> "GaussianChangeSpec":
        """Return the equivalent unit-variance, zero-mean spec

        Returns:
            GaussianChangeSpec: Standardized spec
        """

        return GaussianChangeSpec(mu=0.0, amplitude=self.standardized_amplitude)

    def standardize(self, ys: float | Sequence[float] | np.ndarray) -> np.ndarray:
        """Map observations to the standardized scale (y − μ)/σ

        Args:
            ys (float | Sequence[float] | np.ndarray): Observations

        Returns:
            np.ndarray: Standardized observations
        """

        return (np.asarray(ys, dtype=float) - self.mu) / self.sigma


def log_likelihood_ratio(
    y: float | np.ndarray, spec: GaussianChangeSpec
) -> float | np.ndarray:
    """Log-likelihood ratio log g(y)/f(y) of one observation

    Args:
        y (float | np.ndarray): Observation, or array of observations
        spec (GaussianChangeSpec): Gaussian pair

    Returns:
        float | np.ndarray: A(y − μ − A/2)/σ², with the shape of y
    """

    llr = (
        spec.amplitude
        * (np.asarray(y, dtype=float) - spec.mu - spec.amplitude / 2.0)
        / spec.sigma**2
    )
    return float(llr) if llr.ndim == 0 else llr


def segment_llr(
    ys: Sequence[float] | np.ndarray, spec: GaussianChangeSpec, nu: int, end: int
) -> float:
    """Log-likelihood ratio of the segment ν+1..end (1-based, inclusive)

    Args:
        ys (Sequence[float] | np.ndarray): Observations y_1, y_2, ...
        spec (GaussianChangeSpec): Gaussian pair
        nu (int): Last pre-change index
        end (int): Last index of the segment

    Returns:
        float: Sum of log-likelihood ratios over the segment
    """

    ys = np.asarray(ys, dtype=float)
    if not 0 <= nu < end <= len(ys):
        raise ValueError(
            f"Segment ({nu}, {end}] must satisfy 0 <= nu < end <= {len(ys)}"
        )

    return float(np.sum(log_likelihood_ratio(ys[nu:end], spec)))
