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
from pydantic import Field, model_validator

from changewatch.core.changewatch_type import ChangewatchType
from changewatch.core.hypothesis import Hypothesis, NoChange
from changewatch.detectors.config import DetectorConfig

# Largest censored fraction accepted without flagging an estimate
CENSORING_FLAG = 1e-3


class SimulationPlan(ChangewatchType):
    """Monte Carlo run description

    Attributes:
        detector (DetectorConfig): Detector to simulate
        threshold (float): Threshold on the detector's statistic scale
        hypothesis (Hypothesis): Data-generating hypothesis
        replicates (int): Number of replicates
        max_steps (int): Censoring cap on the stopping time
        seed (int): Master seed
        n_jobs (int): Parallel workers for replicate blocks
    """

    detector: DetectorConfig
    threshold: float
    hypothesis: Hypothesis = Field(default_factory=NoChange)
    replicates: int = Field(default=10_000, ge=1)
    max_steps: int = Field(default=1_000_000, ge=1)
    seed: int = 0
    n_jobs: int = 1

    @model_validator(mode="after")
    def _check_cap(self) -> "SimulationPlan":
        if self.max_steps < self.detector.warmup:
            raise ValueError(
                f"max_steps={self.max_steps} below the detector warm-up {self.detector.warmup}"
            )
        return self


class RunLengthEstimate(ChangewatchType):
    """Empirical mean stopping time

    Attributes:
        mean (float): Mean stopping time over uncensored replicates
        std_error (float): Standard error of the mean
        censored_count (int): Replicates that reached the censoring cap
        replicates (int): Number of replicates
        seed (int): Master seed
        offset (int): Warm-up subtracted by scan_mean
    """

    mean: float
    std_error: float = Field(ge=0.0)
    censored_count: int = Field(default=0, ge=0)
    replicates: int = Field(ge=1)
    seed: int
    offset: int = 0

    @property
    def scan_mean(self) -> float:
        """Mean crossing index of the scan statistic, mean − warm-up

        Returns:
            float: Scan mean
        """

        return self.mean - self.offset

    @property
    def censored_fraction(self) -> float:
        """Fraction of censored replicates

        Returns:
            float: Censored fraction
        """

        return self.censored_count / self.replicates

    @property
    def flagged(self) -> bool:
        """True when censoring may bias the mean

        Returns:
            bool: Censoring flag
        """

        return self.censored_fraction > CENSORING_FLAG

    @staticmethod
    def from_times(
        times: np.ndarray, max_steps: int, seed: int, offset: int = 0
    ) -> "RunLengthEstimate":
        """Summarize simulated stopping times

        Args:
            times (np.ndarray): Stopping times, above max_steps when censored
            max_steps (int): Censoring cap
            seed (int): Master seed
            offset (int, optional): Detector warm-up. Defaults to 0.

        Returns:
            RunLengthEstimate: Estimate
        """

        stopped = times[times <= max_steps]
        std_error = (
            float(np.std(stopped, ddof=1) / np.sqrt(stopped.size)) if stopped.size > 1 else 0.0
        )
        return RunLengthEstimate(
            mean=float(np.mean(stopped)) if stopped.size else float("nan"),
            std_error=std_error,
            censored_count=int(times.size - stopped.size),
            replicates=int(times.size),
            seed=seed,
            offset=offset,
        )


class PowerEstimate(ChangewatchType):
    """Empirical conditional detection probability

    Attributes:
        probability (float): Fraction of conditioned replicates alarming in the window
        std_error (float): Binomial standard error
        nu (int): Change point ν, also the conditioning point: no alarm up to this observation
        horizon (int): Window length T, alarms counted on ν+1..ν+T−1
        replicates (int): Number of replicates
        conditioned (int): Replicates without an alarm up to ν
        seed (int): Master seed
        threshold (float, optional): Threshold used
    """

    probability: float = Field(ge=0.0, le=1.0)
    std_error: float = Field(ge=0.0)
    nu: int = Field(ge=0)
    horizon: int = Field(ge=1)
    replicates: int = Field(ge=1)
    conditioned: int = Field(ge=1)
    seed: int
    threshold: Optional[float] = None
