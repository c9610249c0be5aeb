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

from typing import Annotated, Literal, Optional, Union

import numpy as np
from pydantic import ConfigDict, Field, model_validator

from changewatch.core.changewatch_type import ChangewatchType


class TransientWindow(ChangewatchType):
    """Bounds l0 <= l <= l1 on the duration of a transient signal

    Attributes:
        l0 (int): Lower bound on signal length
        l1 (int): Upper bound on signal length
    """

    l0: int = Field(ge=1)
    l1: int = Field(ge=1)

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_order(self) -> "TransientWindow":
        if self.l0 > self.l1:
            raise ValueError(f"Window must satisfy l0 <= l1, got {self.l0}:{self.l1}")
        return self

    @staticmethod
    def exact(length: int) -> "TransientWindow":
        """Create window for a signal of known length l0 = l1 = length

        Args:
            length (int): Signal length

        Returns:
            TransientWindow: Degenerate window
        """

        return TransientWindow(l0=length, l1=length)

    @staticmethod
    def parse(text: str) -> "TransientWindow":
        """Create window from "l0:l1" or "l" text

        Args:
            text (str): Window text

        Returns:
            TransientWindow: Parsed window
        """

        try:
            bounds = [int(part) for part in text.split(":")]
        except ValueError as e:
            raise ValueError(f"Invalid window '{text}', expected 'L' or 'l0:l1'") from e
        if len(bounds) == 1:
            return TransientWindow.exact(bounds[0])
        if len(bounds) == 2:
            return TransientWindow(l0=bounds[0], l1=bounds[1])
        raise ValueError(f"Invalid window '{text}', expected 'L' or 'l0:l1'")


class NoChange(ChangewatchType):
    """Null hypothesis: every observation follows the pre-change density"""

    tag: Literal["NoChange"] = "NoChange"

    model_config = ConfigDict(frozen=True)

    def mean_shift(self, indices: np.ndarray, amplitude: float) -> np.ndarray:
        """Mean shift added at the given 1-based observation indices

        Args:
            indices (np.ndarray): 1-based observation indices
            amplitude (float): Shift amplitude

        Returns:
            np.ndarray: Zeros
        """

        return np.zeros(np.shape(indices), dtype=float)


class ChangeAt(ChangewatchType):
    """Change hypothesis: signal present on observations ν+1..ν+l

    Attributes:
        nu (int): Last pre-change index
        l (int, optional): Signal duration, None for a permanent change
    """

    tag: Literal["ChangeAt"] = "ChangeAt"
    nu: int = Field(ge=0)
    l: Optional[int] = Field(default=None, ge=1)

    model_config = ConfigDict(frozen=True)

    @property
    def is_permanent(self) -> bool:
        """True if the signal never ends

        Returns:
            bool: Permanent change
        """

        return self.l is None

    @property
    def last_index(self) -> float:
        """Last 1-based index carrying the signal

        Returns:
            float: ν + l, or infinity for a permanent change
        """

        return np.inf if self.l is None else float(self.nu + self.l)

    def mean_shift(self, indices: np.ndarray, amplitude: float) -> np.ndarray:
        """Mean shift added at the given 1-based observation indices

        Args:
            indices (np.ndarray): 1-based observation indices
            amplitude (float): Shift amplitude

        Returns:
            np.ndarray: amplitude inside [ν+1, ν+l], 0 elsewhere
        """

        indices = np.asarray(indices)
        inside = (indices > self.nu) & (indices <= self.last_index)
        return np.where(inside, amplitude, 0.0)


Hypothesis = Annotated[Union[NoChange, ChangeAt], Field(discriminator="tag")]
