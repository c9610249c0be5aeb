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

import copy
from enum import Enum
from typing import Any

import numpy as np
from pydantic import ConfigDict, Field

from changewatch.core.changewatch_type import ChangewatchType


class Procedure(str, Enum):
    """Detection procedures"""

    CUSUM_V = "cusum"
    PAGE_P = "page"
    SR = "sr"
    MOSUM = "mosum"
    GENMOSUM = "genmosum"
    FULL_LR = "full_lr"


class DetectorState(ChangewatchType):
    """Recursive state of a detector

    The statistic may track a single stream (0-d arrays) or a batch of
    independent streams (batch axis last in every array).

    Attributes:
        procedure (Procedure): Procedure tag
        value (np.ndarray): Current statistic
        aux (dict[str, Any]): Procedure-specific store (ring buffers, reflected walk)
        n (int): Number of observations processed
    """

    procedure: Procedure
    value: np.ndarray
    aux: dict[str, Any] = Field(default_factory=dict)
    n: int = 0

    model_config = ConfigDict(arbitrary_types_allowed=True)

    @property
    def statistic(self) -> float:
        """Current statistic of a single-stream state

        Returns:
            float: Statistic value
        """

        return float(self.value)

    def copy(self) -> "DetectorState":
        """Return an independent copy of the state

        Returns:
            DetectorState: Copied state
        """

        return DetectorState(
            procedure=self.procedure,
            value=np.array(self.value, copy=True),
            aux=copy.deepcopy(self.aux),
            n=self.n,
        )

    def select(self, keep: np.ndarray) -> "DetectorState":
        """Return the state restricted to a subset of batch lanes

        Args:
            keep (np.ndarray): Boolean mask or indices over the batch axis

        Returns:
            DetectorState: Restricted state
        """

        aux = {
            key: item[..., keep] if isinstance(item, np.ndarray) else item
            for key, item in self.aux.items()
        }
        return DetectorState(
            procedure=self.procedure, value=self.value[..., keep], aux=aux, n=self.n
        )


class AlarmEvent(ChangewatchType):
    """Alarm raised by a stopping rule

    Attributes:
        n (int): Stopping time, as the number of observations seen
        statistic (float): Statistic value at the stopping time
        threshold (float): Threshold that was crossed
        procedure (Procedure): Procedure tag
        warmup (int): Observations needed before any alarm (L or l1 for moving sums)
    """

    n: int
    statistic: float
    threshold: float
    procedure: Procedure
    warmup: int = 0

    @property
    def scan_index(self) -> int:
        """Crossing index of the underlying scan statistic, n − warm-up

        Returns:
            int: Scan index
        """

        return self.n - self.warmup


class RunExhausted(ChangewatchType):
    """Stream ended before any alarm

    Attributes:
        n_observed (int): Observations consumed
        procedure (Procedure): Procedure tag
    """

    n_observed: int
    procedure: Procedure
