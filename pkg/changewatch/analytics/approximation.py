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

import logging
from typing import Optional

from changewatch.core.changewatch_type import ChangewatchType

_log: logging.Logger = logging.getLogger(__name__)


class Approximation(ChangewatchType):
    """Approximate value with an optional validity advisory

    Attributes:
        value (float): Approximate value
        advisory (str, optional): Why the value may be unreliable, None if in range
    """

    value: float
    advisory: Optional[str] = None

    @property
    def valid(self) -> bool:
        """True when no advisory was raised

        Returns:
            bool: Validity flag
        """

        return self.advisory is None

    def __float__(self) -> float:
        return self.value

    @staticmethod
    def flagged(value: float, advisory: Optional[str]) -> "Approximation":
        """Create approximation and log its advisory

        Args:
            value (float): Approximate value
            advisory (str, optional): Advisory text

        Returns:
            Approximation: Approximation
        """

        if advisory is not None:
            _log.warning(advisory)
        return Approximation(value=value, advisory=advisory)
