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


class ChangewatchError(Exception):
    """Base class for all changewatch errors"""


class ConfigError(ChangewatchError, ValueError):
    """Invalid run or detector configuration"""


class InputParseError(ChangewatchError, ValueError):
    """Observation stream row that cannot be parsed

    Attributes:
        row (int): 1-based row number in the input
        content (str): Raw row content
    """

    def __init__(self, row: int, content: Optional[str] = None):
        """Initialize parse error

        Args:
            row (int): 1-based row number in the input
            content (str, optional): Raw row content. Defaults to None.
        """

        self.row = row
        self.content = content
        super().__init__(f"Could not parse observation at row {row}: {content!r}")


class NumericalError(ChangewatchError, ArithmeticError):
    """Numerical procedure failure (quadrature, linear system, degenerate approximation)"""


class CalibrationError(NumericalError):
    """Threshold bracket could not be found"""


class CensoringError(NumericalError):
    """Every simulated replicate hit the step cap"""


class ConditioningError(NumericalError):
    """No simulated replicate satisfied the conditioning event"""


class UnsupportedCaseError(ChangewatchError, NotImplementedError):
    """Request outside the cases covered by the available approximations"""
