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

from changewatch.core.changewatch_type import ChangewatchType
from changewatch.core.errors import (
    CalibrationError,
    CensoringError,
    ChangewatchError,
    ConditioningError,
    ConfigError,
    InputParseError,
    NumericalError,
    UnsupportedCaseError,
)
from changewatch.core.gaussian import (
    GaussianChangeSpec,
    log_likelihood_ratio,
    segment_llr,
)
from changewatch.core.hypothesis import ChangeAt, Hypothesis, NoChange, TransientWindow
from changewatch.core.stream import sample_stream

__all__ = [
    "CalibrationError",
    "CensoringError",
    "ChangeAt",
    "ChangewatchError",
    "ChangewatchType",
    "ConditioningError",
    "ConfigError",
    "GaussianChangeSpec",
    "Hypothesis",
    "InputParseError",
    "NoChange",
    "NumericalError",
    "TransientWindow",
    "UnsupportedCaseError",
    "log_likelihood_ratio",
    "sample_stream",
    "segment_llr",
]
