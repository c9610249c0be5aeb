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

import json
from typing import Any, TextIO

import pandas as pd

from changewatch.core.changewatch_type import ChangewatchType


def write_record(sink: TextIO, record: ChangewatchType, **extra: Any) -> None:
    """Write one record as a JSON line

    Args:
        sink (TextIO): Text stream
        record (ChangewatchType): Record, typically an AlarmEvent
        extra (Any): Additional fields
    """

    sink.write(json.dumps({**record.to_dict(), **extra}) + "\n")
    sink.flush()


def write_frame(frame: pd.DataFrame, sink: TextIO | str, precision: int = 6) -> None:
    """Write a table or data series as CSV

    Args:
        frame (pd.DataFrame): Table
        sink (TextIO | str): Text stream or path
        precision (int, optional): Significant digits of floats. Defaults to 6.
    """

    frame.to_csv(sink, index=False, float_format=f"%.{precision}g")
