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

import csv
import logging
from typing import Iterator, TextIO

import numpy as np

from changewatch.core.errors import InputParseError

_log: logging.Logger = logging.getLogger(__name__)


def read_observations(source: TextIO) -> Iterator[float]:
    """Stream observations from CSV rows

    Rows hold either a bare value or an index,value pair; the value is the
    last column. A first row that does not parse is taken as a header. Blank
    rows are skipped. Rows are read lazily, one at a time.

    Args:
        source (TextIO): Text stream

    Yields:
        float: Observations in order
    """

    reader = csv.reader(source)
    first = True
    for row in reader:
        cells = [cell.strip() for cell in row]
        if not any(cells):
            continue
        row_number = reader.line_num
        content = ",".join(row)

        if len(cells) > 2:
            raise InputParseError(row_number, content)
        try:
            value = float(cells[-1])
        except ValueError as e:
            if first:
                _log.debug("Header row detected: %s", content)
                first = False
                continue
            raise InputParseError(row_number, content) from e
        first = False

        if not np.isfinite(value):
            raise InputParseError(row_number, content)
        yield value
