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

import io
import json
import tempfile
import unittest
from pathlib import Path

import numpy as np
import pandas as pd

from changewatch.core import InputParseError
from changewatch.data import read_observations, write_frame, write_record
from changewatch.detectors import AlarmEvent, Procedure


class ReadObservationsTestCase(unittest.TestCase):
    """read_observations test case"""

    def test_bare_values(self):
        """Test bare value rows with blank lines"""

        values = list(read_observations(io.StringIO("1.5\n\n-2\n3e-1\n")))

        self.assertTrue(np.allclose(values, [1.5, -2.0, 0.3]))

    def test_index_value(self):
        """Test index,value rows with a header"""

        values = list(read_observations(io.StringIO("t,pressure\n1,0.5\n2,0.25\n")))

        self.assertTrue(np.allclose(values, [0.5, 0.25]))

    def test_malformed(self):
        """Test malformed rows report their row number"""

        with self.assertRaises(InputParseError) as context:
            list(read_observations(io.StringIO("1.0\n2.0\nabc\n")))
        self.assertEqual(context.exception.row, 3)
        self.assertIn("row 3", str(context.exception))

        with self.assertRaises(InputParseError):
            list(read_observations(io.StringIO("1,2,3\n")))
        with self.assertRaises(InputParseError):
            list(read_observations(io.StringIO("1.0\nnan\n")))

    def test_lazy(self):
        """Test rows are read one at a time"""

        reader = read_observations(io.StringIO("1.0\nabc\n2.0\nxyz\n"))

        self.assertEqual(next(reader), 1.0)
        with self.assertRaises(InputParseError):
            next(reader)


class WritersTestCase(unittest.TestCase):
    """write_record and write_frame test case"""

    def test_write_record(self):
        """Test JSON line records"""

        sink = io.StringIO()
        alarm = AlarmEvent(
            n=120, statistic=31.5, threshold=30.0, procedure=Procedure.MOSUM, warmup=50
        )
        write_record(sink, alarm, restart=0)

        record = json.loads(sink.getvalue())
        self.assertEqual(record["n"], 120)
        self.assertEqual(record["procedure"], "mosum")
        self.assertEqual(record["restart"], 0)
        self.assertTrue(sink.getvalue().endswith("\n"))

    def test_write_frame(self):
        """Test CSV tables"""

        frame = pd.DataFrame({"row": ["a", "b"], "value": [1.0 / 3.0, 2.0]})
        with tempfile.TemporaryDirectory() as temp_dir:
            path = Path(temp_dir) / "table.csv"
            write_frame(frame, str(path))
            lines = path.read_text(encoding="utf-8").splitlines()

        self.assertEqual(lines, ["row,value", "a,0.333333", "b,2"])
