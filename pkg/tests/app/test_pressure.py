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

import unittest

import numpy as np

from changewatch.app import cmd_pressure_demo
from changewatch.app.pressure import EMPTY_HORIZON, HOLD_LENGTHS, hold_schedule
from changewatch.core import ChangeAt


class HoldScheduleTestCase(unittest.TestCase):
    """hold_schedule test case"""

    def test_schedule(self):
        """Test hold placement and stream length"""

        holds, horizon = hold_schedule(75, HOLD_LENGTHS)

        self.assertEqual(
            holds,
            [ChangeAt(nu=85, l=60), ChangeAt(nu=340, l=90), ChangeAt(nu=625, l=75)],
        )
        self.assertEqual(horizon, 775)

    def test_empty(self):
        """Test stream length without holds"""

        self.assertEqual(hold_schedule(75, []), ([], EMPTY_HORIZON))


class PressureDemoTestCase(unittest.TestCase):
    """cmd_pressure_demo test case"""

    def test_series(self):
        """Test per-observation series"""

        demo = cmd_pressure_demo(seed=0)
        series = demo.series

        self.assertEqual(len(series), 775)
        self.assertEqual(
            list(series.columns),
            ["t", "z", "trend", "residual", "statistic", "threshold", "alarm", "hold"],
        )
        self.assertTrue(np.allclose(series["z"] - series["trend"], series["residual"]))
        self.assertTrue(series["statistic"].iloc[:74].isna().all())
        self.assertEqual(int(series["hold"].sum()), sum(HOLD_LENGTHS))
        self.assertEqual(int(series["alarm"].sum()), len(demo.alarms))
        self.assertGreater(demo.threshold, 0.0)

    def test_three_clusters(self):
        """Test one alarm cluster per hold for most seeds"""

        matches = 0
        for seed in range(20):
            demo = cmd_pressure_demo(seed=seed)
            if demo.clusters == 3:
                matches += 1

        self.assertGreaterEqual(matches, 14)

    def test_no_holds(self):
        """Test null record"""

        demo = cmd_pressure_demo(seed=1, lengths=())

        self.assertEqual(len(demo.series), EMPTY_HORIZON)
        self.assertFalse(demo.series["hold"].any())
        self.assertEqual(demo.holds, [])
        self.assertLessEqual(demo.clusters, 2)
