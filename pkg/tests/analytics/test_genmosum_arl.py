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

from changewatch.analytics import (
    RHO,
    approx1_base_probabilities,
    approx1_bcp,
    approx2_arl,
    genmosum_arl,
    genmosum_bcp,
    hogan_tail,
)
from changewatch.core import NumericalError, TransientWindow


class HoganTailTestCase(unittest.TestCase):
    """hogan_tail test case"""

    def test_value(self):
        """Test tail value in the valid regime"""

        tail = hogan_tail(5.0, 1.0, 10.0)

        self.assertAlmostEqual(tail.value, 13.0 * np.exp(-10.0))
        self.assertTrue(tail.valid)

    def test_advisory(self):
        """Test advisories outside the valid regime"""

        self.assertFalse(hogan_tail(5.0, 1.0, 2.0).valid)
        self.assertFalse(hogan_tail(-1.0, 1.0, 10.0).valid)
        clamped = hogan_tail(0.1, 1.0, 10.0)
        self.assertEqual(clamped.value, 1.0)
        self.assertFalse(clamped.valid)
        with self.assertRaises(ValueError):
            hogan_tail(5.0, 0.0, 10.0)


class ExplicitApproximationTestCase(unittest.TestCase):
    """Explicit generalized MOSUM approximations with l0 = 1"""

    def test_arl_row(self):
        """Test explicit ARL approximation against the tabulated values at l1 = 10"""

        grid = [2.0, 2.25, 2.5, 2.75, 3.0, 3.25, 3.5]
        expected = [20, 32, 49, 71, 100, 137, 185]
        for threshold, arl in zip(grid, expected):
            value = approx2_arl(threshold, 1.0, 10).value
            self.assertLess(abs(value - arl), max(1.0, 0.01 * arl))

    def test_spot_values(self):
        """Test explicit ARL approximation at two thresholds"""

        self.assertAlmostEqual(approx2_arl(3.0, 1.0, 10).value, 100.5, delta=0.1)
        self.assertAlmostEqual(approx2_arl(2.0, 1.0, 10).value, 20.45, delta=0.05)

    def test_base_probabilities(self):
        """Test base probabilities use the shifted barrier"""

        f_l1, f_2l1 = approx1_base_probabilities(3.0, 1.0, 10)
        barrier = 3.0 + 2.0 * RHO

        self.assertAlmostEqual(f_l1.value, 1.0 - hogan_tail(barrier, 0.5, 20.0).value)
        self.assertAlmostEqual(f_2l1.value, 1.0 - hogan_tail(barrier, 0.5, 30.0).value)
        self.assertGreater(f_l1.value, f_2l1.value)

    def test_bcp(self):
        """Test explicit boundary-crossing approximation at two windows"""

        _, f_2l1 = approx1_base_probabilities(3.0, 1.0, 10)

        self.assertAlmostEqual(approx1_bcp(3.0, 1.0, 10, 20).value, f_2l1.value)
        self.assertLess(approx1_bcp(3.0, 1.0, 10, 50).value, f_2l1.value)
        with self.assertRaises(ValueError):
            approx1_bcp(3.0, 1.0, 10, -1)

    def test_low_threshold(self):
        """Test degenerate explicit approximation at low thresholds"""

        with self.assertRaises(NumericalError):
            approx2_arl(-3.0, 1.0, 10)


class SimulatedBaseTestCase(unittest.TestCase):
    """genmosum_arl and genmosum_bcp test case"""

    def setUp(self):
        """Tests setup"""

        self.window = TransientWindow(l0=25, l1=50)

    def test_arl(self):
        """Test ARL formula from base probabilities"""

        theta = 0.8 / 0.9

        self.assertAlmostEqual(
            genmosum_arl(-3.0, self.window, 0.9, 0.8),
            -50 * 0.8 / (theta**2 * np.log(theta)),
        )
        with self.assertRaises(ValueError):
            genmosum_arl(-3.0, self.window, 0.8, 0.9)
        with self.assertRaises(ValueError):
            genmosum_arl(-3.0, self.window, 1.0, 0.9)
        with self.assertRaises(NumericalError):
            genmosum_arl(-3.0, self.window, 0.9, 0.9)

    def test_bcp(self):
        """Test geometric extension of base probabilities"""

        theta = 0.8 / 0.9

        self.assertEqual(genmosum_bcp(-3.0, self.window, 100, 0.9, 0.8), 0.8)
        self.assertAlmostEqual(genmosum_bcp(-3.0, self.window, 150, 0.9, 0.8), 0.8 * theta)
        self.assertAlmostEqual(genmosum_bcp(-3.0, self.window, 50, 0.9, 0.8), 0.9)
