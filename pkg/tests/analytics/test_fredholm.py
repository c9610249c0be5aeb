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
from pydantic import ValidationError

from changewatch.analytics import (
    FredholmProblem,
    Regime,
    cusum_arl_fast,
    detection_delay,
    invert_cusum_arl,
    invert_sr_arl,
    kernel_cdf,
    solve,
    sr_arl_fast,
)
from changewatch.detectors import Procedure
from changewatch.utils import norm_cdf


class FredholmProblemTestCase(unittest.TestCase):
    """FredholmProblem test case"""

    def test_init(self):
        """Test FredholmProblem validation and properties"""

        cusum = FredholmProblem(procedure=Procedure.CUSUM_V, threshold=50.0, amplitude=1.0)
        sr = FredholmProblem(
            procedure=Procedure.SR, threshold=50.0, amplitude=1.0, regime=Regime.ZERO_DELAY
        )

        self.assertEqual(cusum.start, 1.0)
        self.assertEqual(sr.start, 0.0)
        self.assertAlmostEqual(cusum.log_mean, -0.5)
        self.assertAlmostEqual(sr.log_mean, 0.5)
        self.assertTrue(np.allclose(cusum.xi([0.5, 2.0]), [1.0, 2.0]))
        self.assertTrue(np.allclose(sr.xi([0.5, 2.0]), [1.5, 3.0]))
        with self.assertRaises(ValidationError):
            FredholmProblem(procedure=Procedure.MOSUM, threshold=50.0, amplitude=1.0)
        with self.assertRaises(ValidationError):
            FredholmProblem(procedure=Procedure.SR, threshold=0.0, amplitude=1.0)

    def test_kernel_cdf(self):
        """Test likelihood-ratio distribution function"""

        self.assertAlmostEqual(kernel_cdf(1.0, 1.0), norm_cdf(0.5))
        self.assertAlmostEqual(kernel_cdf(1.0, 1.0, Regime.ZERO_DELAY), norm_cdf(-0.5))
        self.assertEqual(kernel_cdf(0.0, 1.0), 0.0)
        with self.assertRaises(ValueError):
            kernel_cdf(-1.0, 1.0)


class SolveTestCase(unittest.TestCase):
    """Run-length integral equation test case"""

    def setUp(self):
        """Tests setup"""

        self.problem = FredholmProblem(
            procedure=Procedure.CUSUM_V, threshold=80.65, amplitude=1.0
        )

    def test_cusum_arl(self):
        """Test CUSUM ARL at the threshold of a nominal ARL of 500"""

        solution = solve(self.problem)

        self.assertLess(abs(solution.phi_at_start / 500.0 - 1.0), 0.02)
        self.assertLess(solution.residual, 1e-6)
        self.assertAlmostEqual(solution.at(1.0), solution.phi_at_start, places=6)

    def test_grid_doubling(self):
        """Test the solution is stable under grid doubling"""

        coarse = solve(self.problem.model_copy(update={"grid_size": 512}), refine=False)
        fine = solve(self.problem.model_copy(update={"grid_size": 1024}), refine=False)

        self.assertLess(abs(fine.phi_at_start / coarse.phi_at_start - 1.0), 5e-3)

    def test_monotone(self):
        """Test ARL increases with the threshold and exceeds the detection delay"""

        arls = [
            solve(FredholmProblem(procedure=Procedure.SR, threshold=h, amplitude=1.0)).phi_at_start
            for h in (20.0, 50.0, 100.0)
        ]
        delay = detection_delay(
            FredholmProblem(
                procedure=Procedure.SR, threshold=50.0, amplitude=1.0, regime=Regime.ZERO_DELAY
            )
        )

        self.assertTrue(np.all(np.diff(arls) > 0))
        self.assertGreater(delay, 1.0)
        self.assertLess(delay, arls[1])
        with self.assertRaises(ValueError):
            detection_delay(self.problem)

    def test_invert(self):
        """Test threshold inversion of the integral equation"""

        for invert, procedure in (
            (invert_cusum_arl, Procedure.CUSUM_V),
            (invert_sr_arl, Procedure.SR),
        ):
            threshold = invert(300.0, 1.0)
            arl = solve(
                FredholmProblem(procedure=procedure, threshold=threshold, amplitude=1.0)
            ).phi_at_start

            self.assertLess(abs(arl / 300.0 - 1.0), 1e-2)

    def test_fast_approximation(self):
        """Test the integral equation against the closed-form ARL approximations"""

        for procedure, fast in ((Procedure.CUSUM_V, cusum_arl_fast), (Procedure.SR, sr_arl_fast)):
            for threshold in (50.0, 100.0, 200.0, 400.0, 800.0):
                with self.subTest(procedure=procedure.value, threshold=threshold):
                    arl = solve(
                        FredholmProblem(procedure=procedure, threshold=threshold, amplitude=1.0)
                    ).phi_at_start
                    ratio = arl / fast(threshold, 1.0)

                    self.assertGreaterEqual(ratio, 0.85)
                    self.assertLessEqual(ratio, 1.15)
