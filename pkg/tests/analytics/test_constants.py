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
    RHO_ROUNDED,
    SpecialConstants,
    cusum_arl_fast,
    cusum_arl_general,
    cusum_threshold_fast,
    kappa,
    kappa_proxy,
    omega,
    rho,
    sr_arl_fast,
    sr_threshold_fast,
    zeta_gaussian,
)


class ConstantsTestCase(unittest.TestCase):
    """Special constants test case"""

    def test_rho(self):
        """Test rho quadrature against the stored value"""

        self.assertAlmostEqual(rho("quadrature"), RHO, places=6)
        self.assertEqual(rho(), RHO)
        self.assertAlmostEqual(RHO_ROUNDED, RHO, places=3)

    def test_kappa(self):
        """Test kappa at A = 1 and its proxy"""

        self.assertAlmostEqual(kappa(1.0), 0.5604, places=3)
        self.assertAlmostEqual(kappa_proxy(1.0), np.exp(-0.583))
        with self.assertRaises(ValueError):
            kappa(0.0)

    def test_zeta_equals_kappa(self):
        """Test the overshoot constant of the log-likelihood walk equals kappa"""

        for amplitude in (0.25, 0.5, 1.0, 2.0, 4.0):
            self.assertTrue(
                np.isclose(zeta_gaussian(amplitude), kappa(amplitude), rtol=0.0, atol=1e-10)
            )

    def test_kappa_small_shift(self):
        """Test kappa tends to its proxy as the shift vanishes"""

        self.assertTrue(np.isclose(kappa(0.1), np.exp(-RHO * 0.1), rtol=1e-2))

    def test_omega(self):
        """Test omega and SpecialConstants corrected threshold"""

        constants = SpecialConstants()

        self.assertAlmostEqual(omega(2), RHO)
        self.assertAlmostEqual(
            constants.corrected_threshold(3.0, 50), 3.0 + np.sqrt(2.0 / 50) * RHO
        )
        self.assertAlmostEqual(SpecialConstants(rho=0.5).omega(8), 0.25)


class CusumArlTestCase(unittest.TestCase):
    """Fast ARL approximation test case"""

    def setUp(self):
        """Tests setup"""

        self.thresholds = [9.32, 17.33, 80.65, 159.35, 788.00]

    def test_exact_kappa(self):
        """Test fast CUSUM ARL with exact kappa"""

        expected = [59, 110, 513, 1014, 5018]
        for threshold, arl in zip(self.thresholds, expected):
            self.assertLess(abs(cusum_arl_fast(threshold, 1.0) - arl), 1.0)

    def test_proxy_kappa(self):
        """Test fast CUSUM ARL with the exp(-rho A) proxy"""

        expected = [60, 111, 517, 1023, 5058]
        for threshold, arl in zip(self.thresholds, expected):
            self.assertLess(abs(cusum_arl_fast(threshold, 1.0, proxy=True) - arl), 1.0)

    def test_general(self):
        """Test log-scale CUSUM ARL approximation"""

        value = cusum_arl_general(4.39, 1.0)

        self.assertGreater(value, 495)
        self.assertLess(value, 505)

    def test_inverse(self):
        """Test fast thresholds invert the fast approximations"""

        for amplitude in (0.5, 1.0, 2.0):
            threshold = cusum_threshold_fast(700.0, amplitude)
            self.assertAlmostEqual(cusum_arl_fast(threshold, amplitude), 700.0)
            threshold = sr_threshold_fast(700.0, amplitude)
            self.assertAlmostEqual(sr_arl_fast(threshold, amplitude), 700.0)

    def test_domain(self):
        """Test fast approximations reject nonpositive thresholds"""

        with self.assertRaises(ValueError):
            cusum_arl_fast(0.0, 1.0)
        with self.assertRaises(ValueError):
            sr_arl_fast(-1.0, 1.0)
