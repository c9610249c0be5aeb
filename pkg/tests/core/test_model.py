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

from changewatch.core import (
    ChangeAt,
    GaussianChangeSpec,
    NoChange,
    TransientWindow,
    log_likelihood_ratio,
    sample_stream,
    segment_llr,
)


class GaussianChangeSpecTestCase(unittest.TestCase):
    """GaussianChangeSpec test case"""

    def setUp(self):
        """Tests setup"""

        self.spec = GaussianChangeSpec(mu=2.0, amplitude=1.5, sigma=3.0)

    def test_init(self):
        """Test GaussianChangeSpec init validation"""

        with self.assertRaises(ValidationError):
            GaussianChangeSpec(amplitude=0.0)
        with self.assertRaises(ValidationError):
            GaussianChangeSpec(amplitude=1.0, sigma=-1.0)

    def test_information(self):
        """Test GaussianChangeSpec information property"""

        self.assertAlmostEqual(self.spec.information, 1.5**2 / 18.0)

    def test_standardized(self):
        """Test GaussianChangeSpec standardized and standardize methods"""

        unit = self.spec.standardized()

        self.assertEqual(unit.mu, 0.0)
        self.assertEqual(unit.sigma, 1.0)
        self.assertAlmostEqual(unit.amplitude, 0.5)
        self.assertTrue(np.allclose(self.spec.standardize([2.0, 5.0, -1.0]), [0.0, 1.0, -1.0]))

    def test_log_likelihood_ratio(self):
        """Test log_likelihood_ratio function"""

        ys = np.array([0.0, 2.0, 2.75, 4.0])
        llr = log_likelihood_ratio(ys, self.spec)
        expected = 1.5 * (ys - 2.0 - 0.75) / 9.0

        self.assertTrue(np.allclose(llr, expected))
        self.assertIsInstance(log_likelihood_ratio(1.0, self.spec), float)
        self.assertAlmostEqual(log_likelihood_ratio(2.75, self.spec), 0.0)

    def test_segment_llr(self):
        """Test segment_llr function"""

        ys = np.arange(1.0, 11.0)
        spec = GaussianChangeSpec(amplitude=1.0)

        self.assertAlmostEqual(segment_llr(ys, spec, 2, 5), (3 + 4 + 5) - 1.5)
        with self.assertRaises(ValueError):
            segment_llr(ys, spec, 5, 5)
        with self.assertRaises(ValueError):
            segment_llr(ys, spec, 0, 11)


class HypothesisTestCase(unittest.TestCase):
    """Hypothesis and TransientWindow test case"""

    def test_transient_window(self):
        """Test TransientWindow validation and parsing"""

        self.assertEqual(TransientWindow.parse("25:50"), TransientWindow(l0=25, l1=50))
        self.assertEqual(TransientWindow.parse("10"), TransientWindow.exact(10))
        with self.assertRaises(ValueError):
            TransientWindow(l0=5, l1=4)
        with self.assertRaises(ValueError):
            TransientWindow.parse("1:2:3")
        with self.assertRaises(ValueError):
            TransientWindow.parse("a:b")

    def test_mean_shift(self):
        """Test NoChange and ChangeAt mean_shift methods"""

        indices = np.arange(1, 11)
        transient = ChangeAt(nu=3, l=4)
        permanent = ChangeAt(nu=7)

        self.assertTrue(np.allclose(NoChange().mean_shift(indices, 2.0), 0.0))
        self.assertTrue(
            np.allclose(transient.mean_shift(indices, 2.0), [0, 0, 0, 2, 2, 2, 2, 0, 0, 0])
        )
        self.assertTrue(
            np.allclose(permanent.mean_shift(indices, 1.0), [0, 0, 0, 0, 0, 0, 0, 1, 1, 1])
        )
        self.assertTrue(permanent.is_permanent)
        self.assertEqual(transient.last_index, 7)

    def test_to_dict(self):
        """Test ChangewatchType to_dict and from_dict methods"""

        change = ChangeAt(nu=3, l=4)

        self.assertEqual(change.to_dict(), {"tag": "ChangeAt", "nu": 3, "l": 4})
        self.assertEqual(ChangeAt.from_dict(change.to_dict()), change)


class SampleStreamTestCase(unittest.TestCase):
    """sample_stream test case"""

    def test_seeded(self):
        """Test sample_stream reproducibility"""

        spec = GaussianChangeSpec(amplitude=1.0)
        first = sample_stream(spec, n=100, rng_seed=3)
        second = sample_stream(spec, n=100, rng_seed=3)

        self.assertTrue(np.array_equal(first, second))
        self.assertEqual(first.shape, (100,))

    def test_shift(self):
        """Test sample_stream mean shift under a change"""

        spec = GaussianChangeSpec(mu=1.0, amplitude=5.0, sigma=0.01)
        ys = sample_stream(spec, ChangeAt(nu=10, l=5), n=20, rng_seed=0)

        self.assertTrue(np.allclose(ys[:10], 1.0, atol=0.1))
        self.assertTrue(np.allclose(ys[10:15], 6.0, atol=0.1))
        self.assertTrue(np.allclose(ys[15:], 1.0, atol=0.1))
        with self.assertRaises(ValueError):
            sample_stream(spec, n=0)
