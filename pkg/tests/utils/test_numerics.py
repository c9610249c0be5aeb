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
from scipy.stats import norm

from changewatch.core import NumericalError
from changewatch.utils import (
    block_sizes,
    integrate,
    integrate_tail,
    norm_cdf,
    norm_pdf,
    replicate_rngs,
    stream_rng,
    truncation_point,
)


class NumericsTestCase(unittest.TestCase):
    """Numerics helpers test case"""

    def test_normal(self):
        """Test normal density and distribution function"""

        x = np.linspace(-5.0, 5.0, 21)

        self.assertTrue(np.allclose(norm_cdf(x), norm.cdf(x)))
        self.assertTrue(np.allclose(norm_pdf(x), norm.pdf(x)))

    def test_integrate(self):
        """Test adaptive quadrature on finite and infinite ranges"""

        self.assertAlmostEqual(integrate(norm_pdf, -np.inf, np.inf), 1.0, places=10)
        self.assertAlmostEqual(integrate(lambda x: x * x, 0.0, 3.0), 9.0, places=10)

    def test_tail(self):
        """Test truncated tail integrals"""

        self.assertAlmostEqual(integrate_tail(lambda x: np.exp(-x), 0.0), 1.0, places=8)
        self.assertGreater(truncation_point(norm_pdf, 0.0), 7.0)
        with self.assertRaises(NumericalError):
            truncation_point(lambda x: 1.0, 0.0, max_steps=10)


class RandomTestCase(unittest.TestCase):
    """Seeded generators test case"""

    def test_stream_rng(self):
        """Test stream generators are reproducible and distinct"""

        first = stream_rng(3, 0).standard_normal(5)
        again = stream_rng(3, 0).standard_normal(5)
        other = stream_rng(3, 1).standard_normal(5)

        self.assertTrue(np.array_equal(first, again))
        self.assertFalse(np.array_equal(first, other))

    def test_replicate_rngs(self):
        """Test replicate generators depend on the global replicate index only"""

        rngs = replicate_rngs(3, 10, 4)

        self.assertEqual(len(rngs), 4)
        self.assertTrue(
            np.array_equal(rngs[2].standard_normal(5), stream_rng(3, 12).standard_normal(5))
        )

    def test_block_sizes(self):
        """Test replicate blocks cover every replicate"""

        self.assertEqual(block_sizes(250, 100), [100, 100, 50])
        self.assertEqual(block_sizes(200, 100), [100, 100])
        self.assertEqual(block_sizes(5, 100), [5])
