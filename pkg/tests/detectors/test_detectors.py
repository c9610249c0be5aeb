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

from changewatch.core import GaussianChangeSpec, TransientWindow, sample_stream
from changewatch.detectors import (
    AlarmEvent,
    CusumV,
    DetectorConfig,
    FullLR,
    GenMosum,
    Mosum,
    PageP,
    Procedure,
    RunExhausted,
    ShiryaevRoberts,
    batch_nuisance_stats,
    run_to_alarm,
    step_cusum_v,
    step_full_lr,
    step_genmosum,
    step_mosum,
    step_page,
    step_sr,
)


def brute_llr(ys: np.ndarray, spec: GaussianChangeSpec) -> np.ndarray:
    return spec.amplitude * (ys - spec.mu - spec.amplitude / 2.0) / spec.sigma**2


class RecursionTestCase(unittest.TestCase):
    """Detector recursions against their brute-force definitions"""

    def setUp(self):
        """Tests setup"""

        self.rng = np.random.default_rng(12)
        self.spec = GaussianChangeSpec(mu=0.5, amplitude=1.2, sigma=1.5)
        self.streams = [
            self.spec.mu + self.spec.sigma * self.rng.standard_normal(self.rng.integers(1, 51))
            for _ in range(200)
        ]

    def test_cusum(self):
        """Test CusumV and PageP against max over change points"""

        for ys in self.streams:
            llr = brute_llr(ys, self.spec)
            n = len(ys)
            # max over nu in 0..n-1 of the segment sum (nu, n]
            segment_max = max(llr[nu:].sum() for nu in range(n))
            v = CusumV(self.spec).statistic_path(ys)[-1]
            p = PageP(self.spec).statistic_path(ys)[-1]

            self.assertTrue(np.isclose(np.log(v), segment_max, atol=1e-9))
            self.assertTrue(np.isclose(p, max(segment_max, 0.0), atol=1e-9))

    def test_shiryaev_roberts(self):
        """Test ShiryaevRoberts against the sum of segment likelihood ratios"""

        for ys in self.streams:
            llr = brute_llr(ys, self.spec)
            expected = sum(np.exp(llr[nu:].sum()) for nu in range(len(ys)))
            value = ShiryaevRoberts(self.spec).statistic_path(ys)[-1]

            self.assertTrue(np.isclose(value, expected, rtol=1e-9))

    def test_full_lr(self):
        """Test FullLR against the maximum over every window"""

        for ys in self.streams:
            llr = brute_llr(ys, self.spec)
            n = len(ys)
            expected = max(
                [0.0] + [llr[start:end].sum() for end in range(1, n + 1) for start in range(end)]
            )
            value = FullLR(self.spec).statistic_path(ys)[-1]

            self.assertTrue(np.isclose(value, expected, atol=1e-9))

    def test_mosum(self):
        """Test Mosum against the trailing window sum"""

        window = 7
        for ys in self.streams:
            path = Mosum(window, self.spec).statistic_path(ys)
            for n in range(1, len(ys) + 1):
                if n < window:
                    self.assertTrue(np.isnan(path[n - 1]))
                else:
                    self.assertTrue(np.isclose(path[n - 1], ys[n - window : n].sum(), atol=1e-9))

    def test_genmosum(self):
        """Test GenMosum against the maximum centered suffix sum"""

        transient = TransientWindow(l0=3, l1=8)
        for ys in self.streams:
            if len(ys) < transient.l1:
                continue
            terms = (ys - self.spec.mu - self.spec.amplitude / 2.0) / self.spec.sigma**2
            expected = max(terms[-length:].sum() for length in range(3, 9))
            value = GenMosum(self.spec, transient).statistic_path(ys)[-1]

            self.assertTrue(np.isclose(value, expected, atol=1e-9))

    def test_batch(self):
        """Test batched updates against single-stream updates"""

        ys = self.rng.standard_normal((30, 4))
        for detector in (
            CusumV(self.spec),
            ShiryaevRoberts(self.spec),
            Mosum(5, self.spec),
            GenMosum(self.spec, TransientWindow(l0=2, l1=6)),
        ):
            state = detector.init_state(batch=4)
            for row in ys:
                detector.update(state, row)
            singles = [detector.statistic_path(ys[:, lane])[-1] for lane in range(4)]

            self.assertTrue(np.allclose(state.value, singles))


class StoppingRuleTestCase(unittest.TestCase):
    """Stopping rule test case"""

    def setUp(self):
        """Tests setup"""

        self.spec = GaussianChangeSpec(amplitude=1.0)

    def test_page_cusum_equivalence(self):
        """Test Page chart at log H stops with CUSUM at H"""

        for seed in range(50):
            ys = sample_stream(self.spec, n=2000, rng_seed=seed)
            for threshold in (1.5, 20.0, 150.0):
                v_alarm = run_to_alarm(CusumV(self.spec), threshold, ys)
                p_alarm = run_to_alarm(PageP(self.spec), np.log(threshold), ys)

                self.assertEqual(type(v_alarm), type(p_alarm))
                if isinstance(v_alarm, AlarmEvent):
                    self.assertEqual(v_alarm.n, p_alarm.n)

    def test_genmosum_reduces_to_mosum(self):
        """Test GenMosum with l0 = l1 = L stops with MOSUM at the matching threshold"""

        window = 12
        spec = GaussianChangeSpec(mu=0.3, amplitude=0.8, sigma=1.3)
        genmosum = GenMosum(spec, TransientWindow.exact(window))
        mosum = Mosum(window, spec)
        raw_threshold = 9.0
        centered_threshold = (
            raw_threshold - window * (spec.mu + spec.amplitude / 2.0)
        ) / spec.sigma**2

        for seed in range(50):
            ys = sample_stream(spec, n=3000, rng_seed=seed)
            first = run_to_alarm(mosum, raw_threshold, ys)
            second = run_to_alarm(genmosum, centered_threshold, ys)

            self.assertEqual(type(first), type(second))
            if isinstance(first, AlarmEvent):
                self.assertEqual(first.n, second.n)

    def test_warmup(self):
        """Test moving-sum alarms wait for a full window"""

        mosum = Mosum(10)
        alarm = run_to_alarm(mosum, 5.0, [100.0] * 20)

        self.assertIsInstance(alarm, AlarmEvent)
        self.assertEqual(alarm.n, 10)
        self.assertEqual(alarm.scan_index, 0)
        self.assertEqual(alarm.warmup, 10)

    def test_exhausted(self):
        """Test run_to_alarm on a stream that never crosses"""

        result = run_to_alarm(CusumV(self.spec), 1e6, [0.0] * 30)

        self.assertIsInstance(result, RunExhausted)
        self.assertEqual(result.n_observed, 30)

    def test_step(self):
        """Test step functions leave the input state untouched"""

        state = CusumV(self.spec).init_state()
        next_state = step_cusum_v(state, 2.0, self.spec)

        self.assertEqual(state.n, 0)
        self.assertEqual(state.statistic, 1.0)
        self.assertAlmostEqual(next_state.statistic, np.exp(1.5))

        mosum_state = Mosum(3).init_state()
        for y in (1.0, 2.0, 3.0, 4.0):
            mosum_state = step_mosum(mosum_state, y)
        self.assertAlmostEqual(mosum_state.statistic, 9.0)

        with self.assertRaises(ValueError):
            PageP(self.spec).step(state, 1.0)

    def test_step_functions(self):
        """Test one-step recursions of the remaining procedures"""

        page = step_page(PageP(self.spec).init_state(), 2.0, self.spec)
        self.assertAlmostEqual(page.statistic, 1.5)
        self.assertEqual(step_page(page, -3.0, self.spec).statistic, 0.0)

        sr = step_sr(ShiryaevRoberts(self.spec).init_state(), 2.0, self.spec)
        self.assertAlmostEqual(sr.statistic, np.exp(1.5))
        self.assertAlmostEqual(
            step_sr(sr, 2.0, self.spec).statistic, (1.0 + np.exp(1.5)) * np.exp(1.5)
        )

        full_lr = step_full_lr(FullLR(self.spec).init_state(), 2.0, self.spec)
        full_lr = step_full_lr(full_lr, -3.0, self.spec)
        self.assertAlmostEqual(full_lr.statistic, 1.5)
        self.assertAlmostEqual(full_lr.aux["walk"], -2.0)

        window = TransientWindow(l0=2, l1=3)
        genmosum = GenMosum(self.spec, window).init_state()
        for y in (1.0, 2.0, 3.0):
            genmosum = step_genmosum(genmosum, y, self.spec, window)
        self.assertAlmostEqual(genmosum.statistic, 4.5)
        genmosum = step_genmosum(genmosum, 0.0, self.spec, window)
        self.assertAlmostEqual(genmosum.statistic, 3.5)


class DetectorConfigTestCase(unittest.TestCase):
    """DetectorConfig test case"""

    def test_build(self):
        """Test DetectorConfig build method and warm-up"""

        spec = GaussianChangeSpec(amplitude=1.0)
        mosum = DetectorConfig(procedure=Procedure.MOSUM, spec=spec, window=20)
        genmosum = DetectorConfig(
            procedure=Procedure.GENMOSUM, spec=spec, transient=TransientWindow(l0=5, l1=15)
        )

        self.assertIsInstance(mosum.build(), Mosum)
        self.assertEqual(mosum.warmup, 20)
        self.assertIsInstance(genmosum.build(), GenMosum)
        self.assertEqual(genmosum.warmup, 15)
        self.assertEqual(DetectorConfig(procedure=Procedure.SR, spec=spec).warmup, 0)
        with self.assertRaises(ValueError):
            DetectorConfig(procedure=Procedure.MOSUM, spec=spec)


class NuisanceTestCase(unittest.TestCase):
    """batch_nuisance_stats test case"""

    def test_brute_force(self):
        """Test batch_nuisance_stats against explicit window loops"""

        rng = np.random.default_rng(4)
        ys = rng.standard_normal(40) + 3.0
        window = TransientWindow(l0=4, l1=10)
        amplitude = 0.7
        n = len(ys)
        mean = ys.mean()

        z1 = z2 = z3 = -np.inf
        for length in range(4, 11):
            for nu in range(n - length + 1):
                s = ys[nu : nu + length].sum() - length * mean
                z1 = max(z1, amplitude * (s - length * amplitude / 2.0))
                z2 = max(z2, amplitude * (s - length * amplitude / 2.0 * (1.0 - length / n)))
                z3 = max(z3, s / np.sqrt(length * (1.0 - length / n)))

        stats = batch_nuisance_stats(ys, window, amplitude)

        self.assertAlmostEqual(stats.z1, z1)
        self.assertAlmostEqual(stats.z2, z2)
        self.assertAlmostEqual(stats.z3, z3)
        self.assertIsNone(batch_nuisance_stats(ys, window).z1)
        with self.assertRaises(ValueError):
            batch_nuisance_stats(ys[:5], window)
