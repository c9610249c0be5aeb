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

import logging
from typing import Optional

import numpy as np
from joblib import Parallel, delayed
from tqdm.auto import tqdm

from changewatch.core.hypothesis import Hypothesis, NoChange
from changewatch.data.settings import get_settings
from changewatch.detectors.config import DetectorConfig
from changewatch.utils.random import block_sizes, replicate_rngs

_log: logging.Logger = logging.getLogger(__name__)

# Steps of noise drawn at once for every running replicate
NOISE_CHUNK = 256


def simulate_block(
    config: DetectorConfig,
    threshold: float,
    max_steps: int,
    size: int,
    seed: int,
    start: int,
    hypothesis: Hypothesis,
) -> np.ndarray:
    """First crossing times of one block of replicates

    Replicate i draws its noise from its own generator, derived from
    (seed, i) with i the global replicate index. Its path is therefore the
    same whatever the block size, the worker count, the threshold or the
    censoring cap, and runs at different thresholds share their random numbers.

    Args:
        config (DetectorConfig): Detector
        threshold (float): Threshold on the statistic scale
        max_steps (int): Censoring cap
        size (int): Number of replicates in the block
        seed (int): Master seed
        start (int): Global index of the first replicate of the block
        hypothesis (Hypothesis): Data-generating hypothesis

    Returns:
        np.ndarray: Stopping times, max_steps + 1 for censored replicates
    """

    detector = config.build()
    spec = config.spec
    state = detector.init_state(size)
    rngs = replicate_rngs(seed, start, size)

    times = np.full(size, max_steps + 1, dtype=np.int64)
    lanes = np.arange(size)
    n = 0
    while n < max_steps and lanes.size:
        chunk = min(NOISE_CHUNK, max_steps - n)
        noise = np.stack([rngs[lane].standard_normal(chunk) for lane in lanes], axis=1)
        columns = np.arange(lanes.size)
        shifts = hypothesis.mean_shift(np.arange(n + 1, n + chunk + 1), spec.amplitude)

        for k in range(chunk):
            detector.update(state, spec.mu + spec.sigma * noise[k, columns] + shifts[k])
            n += 1
            crossed = detector.crossed(state, threshold)
            if crossed.any():
                times[lanes[crossed]] = n
                lanes = lanes[~crossed]
                columns = columns[~crossed]
                state = state.select(~crossed)
                if not lanes.size:
                    break

    return times


def first_crossings(
    config: DetectorConfig,
    threshold: float,
    max_steps: int,
    replicates: int,
    seed: int = 0,
    hypothesis: Optional[Hypothesis] = None,
    n_jobs: Optional[int] = None,
    desc: str = "Simulating replicates",
) -> np.ndarray:
    """First crossing times of independent replicates, simulated in parallel blocks

    Args:
        config (DetectorConfig): Detector
        threshold (float): Threshold on the statistic scale
        max_steps (int): Censoring cap
        replicates (int): Number of replicates
        seed (int, optional): Master seed. Defaults to 0.
        hypothesis (Hypothesis, optional): Data-generating hypothesis. Defaults to NoChange.
        n_jobs (int, optional): Parallel workers. Defaults to settings.
        desc (str, optional): Progress bar label. Defaults to "Simulating replicates".

    Returns:
        np.ndarray: Stopping times in replicate order, max_steps + 1 for censored replicates
    """

    settings = get_settings()
    hypothesis = hypothesis if hypothesis is not None else NoChange()
    n_jobs = n_jobs if n_jobs is not None else settings.n_jobs
    sizes = block_sizes(replicates, settings.batch_size)
    _log.debug(
        "%s H=%g: %d replicates in %d blocks, cap %d",
        config.procedure.value,
        threshold,
        replicates,
        len(sizes),
        max_steps,
    )

    starts = np.cumsum([0, *sizes[:-1]])
    jobs = (
        delayed(simulate_block)(config, threshold, max_steps, size, seed, int(start), hypothesis)
        for start, size in zip(starts, sizes)
    )
    results = Parallel(n_jobs=n_jobs)(
        tqdm(jobs, desc=desc, total=len(sizes), disable=not settings.progress)
    )
    return np.concatenate(results)
