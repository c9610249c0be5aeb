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

from typing import Optional

import numpy as np


def make_rng(seed: Optional[int] = None) -> np.random.Generator:
    """Return a seeded generator

    Args:
        seed (int, optional): Seed, None for fresh entropy. Defaults to None.

    Returns:
        np.random.Generator: Random generator
    """

    return np.random.default_rng(seed)


def stream_rng(seed: int, index: int) -> np.random.Generator:
    """Return the generator of one independent stream

    The stream only depends on (seed, index), so serial and parallel runs
    draw the same numbers.

    Args:
        seed (int): Master seed
        index (int): Stream index

    Returns:
        np.random.Generator: Random generator of the stream
    """

    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(index,)))


def replicate_rngs(seed: int, start: int, size: int) -> list[np.random.Generator]:
    """Return the generators of replicates start..start + size − 1

    Args:
        seed (int): Master seed
        start (int): Global index of the first replicate
        size (int): Number of replicates

    Returns:
        list[np.random.Generator]: One generator per replicate
    """

    return [stream_rng(seed, index) for index in range(start, start + size)]


def block_sizes(replicates: int, batch_size: int) -> list[int]:
    """Split a replicate count into blocks of at most batch_size

    Args:
        replicates (int): Replicate count
        batch_size (int): Largest block

    Returns:
        list[int]: Block sizes
    """

    full, rest = divmod(replicates, batch_size)
    return [batch_size] * full + ([rest] if rest else [])
