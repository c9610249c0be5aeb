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

from changewatch.utils.numerics import (
    integrate,
    integrate_tail,
    norm_cdf,
    norm_pdf,
    truncation_point,
)
from changewatch.utils.random import block_sizes, make_rng, replicate_rngs, stream_rng

__all__ = [
    "block_sizes",
    "integrate",
    "integrate_tail",
    "make_rng",
    "norm_cdf",
    "norm_pdf",
    "replicate_rngs",
    "stream_rng",
    "truncation_point",
]
