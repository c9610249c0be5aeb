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

from changewatch.data.settings import Settings, get_settings
from changewatch.data.readers import read_observations
from changewatch.data.writers import write_frame, write_record

__all__ = [
    "Settings",
    "get_settings",
    "read_observations",
    "write_frame",
    "write_record",
]
