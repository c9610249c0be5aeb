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

from changewatch.detectors.config import DetectorConfig
from changewatch.detectors.cusum import CusumV, PageP, step_cusum_v, step_page
from changewatch.detectors.detector import Detector, run_to_alarm
from changewatch.detectors.full_lr import FullLR, step_full_lr
from changewatch.detectors.mosum import GenMosum, Mosum, step_genmosum, step_mosum
from changewatch.detectors.nuisance import NuisanceStatistics, batch_nuisance_stats
from changewatch.detectors.shiryaev_roberts import ShiryaevRoberts, step_sr
from changewatch.detectors.state import (
    AlarmEvent,
    DetectorState,
    Procedure,
    RunExhausted,
)

__all__ = [
    "AlarmEvent",
    "CusumV",
    "Detector",
    "DetectorConfig",
    "DetectorState",
    "FullLR",
    "GenMosum",
    "Mosum",
    "NuisanceStatistics",
    "PageP",
    "Procedure",
    "RunExhausted",
    "ShiryaevRoberts",
    "batch_nuisance_stats",
    "run_to_alarm",
    "step_cusum_v",
    "step_full_lr",
    "step_genmosum",
    "step_mosum",
    "step_page",
    "step_sr",
]
