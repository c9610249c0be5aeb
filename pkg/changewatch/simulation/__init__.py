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

from changewatch.simulation.arl import estimate_arl, estimate_bcp, estimate_run_length
from changewatch.simulation.calibration import (
    CalibrationResult,
    analytic_threshold,
    calibrate_threshold,
)
from changewatch.simulation.engine import first_crossings, simulate_block
from changewatch.simulation.plan import PowerEstimate, RunLengthEstimate, SimulationPlan
from changewatch.simulation.power import (
    MatchedThresholds,
    ThreeWayPower,
    estimate_conditional_power,
    estimate_power_three_way,
    match_thresholds,
)

__all__ = [
    "CalibrationResult",
    "MatchedThresholds",
    "PowerEstimate",
    "RunLengthEstimate",
    "SimulationPlan",
    "ThreeWayPower",
    "analytic_threshold",
    "calibrate_threshold",
    "estimate_arl",
    "estimate_bcp",
    "estimate_conditional_power",
    "estimate_power_three_way",
    "estimate_run_length",
    "first_crossings",
    "match_thresholds",
    "simulate_block",
]
