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

from changewatch.app.cli import main
from changewatch.app.config import RunConfig
from changewatch.app.curves import cmd_bcp_curves, cmd_power_curves
from changewatch.app.detect import cluster_alarms, cmd_detect, detect_alarms
from changewatch.app.pressure import PressureDemo, cmd_pressure_demo
from changewatch.app.report import cmd_arl
from changewatch.app.tables import cmd_tables

__all__ = [
    "PressureDemo",
    "RunConfig",
    "cluster_alarms",
    "cmd_arl",
    "cmd_bcp_curves",
    "cmd_detect",
    "cmd_power_curves",
    "cmd_pressure_demo",
    "cmd_tables",
    "detect_alarms",
    "main",
]
