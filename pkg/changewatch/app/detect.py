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
from typing import Iterable, Iterator, TextIO

from changewatch.app.config import RunConfig
from changewatch.data.readers import read_observations
from changewatch.data.writers import write_record
from changewatch.detectors.state import AlarmEvent

_log: logging.Logger = logging.getLogger(__name__)


def detect_alarms(config: RunConfig, source: TextIO) -> Iterator[tuple[AlarmEvent, int]]:
    """Yield alarms as the configured detector raises them over an observation stream

    After each alarm the statistic restarts from its start value, or the run
    stops when config.stop_on_first is set. Only the detector state is held
    in memory.

    Args:
        config (RunConfig): Run configuration
        source (TextIO): CSV observation stream

    Yields:
        tuple[AlarmEvent, int]: Alarm, with n counted from the start of the
            stream, and the observation count at which the run last restarted
    """

    detector = config.detector_config().build()
    threshold = config.resolve_threshold()
    state = detector.init_state()
    offset = 0

    for y in read_observations(source):
        detector.update(state, y)
        if not detector.crossed(state, threshold):
            continue

        yield AlarmEvent(
            n=offset + state.n,
            statistic=state.statistic,
            threshold=threshold,
            procedure=detector.procedure,
            warmup=offset + detector.warmup,
        ), offset
        if config.stop_on_first:
            return
        offset += state.n
        state = detector.init_state()


def cmd_detect(config: RunConfig, source: TextIO, sink: TextIO) -> int:
    """Run the configured detector over an observation stream

    Each alarm is written to the sink as a JSON line as soon as it is raised.

    Args:
        config (RunConfig): Run configuration
        source (TextIO): CSV observation stream
        sink (TextIO): Alarm record stream

    Returns:
        int: Number of alarms raised
    """

    count = 0
    for alarm, restart in detect_alarms(config, source):
        write_record(sink, alarm, restart=restart)
        count += 1

    _log.info("%d alarm(s) raised", count)
    return count


def cluster_alarms(alarms: Iterable[AlarmEvent], gap: float) -> list[list[AlarmEvent]]:
    """Group alarms whose consecutive stopping times are at most gap apart

    Args:
        alarms (Iterable[AlarmEvent]): Alarms
        gap (float): Largest distance within a cluster, in observations

    Returns:
        list[list[AlarmEvent]]: Clusters in time order
    """

    clusters: list[list[AlarmEvent]] = []
    for alarm in sorted(alarms, key=lambda event: event.n):
        if clusters and alarm.n - clusters[-1][-1].n <= gap:
            clusters[-1].append(alarm)
        else:
            clusters.append([alarm])
    return clusters
