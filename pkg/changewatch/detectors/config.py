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

from pydantic import ConfigDict, Field, model_validator

from changewatch.core.changewatch_type import ChangewatchType
from changewatch.core.gaussian import GaussianChangeSpec
from changewatch.core.hypothesis import TransientWindow
from changewatch.detectors.cusum import CusumV, PageP
from changewatch.detectors.detector import Detector
from changewatch.detectors.full_lr import FullLR
from changewatch.detectors.mosum import GenMosum, Mosum
from changewatch.detectors.shiryaev_roberts import ShiryaevRoberts
from changewatch.detectors.state import Procedure


class DetectorConfig(ChangewatchType):
    """Detector description

    Attributes:
        procedure (Procedure): Procedure tag
        spec (GaussianChangeSpec): Gaussian pair
        window (int, optional): MOSUM window length L
        transient (TransientWindow, optional): Generalized MOSUM bounds l0, l1
    """

    procedure: Procedure
    spec: GaussianChangeSpec
    window: Optional[int] = Field(default=None, ge=1)
    transient: Optional[TransientWindow] = None

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_geometry(self) -> "DetectorConfig":
        if self.procedure == Procedure.MOSUM and self.window is None:
            raise ValueError("MOSUM requires a window length L")
        if self.procedure == Procedure.GENMOSUM and self.transient is None:
            raise ValueError("Generalized MOSUM requires window bounds l0:l1")
        return self

    @property
    def warmup(self) -> int:
        """Observations required before an alarm is legal

        Returns:
            int: Warm-up length
        """

        if self.procedure == Procedure.MOSUM:
            return self.window
        if self.procedure == Procedure.GENMOSUM:
            return self.transient.l1
        return 0

    def build(self) -> Detector:
        """Create the detector

        Returns:
            Detector: Detector instance
        """

        if self.procedure == Procedure.CUSUM_V:
            return CusumV(self.spec)
        if self.procedure == Procedure.PAGE_P:
            return PageP(self.spec)
        if self.procedure == Procedure.SR:
            return ShiryaevRoberts(self.spec)
        if self.procedure == Procedure.MOSUM:
            return Mosum(self.window, self.spec)
        if self.procedure == Procedure.GENMOSUM:
            return GenMosum(self.spec, self.transient)
        return FullLR(self.spec)
