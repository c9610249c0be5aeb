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

import json
import logging
from pathlib import Path
from typing import Any, Optional

from pydantic import Field, ValidationError, model_validator

from changewatch.core.changewatch_type import ChangewatchType
from changewatch.core.errors import ConfigError
from changewatch.core.gaussian import GaussianChangeSpec
from changewatch.core.hypothesis import TransientWindow
from changewatch.data.settings import get_settings
from changewatch.detectors.config import DetectorConfig
from changewatch.detectors.state import Procedure
from changewatch.simulation.calibration import analytic_threshold

_log: logging.Logger = logging.getLogger(__name__)


class RunConfig(ChangewatchType):
    """Command-line run configuration

    Attributes:
        procedure (Procedure): Detection procedure
        mu (float): Pre-change mean
        amplitude (float): Mean shift A, in observation units
        sigma (float): Noise standard deviation
        window (str, optional): MOSUM window "L" or generalized MOSUM bounds "l0:l1"
        threshold (float, optional): Threshold on the statistic scale
        target_arl (float, optional): Target ARL, in observations
        reps (int): Monte Carlo replicates
        seed (int): Master seed
        input (str, optional): Input CSV path, standard input if None
        output (str, optional): Output path, standard output if None
        stop_on_first (bool): Stop at the first alarm instead of restarting
    """

    procedure: Procedure = Procedure.MOSUM
    mu: float = 0.0
    amplitude: float = Field(default=1.0, gt=0.0)
    sigma: float = Field(default=1.0, gt=0.0)
    window: Optional[str] = None
    threshold: Optional[float] = None
    target_arl: Optional[float] = Field(default=None, gt=1.0)
    reps: int = Field(default_factory=lambda: get_settings().reps, ge=1)
    seed: int = Field(default_factory=lambda: get_settings().seed)
    input: Optional[str] = None
    output: Optional[str] = None
    stop_on_first: bool = False

    @model_validator(mode="after")
    def _check_threshold(self) -> "RunConfig":
        if (self.threshold is None) == (self.target_arl is None):
            raise ValueError("Give exactly one of threshold or target ARL")
        return self

    @property
    def spec(self) -> GaussianChangeSpec:
        """Gaussian pair

        Returns:
            GaussianChangeSpec: Gaussian pair
        """

        return GaussianChangeSpec(mu=self.mu, amplitude=self.amplitude, sigma=self.sigma)

    def detector_config(self) -> DetectorConfig:
        """Detector described by the configuration

        Returns:
            DetectorConfig: Detector configuration
        """

        try:
            if self.procedure == Procedure.MOSUM:
                if self.window is None:
                    raise ValueError("MOSUM requires --window L")
                return DetectorConfig(
                    procedure=self.procedure, spec=self.spec, window=int(self.window)
                )
            if self.procedure == Procedure.GENMOSUM:
                if self.window is None:
                    raise ValueError("Generalized MOSUM requires --window l0:l1")
                return DetectorConfig(
                    procedure=self.procedure,
                    spec=self.spec,
                    transient=TransientWindow.parse(self.window),
                )
            return DetectorConfig(procedure=self.procedure, spec=self.spec)
        except ValueError as e:
            raise ConfigError(str(e)) from e

    def resolve_threshold(self) -> float:
        """Threshold given, or derived from the target ARL by approximation

        Returns:
            float: Threshold on the statistic scale
        """

        if self.threshold is not None:
            return self.threshold
        threshold = analytic_threshold(self.detector_config(), self.target_arl)
        _log.info("Threshold %.6g for target ARL %g", threshold, self.target_arl)
        return threshold

    @staticmethod
    def from_sources(config_path: Optional[str] = None, **flags: Any) -> "RunConfig":
        """Merge a JSON configuration file with command-line flags, flags win

        Args:
            config_path (str, optional): JSON file path. Defaults to None.
            flags (Any): Flag values, None when not given

        Returns:
            RunConfig: Run configuration
        """

        values: dict[str, Any] = {}
        if config_path is not None:
            try:
                values = json.loads(Path(config_path).read_text(encoding="utf-8"))
            except (OSError, json.JSONDecodeError) as e:
                raise ConfigError(f"Could not read configuration '{config_path}': {e}") from e
            if not isinstance(values, dict):
                raise ConfigError(f"Configuration '{config_path}' must hold a JSON object")

        values.update({key: value for key, value in flags.items() if value is not None})
        if "window" in values:
            values["window"] = str(values["window"])
        try:
            return RunConfig(**values)
        except ValidationError as e:
            raise ConfigError(str(e)) from e
