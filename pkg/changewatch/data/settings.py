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

from functools import lru_cache

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """changewatch run settings, overridable with CHANGEWATCH_* environment variables

    Attributes:
        reps (int): Default Monte Carlo replicate count
        seed (int): Default master seed
        batch_size (int): Replicates simulated together in one vectorized block
        n_jobs (int): Parallel workers for replicate blocks (joblib convention)
        grid_size (int): Initial Fredholm quadrature node count
        grid_cap (int): Largest Fredholm node count tried during refinement
        grid_tol (float): Relative change accepted between two refinement levels
        quad_epsabs (float): Absolute tolerance of adaptive quadratures
        tail_cutoff (float): Integrand magnitude below which infinite tails are truncated
        series_tol (float): Term magnitude below which series are truncated
        series_cap (int): Largest number of series terms summed
        progress (bool): Show progress bars during simulations
    """

    reps: int = Field(default=10_000, ge=1)
    seed: int = 0
    batch_size: int = Field(default=10_000, ge=1)
    n_jobs: int = 1
    grid_size: int = Field(default=1024, ge=64)
    grid_cap: int = Field(default=8192, ge=64)
    grid_tol: float = 5e-3
    quad_epsabs: float = 1e-10
    tail_cutoff: float = 1e-14
    series_tol: float = 1e-12
    series_cap: int = 1_000_000
    progress: bool = True

    model_config = SettingsConfigDict(env_prefix="CHANGEWATCH_")


@lru_cache
def get_settings() -> Settings:
    """Get run settings

    Returns:
        Settings: Run settings
    """

    return Settings()
