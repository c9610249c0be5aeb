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
import warnings
from typing import TYPE_CHECKING, Optional

import numpy as np
from pydantic import ConfigDict, Field, model_validator
from scipy.integrate import IntegrationWarning, dblquad

from changewatch.analytics.constants import RHO, omega
from changewatch.core.changewatch_type import ChangewatchType
from changewatch.core.errors import NumericalError, UnsupportedCaseError
from changewatch.data.settings import get_settings
from changewatch.utils.numerics import norm_cdf, norm_pdf
from changewatch.utils.random import block_sizes, stream_rng

if TYPE_CHECKING:
    from changewatch.simulation.plan import PowerEstimate

_log: logging.Logger = logging.getLogger(__name__)

# Truncation radius of the double integral, beyond max(h, 0) on each axis
TRUNCATION_RADIUS = 12.0
# Paths simulated together by the continuous-path oracle
PATH_CHUNK = 1000


class PowerQuery(ChangewatchType):
    """MOSUM power request for a signal as long as the window (λ = l/L = 1)

    Attributes:
        h (float): Standardized threshold
        amplitude (float): Shift A > 0, in observation units
        window (int): Window length L >= 2
        sigma (float): Noise standard deviation
        l (int, optional): Signal length, must equal L when given
    """

    h: float
    amplitude: float = Field(gt=0.0)
    window: int = Field(ge=2)
    sigma: float = Field(default=1.0, gt=0.0)
    l: Optional[int] = Field(default=None, ge=1)

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_ratio(self) -> "PowerQuery":
        if self.l is not None and self.l != self.window:
            raise UnsupportedCaseError(
                f"Power approximations only cover l = L, got l={self.l}, L={self.window}; "
                "other signal-to-window ratios need separate diffusion formulas"
            )
        return self

    @property
    def gamma(self) -> float:
        """Standardized signal strength γ = A√L/σ

        Returns:
            float: γ
        """

        return self.amplitude * np.sqrt(self.window) / self.sigma

    @property
    def h_corrected(self) -> float:
        """Discrete-time corrected threshold h_L = h + ω_L

        Returns:
            float: h_L
        """

        return self.h + omega(self.window)

    def diffusion_power(self) -> float:
        """Continuous-time power approximation at h

        Returns:
            float: Approximate power
        """

        return diffusion_power(self.h, self.gamma)

    def discrete_power(self) -> float:
        """Discrete-time corrected power approximation at h_L

        Returns:
            float: Approximate power
        """

        return diffusion_power(self.h_corrected, self.gamma)


class BarrierProfile(ChangewatchType):
    """Piecewise-linear barrier over [times[0], times[-1]]

    Attributes:
        times (list[float]): Increasing knot times
        levels (list[float]): Barrier level at each knot
    """

    times: list[float]
    levels: list[float]

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def _check_knots(self) -> "BarrierProfile":
        if len(self.times) < 2 or len(self.times) != len(self.levels):
            raise ValueError("Barrier needs at least two knots with one level each")
        if np.any(np.diff(self.times) <= 0):
            raise ValueError(f"Knot times must increase, got {self.times}")
        return self

    @property
    def horizon(self) -> float:
        """Length of the barrier interval

        Returns:
            float: Horizon
        """

        return self.times[-1] - self.times[0]

    def at(self, t: float | np.ndarray) -> float | np.ndarray:
        """Barrier level at time t

        Args:
            t (float | np.ndarray): Times within the knot range

        Returns:
            float | np.ndarray: Levels
        """

        return np.interp(t, self.times, self.levels)

    @staticmethod
    def flat(h: float, horizon: float) -> "BarrierProfile":
        """Constant barrier h over [0, horizon]

        Args:
            h (float): Level
            horizon (float): Horizon

        Returns:
            BarrierProfile: Flat barrier
        """

        return BarrierProfile(times=[0.0, horizon], levels=[h, h])

    @staticmethod
    def dip(h: float, gamma: float) -> "BarrierProfile":
        """Barrier flat at h on [0, 1], down to h − γ at 2, back to h at 3

        Subtracting the mean profile of a window-length signal from the
        threshold gives this shape in window units.

        Args:
            h (float): Standardized threshold
            gamma (float): Depth γ >= 0

        Returns:
            BarrierProfile: Dipped barrier
        """

        if gamma < 0:
            raise ValueError(f"Depth must be nonnegative, got {gamma}")
        return BarrierProfile(times=[0.0, 1.0, 2.0, 3.0], levels=[h, h, h - gamma, h])


def mean_profile_discrete(
    n: int | np.ndarray, amplitude: float, window: int, l: int, nu_prime: int
) -> float | np.ndarray:
    """Mean shift E_ν S_{n,L} − μL of the moving sum ending at n

    The signal occupies ν′+1..ν′+l; the result is A times the overlap of the
    window n−L+1..n with the signal, so it is 0 up to ν′, ramps to a plateau
    A·min(l, L) and descends back to 0 at ν′ + l + L.

    Args:
        n (int | np.ndarray): Window end indices
        amplitude (float): Shift A
        window (int): Window length L
        l (int): Signal length
        nu_prime (int): Last index before the signal

    Returns:
        float | np.ndarray: Mean shift
    """

    n = np.asarray(n)
    overlap = np.minimum(n, nu_prime + l) - np.maximum(n - window + 1, nu_prime + 1) + 1
    profile = amplitude * np.clip(overlap, 0, None).astype(float)
    return float(profile) if profile.ndim == 0 else profile


def F_h0_1(h: float, x: float) -> float:
    """Pr(S(t) < h for t in [0, 1] | S(0) = x) for the standardized moving-sum diffusion

    Args:
        h (float): Barrier
        x (float): Start value x <= h

    Returns:
        float: Φ(h) − exp(−(h² − x²)/2)Φ(x)
    """

    if x > h:
        raise ValueError(f"Start value {x} above the barrier {h}")
    return float(np.clip(norm_cdf(h) - np.exp(-(h * h - x * x) / 2.0) * norm_cdf(x), 0.0, 1.0))


def _dip_determinant(u: float, v: float, h: float, x: float) -> float:
    """4x4 determinant of the three-unit dipped-barrier density, in offsets u, v >= 0"""

    pdf, cdf = norm_pdf, norm_cdf
    return float(
        np.linalg.det(
            np.array(
                [
                    [pdf(x), pdf(x - u), pdf(x - u - v), cdf(x - u - v)],
                    [pdf(h), pdf(h - u), pdf(h - u - v), cdf(h - u - v)],
                    [pdf(u + h), pdf(h), pdf(h - v), cdf(h - v)],
                    [pdf(u + v + h), pdf(v + h), pdf(h), cdf(h)],
                ]
            )
        )
    )


def F_h0_neg_gamma(
    h: float, gamma: float, x: float = 0.0, radius: float = TRUNCATION_RADIUS
) -> float:
    """Pr(S(t) < B(t; h, 0, −γ, γ) for t in [0, 3] | S(0) = x)

    The double integral runs over the offsets u, v >= 0 of the two interior
    knot values from their lower limits; the region is truncated at
    max(h, 0) + radius on each axis.

    Args:
        h (float): Standardized threshold
        gamma (float): Depth γ >= 0 of the barrier dip
        x (float, optional): Start value. Defaults to 0.0.
        radius (float, optional): Truncation radius. Defaults to TRUNCATION_RADIUS.

    Returns:
        float: Non-crossing probability
    """

    if gamma < 0:
        raise ValueError(f"Depth must be nonnegative, got {gamma}")
    if x > h:
        raise ValueError(f"Start value {x} above the barrier {h}")

    log_scale = -(gamma**2) / 2.0 + gamma * h
    upper = max(h, 0.0) + radius

    def integrand(v: float, u: float) -> float:
        return np.exp(log_scale - gamma * v) * _dip_determinant(u, v, h, x)

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IntegrationWarning)
        value, abserr = dblquad(integrand, 0.0, upper, 0.0, upper, epsabs=1e-9, epsrel=1e-8)

    if abserr > 1e-6:
        raise NumericalError(
            f"Double integral did not converge at h={h}, gamma={gamma} (estimated error {abserr:.2e})"
        )
    return float(np.clip(value / norm_pdf(x), 0.0, 1.0))


def diffusion_power(h: float, gamma: float) -> float:
    """Continuous-time MOSUM power 1 − F_{h,0,−γ,γ}(3|0)/F_{h,0}(1|0)

    Args:
        h (float): Standardized threshold
        gamma (float): Signal strength γ >= 0

    Returns:
        float: Approximate probability of detecting a window-length signal
    """

    flat = F_h0_1(h, 0.0)
    if flat <= 0.0:
        raise NumericalError(f"No-crossing probability on [0, 1] vanishes at h={h}")
    return float(np.clip(1.0 - F_h0_neg_gamma(h, gamma) / flat, 0.0, 1.0))


def discrete_power(h: float, amplitude: float, window: int, sigma: float = 1.0) -> float:
    """Discrete-time MOSUM power, the diffusion formula at h_L = h + ω_L

    Args:
        h (float): Standardized threshold
        amplitude (float): Shift A > 0, in observation units
        window (int): Window length L >= 2
        sigma (float, optional): Noise standard deviation. Defaults to 1.0.

    Returns:
        float: Approximate power
    """

    return PowerQuery(h=h, amplitude=amplitude, window=window, sigma=sigma).discrete_power()


def simulate_slepian_bcp(
    barrier: BarrierProfile,
    x: Optional[float] = None,
    step: float = 1e-3,
    reps: int = 100_000,
    seed: int = 0,
) -> float:
    """Simulated probability that S(t) = W(t + 1) − W(t) stays below a barrier

    The path is sampled on a grid of the given step. With a start value x,
    W on [0, 1] is a Brownian bridge from 0 to x; without one S(0) is
    standard normal. The barrier is lowered by ρ·√(2·step) to account for
    crossings between grid points.

    Args:
        barrier (BarrierProfile): Barrier over [0, T]
        x (float, optional): Start value S(0), None for a stationary start. Defaults to None.
        step (float, optional): Grid step. Defaults to 1e-3.
        reps (int, optional): Number of paths. Defaults to 100_000.
        seed (int, optional): Master seed. Defaults to 0.

    Returns:
        float: Non-crossing frequency
    """

    unit = int(round(1.0 / step))
    steps = int(round(barrier.horizon / step))
    offsets = np.arange(steps + 1) * step
    levels = barrier.at(barrier.times[0] + offsets) - RHO * np.sqrt(2.0 * step)

    below = 0
    for block, size in enumerate(block_sizes(reps, PATH_CHUNK)):
        rng = stream_rng(seed, block)
        increments = rng.standard_normal((size, unit + steps)) * np.sqrt(step)
        path = np.concatenate([np.zeros((size, 1)), np.cumsum(increments, axis=1)], axis=1)
        if x is not None:
            # Pin W(1) − W(0) to x with a bridge on the first unit
            ramp = np.arange(unit + 1) / unit
            head = path[:, : unit + 1]
            head += ramp[None, :] * (x - head[:, -1:])
            path[:, unit + 1 :] = x + np.cumsum(increments[:, unit:], axis=1)

        scan = path[:, unit : unit + steps + 1] - path[:, : steps + 1]
        below += int(np.all(scan < levels[None, :], axis=1).sum())

    return below / reps


def empirical_power_mosum(
    h: float,
    amplitude: float,
    window: int,
    l: Optional[int] = None,
    reps: int = 10_000,
    seed: int = 0,
) -> "PowerEstimate":
    """Simulated MOSUM power for a transient signal after a stationary burn-in

    The signal starts after ν = 3L observations; an alarm counts when the
    moving sum crosses H = h√L within the l + L − 1 observations that follow,
    given no crossing up to ν.

    Args:
        h (float): Standardized threshold
        amplitude (float): Shift A > 0, in noise units
        window (int): Window length L
        l (int, optional): Signal length. Defaults to L.
        reps (int, optional): Replicates, at least 1000. Defaults to 10_000.
        seed (int, optional): Master seed. Defaults to 0.

    Returns:
        PowerEstimate: Conditional detection frequency
    """

    # pylint: disable=import-outside-toplevel
    from changewatch.core.gaussian import GaussianChangeSpec
    from changewatch.detectors.config import DetectorConfig
    from changewatch.detectors.state import Procedure
    from changewatch.simulation.power import estimate_conditional_power

    if reps < 1000:
        raise ValueError(f"Empirical power needs at least 1000 replicates, got {reps}")
    l = window if l is None else l
    nu = 3 * window
    config = DetectorConfig(
        procedure=Procedure.MOSUM,
        spec=GaussianChangeSpec(amplitude=amplitude),
        window=window,
    )
    return estimate_conditional_power(
        config,
        threshold=h * np.sqrt(window),
        nu=nu,
        l=l,
        horizon=l + window,
        reps=reps,
        seed=seed,
        n_jobs=get_settings().n_jobs,
    )
