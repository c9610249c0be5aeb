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
from typing import Optional

import numpy as np
from pydantic import Field, model_validator
from scipy.optimize import brentq

from changewatch.analytics.constants import omega
from changewatch.core.changewatch_type import ChangewatchType
from changewatch.core.errors import CalibrationError, NumericalError
from changewatch.core.hypothesis import TransientWindow
from changewatch.utils.numerics import (
    SQRT_2,
    SQRT_PI,
    integrate_tail,
    norm_cdf,
    norm_pdf,
)

_log: logging.Logger = logging.getLogger(__name__)


def slepian_F1(h: float) -> float:
    """Probability that the standardized moving-sum diffusion stays below h on [0, 1]

    F_h(1) = Φ²(h) − φ(h)[hΦ(h) + φ(h)]

    Args:
        h (float): Standardized threshold

    Returns:
        float: Non-crossing probability
    """

    cdf, pdf = norm_cdf(h), norm_pdf(h)
    return float(np.clip(cdf**2 - pdf * (h * cdf + pdf), 0.0, 1.0))


def _two_step_integral(h: float, h_shifted: float) -> float:
    """∫_0^∞ Φ(h − y)[φ(h' + y)Φ(h' − y) − √π φ²(h')Φ(√2 y)] dy"""

    pdf_shifted = norm_pdf(h_shifted)

    def integrand(y: float) -> float:
        return norm_cdf(h - y) * (
            norm_pdf(h_shifted + y) * norm_cdf(h_shifted - y)
            - SQRT_PI * pdf_shifted**2 * norm_cdf(SQRT_2 * y)
        )

    return integrate_tail(integrand, 0.0)


def shepp_F2(h: float) -> float:
    """Probability that the standardized moving-sum diffusion stays below h on [0, 2]

    Args:
        h (float): Standardized threshold

    Returns:
        float: Non-crossing probability
    """

    cdf, pdf = norm_cdf(h), norm_pdf(h)
    closed = (
        cdf**3
        - 2.0 * h * pdf * cdf**2
        + (h**2 - 3.0 + SQRT_PI * h) / 2.0 * pdf**2 * cdf
        + (h + SQRT_PI) / 2.0 * pdf**3
    )
    return float(np.clip(closed + _two_step_integral(h, h), 0.0, 1.0))


def _ratio(numerator: float, denominator: float, context: str) -> float:
    if denominator <= 0.0 or numerator <= 0.0:
        raise NumericalError(f"Degenerate base probabilities for {context}")
    return numerator / denominator


def geometric_F(h: float, horizon: float) -> float:
    """Geometric extrapolation F_h(T) ≈ F_h(2)·θ(h)^{T−2}, θ = F_h(2)/F_h(1)

    Args:
        h (float): Standardized threshold
        horizon (float): Horizon T >= 1, in window units

    Returns:
        float: Approximate non-crossing probability on [0, T]
    """

    if horizon < 1:
        raise ValueError(f"Horizon must be at least 1, got {horizon}")
    one_step = slepian_F1(h)
    if horizon == 1:
        return one_step
    two_step = shepp_F2(h)
    if horizon == 2:
        return two_step
    theta = _ratio(two_step, one_step, f"h={h}")
    return float(two_step * theta ** (horizon - 2))


def corrected_F_L(h: float, window: int) -> float:
    """Discrete-time corrected F_h(L; L) ≈ Φ(h)Φ(h_L) − φ(h_L)[hΦ(h) + φ(h)]

    Args:
        h (float): Standardized threshold
        window (int): Window length L >= 2

    Returns:
        float: Approximate non-crossing probability over L steps
    """

    if window < 2:
        raise ValueError(f"Window must be at least 2, got {window}")
    h_l = h + omega(window)
    cdf, pdf = norm_cdf(h), norm_pdf(h)
    value = cdf * norm_cdf(h_l) - norm_pdf(h_l) * (h * cdf + pdf)
    return float(np.clip(value, 0.0, 1.0))


def corrected_F_2L(h: float, window: int) -> float:
    """Discrete-time corrected F_h(2L; L)

    Args:
        h (float): Standardized threshold
        window (int): Window length L >= 2

    Returns:
        float: Approximate non-crossing probability over 2L steps
    """

    if window < 2:
        raise ValueError(f"Window must be at least 2, got {window}")
    h_l = h + omega(window)
    cdf, pdf = norm_cdf(h), norm_pdf(h)
    cdf_l, pdf_l = norm_cdf(h_l), norm_pdf(h_l)

    closed = (
        pdf_l**2 / 2.0 * ((h**2 - 1.0 + SQRT_PI * h) * cdf + (h + SQRT_PI) * pdf)
        - pdf_l * cdf_l * ((h + h_l) * cdf + pdf)
        + cdf * cdf_l**2
    )
    return float(np.clip(closed + _two_step_integral(h, h_l), 0.0, 1.0))


def _theta_l(h: float, window: int) -> tuple[float, float]:
    one_window = corrected_F_L(h, window)
    two_windows = corrected_F_2L(h, window)
    theta = _ratio(two_windows, one_window, f"h={h}, L={window}")
    if theta >= 1.0:
        raise NumericalError(
            f"theta_L = {theta:.6f} >= 1 at h={h}, L={window}: threshold too low for the approximation"
        )
    return theta, two_windows


def mosum_arl_standardized(h: float, window: int) -> float:
    """ARL of the MOSUM scan index, −L·F_h(2L;L)/(θ_L² log θ_L), standardized threshold

    Args:
        h (float): Standardized threshold
        window (int): Window length L >= 2

    Returns:
        float: Approximate E∞τ_{S,L}, add L for the MOSUM stopping time
    """

    theta, two_windows = _theta_l(h, window)
    return float(-window * two_windows / (theta**2 * np.log(theta)))


def mosum_arl(
    threshold: float, window: int, mu: float = 0.0, sigma: float = 1.0
) -> float:
    """ARL of the MOSUM scan index for a raw-sum threshold

    Args:
        threshold (float): Raw-sum threshold H
        window (int): Window length L >= 2
        mu (float, optional): Pre-change mean. Defaults to 0.0.
        sigma (float, optional): Noise standard deviation. Defaults to 1.0.

    Returns:
        float: Approximate E∞τ_{S,L}, add L for the MOSUM stopping time
    """

    h = (threshold - mu * window) / (sigma * np.sqrt(window))
    if not np.isfinite(h):
        raise ValueError(f"Standardized threshold is not finite for H={threshold}")
    return mosum_arl_standardized(h, window)


def mosum_bcp(h: float, window: int, horizon: float) -> float:
    """Boundary-crossing approximation F_h(M;L) ≈ F_h(2L;L)·θ_L^{M/L−2}

    Args:
        h (float): Standardized threshold
        window (int): Window length L >= 2
        horizon (float): Horizon M >= 0, in steps

    Returns:
        float: Approximate probability that the scan stays below h over M steps
    """

    if horizon < 0:
        raise ValueError(f"Horizon must be nonnegative, got {horizon}")
    if horizon == 2 * window:
        return corrected_F_2L(h, window)
    if horizon == window:
        return corrected_F_L(h, window)
    theta, two_windows = _theta_l(h, window)
    return float(np.clip(two_windows * theta ** (horizon / window - 2.0), 0.0, 1.0))


def invert_mosum_arl(
    target_scan_arl: float,
    window: int,
    mu: float = 0.0,
    sigma: float = 1.0,
    lower: float = 0.5,
    upper: float = 8.0,
) -> float:
    """Raw-sum threshold whose approximate scan ARL equals the target

    Args:
        target_scan_arl (float): Target E∞τ_{S,L}
        window (int): Window length L >= 2
        mu (float, optional): Pre-change mean. Defaults to 0.0.
        sigma (float, optional): Noise standard deviation. Defaults to 1.0.
        lower (float, optional): Lowest standardized threshold searched. Defaults to 0.5.
        upper (float, optional): Highest standardized threshold searched. Defaults to 8.0.

    Returns:
        float: Raw-sum threshold H
    """

    def gap(h: float) -> float:
        try:
            return np.log(mosum_arl_standardized(h, window)) - np.log(target_scan_arl)
        except NumericalError:
            return -np.inf

    # Shrink the range to where the approximation is defined
    while gap(lower) == -np.inf and lower < upper:
        lower += 0.25
    while gap(upper) == -np.inf and upper > lower:
        upper -= 0.25
    if not gap(lower) < 0.0 < gap(upper):
        raise CalibrationError(
            f"Target scan ARL {target_scan_arl} not bracketed by h in [{lower}, {upper}] for L={window}"
        )

    h = brentq(gap, lower, upper, xtol=1e-10)
    _log.debug("MOSUM L=%d target %.1f -> h=%.6f", window, target_scan_arl, h)
    return float(mu * window + h * sigma * np.sqrt(window))


class BoundaryCrossingQuery(ChangewatchType):
    """Boundary-crossing probability request

    Attributes:
        threshold (float): Standardized h (MOSUM) or centered-sum H (generalized MOSUM)
        window (int, optional): MOSUM window length L
        transient (TransientWindow, optional): Generalized MOSUM bounds, l0 must be 1
        horizon (float): Horizon M in steps
        amplitude (float, optional): Shift A, generalized case only
    """

    threshold: float
    window: Optional[int] = Field(default=None, ge=2)
    transient: Optional[TransientWindow] = None
    horizon: float = Field(ge=0.0)
    amplitude: Optional[float] = Field(default=None, gt=0.0)

    @model_validator(mode="after")
    def _check_geometry(self) -> "BoundaryCrossingQuery":
        if (self.window is None) == (self.transient is None):
            raise ValueError("Give exactly one of window L or transient bounds l0:l1")
        if self.transient is not None and self.amplitude is None:
            raise ValueError("Generalized MOSUM queries require the amplitude A")
        return self

    def probability(self) -> float:
        """Evaluate the approximation matching the geometry

        Returns:
            float: Approximate non-crossing probability
        """

        if self.window is not None:
            return mosum_bcp(self.threshold, self.window, self.horizon)

        # pylint: disable=import-outside-toplevel
        from changewatch.analytics.genmosum_arl import approx1_bcp

        if self.transient.l0 != 1:
            raise ValueError("Explicit generalized MOSUM approximations assume l0 = 1")
        return approx1_bcp(
            self.threshold, self.amplitude, self.transient.l1, self.horizon
        ).value
