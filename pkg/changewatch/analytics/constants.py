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
from functools import lru_cache
from typing import Callable, Literal

import numpy as np
from scipy.stats import norm

from changewatch.core.changewatch_type import ChangewatchType
from changewatch.core.errors import NumericalError
from changewatch.data.settings import get_settings
from changewatch.utils.numerics import integrate, norm_cdf

_log: logging.Logger = logging.getLogger(__name__)

# Expected limiting overshoot of a unit-variance Gaussian random walk, −ζ(1/2)/√(2π)
RHO = 0.5825971579390106
# Three-decimal value used by the fast κ proxy tables
RHO_ROUNDED = 0.583

SERIES_CHUNK = 4096


def _rho_integrand(lam: float) -> float:
    if lam < 1e-6:
        return 1.0 / (4.0 * np.pi)
    ratio = -2.0 * np.expm1(-lam * lam / 2.0) / (lam * lam)
    return -np.log(ratio) / (np.pi * lam * lam)


def rho(method: Literal["stored", "quadrature"] = "stored", limit: int = 200) -> float:
    """Limiting expected overshoot ρ of a Gaussian random walk

    ρ = −∫_0^∞ (1/(πλ²)) log{2(1 − exp(−λ²/2))/λ²} dλ ≈ 0.582597

    Args:
        method (Literal["stored", "quadrature"], optional): Return the stored constant or integrate. Defaults to "stored".
        limit (int, optional): Quadrature subinterval limit. Defaults to 200.

    Returns:
        float: ρ
    """

    if method == "stored":
        return RHO
    return integrate(_rho_integrand, 0.0, np.inf, limit=limit)


def _sum_series(
    term: Callable[[np.ndarray], np.ndarray], name: str
) -> float:
    """Sum a positive decreasing series over k = 1, 2, ... until terms drop below tolerance

    Args:
        term (Callable[[np.ndarray], np.ndarray]): Vectorized term of index k
        name (str): Series name for error messages

    Returns:
        float: Truncated sum
    """

    settings = get_settings()
    total = 0.0
    start = 1
    while start <= settings.series_cap:
        ks = np.arange(start, min(start + SERIES_CHUNK, settings.series_cap + 1))
        terms = term(ks)
        small = np.flatnonzero(terms < settings.series_tol)
        if small.size:
            return total + float(terms[: small[0]].sum())
        total += float(terms.sum())
        start = ks[-1] + 1

    raise NumericalError(
        f"Series for {name} did not reach terms below {settings.series_tol:.0e} "
        f"within {settings.series_cap} terms, amplitude too small"
    )


def kappa(amplitude: float) -> float:
    """κ(A) = (2/A²) exp{−2 Σ_{ν≥1} Φ(−A√ν/2)/ν}

    Args:
        amplitude (float): Shift A > 0, in noise units

    Returns:
        float: κ(A)
    """

    if amplitude <= 0:
        raise ValueError(f"Amplitude must be positive, got {amplitude}")

    series = _sum_series(
        lambda ks: norm_cdf(-amplitude * np.sqrt(ks) / 2.0) / ks, f"kappa({amplitude})"
    )
    return float(2.0 / amplitude**2 * np.exp(-2.0 * series))


def kappa_proxy(amplitude: float, rho_value: float = RHO_ROUNDED) -> float:
    """Fast proxy κ(A) ≈ exp(−ρA)

    Args:
        amplitude (float): Shift A > 0, in noise units
        rho_value (float, optional): Overshoot constant. Defaults to RHO_ROUNDED.

    Returns:
        float: Approximate κ(A)
    """

    if amplitude <= 0:
        raise ValueError(f"Amplitude must be positive, got {amplitude}")
    return float(np.exp(-rho_value * amplitude))


def zeta_gaussian(amplitude: float) -> float:
    """Limiting exponential overshoot ζ of the Gaussian log-likelihood-ratio walk

    ζ = (1/I_g) exp{−Σ_k (1/k)[Pr∞(Z_k > 0) + Pr0(Z_k <= 0)]}, where Z_k is the
    log-likelihood ratio of k observations, N(∓kI, 2kI) under the two densities
    with I = A²/2.

    Args:
        amplitude (float): Shift A > 0, in noise units

    Returns:
        float: ζ(A)
    """

    if amplitude <= 0:
        raise ValueError(f"Amplitude must be positive, got {amplitude}")

    information = amplitude**2 / 2.0

    def term(ks: np.ndarray) -> np.ndarray:
        scale = amplitude * np.sqrt(ks)
        false_positive = norm.sf(0.0, loc=-ks * information, scale=scale)
        missed = norm.cdf(0.0, loc=ks * information, scale=scale)
        return (false_positive + missed) / (2.0 * ks)

    series = _sum_series(term, f"zeta({amplitude})")
    return float(np.exp(-2.0 * series) / information)


def omega(window: int, rho_value: float = RHO) -> float:
    """Discrete-time barrier shift ω_L = √2·ρ/√L of a standardized moving sum

    Args:
        window (int): Window length L
        rho_value (float, optional): Overshoot constant. Defaults to RHO.

    Returns:
        float: ω_L
    """

    return float(np.sqrt(2.0) * rho_value / np.sqrt(window))


class SpecialConstants(ChangewatchType):
    """Constants shared by the approximations

    Attributes:
        rho (float): Limiting expected overshoot ρ
    """

    rho: float = RHO

    def kappa(self, amplitude: float) -> float:
        """κ(A), see `kappa`

        Args:
            amplitude (float): Shift A

        Returns:
            float: κ(A)
        """

        return kappa(amplitude)

    def kappa_proxy(self, amplitude: float) -> float:
        """exp(−ρA) with this instance's ρ

        Args:
            amplitude (float): Shift A

        Returns:
            float: Approximate κ(A)
        """

        return kappa_proxy(amplitude, self.rho)

    def omega(self, window: int) -> float:
        """ω_L with this instance's ρ

        Args:
            window (int): Window length L

        Returns:
            float: ω_L
        """

        return omega(window, self.rho)

    def corrected_threshold(self, h: float, window: int) -> float:
        """h_L = h + ω_L

        Args:
            h (float): Standardized threshold
            window (int): Window length L

        Returns:
            float: h_L
        """

        return h + self.omega(window)


@lru_cache
def special_constants() -> SpecialConstants:
    """Constants with ρ evaluated by quadrature

    Returns:
        SpecialConstants: Constants
    """

    value = rho("quadrature")
    if abs(value - RHO) > 1e-6:
        _log.warning("Quadrature rho %.9f departs from stored %.9f", value, RHO)
    return SpecialConstants(rho=value)
