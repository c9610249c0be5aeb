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

import warnings
from typing import Callable, Optional

import numpy as np
from scipy.integrate import IntegrationWarning, quad
from scipy.special import ndtr

from changewatch.core.errors import NumericalError
from changewatch.data.settings import get_settings

SQRT_PI = float(np.sqrt(np.pi))
SQRT_2 = float(np.sqrt(2.0))


def norm_cdf(x: float | np.ndarray) -> float | np.ndarray:
    """Standard normal distribution function Φ

    Args:
        x (float | np.ndarray): Argument

    Returns:
        float | np.ndarray: Φ(x)
    """

    return ndtr(x)


def norm_pdf(x: float | np.ndarray) -> float | np.ndarray:
    """Standard normal density φ

    Args:
        x (float | np.ndarray): Argument

    Returns:
        float | np.ndarray: φ(x)
    """

    return np.exp(-0.5 * np.square(x)) / np.sqrt(2.0 * np.pi)


def integrate(
    func: Callable[[float], float],
    lower: float,
    upper: float,
    epsabs: Optional[float] = None,
    limit: int = 200,
) -> float:
    """Adaptive quadrature of func over [lower, upper]

    Args:
        func (Callable[[float], float]): Integrand
        lower (float): Lower bound
        upper (float): Upper bound, may be np.inf
        epsabs (float, optional): Absolute tolerance. Defaults to settings.
        limit (int, optional): Subinterval limit. Defaults to 200.

    Returns:
        float: Integral value
    """

    if epsabs is None:
        epsabs = get_settings().quad_epsabs

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IntegrationWarning)
        value, abserr, *info = quad(
            func, lower, upper, epsabs=epsabs, epsrel=1e-10, limit=limit, full_output=1
        )

    # A message is only attached when quad could not reach its tolerance
    if len(info) > 1 and abserr > max(1e3 * epsabs, 1e-8):
        raise NumericalError(
            f"Quadrature on [{lower}, {upper}] did not converge "
            f"(estimated error {abserr:.2e}): {info[1]}"
        )

    return float(value)


def truncation_point(
    func: Callable[[float], float],
    start: float,
    step: float = 0.5,
    cutoff: Optional[float] = None,
    max_steps: int = 10_000,
) -> float:
    """First point beyond start where |func| stays below cutoff for two consecutive steps

    Args:
        func (Callable[[float], float]): Integrand with a vanishing right tail
        start (float): Left end of the tail search
        step (float, optional): Search step. Defaults to 0.5.
        cutoff (float, optional): Magnitude threshold. Defaults to settings.
        max_steps (int, optional): Search budget. Defaults to 10_000.

    Returns:
        float: Truncation point
    """

    if cutoff is None:
        cutoff = get_settings().tail_cutoff

    x = start
    for _ in range(max_steps):
        x += step
        if abs(func(x)) < cutoff and abs(func(x + step)) < cutoff:
            return x + step

    raise NumericalError(
        f"Integrand tail does not fall below {cutoff:.0e} within {max_steps * step} of {start}"
    )


def integrate_tail(
    func: Callable[[float], float], lower: float, epsabs: Optional[float] = None
) -> float:
    """Integral of func over [lower, ∞) truncated where the integrand vanishes

    Args:
        func (Callable[[float], float]): Integrand
        lower (float): Lower bound
        epsabs (float, optional): Absolute tolerance. Defaults to settings.

    Returns:
        float: Integral value
    """

    upper = truncation_point(func, lower)
    return integrate(func, lower, upper, epsabs=epsabs)
