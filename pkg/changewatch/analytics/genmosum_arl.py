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

from changewatch.analytics.approximation import Approximation
from changewatch.analytics.constants import RHO
from changewatch.core.errors import NumericalError
from changewatch.core.hypothesis import TransientWindow

_log: logging.Logger = logging.getLogger(__name__)


def _check_base_probabilities(f_l1: float, f_2l1: float) -> None:
    if not 0.0 < f_2l1 <= f_l1 < 1.0:
        raise ValueError(
            f"Base probabilities must satisfy 0 < F(2l1) <= F(l1) < 1, got F(l1)={f_l1}, F(2l1)={f_2l1}"
        )


def genmosum_bcp(
    threshold: float,
    window: TransientWindow,
    horizon: float,
    f_l1: float,
    f_2l1: float,
) -> float:
    """Boundary-crossing approximation F(H, M) ≈ F(H, 2l1)·θ^{M/l1−2}, θ = F(H, 2l1)/F(H, l1)

    The base probabilities are supplied by the caller, usually from simulation.

    Args:
        threshold (float): Centered-sum threshold H, used in messages only
        window (TransientWindow): Window bounds l0, l1
        horizon (float): Horizon M >= 0, in steps
        f_l1 (float): F(H, l1)
        f_2l1 (float): F(H, 2l1)

    Returns:
        float: Approximate probability that the statistic stays below H over M steps
    """

    _check_base_probabilities(f_l1, f_2l1)
    if horizon < 0:
        raise ValueError(f"Horizon must be nonnegative, got {horizon}")
    if horizon == 2 * window.l1:
        return f_2l1

    theta = f_2l1 / f_l1
    _log.debug("H=%g l1=%d theta=%.6f", threshold, window.l1, theta)
    return float(np.clip(f_2l1 * theta ** (horizon / window.l1 - 2.0), 0.0, 1.0))


def genmosum_arl(
    threshold: float, window: TransientWindow, f_l1: float, f_2l1: float
) -> float:
    """ARL of the generalized MOSUM scan index, −l1·F(H, 2l1)/(θ² log θ)

    Args:
        threshold (float): Centered-sum threshold H, used in messages only
        window (TransientWindow): Window bounds l0, l1
        f_l1 (float): F(H, l1)
        f_2l1 (float): F(H, 2l1)

    Returns:
        float: Approximate E∞τ_S, add l1 for the stopping time
    """

    _check_base_probabilities(f_l1, f_2l1)
    theta = f_2l1 / f_l1
    if theta >= 1.0:
        raise NumericalError(
            f"theta = 1 at H={threshold}: base probabilities equal, ARL undefined"
        )
    return float(-window.l1 * f_2l1 / (theta**2 * np.log(theta)))


def hogan_tail(u: float, gamma: float, m: float) -> Approximation:
    """Large-deviation tail [2γ(mγ − u) + 3]·exp(−2γu) of the drifted Brownian scan

    Approximates Pr{max_{0<=s<t<=m} W(t) − W(s) − γ(t − s) > u}.

    Args:
        u (float): Barrier
        gamma (float): Drift γ > 0
        m (float): Horizon

    Returns:
        Approximation: Tail probability clamped to [0, 1]
    """

    if gamma <= 0:
        raise ValueError(f"Drift must be positive, got {gamma}")

    raw = (2.0 * gamma * (m * gamma - u) + 3.0) * np.exp(-2.0 * gamma * u)
    advisory: Optional[str] = None
    if u <= 0 or m * gamma / u <= 1.0:
        advisory = f"m*gamma/u outside (1, inf) at u={u}, gamma={gamma}, m={m}"
    elif not 0.0 <= raw <= 1.0:
        advisory = f"Tail value {raw:.4g} outside [0, 1] at u={u}, clamped"

    return Approximation.flagged(float(np.clip(raw, 0.0, 1.0)), advisory)


def approx1_base_probabilities(
    threshold: float, amplitude: float, l1: int, rho_value: float = RHO
) -> tuple[Approximation, Approximation]:
    """Explicit approximations of F_{1,l1}(H, l1) and F_{1,l1}(H, 2l1)

    The Brownian tail is evaluated at the barrier H + 2ρ, with drift A/2 over
    horizons 2l1 and 3l1.

    Args:
        threshold (float): Centered-sum threshold H
        amplitude (float): Shift A > 0, in noise units
        l1 (int): Upper signal length bound
        rho_value (float, optional): Overshoot constant. Defaults to RHO.

    Returns:
        tuple[Approximation, Approximation]: F(H, l1) and F(H, 2l1)
    """

    barrier = threshold + 2.0 * rho_value
    gamma = amplitude / 2.0
    one_window = hogan_tail(barrier, gamma, 2.0 * l1)
    two_windows = hogan_tail(barrier, gamma, 3.0 * l1)

    return (
        Approximation(value=1.0 - one_window.value, advisory=one_window.advisory),
        Approximation(value=1.0 - two_windows.value, advisory=two_windows.advisory),
    )


def _theta_hat(threshold: float, amplitude: float, l1: int) -> tuple[float, float, Optional[str]]:
    f_l1, f_2l1 = approx1_base_probabilities(threshold, amplitude, l1)
    if not (0.0 < f_2l1.value and 0.0 < f_l1.value):
        raise NumericalError(
            f"Explicit base probabilities not positive at H={threshold}, A={amplitude}, l1={l1}: "
            "threshold too small for the large-deviation regime"
        )
    theta = f_2l1.value / f_l1.value
    if not 0.0 < theta < 1.0:
        raise NumericalError(
            f"Explicit theta = {theta:.6f} outside (0, 1) at H={threshold}, A={amplitude}, l1={l1}: "
            "threshold too small for the large-deviation regime"
        )
    return theta, f_2l1.value, f_l1.advisory or f_2l1.advisory


def approx1_bcp(threshold: float, amplitude: float, l1: int, horizon: float) -> Approximation:
    """Explicit boundary-crossing approximation of the generalized MOSUM with l0 = 1

    Args:
        threshold (float): Centered-sum threshold H
        amplitude (float): Shift A > 0, in noise units
        l1 (int): Upper signal length bound
        horizon (float): Horizon M >= 0, in steps

    Returns:
        Approximation: Approximate F_{1,l1}(H, M)
    """

    if horizon < 0:
        raise ValueError(f"Horizon must be nonnegative, got {horizon}")
    theta, f_2l1, advisory = _theta_hat(threshold, amplitude, l1)
    value = float(np.clip(f_2l1 * theta ** (horizon / l1 - 2.0), 0.0, 1.0))
    return Approximation(value=value, advisory=advisory)


def approx2_arl(threshold: float, amplitude: float, l1: int) -> Approximation:
    """Explicit ARL approximation of the generalized MOSUM scan index with l0 = 1

    Args:
        threshold (float): Centered-sum threshold H
        amplitude (float): Shift A > 0, in noise units
        l1 (int): Upper signal length bound

    Returns:
        Approximation: Approximate E∞τ_S, add l1 for the stopping time
    """

    theta, f_2l1, advisory = _theta_hat(threshold, amplitude, l1)
    value = float(-l1 * f_2l1 / (theta**2 * np.log(theta)))
    return Approximation(value=value, advisory=advisory)
