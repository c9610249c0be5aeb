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

import numpy as np

from changewatch.analytics.constants import RHO_ROUNDED, kappa, kappa_proxy, zeta_gaussian

_log: logging.Logger = logging.getLogger(__name__)


def _kappa(amplitude: float, proxy: bool, rho_value: float) -> float:
    return kappa_proxy(amplitude, rho_value) if proxy else kappa(amplitude)


def cusum_arl_general(threshold_log: float, amplitude: float) -> float:
    """ARL approximation of Page's chart with a log-scale threshold

    E∞τ ≈ e^H/(I_g ζ²) − H/I_f − 1/(I_g ζ), with I_f = I_g = A²/2.

    The approximation is only meaningful for thresholds well above zero; at
    small H the linear terms dominate and the value may drop below 1.

    Args:
        threshold_log (float): Threshold H on the log-likelihood scale
        amplitude (float): Shift A > 0, in noise units

    Returns:
        float: Approximate ARL
    """

    information = amplitude**2 / 2.0
    zeta = zeta_gaussian(amplitude)
    arl = (
        np.exp(threshold_log) / (information * zeta**2)
        - threshold_log / information
        - 1.0 / (information * zeta)
    )
    if arl < 1.0:
        _log.warning(
            "ARL approximation %.3g below 1 at log threshold %.3g, outside its domain",
            arl,
            threshold_log,
        )
    return float(arl)


def cusum_arl_fast(
    threshold: float,
    amplitude: float,
    proxy: bool = False,
    rho_value: float = RHO_ROUNDED,
) -> float:
    """Fast CUSUM ARL approximation 2H/(Aκ²(A)) on the likelihood-ratio scale

    Args:
        threshold (float): Threshold H > 0 on the V scale
        amplitude (float): Shift A > 0, in noise units
        proxy (bool, optional): Use κ ≈ exp(−ρA). Defaults to False.
        rho_value (float, optional): ρ used by the proxy. Defaults to RHO_ROUNDED.

    Returns:
        float: Approximate ARL
    """

    if threshold <= 0:
        raise ValueError(f"Threshold must be positive, got {threshold}")
    return float(2.0 * threshold / (amplitude * _kappa(amplitude, proxy, rho_value) ** 2))


def sr_arl_fast(
    threshold: float,
    amplitude: float,
    proxy: bool = False,
    rho_value: float = RHO_ROUNDED,
) -> float:
    """Fast Shiryaev-Roberts ARL approximation H/κ(A)

    Args:
        threshold (float): Threshold H > 0 on the R scale
        amplitude (float): Shift A > 0, in noise units
        proxy (bool, optional): Use κ ≈ exp(−ρA). Defaults to False.
        rho_value (float, optional): ρ used by the proxy. Defaults to RHO_ROUNDED.

    Returns:
        float: Approximate ARL
    """

    if threshold <= 0:
        raise ValueError(f"Threshold must be positive, got {threshold}")
    return float(threshold / _kappa(amplitude, proxy, rho_value))


def cusum_threshold_fast(target_arl: float, amplitude: float) -> float:
    """V-scale threshold whose fast CUSUM ARL approximation equals the target

    Args:
        target_arl (float): Target ARL
        amplitude (float): Shift A > 0, in noise units

    Returns:
        float: Threshold H
    """

    return float(target_arl * amplitude * kappa(amplitude) ** 2 / 2.0)


def sr_threshold_fast(target_arl: float, amplitude: float) -> float:
    """R-scale threshold whose fast Shiryaev-Roberts ARL approximation equals the target

    Args:
        target_arl (float): Target ARL
        amplitude (float): Shift A > 0, in noise units

    Returns:
        float: Threshold H
    """

    return float(target_arl * kappa(amplitude))
