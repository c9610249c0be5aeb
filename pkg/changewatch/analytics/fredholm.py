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
from enum import Enum
from typing import Optional

import numpy as np
from numpy.polynomial.legendre import leggauss
from pydantic import ConfigDict, Field, field_validator
from scipy.linalg import LinAlgError, solve as linear_solve
from scipy.optimize import brentq

from changewatch.analytics.cusum_arl import cusum_threshold_fast, sr_threshold_fast
from changewatch.core.changewatch_type import ChangewatchType
from changewatch.core.errors import CalibrationError, NumericalError
from changewatch.data.settings import get_settings
from changewatch.detectors.state import Procedure
from changewatch.utils.numerics import norm_cdf, norm_pdf

_log: logging.Logger = logging.getLogger(__name__)

# Gauss-Legendre nodes per panel
PANEL_ORDER = 8
# Scale of the logarithmic panel clustering near x = 0
CLUSTER_SCALE = 0.05


class Regime(str, Enum):
    """Distribution of the observations driving the statistic"""

    NULL_ARL = "null"
    ZERO_DELAY = "zero_delay"


class FredholmProblem(ChangewatchType):
    """Run-length integral equation φ(s) = 1 + ∫_0^H φ(x) d/dx F(x/ξ(s)) dx

    Attributes:
        procedure (Procedure): CUSUM_V (ξ(s) = max(1, s)) or SR (ξ(s) = 1 + s)
        threshold (float): Threshold H > 0 on the V or R scale
        regime (Regime): NULL_ARL for E∞τ, ZERO_DELAY for E₀τ
        amplitude (float): Shift A > 0, in noise units
        grid_size (int): Initial number of quadrature nodes
    """

    procedure: Procedure
    threshold: float = Field(gt=0.0)
    regime: Regime = Regime.NULL_ARL
    amplitude: float = Field(gt=0.0)
    grid_size: int = Field(default=1024, ge=64)

    model_config = ConfigDict(frozen=True)

    @field_validator("procedure")
    @classmethod
    def _check_procedure(cls, procedure: Procedure) -> Procedure:
        if procedure not in (Procedure.CUSUM_V, Procedure.SR):
            raise ValueError(
                f"Integral equation only covers 'cusum' and 'sr', got '{procedure.value}'"
            )
        return procedure

    @property
    def start(self) -> float:
        """Start value of the statistic, V₀ = 1 or R₀ = 0

        Returns:
            float: Start value
        """

        return 1.0 if self.procedure == Procedure.CUSUM_V else 0.0

    @property
    def log_mean(self) -> float:
        """Mean of the log-likelihood ratio of one observation under the regime

        Returns:
            float: −A²/2 under NULL_ARL, A²/2 under ZERO_DELAY
        """

        half_information = self.amplitude**2 / 2.0
        return -half_information if self.regime == Regime.NULL_ARL else half_information

    def xi(self, s: float | np.ndarray) -> float | np.ndarray:
        """Multiplier ξ(s) applied to the likelihood ratio

        Args:
            s (float | np.ndarray): Statistic value

        Returns:
            float | np.ndarray: ξ(s)
        """

        if self.procedure == Procedure.CUSUM_V:
            return np.maximum(1.0, s)
        return 1.0 + np.asarray(s, dtype=float)

    def kernel(self, s: np.ndarray, x: np.ndarray) -> np.ndarray:
        """Kernel density k(s, x) = d/dx F(x/ξ(s)) = φ((ln(x/ξ(s)) − m)/A)/(A·x)

        Args:
            s (np.ndarray): Statistic values, one per row
            x (np.ndarray): Positive integration nodes, one per column

        Returns:
            np.ndarray: Kernel matrix
        """

        s = np.atleast_1d(np.asarray(s, dtype=float))
        x = np.atleast_1d(np.asarray(x, dtype=float))
        z = (np.log(x[None, :] / self.xi(s)[:, None]) - self.log_mean) / self.amplitude
        return norm_pdf(z) / (self.amplitude * x[None, :])


class ArlSolution(ChangewatchType):
    """Nyström solution of the run-length integral equation

    Attributes:
        problem (FredholmProblem): Solved problem
        grid (np.ndarray): Quadrature nodes in (0, H)
        weights (np.ndarray): Quadrature weights
        phi_values (np.ndarray): φ at the nodes
        phi_at_start (float): φ(1) for CUSUM, φ(0) for SR
        residual (float): Max-norm residual of the linear system
        grid_size (int): Number of nodes
    """

    problem: FredholmProblem
    grid: np.ndarray
    weights: np.ndarray
    phi_values: np.ndarray
    phi_at_start: float
    residual: float
    grid_size: int

    model_config = ConfigDict(arbitrary_types_allowed=True)

    def at(self, s: float | np.ndarray) -> float | np.ndarray:
        """Nyström interpolation φ(s) = 1 + Σ_j w_j k(s, x_j) φ_j

        Args:
            s (float | np.ndarray): Start values in [0, H]

        Returns:
            float | np.ndarray: φ(s)
        """

        values = 1.0 + self.problem.kernel(s, self.grid) @ (self.weights * self.phi_values)
        return float(values[0]) if np.ndim(s) == 0 else values


def kernel_cdf(x: float, amplitude: float, regime: Regime = Regime.NULL_ARL) -> float:
    """Distribution function of the one-observation likelihood ratio

    Args:
        x (float): Argument x >= 0
        amplitude (float): Shift A > 0, in noise units
        regime (Regime, optional): Observation regime. Defaults to Regime.NULL_ARL.

    Returns:
        float: Φ((ln x ± A²/2)/A), + under NULL_ARL
    """

    if x < 0:
        raise ValueError(f"Likelihood ratio is nonnegative, got x={x}")
    if x == 0:
        return 0.0
    if np.isinf(x):
        return 1.0
    log_mean = -(amplitude**2) / 2.0 if regime == Regime.NULL_ARL else amplitude**2 / 2.0
    return float(norm_cdf((np.log(x) - log_mean) / amplitude))


def _panel_edges(problem: FredholmProblem, panels: int) -> np.ndarray:
    threshold = problem.threshold
    scale = min(CLUSTER_SCALE, threshold / 4.0)
    stretch = np.log1p(threshold / scale)
    edges = scale * np.expm1(stretch * np.linspace(0.0, 1.0, panels + 1))
    edges[-1] = threshold

    # φ has a kink where ξ(s) = max(1, s) switches branch
    if problem.procedure == Procedure.CUSUM_V and 0.0 < 1.0 < threshold:
        edges = np.union1d(edges, [1.0])
    return edges


def quadrature_nodes(problem: FredholmProblem, grid_size: int) -> tuple[np.ndarray, np.ndarray]:
    """Composite Gauss-Legendre nodes on [0, H], clustered near 0

    Args:
        problem (FredholmProblem): Problem
        grid_size (int): Target node count

    Returns:
        tuple[np.ndarray, np.ndarray]: Nodes and weights
    """

    base_nodes, base_weights = leggauss(PANEL_ORDER)
    edges = _panel_edges(problem, max(1, grid_size // PANEL_ORDER))
    lefts, rights = edges[:-1], edges[1:]
    half = (rights - lefts)[:, None] / 2.0
    mid = (rights + lefts)[:, None] / 2.0

    nodes = (mid + half * base_nodes[None, :]).ravel()
    weights = (half * base_weights[None, :]).ravel()
    return nodes, weights


def _solve_on_grid(problem: FredholmProblem, grid_size: int) -> ArlSolution:
    nodes, weights = quadrature_nodes(problem, grid_size)
    system = np.eye(nodes.size) - problem.kernel(nodes, nodes) * weights[None, :]

    try:
        phi = linear_solve(system, np.ones(nodes.size), check_finite=True)
    except (LinAlgError, ValueError) as e:
        raise NumericalError(
            f"Singular run-length system for H={problem.threshold}, A={problem.amplitude}, "
            f"{nodes.size} nodes"
        ) from e

    residual = float(np.max(np.abs(system @ phi - 1.0)))
    if not np.all(np.isfinite(phi)) or phi.min() < 1.0 - 1e-6:
        raise NumericalError(
            f"Run-length solution below 1 (min {phi.min():.4g}) for H={problem.threshold}, "
            f"A={problem.amplitude}: grid too coarse or threshold pathological"
        )

    phi_at_start = 1.0 + problem.kernel(problem.start, nodes)[0] @ (weights * phi)
    return ArlSolution(
        problem=problem,
        grid=nodes,
        weights=weights,
        phi_values=phi,
        phi_at_start=float(phi_at_start),
        residual=residual,
        grid_size=nodes.size,
    )


def solve(problem: FredholmProblem, refine: bool = True) -> ArlSolution:
    """Solve the run-length equation, doubling the grid until φ at the start value settles

    Args:
        problem (FredholmProblem): Problem
        refine (bool, optional): Refine the grid until convergence. Defaults to True.

    Returns:
        ArlSolution: Solution on the finest grid used
    """

    settings = get_settings()
    grid_size = problem.grid_size
    solution = _solve_on_grid(problem, grid_size)
    if not refine:
        return solution

    while True:
        if 2 * grid_size > settings.grid_cap:
            raise NumericalError(
                f"Run-length solution did not settle within {settings.grid_cap} nodes "
                f"for H={problem.threshold}, A={problem.amplitude}"
            )
        grid_size *= 2
        finer = _solve_on_grid(problem, grid_size)
        change = abs(finer.phi_at_start - solution.phi_at_start) / finer.phi_at_start
        _log.debug(
            "%s H=%g: %d nodes phi=%.6g (relative change %.2e)",
            problem.procedure.value,
            problem.threshold,
            finer.grid_size,
            finer.phi_at_start,
            change,
        )
        solution = finer
        if change < settings.grid_tol:
            return solution


def detection_delay(problem: FredholmProblem) -> float:
    """Zero-delay detection delay E₀τ of CUSUM or SR

    For these procedures E₀τ is both the worst-case delay over change points
    and the worst-case delay over pre-change histories.

    Args:
        problem (FredholmProblem): Problem with regime ZERO_DELAY

    Returns:
        float: E₀τ
    """

    if problem.regime != Regime.ZERO_DELAY:
        raise ValueError("Detection delay requires the ZERO_DELAY regime")
    return solve(problem).phi_at_start


def _invert(
    procedure: Procedure,
    target_arl: float,
    amplitude: float,
    seed_threshold: float,
    grid_size: Optional[int],
) -> float:
    grid_size = grid_size if grid_size is not None else get_settings().grid_size

    def gap(log_threshold: float) -> float:
        problem = FredholmProblem(
            procedure=procedure,
            threshold=float(np.exp(log_threshold)),
            amplitude=amplitude,
            grid_size=grid_size,
        )
        return np.log(solve(problem).phi_at_start) - np.log(target_arl)

    lower = upper = np.log(seed_threshold)
    gap_lower = gap_upper = gap(lower)
    for _ in range(20):
        if gap_lower < 0.0 < gap_upper:
            break
        if gap_lower >= 0.0:
            lower -= np.log(2.0)
            gap_lower = gap(lower)
        if gap_upper <= 0.0:
            upper += np.log(2.0)
            gap_upper = gap(upper)
    else:
        raise CalibrationError(
            f"Target ARL {target_arl} not bracketed for {procedure.value} with A={amplitude}"
        )

    log_threshold = brentq(gap, lower, upper, xtol=1e-6)
    _log.debug(
        "%s A=%g target %.1f -> H=%.6g",
        procedure.value,
        amplitude,
        target_arl,
        np.exp(log_threshold),
    )
    return float(np.exp(log_threshold))


def invert_cusum_arl(
    target_arl: float, amplitude: float, grid_size: Optional[int] = None
) -> float:
    """V-scale CUSUM threshold whose integral-equation ARL equals the target

    Args:
        target_arl (float): Target E∞τ
        amplitude (float): Shift A > 0, in noise units
        grid_size (int, optional): Initial node count. Defaults to settings.

    Returns:
        float: Threshold H
    """

    seed = cusum_threshold_fast(target_arl, amplitude)
    return _invert(Procedure.CUSUM_V, target_arl, amplitude, seed, grid_size)


def invert_sr_arl(
    target_arl: float, amplitude: float, grid_size: Optional[int] = None
) -> float:
    """R-scale SR threshold whose integral-equation ARL equals the target

    Args:
        target_arl (float): Target E∞τ
        amplitude (float): Shift A > 0, in noise units
        grid_size (int, optional): Initial node count. Defaults to settings.

    Returns:
        float: Threshold H
    """

    seed = sr_threshold_fast(target_arl, amplitude)
    return _invert(Procedure.SR, target_arl, amplitude, seed, grid_size)
