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

from changewatch.analytics.approximation import Approximation
from changewatch.analytics.boundary import (
    BoundaryCrossingQuery,
    corrected_F_2L,
    corrected_F_L,
    geometric_F,
    invert_mosum_arl,
    mosum_arl,
    mosum_arl_standardized,
    mosum_bcp,
    shepp_F2,
    slepian_F1,
)
from changewatch.analytics.constants import (
    RHO,
    RHO_ROUNDED,
    SpecialConstants,
    kappa,
    kappa_proxy,
    omega,
    rho,
    special_constants,
    zeta_gaussian,
)
from changewatch.analytics.cusum_arl import (
    cusum_arl_fast,
    cusum_arl_general,
    cusum_threshold_fast,
    sr_arl_fast,
    sr_threshold_fast,
)
from changewatch.analytics.fredholm import (
    ArlSolution,
    FredholmProblem,
    Regime,
    detection_delay,
    invert_cusum_arl,
    invert_sr_arl,
    kernel_cdf,
    solve,
)
from changewatch.analytics.genmosum_arl import (
    approx1_base_probabilities,
    approx1_bcp,
    approx2_arl,
    genmosum_arl,
    genmosum_bcp,
    hogan_tail,
)
from changewatch.analytics.power import (
    BarrierProfile,
    F_h0_1,
    F_h0_neg_gamma,
    PowerQuery,
    diffusion_power,
    discrete_power,
    empirical_power_mosum,
    mean_profile_discrete,
    simulate_slepian_bcp,
)

__all__ = [
    "Approximation",
    "ArlSolution",
    "BarrierProfile",
    "BoundaryCrossingQuery",
    "F_h0_1",
    "F_h0_neg_gamma",
    "FredholmProblem",
    "PowerQuery",
    "RHO",
    "RHO_ROUNDED",
    "Regime",
    "SpecialConstants",
    "approx1_base_probabilities",
    "approx1_bcp",
    "approx2_arl",
    "corrected_F_2L",
    "corrected_F_L",
    "cusum_arl_fast",
    "cusum_arl_general",
    "cusum_threshold_fast",
    "detection_delay",
    "diffusion_power",
    "discrete_power",
    "empirical_power_mosum",
    "genmosum_arl",
    "genmosum_bcp",
    "geometric_F",
    "hogan_tail",
    "invert_cusum_arl",
    "invert_mosum_arl",
    "invert_sr_arl",
    "kappa",
    "kappa_proxy",
    "kernel_cdf",
    "mean_profile_discrete",
    "mosum_arl",
    "mosum_arl_standardized",
    "mosum_bcp",
    "omega",
    "rho",
    "shepp_F2",
    "simulate_slepian_bcp",
    "slepian_F1",
    "solve",
    "special_constants",
    "sr_arl_fast",
    "sr_threshold_fast",
    "zeta_gaussian",
]
