"""Exact q-series arithmetic for level-p Hauptmoduln and their congruences.

The package computes q-expansions of the genus-zero Hauptmoduln
(eta(pz)/eta(z))^(24/(p-1)) for p in {2, 3, 5, 7, 13}, applies the U_p
operator, decomposes the results into integer polynomials in the Hauptmodul,
and verifies the p-adic valuation patterns those polynomials satisfy.  All
arithmetic is exact over the integers.
"""

from .digits import (
    GAMMA_PRIMES,
    DigitProfile,
    DigitResidueCounts,
    c_m,
    digit_profile,
    digit_residue_counts,
    f_iter,
    gamma,
    lehner_bound,
    p_adic_valuation,
)
from .eta import SUPPORTED_PRIMES, HauptmodulSpec, phi_series, psi_series, tau
from .hecke import u_p, u_p_iter
from .phipoly import (
    DEFAULT_CACHE,
    PhiPoly,
    PhiPowerCache,
    PSetSpec,
    decompose,
    delta_p,
    evaluate,
    in_P,
    in_R,
    p_contains,
    phi_precision_budget,
    val_profile,
)
from .series import QSeries, euler_factor
from .verify import (
    ClaimId,
    Failure,
    VerificationReport,
    compare_lehner,
    explore_p13,
    explore_p13_residue,
    explore_p13_tau,
    newton_power_sums,
    recover_b,
    symmetric_g_polys,
    verify_alpha1,
    verify_binarygamma,
    verify_lemma_poly,
    verify_newton,
    verify_theorem1,
    verify_theorem2,
)

__version__ = "0.1.0"

__all__ = [
    "GAMMA_PRIMES",
    "SUPPORTED_PRIMES",
    "QSeries",
    "euler_factor",
    "HauptmodulSpec",
    "phi_series",
    "psi_series",
    "tau",
    "u_p",
    "u_p_iter",
    "PhiPoly",
    "PSetSpec",
    "PhiPowerCache",
    "DEFAULT_CACHE",
    "decompose",
    "evaluate",
    "val_profile",
    "in_R",
    "in_P",
    "p_contains",
    "delta_p",
    "phi_precision_budget",
    "DigitProfile",
    "DigitResidueCounts",
    "digit_profile",
    "digit_residue_counts",
    "gamma",
    "f_iter",
    "c_m",
    "lehner_bound",
    "p_adic_valuation",
    "ClaimId",
    "Failure",
    "VerificationReport",
    "verify_theorem1",
    "verify_theorem2",
    "verify_alpha1",
    "verify_newton",
    "verify_lemma_poly",
    "verify_binarygamma",
    "compare_lehner",
    "explore_p13",
    "explore_p13_tau",
    "explore_p13_residue",
    "recover_b",
    "symmetric_g_polys",
    "newton_power_sums",
    "__version__",
]
