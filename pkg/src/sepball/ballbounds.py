"""Radius formulas for the multipartite separable ball around the identity.

Everything here is closed-form arithmetic: the party-by-party recursion, its
exact solution for equal local dimensions, the weaker corollary bounds, the
baseline from earlier work, and normalized-ball conversions.  Large party
counts are handled in the log domain.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .matcore import check_dims


def recursion_radius(dims: Sequence[int]) -> float:
    """Separable-ball radius (Frobenius, unnormalized) via the recursion.

    The base case is a bipartite ball of radius one; each further party of
    dimension ``d_n`` multiplies the radius by
    ``sqrt(d_n / (2 (1 - a^2/prod) (d_n - 1) + 1))``.
    Parties are folded in left to right, exactly in the order given.
    """
    dims = check_dims(dims)
    if len(dims) < 2:
        raise ValueError("the recursion needs at least 2 parties")
    a = 1.0
    prod = float(dims[0]) * float(dims[1])
    for dn in dims[2:]:
        a *= math.sqrt(dn / (2.0 * (1.0 - a * a / prod) * (dn - 1) + 1.0))
        prod *= dn
    return a


def closed_form_radius(d0: int, m: int) -> float:
    """Exact solution of the recursion for m parties of equal dimension d0:

    ``r_m = sqrt(d0^m / ((2 d0 - 1)^(m-2) (d0^2 - 1) + 1))``.
    """
    if d0 < 2 or m < 2:
        raise ValueError("need d0 >= 2 and m >= 2")
    return math.exp(log_closed_form_radius(d0, m))


def log_closed_form_radius(d0: int, m: int) -> float:
    """Natural log of ``closed_form_radius``; safe for very large m."""
    if d0 < 2 or m < 2:
        raise ValueError("need d0 >= 2 and m >= 2")
    # log denominator: (2 d0 - 1)^(m-2) (d0^2 - 1) + 1
    log_main = (m - 2) * math.log(2 * d0 - 1) + math.log(d0 * d0 - 1)
    log_den = log_main + math.log1p(math.exp(-log_main))
    return 0.5 * (m * math.log(d0) - log_den)


def qubit_asymptotic_exponent() -> float:
    """The qubit radius decays like 2^(-gamma m) with gamma = (ln3/ln2 - 1)/2."""
    return 0.5 * (math.log(3) / math.log(2) - 1.0)


def weak_radius(d0: int, m: int) -> float:
    """The weaker corollary bound ``(d0 / (2 d0 - 1))^(m/2 - 1)``."""
    if d0 < 2 or m < 2:
        raise ValueError("need d0 >= 2 and m >= 2")
    return (d0 / (2.0 * d0 - 1.0)) ** (m / 2.0 - 1.0)


def gb03_baseline(m: int) -> float:
    """Prior-work comparison baseline ``(1/2)^(m/2 - 1)``."""
    if m < 2:
        raise ValueError("need m >= 2")
    return 0.5 ** (m / 2.0 - 1.0)


def log_gb03_baseline(m: int) -> float:
    if m < 2:
        raise ValueError("need m >= 2")
    return (m / 2.0 - 1.0) * math.log(0.5)


def normalized_radius(a: float, d: int) -> float:
    """Convert an unnormalized radius to the normalized-state ball radius:

    ``a / sqrt(d (d - a^2))`` (the exact form, not the loosened ``a/d``).
    """
    if not 0 < a:
        raise ValueError("radius must be positive")
    if a * a >= d:
        raise ValueError(f"a^2 = {a * a} >= d = {d}: degenerate denominator")
    return a / math.sqrt(d * (d - a * a))


def log_normalized_radius(log_a: float, log_d: float) -> float:
    """Log-domain ``normalized_radius``: log a and log d in, log radius out."""
    # log(d - a^2) = log d + log1p(-a^2/d); a^2/d via exp of logs.
    ratio = math.exp(2.0 * log_a - log_d)
    if ratio >= 1.0:
        raise ValueError("a^2 >= d: degenerate denominator")
    return log_a - 0.5 * (2.0 * log_d + math.log1p(-ratio))


def qubit_normalized_radius(m: int) -> float:
    """Normalized m-qubit ball radius ``sqrt(3^(m+1)/(3^m + 3)) * 6^(-m/2)``.

    Algebraically equal to ``closed_form_radius(2, m) / 2^m`` for m >= 2.
    """
    if m < 1:
        raise ValueError("need m >= 1")
    return math.exp(log_qubit_normalized_radius(m))


def log_qubit_normalized_radius(m: int) -> float:
    if m < 1:
        raise ValueError("need m >= 1")
    log3 = math.log(3.0)
    # log(3^m + 3) = m log 3 + log1p(3^(1-m))
    log_den = m * log3 + math.log1p(3.0 ** (1 - m))
    log_prefactor = 0.5 * ((m + 1) * log3 - log_den)
    return log_prefactor - (m / 2.0) * math.log(6.0)


def gamma_bound(d1: int, d2: int, a: float) -> float:
    """Bound on the blockwise 2-to-inf norm over ball-positive stochastic maps:

    ``(1/a) sqrt((2 (1 - a^2/d2) (d1 - 1) + 1) / d1)``, valid for a > 1/d2.
    """
    if not 0 < a <= 1:
        raise ValueError("need 0 < a <= 1")
    if a <= 1.0 / d2:
        raise ValueError(f"premise violated: need a > 1/d2 = {1.0 / d2}")
    return math.sqrt((2.0 * (1.0 - a * a / d2) * (d1 - 1) + 1.0) / d1) / a


def lambda_bound(a: float, d2: int) -> float:
    """2-to-inf norm bound on traceless inputs: ``(1/a) sqrt(2 (1 - a^2/d2))``."""
    if not 0 < a <= math.sqrt(d2):
        raise ValueError("need 0 < a <= sqrt(d2)")
    return math.sqrt(2.0 * (1.0 - a * a / d2)) / a


def lambdaprime_bound(a: float, d2: int) -> float:
    """2-to-inf norm bound on all inputs: ``sqrt(2/a^2 - 1/d2)``."""
    if a <= 0:
        raise ValueError("need a > 0")
    return math.sqrt(2.0 / (a * a) - 1.0 / d2)


@dataclass(frozen=True)
class RadiusReport:
    """Unnormalized and normalized radii for one dims profile and method."""

    dims: tuple[int, ...]
    unnormalized_radius: float
    normalized_radius: float
    method: str


def radius_report(dims: Sequence[int], method: str = "recursion") -> RadiusReport:
    """Compute a radius by the chosen method and its normalized conversion."""
    dims = check_dims(dims)
    d = math.prod(dims)
    homogeneous = len(set(dims)) == 1
    m = len(dims)
    if method == "recursion":
        a = recursion_radius(dims)
    elif method == "closed_form":
        if not homogeneous:
            raise ValueError("closed form needs equal local dimensions")
        a = closed_form_radius(dims[0], m)
    elif method == "weak_corollary":
        if not homogeneous:
            raise ValueError("the weak corollary needs equal local dimensions")
        a = weak_radius(dims[0], m)
    elif method == "gb03_baseline":
        a = gb03_baseline(m)
    else:
        raise ValueError(f"unknown method {method!r}")
    return RadiusReport(dims, a, normalized_radius(a, d), method)
