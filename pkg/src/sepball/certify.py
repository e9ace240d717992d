"""Separability certificates for concrete density matrices.

A certificate is sufficient-only: ``separable`` is a guarantee, while
``inconclusive`` just means the ball test did not apply.  PPT is provided
as an independent necessary-condition cross-check.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

import numpy as np

from . import ballbounds
from .matcore import (
    PSD_TOL,
    check_dims,
    frobenius_norm,
    hermitian,
    is_psd,
    partial_transpose,
)

#: Relative width of the band around the bound inside which a verdict is
#: still reported separable, with a "boundary" annotation.
BOUNDARY_BAND = 1e-9

TRACE_TOL = 1e-10

SEPARABLE = "separable"
INCONCLUSIVE = "inconclusive"
NOT_PSD = "not_psd"
NOT_NORMALIZED = "not_normalized"


@dataclass(frozen=True)
class Certificate:
    verdict: str
    bound_used: float
    measured: float
    margin: float
    dims: tuple[int, ...]
    boundary: bool = field(default=False)

    def to_json(self) -> str:
        return json.dumps(
            {
                "verdict": self.verdict,
                "bound": self.bound_used,
                "measured": self.measured,
                "margin": self.margin,
                "dims": list(self.dims),
                "boundary": self.boundary,
            }
        )

    @staticmethod
    def from_json(text: str) -> "Certificate":
        obj = json.loads(text)
        return Certificate(
            verdict=obj["verdict"],
            bound_used=obj["bound"],
            measured=obj["measured"],
            margin=obj["margin"],
            dims=tuple(obj["dims"]),
            boundary=obj.get("boundary", False),
        )


def _ball_verdict(measured: float, bound: float, dims) -> Certificate:
    band = BOUNDARY_BAND * bound
    if measured <= bound + band:
        return Certificate(
            SEPARABLE, bound, measured, bound - measured, tuple(dims),
            boundary=measured > bound - band,
        )
    return Certificate(INCONCLUSIVE, bound, measured, bound - measured, tuple(dims))


def mu(rho) -> float:
    """Optimal perturbation size over scalings rho = alpha (I + Delta).

    Returns ``sqrt(d - 1/tr(rho^2))``, the smallest achievable ||Delta||_2
    (attained at alpha = tr rho^2).
    """
    rho = hermitian(rho)
    d = rho.shape[0]
    tr = float(np.trace(rho).real)
    if abs(tr - 1.0) > TRACE_TOL:
        raise ValueError(f"state is not normalized: tr = {tr}")
    if not is_psd(rho):
        raise ValueError("state is not positive semidefinite")
    purity = float(np.trace(rho @ rho).real)
    return math.sqrt(max(d - 1.0 / purity, 0.0))


def certify_unnormalized(x, dims: Sequence[int]) -> Certificate:
    """Ball test for an unnormalized density matrix: ||X - I||_2 vs the radius."""
    x = hermitian(x)
    dims = check_dims(dims)
    d = math.prod(dims)
    if x.shape[0] != d:
        raise ValueError(f"matrix dimension {x.shape[0]} != product of dims {d}")
    bound = ballbounds.recursion_radius(dims)
    measured = frobenius_norm(x - np.eye(d))
    return _ball_verdict(measured, bound, dims)


def certify_normalized(rho, dims: Sequence[int]) -> Certificate:
    """Ball test for a normalized state: ||rho - I/d||_2 vs a/sqrt(d(d-a^2))."""
    rho = hermitian(rho)
    dims = check_dims(dims)
    d = math.prod(dims)
    if rho.shape[0] != d:
        raise ValueError(f"matrix dimension {rho.shape[0]} != product of dims {d}")
    a = ballbounds.recursion_radius(dims)
    bound = ballbounds.normalized_radius(a, d)
    measured = frobenius_norm(rho - np.eye(d) / d)
    tr = float(np.trace(rho).real)
    if abs(tr - 1.0) > TRACE_TOL:
        return Certificate(NOT_NORMALIZED, bound, measured, bound - measured, dims)
    if not is_psd(rho):
        return Certificate(NOT_PSD, bound, measured, bound - measured, dims)
    return _ball_verdict(measured, bound, dims)


def pseudopure_bound(dims: Sequence[int], *, baseline: str = "recursion") -> float:
    """Largest epsilon certified separable for a pseudopure state on ``dims``.

    The pseudopure state ``eps * pi + (1 - eps) I/d`` sits at distance
    ``eps sqrt((d-1)/d)`` from I/d, so the exact ball condition reads
    ``eps <= b / sqrt((d-1)(d-b^2))`` with b the unnormalized radius.
    Evaluated in the log domain so arbitrarily many qubits are fine.
    """
    dims = check_dims(dims)
    m = len(dims)
    log_d = math.fsum(math.log(di) for di in dims)
    if baseline == "recursion":
        b = ballbounds.recursion_radius(dims)
    elif baseline == "gb03":
        b = ballbounds.gb03_baseline(m)
    else:
        raise ValueError(f"unknown baseline {baseline!r}")
    log_b = math.log(b)
    # log(d-1) and log(d-b^2) via log1p of tiny ratios.
    log_dm1 = log_d + math.log1p(-math.exp(-log_d))
    log_dmb2 = log_d + math.log1p(-math.exp(2.0 * log_b - log_d))
    return math.exp(log_b - 0.5 * (log_dm1 + log_dmb2))


def certify_pseudopure(eps: float, dims: Sequence[int], *, baseline: str = "recursion") -> Certificate:
    """Ball test for a pseudopure state, without materializing it."""
    if not 0 <= eps <= 1:
        raise ValueError("epsilon must lie in [0, 1]")
    dims = check_dims(dims)
    bound = pseudopure_bound(dims, baseline=baseline)
    return _ball_verdict(eps, bound, dims)


def ppt_all_cuts(rho, dims: Sequence[int], tol: float = PSD_TOL) -> bool:
    """True iff the partial transpose across every bipartition is PSD.

    A necessary condition for separability; used to falsify-test the ball
    certificates (every certified state must pass).
    """
    rho = hermitian(rho)
    dims = check_dims(dims)
    if not is_psd(rho, tol):
        raise ValueError("input is not PSD")
    m = len(dims)
    parties = range(m)
    # Transposing a subset S is equivalent to transposing its complement
    # (up to global transpose, which preserves the spectrum): half suffices.
    for size in range(1, m // 2 + 1):
        for subset in combinations(parties, size):
            if size == m - size and 0 not in subset:
                continue
            pt = rho
            for p in subset:
                pt = partial_transpose(pt, dims, p)
            if not is_psd(pt, tol):
                return False
    return True
