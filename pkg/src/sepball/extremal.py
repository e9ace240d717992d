"""The extremal stochastic ball-positive map and its tightness harnesses.

The map ``tau`` sends I to I, two specific unit-Frobenius Hermitian patterns
(a diagonal one and an off-diagonal one) to scaled Pauli patterns, and kills
the rest of matrix space.  With the critical scale
``mu = (1/a) sqrt(1 - a^2/d2)`` it is exactly positive on the radius-a ball
cone, and on a designed input it attains the all-matrices norm bound
``sqrt(2/a^2 - 1/d2)``.
"""

from __future__ import annotations

import math

import numpy as np

from . import ballbounds
from .matcore import (
    MapOnMatrices,
    apply_map,
    as_matrix,
    block_norm_matrix,
    frobenius_norm,
    hermitian,
    is_psd,
    operator_norm,
    tilde_apply,
    tracelessify_offdiag,
)
from .sampling import rng_from_seed


def critical_mu(a: float, d2: int) -> float:
    """Largest scale keeping tau positive on the radius-a ball cone."""
    if not 0 < a <= 1:
        raise ValueError("need 0 < a <= 1")
    return math.sqrt(1.0 - a * a / d2) / a


def z_pattern(d2: int) -> np.ndarray:
    """Unit-Frobenius diagonal input pattern: diag(1/sqrt2, -1/sqrt2, 0, ...)."""
    z = np.zeros((d2, d2), dtype=complex)
    z[0, 0] = 1.0 / math.sqrt(2.0)
    z[1, 1] = -1.0 / math.sqrt(2.0)
    return z


def x_pattern(d2: int) -> np.ndarray:
    """Unit-Frobenius diagonal input pattern on slots 3 and 4."""
    if d2 < 4:
        raise ValueError("the input pattern needs d2 >= 4")
    x = np.zeros((d2, d2), dtype=complex)
    x[2, 2] = -1.0 / math.sqrt(2.0)
    x[3, 3] = 1.0 / math.sqrt(2.0)
    return x


def padded_sigma_z(d1: int) -> np.ndarray:
    s = np.zeros((d1, d1), dtype=complex)
    s[0, 0] = 1.0
    s[1, 1] = -1.0
    return s


def padded_sigma_x(d1: int) -> np.ndarray:
    s = np.zeros((d1, d1), dtype=complex)
    s[0, 1] = 1.0
    s[1, 0] = 1.0
    return s


def build_tau(a: float, d2: int, d1: int = 2, mu_scale: float = 1.0) -> MapOnMatrices:
    """Construct the extremal map for ball radius ``a`` on M(d2) -> M(d1).

    Defined by tau(I) = I, tau(Z) = mu sigma_z, tau(X) = mu sigma_x with the
    critical mu, zero on the orthocomplement of span{I, Z, X}, extended
    complex-linearly (hence Hermiticity-preserving) to all of M(d2).

    ``mu_scale`` rescales mu away from the critical value; any value above 1
    breaks ball positivity (the critical mu is extremal).
    """
    if d2 < 4:
        raise ValueError("the construction needs d2 >= 4")
    if d1 < 2:
        raise ValueError("need d1 >= 2")
    mu = mu_scale * critical_mu(a, d2)
    # Orthonormal (trace inner product) Hermitian triple spanning the support.
    basis_in = [
        np.eye(d2, dtype=complex) / math.sqrt(d2),
        z_pattern(d2),
        x_pattern(d2),
    ]
    basis_out = [
        np.eye(d1, dtype=complex) / math.sqrt(d2),
        mu * padded_sigma_z(d1),
        mu * padded_sigma_x(d1),
    ]
    images = np.zeros((d2, d2, d1, d1), dtype=complex)
    for u, img in zip(basis_in, basis_out):
        # <u, E_ij> = tr(u† E_ij) = u_ji (u Hermitian)
        images += u.T[:, :, None, None] * img[None, None, :, :]
    return MapOnMatrices(d2, d1, images)


def worst_case_input(a: float, d2: int) -> np.ndarray:
    """Unit-Frobenius input on which tau attains the all-matrices bound.

    ``Y = (alpha/sqrt(d2)) I + (beta/sqrt2)(X + iZ)`` with the weights set by
    ``gamma' = (1/a) sqrt(2 (1 - a^2/d2))``.
    """
    if not 0 < a <= 1:
        raise ValueError("need 0 < a <= 1")
    gp = math.sqrt(2.0 * (1.0 - a * a / d2)) / a
    alpha = math.sqrt(1.0 / (1.0 + gp * gp * d2))
    beta = math.sqrt(gp * gp * d2 / (1.0 + gp * gp * d2))
    return (
        alpha / math.sqrt(d2) * np.eye(d2, dtype=complex)
        + beta / math.sqrt(2.0) * (x_pattern(d2) + 1j * z_pattern(d2))
    )


def achieved_ratio(phi: MapOnMatrices, y) -> float:
    """||phi(Y)||_inf / ||Y||_2."""
    y = as_matrix(y, square=True)
    norm_in = frobenius_norm(y)
    if norm_in == 0:
        raise ValueError("zero input")
    return operator_norm(apply_map(phi, y)) / norm_in


def _directed_probes(a: float, d2: int, steps: int = 201) -> list[np.ndarray]:
    """Deterministic boundary probes of the radius-a Hermitian sphere.

    Mixes a trace component into the binding traceless directions; the
    worst case for the critical map lies on this family.
    """
    directions = [z_pattern(d2)]
    if d2 >= 4:
        directions.append(x_pattern(d2))
        directions.append((directions[0] + directions[1]) / math.sqrt(2.0))
    eye = np.eye(d2, dtype=complex)
    probes = []
    for zhat in directions:
        for c in np.linspace(-a, a, steps):
            t = math.sqrt(max(a * a - c * c, 0.0))
            probes.append(c / math.sqrt(d2) * eye + t * zhat)
            probes.append(c / math.sqrt(d2) * eye - t * zhat)
    return probes


def ball_positivity_check(
    phi: MapOnMatrices,
    a: float,
    samples: int = 1000,
    seed: int | None = None,
    psd_tol: float = 1e-9,
) -> bool:
    """Probabilistic ball-positivity test: phi(I + Delta) PSD on the sphere.

    Draws ``samples`` seeded Hermitian Delta uniformly on the radius-a
    Frobenius sphere (the worst case is on the boundary by homogeneity) and
    adds a deterministic grid of directed probes along the binding
    directions.  A sound falsifier, probabilistic verifier.
    """
    if not phi.is_stochastic():
        raise ValueError("phi must be stochastic")
    d2 = phi.in_dim
    eye = np.eye(d2)
    rng = rng_from_seed(seed)
    deltas = _directed_probes(a, d2)
    for _ in range(samples):
        h = rng.standard_normal((d2, d2)) + 1j * rng.standard_normal((d2, d2))
        h = (h + h.conj().T) / 2
        deltas.append(a * h / np.linalg.norm(h))
    for delta in deltas:
        if not is_psd(apply_map(phi, eye + delta), psd_tol):
            return False
    return True


def block_chain_check(phi: MapOnMatrices, a_mat, a: float, tol: float = 1e-9) -> bool:
    """Verify the blockwise norm-inequality chain on one Hermitian input.

    After making off-diagonal blocks traceless, checks
    ``||tilde_phi(A)||_inf <= ||Phi_inf||_inf <= ||M||_inf`` where
    ``Phi_inf`` collects per-block output operator norms and ``M`` has
    ``(1/a) ||A_ii||_2`` on the diagonal and ``lambda ||A_ij||_2`` off it.
    """
    d2 = phi.in_dim
    a_mat = hermitian(a_mat)
    if a_mat.shape[0] % d2 != 0:
        raise ValueError("input dimension must be a multiple of the map's in_dim")
    d1 = a_mat.shape[0] // d2
    x, _ = tracelessify_offdiag(a_mat, d1, d2)

    link1 = operator_norm(tilde_apply(phi, x, d1))

    phi_inf = np.empty((d1, d1))
    bl = x.reshape(d1, d2, d1, d2).transpose(0, 2, 1, 3)
    for i in range(d1):
        for j in range(d1):
            phi_inf[i, j] = operator_norm(apply_map(phi, bl[i, j]))
    link2 = operator_norm(phi_inf)

    lam = ballbounds.lambda_bound(a, d2)
    two_norms = block_norm_matrix(x, d1, d2, "two")
    bound_mat = lam * two_norms
    np.fill_diagonal(bound_mat, np.diag(two_norms) / a)
    link3 = operator_norm(bound_mat)

    return link1 <= link2 + tol and link2 <= link3 + tol
