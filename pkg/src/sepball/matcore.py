"""Dense complex/Hermitian matrix algebra underlying the whole package.

Matrices are plain ``numpy.ndarray`` values with ``complex128`` entries.
Functions here enforce the contracts (finiteness, Hermiticity, dimension
caps) that the higher-level modules rely on.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

import numpy as np

#: Largest total dimension for which matrices may be materialized (12 qubits).
MATERIALIZATION_CAP = 4096

#: Default relative PSD tolerance, scaled by max(1, operator norm).
PSD_TOL = 1e-10

#: Reject nominally-Hermitian input when the anti-Hermitian part is this
#: large relative to the matrix itself.
HERMITICITY_REJECT_TOL = 1e-8


class MaterializationError(ValueError):
    """Raised when an operation would materialize a matrix above the cap."""


def as_matrix(a, *, square: bool = False) -> np.ndarray:
    """Validate and convert input to a finite complex 2-D array."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got ndim={m.ndim}")
    if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
        raise ValueError("matrix has non-finite entries")
    if square and m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    return m


def hermitian(a, *, reject_tol: float = HERMITICITY_REJECT_TOL) -> np.ndarray:
    """Symmetrize ``a`` to (A + A†)/2, rejecting grossly non-Hermitian input.

    The rejection threshold is relative: inputs with
    ``||A - A†||_2 > reject_tol * ||A||_2`` raise ``ValueError``.
    """
    m = as_matrix(a, square=True)
    anti = m - m.conj().T
    norm_m = frobenius_norm(m)
    if norm_m > 0 and frobenius_norm(anti) > reject_tol * norm_m:
        raise ValueError("input is not Hermitian within the rejection threshold")
    h = (m + m.conj().T) / 2
    return h


def check_dims(dims: Sequence[int]) -> tuple[int, ...]:
    """Validate a profile of local dimensions; every entry must be >= 2."""
    out = tuple(int(d) for d in dims)
    if not out:
        raise ValueError("empty dimension profile")
    if any(d < 2 for d in out):
        raise ValueError(f"all local dimensions must be >= 2, got {out}")
    return out


def total_dim(dims: Sequence[int]) -> int:
    """Product of local dimensions."""
    return math.prod(check_dims(dims))


def check_materializable(d: int) -> None:
    if d > MATERIALIZATION_CAP:
        raise MaterializationError(
            f"dimension {d} exceeds the materialization cap {MATERIALIZATION_CAP}; "
            "use the formula-level operations instead"
        )


# ---------------------------------------------------------------------------
# Norms and spectra
# ---------------------------------------------------------------------------

def frobenius_norm(m) -> float:
    """sqrt(sum |M_ij|^2) = sqrt(tr M†M)."""
    return float(np.linalg.norm(np.asarray(m, dtype=complex)))


def operator_norm(m) -> float:
    """Largest singular value."""
    m = as_matrix(m)
    return float(np.linalg.norm(m, 2))


def trace_norm(m) -> float:
    """Sum of singular values."""
    m = as_matrix(m)
    return float(np.linalg.svd(m, compute_uv=False).sum())


def eig_hermitian(h) -> np.ndarray:
    """Real eigenvalues of a Hermitian matrix, sorted decreasing.

    Raises ``numpy.linalg.LinAlgError`` on convergence failure (never
    silently returns garbage).
    """
    h = hermitian(h)
    w = np.linalg.eigvalsh(h)
    return w[::-1].copy()


def is_psd(h, tol: float = PSD_TOL) -> bool:
    """True iff lambda_min(H) >= -tol * max(1, ||H||_inf)."""
    if tol < 0:
        raise ValueError("tolerance must be nonnegative")
    w = eig_hermitian(h)
    scale = max(1.0, float(np.abs(w).max())) if w.size else 1.0
    return bool(w[-1] >= -tol * scale)


# ---------------------------------------------------------------------------
# Tensor structure
# ---------------------------------------------------------------------------

def kron(a, b) -> np.ndarray:
    """Kronecker product, refusing outputs above the materialization cap."""
    a = as_matrix(a)
    b = as_matrix(b)
    check_materializable(a.shape[0] * b.shape[0])
    check_materializable(a.shape[1] * b.shape[1])
    return np.kron(a, b)


def kron_all(mats: Sequence[np.ndarray]) -> np.ndarray:
    out = as_matrix(mats[0])
    for m in mats[1:]:
        out = kron(out, m)
    return out


def partial_transpose(h, dims: Sequence[int], subsystem: int) -> np.ndarray:
    """Transpose on one tensor factor.

    ``dims`` lists the local dimensions; ``subsystem`` is a 0-based index.
    The operation is an involution and preserves trace and Frobenius norm.
    """
    h = as_matrix(h, square=True)
    dims = check_dims(dims)
    d = math.prod(dims)
    if h.shape[0] != d:
        raise ValueError(f"matrix dimension {h.shape[0]} != product of dims {d}")
    if not 0 <= subsystem < len(dims):
        raise IndexError(f"subsystem index {subsystem} out of range for {dims}")
    m = len(dims)
    t = h.reshape(dims + dims)
    t = t.swapaxes(subsystem, m + subsystem)
    return t.reshape(d, d).copy()


def schur(a, b) -> np.ndarray:
    """Entrywise (Hadamard/Schur) product."""
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape != b.shape:
        raise ValueError(f"shape mismatch {a.shape} vs {b.shape}")
    return a * b


# ---------------------------------------------------------------------------
# Block decompositions
# ---------------------------------------------------------------------------

def blocks(x, d1: int, d2: int) -> np.ndarray:
    """View a (d1*d2) x (d1*d2) matrix as a d1 x d1 array of d2 x d2 blocks."""
    x = as_matrix(x, square=True)
    if x.shape[0] != d1 * d2:
        raise ValueError(f"matrix dimension {x.shape[0]} != d1*d2 = {d1 * d2}")
    return x.reshape(d1, d2, d1, d2).transpose(0, 2, 1, 3)


def block_norm_matrix(x, d1: int, d2: int, which: str = "two") -> np.ndarray:
    """Real d1 x d1 matrix of per-block norms.

    ``which="two"`` uses Frobenius norms (so the Frobenius norm of the
    result equals ||X||_2); ``which="inf"`` uses operator norms.
    """
    bl = blocks(x, d1, d2)
    if which == "two":
        return np.linalg.norm(bl, axis=(2, 3))
    if which == "inf":
        out = np.empty((d1, d1))
        for i in range(d1):
            for j in range(d1):
                out[i, j] = operator_norm(bl[i, j])
        return out
    raise ValueError(f"which must be 'two' or 'inf', got {which!r}")


def tracelessify_offdiag(x, d1: int, d2: int) -> tuple[np.ndarray, np.ndarray]:
    """Conjugate by a local unitary so every off-diagonal block is traceless.

    Returns ``((U ⊗ I) X (U ⊗ I)†, U)`` where U diagonalizes the d1 x d1
    matrix of block traces.  Eigenvalues of X are unchanged.
    """
    x = hermitian(x)
    bl = blocks(x, d1, d2)
    traces = np.trace(bl, axis1=2, axis2=3)
    _, v = np.linalg.eigh(hermitian(traces))
    u = v.conj().T
    big = np.kron(u, np.eye(d2))
    return big @ x @ big.conj().T, u


# ---------------------------------------------------------------------------
# Linear maps on matrices
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MapOnMatrices:
    """Linear map M(in_dim) -> M(out_dim), stored by images of matrix units.

    ``images[i, j]`` is the image of the matrix unit E_ij.
    """

    in_dim: int
    out_dim: int
    images: np.ndarray  # shape (in_dim, in_dim, out_dim, out_dim)

    def __post_init__(self):
        if self.images.shape != (self.in_dim, self.in_dim, self.out_dim, self.out_dim):
            raise ValueError("images array has wrong shape")

    def preserves_hermiticity(self, tol: float = 1e-12) -> bool:
        """phi(E_ij)† == phi(E_ji) entrywise within tol."""
        adj = self.images.conj().transpose(1, 0, 3, 2)
        return bool(np.max(np.abs(self.images - adj)) <= tol)

    def is_stochastic(self, tol: float = 1e-12) -> bool:
        """phi(I) == I entrywise within tol."""
        img_i = apply_map(self, np.eye(self.in_dim))
        return bool(np.max(np.abs(img_i - np.eye(self.out_dim))) <= tol)


def identity_map(d: int) -> MapOnMatrices:
    images = np.zeros((d, d, d, d), dtype=complex)
    for i in range(d):
        for j in range(d):
            images[i, j, i, j] = 1.0
    return MapOnMatrices(d, d, images)


def apply_map(phi: MapOnMatrices, x) -> np.ndarray:
    """Sum_ij X_ij phi(E_ij)."""
    x = as_matrix(x, square=True)
    if x.shape[0] != phi.in_dim:
        raise ValueError(f"input dimension {x.shape[0]} != map in_dim {phi.in_dim}")
    return np.einsum("ij,ijkl->kl", x, phi.images)


def tilde_apply(phi: MapOnMatrices, x, d1: int) -> np.ndarray:
    """Apply phi blockwise: the d1 x d1 block matrix of phi(X^(i,j))."""
    bl = blocks(x, d1, phi.in_dim)
    out = np.einsum("abij,ijkl->abkl", bl, phi.images)
    d_out = d1 * phi.out_dim
    return out.transpose(0, 2, 1, 3).reshape(d_out, d_out)


# ---------------------------------------------------------------------------
# Matrix file format
# ---------------------------------------------------------------------------

def matrix_to_json(m, dims: Sequence[int]) -> str:
    """Serialize to the {"dims": [...], "entries": [[re, im], ...]} format."""
    m = as_matrix(m, square=True)
    dims = check_dims(dims)
    if m.shape[0] != math.prod(dims):
        raise ValueError("matrix dimension inconsistent with dims")
    entries = [[float(z.real), float(z.imag)] for z in m.ravel()]
    return json.dumps({"dims": list(dims), "entries": entries})


def matrix_from_json(text: str) -> tuple[np.ndarray, tuple[int, ...]]:
    """Parse the matrix JSON format; returns (matrix, dims)."""
    obj = json.loads(text)
    dims = check_dims(obj["dims"])
    d = math.prod(dims)
    entries = obj["entries"]
    if len(entries) != d * d:
        raise ValueError(f"expected {d * d} entries, got {len(entries)}")
    flat = np.array([complex(re, im) for re, im in entries])
    return flat.reshape(d, d), dims


def load_matrix(path) -> tuple[np.ndarray, tuple[int, ...]]:
    return matrix_from_json(Path(path).read_text())


def save_matrix(path, m, dims: Sequence[int]) -> None:
    Path(path).write_text(matrix_to_json(m, dims))
