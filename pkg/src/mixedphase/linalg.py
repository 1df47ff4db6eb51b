"""Dense complex linear algebra for small square matrices.

Everything here operates on plain numpy arrays of dtype complex128.
Matrices are tiny (the physics modules use N = 2, tests go up to N = 8),
so all storage is dense and all checks are exact loops over entries.
Inputs with NaN or Inf entries are rejected at the public boundary.
"""

from __future__ import annotations

import math

import numpy as np

__all__ = [
    "as_square",
    "basis_vector",
    "mat_mul",
    "dagger",
    "trace",
    "is_unitary",
    "unitary_deviation",
    "polar_scalar",
    "wrap_angle",
]


def as_square(a) -> np.ndarray:
    """Coerce to a finite complex square matrix, raising ValueError otherwise."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
        raise ValueError("matrix entries must be finite (no NaN/Inf)")
    return m


def basis_vector(dim: int, index: int) -> np.ndarray:
    """Real coordinate unit vector: one at `index`, zero elsewhere."""
    if dim < 1:
        raise ValueError(f"dim must be >= 1, got {dim}")
    if not 0 <= index < dim:
        raise ValueError(f"index {index} out of range [0, {dim})")
    v = np.zeros(dim, dtype=np.complex128)
    v[index] = 1.0
    return v


def mat_mul(a, b) -> np.ndarray:
    """Matrix product A @ B; dimensions must match."""
    am = as_square(a)
    bm = as_square(b)
    if am.shape != bm.shape:
        raise ValueError(f"dimension mismatch: {am.shape[0]} vs {bm.shape[0]}")
    return am @ bm


def dagger(a) -> np.ndarray:
    """Conjugate transpose.  An exact involution: dagger(dagger(A)) == A."""
    return as_square(a).conj().T.copy()


def trace(a) -> complex:
    """Sum of diagonal entries."""
    return complex(np.trace(as_square(a)))


def is_unitary(a, tol: float) -> bool:
    """True iff the max entry magnitude of (A†A - I) is at most `tol`."""
    if not tol > 0:
        raise ValueError(f"tol must be > 0, got {tol}")
    m = as_square(a)
    dev = m.conj().T @ m - np.eye(m.shape[0])
    return float(np.max(np.abs(dev))) <= tol


def unitary_deviation(a) -> float:
    """Max entry magnitude of (A†A - I); the quantity is_unitary thresholds."""
    m = as_square(a)
    return float(np.max(np.abs(m.conj().T @ m - np.eye(m.shape[0]))))


def polar_scalar(z) -> tuple[float, float | None]:
    """Polar form (modulus, argument) of a complex scalar.

    The argument lies in (-pi, pi], computed with the two-argument
    arctangent; an input of exactly zero has no argument and returns
    (0.0, None) rather than fabricating one.
    """
    zc = complex(z)
    if not (math.isfinite(zc.real) and math.isfinite(zc.imag)):
        raise ValueError("scalar must be finite (no NaN/Inf)")
    if zc == 0:
        return 0.0, None
    return abs(zc), wrap_angle(math.atan2(zc.imag, zc.real))


def wrap_angle(theta: float) -> float:
    """Map an angle onto (-pi, pi], with exactly +-pi normalizing to +pi."""
    if not math.isfinite(theta):
        raise ValueError("angle must be finite")
    w = math.remainder(theta, math.tau)
    return math.pi if w == -math.pi else w
