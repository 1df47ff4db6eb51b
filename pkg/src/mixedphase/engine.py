"""Mixed-state interference machinery in N dimensions.

A mixed state is a classical probability vector over the coordinate
basis.  Evolving each basis component with a unitary U and summing the
diagonal overlaps with their weights gives the interference amplitude

    sum_k w_k <k|U|k> = v~ * exp(i*theta),

whose modulus v~ is the fringe visibility and whose argument theta is
the mixed-state geometric phase, provided U performs parallel transport
(each component picks up no local phase).  This module computes the
components, the weighted sum, and finite-difference residuals of the
parallel-transport condition <k| dU/dt U† |k> = 0 for an arbitrary
time-parametrized unitary family.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .linalg import as_square, dagger, polar_scalar, unitary_deviation, wrap_angle

__all__ = [
    "MixedState",
    "UnitaryFamily",
    "PhaseResult",
    "TransportResidual",
    "density_matrix",
    "pancharatnam_components",
    "mixed_phase",
    "numeric_derivative",
    "transport_residuals",
    "weighted_transport_residual",
]

WEIGHT_SUM_TOL = 1e-12


@dataclass(frozen=True)
class MixedState:
    """Classical probability weights over the coordinate basis.

    Weights must be nonnegative and sum to one within 1e-12.
    """

    weights: np.ndarray

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float)
        if w.ndim != 1 or w.size < 1:
            raise ValueError("weights must be a nonempty 1-D sequence")
        if not np.all(np.isfinite(w)):
            raise ValueError("weights must be finite")
        if np.any(w < 0):
            raise ValueError(f"weights must be nonnegative, got {w.tolist()}")
        if abs(float(w.sum()) - 1.0) > WEIGHT_SUM_TOL:
            raise ValueError(f"weights must sum to 1 within {WEIGHT_SUM_TOL}, got sum {w.sum()!r}")
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)

    @property
    def dim(self) -> int:
        return self.weights.size


@dataclass(frozen=True)
class PhaseResult:
    """Visibility and phase of an interference sum.

    When the visibility falls at or below the degeneracy threshold the
    phase is meaningless; `defined` is False and `phase` is None.
    """

    visibility: float
    phase: float | None
    defined: bool

    def __post_init__(self):
        if self.defined and self.phase is None:
            raise ValueError("defined result must carry a phase")
        if not self.defined and self.phase is not None:
            raise ValueError("undefined result must not carry a phase")


@dataclass(frozen=True)
class TransportResidual:
    """Diagonal entry k of (dU/dt) U†; zero under parallel transport."""

    k: int
    value: complex

    @property
    def magnitude(self) -> float:
        return abs(self.value)


@dataclass(frozen=True)
class UnitaryFamily:
    """A time-parametrized N x N unitary, evaluable at any real t.

    The evaluator must be a total, reentrant map from time to an (N, N)
    array.  Unless `check_unitary` is disabled, every evaluation is
    verified unitary to within `unitary_tol` (max entry of U†U - I).
    """

    dim: int
    evaluator: Callable[[float], np.ndarray]
    label: str
    check_unitary: bool = True
    unitary_tol: float = 1e-10

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError(f"dim must be >= 1, got {self.dim}")
        if not self.unitary_tol > 0:
            raise ValueError(f"unitary_tol must be > 0, got {self.unitary_tol}")

    def __call__(self, t: float) -> np.ndarray:
        u = as_square(self.evaluator(t))
        if u.shape[0] != self.dim:
            raise ValueError(
                f"family {self.label!r} returned shape {u.shape}, expected ({self.dim}, {self.dim})"
            )
        if self.check_unitary:
            dev = unitary_deviation(u)
            if dev > self.unitary_tol:
                raise ValueError(
                    f"family {self.label!r} is not unitary at t={t!r}: "
                    f"deviation {dev:.3e} > {self.unitary_tol:.1e}"
                )
        return u


def density_matrix(state: MixedState) -> np.ndarray:
    """Diagonal density matrix with the state's weights on the diagonal."""
    return np.diag(state.weights.astype(np.complex128))


def pancharatnam_components(state: MixedState, u) -> list[tuple[float, float | None]]:
    """Per-component overlap moduli and phases (v_k, beta_k).

    v_k * exp(i*beta_k) is the k-th diagonal entry of U, i.e. the overlap
    of basis component k with its evolved image.  A diagonal entry of
    exactly zero has no phase and yields (0.0, None).
    """
    um = as_square(u)
    if um.shape[0] != state.dim:
        raise ValueError(f"dimension mismatch: state dim {state.dim}, matrix dim {um.shape[0]}")
    return [polar_scalar(um[k, k]) for k in range(state.dim)]


def mixed_phase(state: MixedState, u, degeneracy_tol: float = 1e-12) -> PhaseResult:
    """Visibility and geometric phase of the weighted interference sum.

    Parameters
    ----------
    state : MixedState
        Classical weights w_k.
    u : array_like
        Square complex matrix, same dimension as the state.
    degeneracy_tol : float
        Visibility at or below this threshold signals (near-)total
        destructive interference; the phase is then reported undefined
        instead of fabricating a number from roundoff.

    Returns
    -------
    PhaseResult
        visibility = |sum_k w_k U_kk| = |Tr(U rho0)|, phase = its
        argument in (-pi, pi] when defined.
    """
    um = as_square(u)
    if um.shape[0] != state.dim:
        raise ValueError(f"dimension mismatch: state dim {state.dim}, matrix dim {um.shape[0]}")
    if not degeneracy_tol > 0:
        raise ValueError(f"degeneracy_tol must be > 0, got {degeneracy_tol}")
    z = complex(np.dot(state.weights, np.diagonal(um)))
    visibility = abs(z)
    if visibility <= degeneracy_tol:
        return PhaseResult(visibility=visibility, phase=None, defined=False)
    return PhaseResult(
        visibility=visibility,
        phase=wrap_angle(math.atan2(z.imag, z.real)),
        defined=True,
    )


def numeric_derivative(family: UnitaryFamily, t: float, h: float) -> np.ndarray:
    """Central-difference time derivative (U(t+h) - U(t-h)) / (2h)."""
    if not h > 0:
        raise ValueError(f"h must be > 0, got {h}")
    return (family(t + h) - family(t - h)) / (2.0 * h)


def transport_residuals(family: UnitaryFamily, t: float, h: float) -> list[TransportResidual]:
    """Finite-difference parallel-transport residuals at time t.

    Returns the diagonal entries of (dU/dt) U†, one per basis index,
    using the central difference with step h for the derivative.  All
    residuals vanish (to O(h^2)) iff the family parallel-transports
    every basis component.
    """
    du = numeric_derivative(family, t, h)
    m = du @ dagger(family(t))
    return [TransportResidual(k, complex(m[k, k])) for k in range(family.dim)]


def weighted_transport_residual(state: MixedState, family: UnitaryFamily, t: float, h: float) -> complex:
    """Weight-averaged transport residual sum_k w_k <k|(dU/dt)U†|k>.

    This is the trace-weighted condition; it can vanish by cancellation
    even when individual components do not, so it is reported alongside
    the per-component residuals, never instead of them.
    """
    if family.dim != state.dim:
        raise ValueError(f"dimension mismatch: state dim {state.dim}, family dim {family.dim}")
    residuals = transport_residuals(family, t, h)
    return complex(sum(w * r.value for w, r in zip(state.weights, residuals)))
