"""Two-oscillating-field SU(2) drive protocol for a spin-1/2 mixed state.

The protocol evolves the two basis components with the 2 x 2 unitary

    U(t) = [  a e^{-i w1 t}          b e^{+i w2 t}        ]
           [ -e^{i phi} b e^{-i w2 t}   e^{i phi} a e^{+i w1 t} ],

where a, b >= 0 with a^2 + b^2 = 1 are the normalized field intensities,
w1 and w2 the two drive frequencies, and phi a constant relative phase.
The diagonal transport residuals of this family are the constants
-i*w1*a^2 + i*w2*b^2 and its negative, so choosing

    a = sqrt(w2 / (w1 + w2)),   b = sqrt(w1 / (w1 + w2))

makes both vanish identically: the family parallel-transports each
component and the interference phase is purely geometric.  The weighted
diagonal sum then has the closed form

    v~    = a * sqrt(w1^2 + w2^2 + 2 w1 w2 cos(2 w1 t + phi)),
    theta = atan2(-w1 sin(w1 t) + w2 sin(w1 t + phi),
                   w1 cos(w1 t) + w2 cos(w1 t + phi)),

computed here with the two-argument arctangent so theta agrees with the
argument of the complex sum in every quadrant.

Note that U(0) is not the identity (it is a real rotation by arccos(a)),
so for generic weights the reported phase is already nonzero at t = 0;
values are reported exactly as the interference sum defines them, with
no re-anchoring.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .engine import PhaseResult, UnitaryFamily
from .linalg import wrap_angle
from .thermal import SpinWeights

__all__ = [
    "ProtocolParams",
    "AmplitudePair",
    "solve_transport_amplitudes",
    "unitary_at",
    "unitary_time_derivative",
    "protocol_family",
    "closed_form_residuals",
    "diagonal_pancharatnam",
    "analytic_phase_visibility",
]

AMPLITUDE_NORM_TOL = 1e-14


@dataclass(frozen=True)
class ProtocolParams:
    """Drive frequencies (both > 0), relative phase, and evolution time (>= 0).

    The relative phase is stored wrapped onto (-pi, pi]; every formula
    using it is 2*pi-periodic, so wrapping is lossless.
    """

    omega1: float
    omega2: float
    phi: float
    t: float

    def __post_init__(self):
        if not (math.isfinite(self.omega1) and self.omega1 > 0):
            raise ValueError(f"omega1 must be finite and > 0, got {self.omega1}")
        if not (math.isfinite(self.omega2) and self.omega2 > 0):
            raise ValueError(f"omega2 must be finite and > 0, got {self.omega2}")
        if not (math.isfinite(self.t) and self.t >= 0):
            raise ValueError(f"t must be finite and >= 0, got {self.t}")
        object.__setattr__(self, "phi", wrap_angle(self.phi))


@dataclass(frozen=True)
class AmplitudePair:
    """Normalized field intensity magnitudes (a, b) with a^2 + b^2 = 1."""

    a: float
    b: float

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise ValueError(f"amplitudes are magnitudes and must be >= 0, got ({self.a}, {self.b})")
        norm = self.a * self.a + self.b * self.b
        if abs(norm - 1.0) > AMPLITUDE_NORM_TOL:
            raise ValueError(
                f"amplitudes must satisfy a^2 + b^2 = 1 within {AMPLITUDE_NORM_TOL}, got {norm!r}"
            )


def solve_transport_amplitudes(omega1: float, omega2: float) -> AmplitudePair:
    """Amplitude split that cancels both transport residuals.

    a = sqrt(omega2/(omega1+omega2)), b = sqrt(omega1/(omega1+omega2)):
    the unique nonnegative solution of omega1*a^2 = omega2*b^2 with
    a^2 + b^2 = 1.  Both frequencies must be strictly positive.
    """
    if not (math.isfinite(omega1) and omega1 > 0):
        raise ValueError(f"omega1 must be finite and > 0, got {omega1}")
    if not (math.isfinite(omega2) and omega2 > 0):
        raise ValueError(f"omega2 must be finite and > 0, got {omega2}")
    total = omega1 + omega2
    return AmplitudePair(a=math.sqrt(omega2 / total), b=math.sqrt(omega1 / total))


def _protocol_matrix(omega1: float, omega2: float, phi: float, a: float, b: float, t: float) -> np.ndarray:
    e1 = cmath.exp(1j * omega1 * t)
    e2 = cmath.exp(1j * omega2 * t)
    rel = cmath.exp(1j * phi)
    return np.array(
        [
            [a * e1.conjugate(), b * e2],
            [-rel * b * e2.conjugate(), rel * a * e1],
        ],
        dtype=np.complex128,
    )


def unitary_at(params: ProtocolParams, amps: AmplitudePair) -> np.ndarray:
    """The 2 x 2 protocol unitary evaluated at params.t."""
    return _protocol_matrix(params.omega1, params.omega2, params.phi, amps.a, amps.b, params.t)


def unitary_time_derivative(params: ProtocolParams, amps: AmplitudePair) -> np.ndarray:
    """Closed-form dU/dt of the protocol unitary (for tight derivative checks)."""
    e1 = cmath.exp(1j * params.omega1 * params.t)
    e2 = cmath.exp(1j * params.omega2 * params.t)
    rel = cmath.exp(1j * params.phi)
    a, b = amps.a, amps.b
    w1, w2 = params.omega1, params.omega2
    return np.array(
        [
            [-1j * w1 * a * e1.conjugate(), 1j * w2 * b * e2],
            [1j * w2 * rel * b * e2.conjugate(), 1j * w1 * rel * a * e1],
        ],
        dtype=np.complex128,
    )


def protocol_family(omega1: float, omega2: float, phi: float, amps: AmplitudePair) -> UnitaryFamily:
    """Wrap the protocol as a UnitaryFamily evaluable at any real t.

    The evaluator shares the matrix construction with `unitary_at`, so
    the two agree bit-for-bit at equal arguments; unlike ProtocolParams
    it accepts negative times (needed by central differences at t = 0).
    """
    if not (math.isfinite(omega1) and omega1 > 0):
        raise ValueError(f"omega1 must be finite and > 0, got {omega1}")
    if not (math.isfinite(omega2) and omega2 > 0):
        raise ValueError(f"omega2 must be finite and > 0, got {omega2}")
    phi_w = wrap_angle(phi)
    label = f"su2(omega1={omega1!r}, omega2={omega2!r}, phi={phi_w!r}, a={amps.a!r}, b={amps.b!r})"
    return UnitaryFamily(
        dim=2,
        evaluator=lambda t: _protocol_matrix(omega1, omega2, phi_w, amps.a, amps.b, t),
        label=label,
    )


def closed_form_residuals(omega1: float, omega2: float, amps: AmplitudePair) -> tuple[complex, complex]:
    """Exact transport residuals of the protocol family.

    r1 = -i*omega1*a^2 + i*omega2*b^2 for component 0 and r2 = -r1 for
    component 1; both are time-independent.  They vanish exactly when
    the amplitudes come from solve_transport_amplitudes.
    """
    if not (math.isfinite(omega1) and omega1 > 0):
        raise ValueError(f"omega1 must be finite and > 0, got {omega1}")
    if not (math.isfinite(omega2) and omega2 > 0):
        raise ValueError(f"omega2 must be finite and > 0, got {omega2}")
    r1 = complex(0.0, -omega1 * amps.a ** 2 + omega2 * amps.b ** 2)
    return r1, -r1


def diagonal_pancharatnam(
    params: ProtocolParams, amps: AmplitudePair
) -> tuple[tuple[float, float], tuple[float, float]]:
    """Overlap components of the protocol diagonal, in closed form.

    Both moduli equal a; the phases are -omega1*t and omega1*t + phi,
    wrapped onto (-pi, pi] with the +-pi edge normalized to +pi.
    """
    beta1 = wrap_angle(-params.omega1 * params.t)
    beta2 = wrap_angle(params.omega1 * params.t + params.phi)
    return (amps.a, beta1), (amps.a, beta2)


def analytic_phase_visibility(
    params: ProtocolParams,
    weights: SpinWeights,
    amps: AmplitudePair,
    degeneracy_tol: float = 1e-12,
) -> PhaseResult:
    """Closed-form visibility and geometric phase of the weighted sum.

    Evaluates v~ and theta from the module-level formulas; agrees with
    `mixed_phase` applied to `unitary_at` to within roundoff.  Visibility
    at or below `degeneracy_tol` marks the phase undefined (the
    destructive-interference node).
    """
    if not degeneracy_tol > 0:
        raise ValueError(f"degeneracy_tol must be > 0, got {degeneracy_tol}")
    w1, w2 = weights.w1, weights.w2
    angle = params.omega1 * params.t
    radicand = w1 * w1 + w2 * w2 + 2.0 * w1 * w2 * math.cos(2.0 * angle + params.phi)
    visibility = amps.a * math.sqrt(max(radicand, 0.0))
    if visibility <= degeneracy_tol:
        return PhaseResult(visibility=visibility, phase=None, defined=False)
    num = -w1 * math.sin(angle) + w2 * math.sin(angle + params.phi)
    den = w1 * math.cos(angle) + w2 * math.cos(angle + params.phi)
    return PhaseResult(
        visibility=visibility,
        phase=wrap_angle(math.atan2(num, den)),
        defined=True,
    )
