"""Self-verification suite: the library's identities run as checks.

Each check measures a maximum deviation over random draws (fixed seed,
so the shipped defaults are deterministic) or a fixed grid, and passes
iff the deviation stays within its tolerance.  Tolerances can be
overridden per check by name, which is also how deliberate failure is
exercised end to end.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bloch import BlochParams, bloch_closed_form, bloch_mixed_phase
from .engine import MixedState, mixed_phase, pancharatnam_components, transport_residuals
from .linalg import polar_scalar, unitary_deviation
from .su2 import (
    AmplitudePair,
    ProtocolParams,
    analytic_phase_visibility,
    closed_form_residuals,
    protocol_family,
    solve_transport_amplitudes,
    unitary_at,
)
from .thermal import ThermalConfig, boltzmann_weights, expected_sz

__all__ = ["CheckResult", "DEFAULT_TOLERANCES", "run_checks", "format_report", "exit_status"]

DEFAULT_TOLERANCES = {
    "unitarity": 1e-12,
    "determinant": 1e-12,
    "transport-closed-form": 1e-12,
    "transport-numeric": 1e-7,
    "transport-order": 0.2,
    "phase-closed-form": 1e-10,
    "pancharatnam-sum": 1e-12,
    "bloch-forms": 1e-12,
    "bloch-engine": 1e-12,
    "thermal-identities": 1e-14,
}

DEGENERACY_SKIP = 1e-9
FD_STEP = 1e-6


@dataclass(frozen=True)
class CheckResult:
    name: str
    max_deviation: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.max_deviation <= self.tolerance


def _angle_gap(x: float, y: float) -> float:
    return abs(math.remainder(x - y, math.tau))


def _draw_protocol(rng) -> tuple[float, float, float, float]:
    omega1 = rng.uniform(1e-3, 10.0)
    omega2 = rng.uniform(1e-3, 10.0)
    phi = rng.uniform(-math.pi, math.pi)
    t = rng.uniform(0.0, 10.0)
    return omega1, omega2, phi, t


def check_unitarity(rng, tol: float, draws: int = 1000) -> CheckResult:
    """Protocol matrices are unitary for every normalized amplitude split."""
    worst = 0.0
    for _ in range(draws):
        omega1, omega2, phi, t = _draw_protocol(rng)
        chi = rng.uniform(0.0, math.pi / 2)
        amps = AmplitudePair(math.cos(chi), math.sin(chi))
        u = unitary_at(ProtocolParams(omega1, omega2, phi, t), amps)
        worst = max(worst, unitary_deviation(u))
    return CheckResult("unitarity", worst, tol)


def check_determinant(rng, tol: float, draws: int = 1000) -> CheckResult:
    """det U equals the pure relative-phase factor e^{i phi}."""
    worst = 0.0
    for _ in range(draws):
        omega1, omega2, phi, t = _draw_protocol(rng)
        params = ProtocolParams(omega1, omega2, phi, t)
        chi = rng.uniform(0.0, math.pi / 2)
        u = unitary_at(params, AmplitudePair(math.cos(chi), math.sin(chi)))
        det = u[0, 0] * u[1, 1] - u[0, 1] * u[1, 0]
        worst = max(worst, abs(det - complex(math.cos(params.phi), math.sin(params.phi))))
    return CheckResult("determinant", worst, tol)


def check_transport_closed_form(rng, tol: float, draws: int = 1000) -> CheckResult:
    """Both exact residuals vanish at the solved amplitude split."""
    worst = 0.0
    for _ in range(draws):
        omega1, omega2, _, _ = _draw_protocol(rng)
        r1, r2 = closed_form_residuals(omega1, omega2, solve_transport_amplitudes(omega1, omega2))
        worst = max(worst, abs(r1), abs(r1 + r2))
    return CheckResult("transport-closed-form", worst, tol)


def check_transport_numeric(
    rng, tol: float, draws: int = 100, amps: AmplitudePair | None = None
) -> CheckResult:
    """Finite-difference residuals at the solved split stay tiny.

    Passing explicit `amps` (a split that does not satisfy the transport
    condition) makes this check fail; tests use that to verify the
    failure path end to end.
    """
    worst = 0.0
    for _ in range(draws):
        omega1, omega2, phi, t = _draw_protocol(rng)
        pair = amps if amps is not None else solve_transport_amplitudes(omega1, omega2)
        family = protocol_family(omega1, omega2, phi, pair)
        for residual in transport_residuals(family, t, FD_STEP):
            worst = max(worst, residual.magnitude)
    return CheckResult("transport-numeric", worst, tol)


def check_transport_order(tol: float) -> CheckResult:
    """Residuals of the solved split shrink as h^2 (order within tol of 2)."""
    cases = [(2.0, 5.0, 0.7, 0.3), (1.0, 3.0, -1.1, 1.2), (0.5, 4.0, 2.0, 0.8)]
    hs = np.array([1e-3, 1e-4, 1e-5])
    worst = 0.0
    for omega1, omega2, phi, t in cases:
        family = protocol_family(omega1, omega2, phi, solve_transport_amplitudes(omega1, omega2))
        for k in range(2):
            mags = np.array([transport_residuals(family, t, h)[k].magnitude for h in hs])
            order = np.polyfit(np.log(hs), np.log(mags), 1)[0]
            worst = max(worst, abs(float(order) - 2.0))
    return CheckResult("transport-order", worst, tol)


def check_phase_closed_form(rng, tol: float, draws: int = 2000) -> CheckResult:
    """Closed-form visibility/phase match the engine evaluation."""
    worst = 0.0
    for _ in range(draws):
        omega1, omega2, phi, t = _draw_protocol(rng)
        weights = boltzmann_weights(ThermalConfig(1.0, rng.uniform(0.0, 20.0)))
        amps = solve_transport_amplitudes(omega1, omega2)
        params = ProtocolParams(omega1, omega2, phi, t)
        analytic = analytic_phase_visibility(params, weights, amps)
        engine = mixed_phase(MixedState(weights.as_array()), unitary_at(params, amps))
        worst = max(worst, abs(analytic.visibility - engine.visibility))
        if min(analytic.visibility, engine.visibility) >= DEGENERACY_SKIP:
            worst = max(worst, _angle_gap(analytic.phase, engine.phase))
    return CheckResult("phase-closed-form", worst, tol)


def check_pancharatnam_sum(rng, tol: float, draws: int = 1000) -> CheckResult:
    """mixed_phase equals the polar form of the weighted component sum."""
    worst = 0.0
    for _ in range(draws):
        omega1, omega2, phi, t = _draw_protocol(rng)
        weights = boltzmann_weights(ThermalConfig(1.0, rng.uniform(0.0, 20.0)))
        state = MixedState(weights.as_array())
        u = unitary_at(ProtocolParams(omega1, omega2, phi, t),
                       solve_transport_amplitudes(omega1, omega2))
        total = sum(
            w * v * complex(math.cos(beta), math.sin(beta))
            for w, (v, beta) in zip(state.weights, pancharatnam_components(state, u))
            if beta is not None
        )
        modulus, argument = polar_scalar(total)
        result = mixed_phase(state, u)
        worst = max(worst, abs(modulus - result.visibility))
        if result.defined and argument is not None and modulus >= DEGENERACY_SKIP:
            worst = max(worst, _angle_gap(argument, result.phase))
    return CheckResult("pancharatnam-sum", worst, tol)


def check_bloch_forms(rng, tol: float, draws: int = 2000) -> CheckResult:
    """Complex-sum and closed-form Bloch evaluations agree everywhere."""
    worst = 0.0
    for _ in range(draws):
        params = BlochParams(rng.uniform(0.0, 1.0), rng.uniform(-4 * math.pi, 4 * math.pi))
        summed = bloch_mixed_phase(params)
        visibility, phase = bloch_closed_form(params)
        worst = max(worst, abs(summed.visibility - visibility))
        if summed.defined and phase is not None and visibility >= DEGENERACY_SKIP:
            worst = max(worst, _angle_gap(summed.phase, phase))
    return CheckResult("bloch-forms", worst, tol)


def check_bloch_engine(rng, tol: float, draws: int = 2000) -> CheckResult:
    """Bloch model equals the engine on the equivalent diagonal problem."""
    worst = 0.0
    for _ in range(draws):
        r = rng.uniform(0.0, 1.0)
        omega = rng.uniform(-4 * math.pi, 4 * math.pi)
        direct = bloch_mixed_phase(BlochParams(r, omega))
        half = 0.5 * omega
        u = np.diag([complex(math.cos(half), math.sin(half)),
                     complex(math.cos(half), -math.sin(half))])
        via_engine = mixed_phase(MixedState(np.array([0.5 * (1 - r), 0.5 * (1 + r)])), u)
        worst = max(worst, abs(direct.visibility - via_engine.visibility))
        if direct.defined and via_engine.defined and direct.visibility >= DEGENERACY_SKIP:
            worst = max(worst, _angle_gap(direct.phase, via_engine.phase))
    return CheckResult("bloch-engine", worst, tol)


def check_thermal_identities(tol: float, points: int = 1001) -> CheckResult:
    """Weight normalization and the tanh magnetization identity."""
    worst = 0.0
    for x in np.linspace(0.0, 700.0, points):
        cfg = ThermalConfig(omega_field=1.0, beta=float(x))
        w = boltzmann_weights(cfg)
        worst = max(worst, abs(w.w1 + w.w2 - 1.0))
        worst = max(worst, abs((w.w1 - w.w2) - math.tanh(0.5 * x)))
        worst = max(worst, abs(expected_sz(cfg) - (-0.5 * (w.w1 - w.w2))))
    return CheckResult("thermal-identities", worst, tol)


def run_checks(seed: int = 0, tolerances: dict[str, float] | None = None) -> list[CheckResult]:
    """Run every check with the given tolerance overrides.

    Unknown override names are rejected so a typo cannot silently leave
    the default in place.
    """
    tols = dict(DEFAULT_TOLERANCES)
    for name, value in (tolerances or {}).items():
        if name not in tols:
            known = ", ".join(sorted(tols))
            raise ValueError(f"unknown check name {name!r}; known checks: {known}")
        tols[name] = value
    rng = np.random.default_rng(seed)
    return [
        check_unitarity(rng, tols["unitarity"]),
        check_determinant(rng, tols["determinant"]),
        check_transport_closed_form(rng, tols["transport-closed-form"]),
        check_transport_numeric(rng, tols["transport-numeric"]),
        check_transport_order(tols["transport-order"]),
        check_phase_closed_form(rng, tols["phase-closed-form"]),
        check_pancharatnam_sum(rng, tols["pancharatnam-sum"]),
        check_bloch_forms(rng, tols["bloch-forms"]),
        check_bloch_engine(rng, tols["bloch-engine"]),
        check_thermal_identities(tols["thermal-identities"]),
    ]


def format_report(results: list[CheckResult]) -> str:
    width = max(len(r.name) for r in results)
    lines = [
        f"{'PASS' if r.passed else 'FAIL'}  {r.name:<{width}}  "
        f"max deviation {r.max_deviation:.3e}  tolerance {r.tolerance:.1e}"
        for r in results
    ]
    return "\n".join(lines)


def exit_status(results: list[CheckResult]) -> int:
    return 0 if all(r.passed for r in results) else 2
