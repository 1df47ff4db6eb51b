"""Thermal spin-1/2 occupation weights in natural units (hbar = k_B = 1).

A spin-1/2 magnetic moment in a static field has level splitting
omega_field; at inverse temperature beta the two levels carry Boltzmann
weights that depend only on the product x = omega_field * beta / 2:

    w1 = e^x / (e^x + e^-x)      (lower level, basis index 0)
    w2 = e^-x / (e^x + e^-x)     (upper level, basis index 1)

Everything is computed in overflow-safe form (divide through by the
larger exponential), so arbitrarily cold configurations are fine.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "ThermalConfig",
    "SpinWeights",
    "boltzmann_weights",
    "expected_sz",
    "internal_energy",
]

SPIN_WEIGHT_SUM_TOL = 1e-14


@dataclass(frozen=True)
class ThermalConfig:
    """Field splitting frequency (> 0) and inverse temperature (>= 0, finite)."""

    omega_field: float
    beta: float

    def __post_init__(self):
        if not (math.isfinite(self.omega_field) and self.omega_field > 0):
            raise ValueError(f"omega_field must be finite and > 0, got {self.omega_field}")
        if not (math.isfinite(self.beta) and self.beta >= 0):
            raise ValueError(f"beta must be finite and >= 0, got {self.beta}")


@dataclass(frozen=True)
class SpinWeights:
    """Occupation pair (w1, w2): lower level at index 0, upper at index 1."""

    w1: float
    w2: float

    def __post_init__(self):
        if self.w1 < 0 or self.w2 < 0:
            raise ValueError(f"weights must be nonnegative, got ({self.w1}, {self.w2})")
        if abs(self.w1 + self.w2 - 1.0) > SPIN_WEIGHT_SUM_TOL:
            raise ValueError(
                f"weights must sum to 1 within {SPIN_WEIGHT_SUM_TOL}, got {self.w1 + self.w2!r}"
            )

    def as_array(self) -> np.ndarray:
        return np.array([self.w1, self.w2])


def boltzmann_weights(cfg: ThermalConfig) -> SpinWeights:
    """Thermal occupations of the two levels.

    Equivalent to w1 = e^x/(e^x+e^-x) with x = omega_field*beta/2, but
    written against the decaying exponential only, so no overflow occurs
    for any finite product omega_field*beta.
    """
    x = 0.5 * cfg.omega_field * cfg.beta
    e = math.exp(-2.0 * x)  # x >= 0, so e in (0, 1]
    return SpinWeights(w1=1.0 / (1.0 + e), w2=e / (1.0 + e))


def expected_sz(cfg: ThermalConfig) -> float:
    """Thermal expectation of the spin z-component: -tanh(omega_field*beta/2)/2."""
    return -0.5 * math.tanh(0.5 * cfg.omega_field * cfg.beta)


def internal_energy(cfg: ThermalConfig) -> float:
    """Mean energy omega_field * <s_z> of the two-level system."""
    return cfg.omega_field * expected_sz(cfg)
