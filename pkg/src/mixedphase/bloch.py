"""Bloch-vector model: geometric phase from an enclosed solid angle.

A spin-1/2 density matrix with Bloch vector of length r (r < 1 mixed,
r = 1 pure) carried around a cyclic loop enclosing geodesic solid angle
Omega acquires phases +Omega/2 and -Omega/2 on its two eigencomponents,
with eigenvalue weights (1-r)/2 and (1+r)/2 respectively.  The weighted
interference sum is

    z = (1-r)/2 * e^{+i Omega/2} + (1+r)/2 * e^{-i Omega/2}
      = cos(Omega/2) - i r sin(Omega/2),

so the visibility and phase have the closed forms

    v~    = sqrt(cos^2(Omega/2) + r^2 sin^2(Omega/2)),
    theta = -atan2(r sin(Omega/2), cos(Omega/2)).

Omega is accepted as a free real parameter (multi-wrap loops allowed);
`polygon_solid_angle` generates values of Omega from explicit geodesic
polygons on the unit sphere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .engine import PhaseResult
from .linalg import wrap_angle

__all__ = [
    "BlochParams",
    "GeodesicPolygon",
    "bloch_mixed_phase",
    "bloch_closed_form",
    "polygon_solid_angle",
]

VERTEX_NORM_TOL = 1e-12


@dataclass(frozen=True)
class BlochParams:
    """Bloch vector length r in [0, 1] and enclosed solid angle (any real)."""

    r: float
    omega_solid: float

    def __post_init__(self):
        if not (math.isfinite(self.r) and 0.0 <= self.r <= 1.0):
            raise ValueError(f"r must lie in [0, 1], got {self.r}")
        if not math.isfinite(self.omega_solid):
            raise ValueError(f"omega_solid must be finite, got {self.omega_solid}")


@dataclass(frozen=True)
class GeodesicPolygon:
    """Ordered cycle of >= 3 unit vectors on the sphere.

    Consecutive vertices (including the closing pair) must be neither
    repeated nor antipodal, so every edge is a unique minor geodesic arc.
    """

    vertices: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.vertices, dtype=float)
        if v.ndim != 2 or v.shape[1] != 3 or v.shape[0] < 3:
            raise ValueError(f"vertices must be an (n >= 3, 3) array, got shape {v.shape}")
        if not np.all(np.isfinite(v)):
            raise ValueError("vertices must be finite")
        norms = np.linalg.norm(v, axis=1)
        bad = np.abs(norms - 1.0) > VERTEX_NORM_TOL
        if np.any(bad):
            raise ValueError(
                f"vertices must be unit vectors within {VERTEX_NORM_TOL}; "
                f"offending indices {np.nonzero(bad)[0].tolist()}"
            )
        n = v.shape[0]
        for i in range(n):
            dot = float(np.dot(v[i], v[(i + 1) % n]))
            if dot > 1.0 - 1e-12:
                raise ValueError(f"consecutive vertices {i} and {(i + 1) % n} are repeated")
            if dot < -1.0 + 1e-12:
                raise ValueError(
                    f"consecutive vertices {i} and {(i + 1) % n} are antipodal; geodesic not unique"
                )
        v.setflags(write=False)
        object.__setattr__(self, "vertices", v)

    @property
    def n_vertices(self) -> int:
        return self.vertices.shape[0]


def _interference_sum(params: BlochParams) -> complex:
    half = 0.5 * params.omega_solid
    up = complex(math.cos(half), math.sin(half))
    return 0.5 * (1.0 - params.r) * up + 0.5 * (1.0 + params.r) * up.conjugate()


def bloch_mixed_phase(params: BlochParams, degeneracy_tol: float = 1e-12) -> PhaseResult:
    """Visibility and phase from the two-component weighted sum.

    Degenerate only near r = 0 with Omega an odd multiple of pi, where
    the two half-weights cancel exactly; there the phase is undefined.
    """
    if not degeneracy_tol > 0:
        raise ValueError(f"degeneracy_tol must be > 0, got {degeneracy_tol}")
    z = _interference_sum(params)
    visibility = abs(z)
    if visibility <= degeneracy_tol:
        return PhaseResult(visibility=visibility, phase=None, defined=False)
    return PhaseResult(
        visibility=visibility,
        phase=wrap_angle(math.atan2(z.imag, z.real)),
        defined=True,
    )


def bloch_closed_form(
    params: BlochParams, degeneracy_tol: float = 1e-12
) -> tuple[float, float | None]:
    """Closed-form (visibility, phase) without forming the complex sum.

    The phase is -atan2(r sin(Omega/2), cos(Omega/2)), which matches the
    argument of the interference sum in every quadrant; it is None at
    the same degeneracy as `bloch_mixed_phase`.
    """
    if not degeneracy_tol > 0:
        raise ValueError(f"degeneracy_tol must be > 0, got {degeneracy_tol}")
    half = 0.5 * params.omega_solid
    c = math.cos(half)
    rs = params.r * math.sin(half)
    visibility = math.sqrt(c * c + rs * rs)
    if visibility <= degeneracy_tol:
        return visibility, None
    return visibility, wrap_angle(-math.atan2(rs, c))


def _triangle_solid_angle(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> float:
    # Signed spherical-triangle solid angle via the half-angle tangent
    # identity; positive for counterclockwise orientation seen from
    # outside the sphere.
    numer = float(np.dot(a, np.cross(b, c)))
    denom = 1.0 + float(np.dot(a, b)) + float(np.dot(b, c)) + float(np.dot(c, a))
    return 2.0 * math.atan2(numer, denom)


def polygon_solid_angle(poly: GeodesicPolygon) -> float:
    """Signed solid angle enclosed by a geodesic polygon.

    Fan-triangulates from the first vertex and sums signed triangle
    contributions, so the result is additive under polygon splitting and
    flips sign when the vertex order is reversed.
    """
    v = poly.vertices
    total = 0.0
    for k in range(1, poly.n_vertices - 1):
        total += _triangle_solid_angle(v[0], v[k], v[k + 1])
    return total
