#!/usr/bin/env python3
"""Solid-angle geometric phase of a mixed state on the Bloch sphere.

Builds solid angles from explicit geodesic polygons (octant, split
hemisphere, a random spherical triangle), then scans the closed-form
visibility and phase over the enclosed angle for several Bloch vector
lengths.  Saves bloch_solid_angle.png when matplotlib is available.
"""

import math
from pathlib import Path

import numpy as np

from mixedphase import (
    BlochParams,
    GeodesicPolygon,
    bloch_closed_form,
    bloch_mixed_phase,
    polygon_solid_angle,
)

X = np.array([1.0, 0.0, 0.0])
Y = np.array([0.0, 1.0, 0.0])
Z = np.array([0.0, 0.0, 1.0])


def equator(angle):
    return np.array([math.cos(angle), math.sin(angle), 0.0])


def main():
    octant = GeodesicPolygon(np.array([X, Y, Z]))
    print(f"octant triangle:          {polygon_solid_angle(octant):+.12f}  (pi/2 = {math.pi/2:.12f})")
    print(f"reversed octant triangle: {polygon_solid_angle(GeodesicPolygon(np.array([Z, Y, X]))):+.12f}")

    # hemisphere = two pole-touching halves of a 100-gon on the equator
    n = 100
    ring = [equator(2 * math.pi * k / n) for k in range(n + 1)]
    east = GeodesicPolygon(np.array([Z] + ring[: n // 2 + 1]))
    west = GeodesicPolygon(np.array([Z] + ring[n // 2:]))
    total = polygon_solid_angle(east) + polygon_solid_angle(west)
    print(f"split hemisphere 100-gon: {total:+.12f}  (2 pi = {2*math.pi:.12f})")

    rng = np.random.default_rng(8)
    tri = rng.standard_normal((3, 3))
    tri /= np.linalg.norm(tri, axis=1, keepdims=True)
    omega_tri = polygon_solid_angle(GeodesicPolygon(tri))
    print(f"random spherical triangle: {omega_tri:+.12f}")
    print()

    # a loop enclosing omega_tri, traversed by states of varying purity
    print(f"{'r':>5} {'visibility':>12} {'phase':>12}")
    for r in (0.0, 0.25, 0.5, 0.75, 1.0):
        result = bloch_mixed_phase(BlochParams(r, omega_tri))
        phase = result.phase if result.defined else math.nan
        print(f"{r:>5.2f} {result.visibility:>12.6f} {phase:>12.6f}")

    omegas = np.linspace(-4 * math.pi, 4 * math.pi, 801)
    try:
        import matplotlib
        matplotlib.use("Agg")
        import matplotlib.pyplot as plt
    except ImportError:
        print("\nmatplotlib not available; skipping the figure")
        return

    fig, (ax_v, ax_p) = plt.subplots(2, 1, figsize=(7, 7), sharex=True)
    for r in (0.0, 0.5, 0.9, 1.0):
        values = [bloch_closed_form(BlochParams(r, float(om))) for om in omegas]
        vis = [v for v, _ in values]
        phase = [p if p is not None else math.nan for _, p in values]
        ax_v.plot(omegas, vis, label=f"r = {r}")
        ax_p.plot(omegas, phase, ".", ms=1.5, label=f"r = {r}")
    ax_v.set_ylabel("visibility")
    ax_v.legend(fontsize=8)
    ax_p.set_ylabel("phase [rad]")
    ax_p.set_xlabel("enclosed solid angle [sr]")
    fig.suptitle("Solid-angle phase and visibility vs Bloch vector length")
    out = Path(__file__).with_suffix(".png")
    fig.savefig(out, dpi=120)
    print(f"\nwrote {out}")


if __name__ == "__main__":
    main()
