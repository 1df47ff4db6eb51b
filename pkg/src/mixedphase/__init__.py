"""Geometric (Pancharatnam) phases of mixed quantum states.

The package computes interference visibility and geometric phase for
classical mixtures of basis states evolved by a unitary family, checks
the parallel-transport condition numerically, and provides two worked
models: a thermal spin-1/2 mixture driven by a two-oscillating-field
SU(2) protocol, and the Bloch-vector solid-angle model.
"""

from .bloch import (
    BlochParams,
    GeodesicPolygon,
    bloch_closed_form,
    bloch_mixed_phase,
    polygon_solid_angle,
)
from .engine import (
    MixedState,
    PhaseResult,
    TransportResidual,
    UnitaryFamily,
    density_matrix,
    mixed_phase,
    numeric_derivative,
    pancharatnam_components,
    transport_residuals,
    weighted_transport_residual,
)
from .linalg import (
    basis_vector,
    dagger,
    is_unitary,
    mat_mul,
    polar_scalar,
    trace,
    wrap_angle,
)
from .su2 import (
    AmplitudePair,
    ProtocolParams,
    analytic_phase_visibility,
    closed_form_residuals,
    diagonal_pancharatnam,
    protocol_family,
    solve_transport_amplitudes,
    unitary_at,
    unitary_time_derivative,
)
from .thermal import (
    SpinWeights,
    ThermalConfig,
    boltzmann_weights,
    expected_sz,
    internal_energy,
)

__version__ = "0.1.0"

__all__ = [
    "AmplitudePair",
    "BlochParams",
    "GeodesicPolygon",
    "MixedState",
    "PhaseResult",
    "ProtocolParams",
    "SpinWeights",
    "ThermalConfig",
    "TransportResidual",
    "UnitaryFamily",
    "analytic_phase_visibility",
    "basis_vector",
    "bloch_closed_form",
    "bloch_mixed_phase",
    "boltzmann_weights",
    "closed_form_residuals",
    "dagger",
    "density_matrix",
    "diagonal_pancharatnam",
    "expected_sz",
    "internal_energy",
    "is_unitary",
    "mat_mul",
    "mixed_phase",
    "numeric_derivative",
    "pancharatnam_components",
    "polar_scalar",
    "polygon_solid_angle",
    "protocol_family",
    "solve_transport_amplitudes",
    "trace",
    "transport_residuals",
    "unitary_at",
    "unitary_time_derivative",
    "weighted_transport_residual",
    "wrap_angle",
]
