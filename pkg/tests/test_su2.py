import cmath
import math

import numpy as np
import pytest

from mixedphase.engine import MixedState, mixed_phase, pancharatnam_components, transport_residuals
from mixedphase.linalg import unitary_deviation, wrap_angle
from mixedphase.su2 import (
    AmplitudePair,
    ProtocolParams,
    analytic_phase_visibility,
    closed_form_residuals,
    diagonal_pancharatnam,
    protocol_family,
    solve_transport_amplitudes,
    unitary_at,
)
from mixedphase.thermal import SpinWeights, ThermalConfig, boltzmann_weights

INV_SQRT2 = 0.7071067811865476


def _angle_gap(x, y):
    return abs(math.remainder(x - y, math.tau))


class TestProtocolParams:
    def test_phi_wrapped(self):
        params = ProtocolParams(1.0, 1.0, 3 * math.pi, 0.0)
        assert params.phi == math.pi

    def test_negative_time_rejected(self):
        with pytest.raises(ValueError, match="t"):
            ProtocolParams(1.0, 1.0, 0.0, -0.1)

    @pytest.mark.parametrize("omega1,omega2", [(0.0, 1.0), (1.0, 0.0), (-1.0, 1.0)])
    def test_nonpositive_frequency_rejected(self, omega1, omega2):
        with pytest.raises(ValueError, match="omega"):
            ProtocolParams(omega1, omega2, 0.0, 0.0)


class TestAmplitudePair:
    def test_norm_enforced(self):
        with pytest.raises(ValueError, match="a\\^2 \\+ b\\^2"):
            AmplitudePair(0.9, 0.9)

    def test_negative_rejected(self):
        with pytest.raises(ValueError, match="magnitude"):
            AmplitudePair(-0.6, 0.8)

    def test_endpoints_allowed(self):
        AmplitudePair(1.0, 0.0)
        AmplitudePair(0.0, 1.0)


class TestSolveTransportAmplitudes:
    def test_equal_frequencies(self):
        amps = solve_transport_amplitudes(2.5, 2.5)
        assert abs(amps.a - INV_SQRT2) <= 1e-15
        assert abs(amps.b - INV_SQRT2) <= 1e-15

    def test_three_to_one(self):
        # Oracle: a = sqrt(1/4), b = sqrt(3/4).
        amps = solve_transport_amplitudes(3.0, 1.0)
        assert amps.a == pytest.approx(0.5, abs=1e-16)
        assert amps.b == pytest.approx(0.8660254037844386, abs=1e-16)

    def test_swap_symmetry(self):
        fwd = solve_transport_amplitudes(1.0, 3.0)
        rev = solve_transport_amplitudes(3.0, 1.0)
        assert fwd.a == rev.b
        assert fwd.b == rev.a
        assert fwd.a == pytest.approx(0.8660254037844386, abs=1e-16)
        assert fwd.b == pytest.approx(0.5, abs=1e-16)

    def test_invariants_random(self):
        rng = np.random.default_rng(61)
        for _ in range(200):
            omega1 = rng.uniform(1e-3, 10.0)
            omega2 = rng.uniform(1e-3, 10.0)
            amps = solve_transport_amplitudes(omega1, omega2)
            assert abs(amps.a ** 2 + amps.b ** 2 - 1.0) <= 1e-14
            assert abs(omega1 * amps.a ** 2 - omega2 * amps.b ** 2) <= 1e-12

    @pytest.mark.parametrize("omega1,omega2", [(0.0, 1.0), (1.0, -2.0)])
    def test_nonpositive_rejected(self, omega1, omega2):
        with pytest.raises(ValueError, match="omega"):
            solve_transport_amplitudes(omega1, omega2)


class TestUnitaryAt:
    def test_t_zero_is_real_rotation_not_identity(self):
        amps = AmplitudePair(INV_SQRT2, INV_SQRT2)
        u = unitary_at(ProtocolParams(1.0, 1.0, 0.0, 0.0), amps)
        expected = np.array([[INV_SQRT2, INV_SQRT2], [-INV_SQRT2, INV_SQRT2]], dtype=complex)
        assert np.allclose(u, expected, rtol=0, atol=1e-16)
        assert not np.allclose(u, np.eye(2), atol=0.1)

    def test_unitary_for_any_normalized_split(self):
        rng = np.random.default_rng(67)
        for _ in range(200):
            params = ProtocolParams(rng.uniform(1e-3, 10), rng.uniform(1e-3, 10),
                                    rng.uniform(-math.pi, math.pi), rng.uniform(0, 10))
            chi = rng.uniform(0, math.pi / 2)
            u = unitary_at(params, AmplitudePair(math.cos(chi), math.sin(chi)))
            assert unitary_deviation(u) <= 1e-12

    def test_determinant_is_relative_phase(self):
        rng = np.random.default_rng(71)
        for _ in range(100):
            phi = rng.uniform(-math.pi, math.pi)
            params = ProtocolParams(rng.uniform(0.1, 10), rng.uniform(0.1, 10),
                                    phi, rng.uniform(0, 10))
            chi = rng.uniform(0, math.pi / 2)
            u = unitary_at(params, AmplitudePair(math.cos(chi), math.sin(chi)))
            det = u[0, 0] * u[1, 1] - u[0, 1] * u[1, 0]
            assert abs(det - cmath.exp(1j * params.phi)) <= 1e-12


class TestProtocolFamily:
    def test_evaluator_matches_unitary_at_bitwise(self):
        amps = solve_transport_amplitudes(2.0, 3.0)
        family = protocol_family(2.0, 3.0, 0.4, amps)
        direct = unitary_at(ProtocolParams(2.0, 3.0, 0.4, 0.0), amps)
        assert np.array_equal(family(0.0), direct)

    def test_accepts_negative_time(self):
        amps = solve_transport_amplitudes(1.0, 1.0)
        family = protocol_family(1.0, 1.0, 0.0, amps)
        assert unitary_deviation(family(-0.5)) <= 1e-12

    def test_solved_amplitudes_residuals_small(self):
        rng = np.random.default_rng(73)
        for _ in range(20):
            omega1 = rng.uniform(0.1, 10)
            omega2 = rng.uniform(0.1, 10)
            family = protocol_family(omega1, omega2, rng.uniform(-math.pi, math.pi),
                                     solve_transport_amplitudes(omega1, omega2))
            for residual in transport_residuals(family, rng.uniform(0, 10), 1e-6):
                assert residual.magnitude <= 1e-7

    def test_all_in_first_component_residuals(self):
        omega1 = 1.6
        family = protocol_family(omega1, 0.9, 0.3, AmplitudePair(1.0, 0.0))
        for t in (0.0, 0.4, 2.7):
            r1, r2 = transport_residuals(family, t, 1e-6)
            assert r1.magnitude == pytest.approx(omega1, abs=1e-6)
            assert r2.magnitude == pytest.approx(omega1, abs=1e-6)

    def test_label_records_parameters(self):
        family = protocol_family(2.0, 3.0, 0.4, solve_transport_amplitudes(2.0, 3.0))
        for token in ("omega1=2.0", "omega2=3.0", "phi=0.4"):
            assert token in family.label


class TestClosedFormResiduals:
    def test_solved_amplitudes_vanish(self):
        # tight tolerance needs moderate frequencies; rounding grows
        # with omega1*omega2/(omega1+omega2)
        rng = np.random.default_rng(79)
        for _ in range(100):
            omega1 = rng.uniform(1e-3, 2.0)
            omega2 = rng.uniform(1e-3, 2.0)
            r1, r2 = closed_form_residuals(omega1, omega2,
                                           solve_transport_amplitudes(omega1, omega2))
            assert abs(r1) <= 1e-15
            assert abs(r2) <= 1e-15

    def test_example_three_one(self):
        r1, r2 = closed_form_residuals(3.0, 1.0, solve_transport_amplitudes(3.0, 1.0))
        assert abs(r1) <= 1e-15
        assert abs(r2) <= 1e-15

    def test_first_component_only(self):
        r1, r2 = closed_form_residuals(2.0, 1.0, AmplitudePair(1.0, 0.0))
        assert r1 == -2j
        assert r2 == 2j

    def test_balanced_split_unequal_frequencies(self):
        r1, r2 = closed_form_residuals(1.0, 3.0, AmplitudePair(INV_SQRT2, INV_SQRT2))
        assert r1 == pytest.approx(1j, abs=1e-15)
        assert r2 == pytest.approx(-1j, abs=1e-15)

    def test_antisymmetric(self):
        rng = np.random.default_rng(83)
        for _ in range(50):
            chi = rng.uniform(0, math.pi / 2)
            r1, r2 = closed_form_residuals(rng.uniform(0.1, 10), rng.uniform(0.1, 10),
                                           AmplitudePair(math.cos(chi), math.sin(chi)))
            assert r1 == -r2


class TestDiagonalPancharatnam:
    def test_time_zero_no_phase(self):
        amps = solve_transport_amplitudes(1.0, 2.0)
        (v1, b1), (v2, b2) = diagonal_pancharatnam(ProtocolParams(1.0, 2.0, 0.0, 0.0), amps)
        assert (v1, b1) == (amps.a, 0.0)
        assert (v2, b2) == (amps.a, 0.0)

    def test_half_period_branch_edge(self):
        # omega1 * t hits pi exactly, so both wrapped phases must land
        # on the +pi side of the branch cut
        amps = solve_transport_amplitudes(1.0, 2.0)
        params = ProtocolParams(1.0, 2.0, 0.0, math.pi)
        (_, b1), (_, b2) = diagonal_pancharatnam(params, amps)
        assert b1 == math.pi
        assert b2 == math.pi

    def test_direct_substitution(self):
        amps = solve_transport_amplitudes(2.0, 1.0)
        (v1, b1), (v2, b2) = diagonal_pancharatnam(ProtocolParams(2.0, 1.0, 0.5, 0.3), amps)
        assert v1 == amps.a and v2 == amps.a
        assert b1 == pytest.approx(-0.6, abs=1e-15)
        assert b2 == pytest.approx(1.1, abs=1e-15)

    def test_agrees_with_engine_components(self):
        rng = np.random.default_rng(89)
        state = MixedState(np.array([0.5, 0.5]))
        for _ in range(200):
            params = ProtocolParams(rng.uniform(0.1, 10), rng.uniform(0.1, 10),
                                    rng.uniform(-math.pi, math.pi), rng.uniform(0, 10))
            amps = solve_transport_amplitudes(params.omega1, params.omega2)
            closed = diagonal_pancharatnam(params, amps)
            numeric = pancharatnam_components(state, unitary_at(params, amps))
            for (v_c, b_c), (v_n, b_n) in zip(closed, numeric):
                assert abs(v_c - v_n) <= 1e-12
                assert _angle_gap(b_c, b_n) <= 1e-12


class TestAnalyticPhaseVisibility:
    def test_symmetric_weights_zero_phase(self):
        weights = SpinWeights(0.5, 0.5)
        amps = solve_transport_amplitudes(1.0, 1.0)
        for t in (0.1, 0.7, 1.2):
            result = analytic_phase_visibility(ProtocolParams(1.0, 1.0, 0.0, t), weights, amps)
            if result.defined:
                assert abs(result.phase) <= 1e-12 or abs(abs(result.phase) - math.pi) <= 1e-12

    def test_destructive_node(self):
        weights = SpinWeights(0.5, 0.5)
        omega1 = 2.0
        amps = solve_transport_amplitudes(omega1, 1.0)
        params = ProtocolParams(omega1, 1.0, 0.0, math.pi / (2 * omega1))
        result = analytic_phase_visibility(params, weights, amps)
        assert not result.defined
        assert result.visibility <= 1e-12
        assert result.phase is None

    def test_hand_evaluated_point(self):
        # Oracle: numerator -0.4, denominator 0, radicand 0.16 worked by
        # hand for w = (0.7, 0.3), phi = 0, omega1*t = pi/2, a = 1/sqrt2.
        weights = SpinWeights(0.7, 0.3)
        amps = AmplitudePair(INV_SQRT2, INV_SQRT2)
        params = ProtocolParams(1.0, 1.0, 0.0, math.pi / 2)
        result = analytic_phase_visibility(params, weights, amps)
        assert result.defined
        assert result.phase == pytest.approx(-math.pi / 2, abs=1e-12)
        assert result.visibility == pytest.approx(0.4 * INV_SQRT2, abs=1e-12)

    def test_matches_engine_route(self):
        rng = np.random.default_rng(97)
        for _ in range(500):
            omega1 = rng.uniform(1e-3, 10)
            omega2 = rng.uniform(1e-3, 10)
            params = ProtocolParams(omega1, omega2, rng.uniform(-math.pi, math.pi),
                                    rng.uniform(0, 10))
            weights = boltzmann_weights(ThermalConfig(1.0, rng.uniform(0, 20)))
            amps = solve_transport_amplitudes(omega1, omega2)
            analytic = analytic_phase_visibility(params, weights, amps)
            engine = mixed_phase(MixedState(weights.as_array()), unitary_at(params, amps))
            assert abs(analytic.visibility - engine.visibility) <= 1e-10
            if min(analytic.visibility, engine.visibility) > 1e-9:
                assert _angle_gap(analytic.phase, engine.phase) <= 1e-10

    def test_visibility_bounded_by_amplitude(self):
        rng = np.random.default_rng(101)
        for _ in range(200):
            omega1 = rng.uniform(0.1, 10)
            omega2 = rng.uniform(0.1, 10)
            params = ProtocolParams(omega1, omega2, rng.uniform(-math.pi, math.pi),
                                    rng.uniform(0, 10))
            weights = boltzmann_weights(ThermalConfig(1.0, rng.uniform(0, 20)))
            amps = solve_transport_amplitudes(omega1, omega2)
            result = analytic_phase_visibility(params, weights, amps)
            assert result.visibility <= amps.a + 1e-12
            assert result.visibility <= 1.0 + 1e-12

    def test_visibility_independent_of_omega2_at_fixed_split(self):
        # finite-difference derivative with respect to omega2, holding
        # the amplitude split fixed
        weights = SpinWeights(0.8, 0.2)
        amps = AmplitudePair(0.6, 0.8)
        h = 1e-4
        for omega2 in (0.5, 2.0, 7.0):
            up = analytic_phase_visibility(
                ProtocolParams(1.5, omega2 + h, 0.9, 1.1), weights, amps).visibility
            down = analytic_phase_visibility(
                ProtocolParams(1.5, omega2 - h, 0.9, 1.1), weights, amps).visibility
            assert abs((up - down) / (2 * h)) <= 1e-12

    def test_consistency_triangle_three_routes(self):
        # closed form, engine sum, and the polar form of the weighted
        # diagonal components must agree pairwise
        rng = np.random.default_rng(103)
        for _ in range(10_000):
            omega1 = rng.uniform(1e-3, 10)
            omega2 = rng.uniform(1e-3, 10)
            params = ProtocolParams(omega1, omega2, rng.uniform(-math.pi, math.pi),
                                    rng.uniform(0, 10))
            weights = boltzmann_weights(ThermalConfig(1.0, rng.uniform(0, 20)))
            amps = solve_transport_amplitudes(omega1, omega2)
            analytic = analytic_phase_visibility(params, weights, amps)
            engine = mixed_phase(MixedState(weights.as_array()), unitary_at(params, amps))
            total = sum(w * v * cmath.exp(1j * beta)
                        for w, (v, beta) in zip(weights.as_array(),
                                                diagonal_pancharatnam(params, amps)))
            routes = [(analytic.visibility, analytic.phase if analytic.defined else None),
                      (engine.visibility, engine.phase if engine.defined else None),
                      (abs(total), cmath.phase(total))]
            for (v_x, p_x), (v_y, p_y) in zip(routes, routes[1:] + routes[:1]):
                assert abs(v_x - v_y) <= 1e-10
                if p_x is not None and p_y is not None and min(v_x, v_y) > 1e-9:
                    assert _angle_gap(p_x, p_y) <= 1e-10

    def test_pure_state_limits(self):
        amps = solve_transport_amplitudes(1.7, 0.6)
        params = ProtocolParams(1.7, 0.6, 0.8, 2.3)
        lower = analytic_phase_visibility(params, SpinWeights(1.0, 0.0), amps)
        assert lower.visibility == pytest.approx(amps.a, abs=1e-15)
        assert _angle_gap(lower.phase, -params.omega1 * params.t) <= 1e-12
        upper = analytic_phase_visibility(params, SpinWeights(0.0, 1.0), amps)
        assert upper.visibility == pytest.approx(amps.a, abs=1e-15)
        assert _angle_gap(upper.phase, params.omega1 * params.t + params.phi) <= 1e-12
