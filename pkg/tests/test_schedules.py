import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qaa.reference_tables import FIXED_POINT_N8_L21, NON_AMPLIFYING_ROWS
from qaa.schedules import (
    MAX_PI3_DEPTH,
    ParameterSequence,
    fixed_point_sequence,
    generate_qaao_sequence,
    k_star,
    noisy_optimal_sequence,
    optimal_sequence,
    pi3_failure_probability,
    pi3_matrix,
    pi3_sequence,
)
from qaa.subspace import (
    IterationParams,
    StateAngles,
    apply_iteration,
    increment,
    initial_angles,
    is_qaao,
    optimal_params,
)


class TestKStar:
    def test_known_values(self):
        # floor(pi*sqrt(N/m)/4 - 1/2) computed by hand
        assert k_star(8) == 12
        assert k_star(2) == 1
        assert k_star(4) == 2
        assert k_star(10) == 24
        assert k_star(8, 4) == 5

    def test_matches_direct_formula(self):
        for n in range(2, 20):
            want = math.floor(math.pi / 4.0 * math.sqrt(2**n) - 0.5)
            assert k_star(n) == want


class TestParameterSequence:
    def test_json_roundtrip(self):
        seq = optimal_sequence(6)
        back = ParameterSequence.from_json(seq.to_json())
        assert back == seq

    def test_json_is_deterministic(self):
        assert optimal_sequence(6).to_json() == optimal_sequence(6).to_json()

    def test_rejects_unknown_kind(self):
        with pytest.raises(ValueError):
            ParameterSequence(params=(), kind="mystery")

    def test_len(self):
        assert len(optimal_sequence(8)) == 13


class TestOptimalSequence:
    @pytest.mark.parametrize("n", range(2, 13))
    def test_reaches_probability_one(self, n):
        seq = optimal_sequence(n)
        assert len(seq) == k_star(n) + 1
        state = initial_angles(n)
        theta0 = state.theta
        for p in seq.params:
            state = apply_iteration(p, state, theta0)
        assert state.target_probability == pytest.approx(1.0, abs=1e-10)

    def test_multi_target(self):
        seq = optimal_sequence(8, m=4)
        state = initial_angles(8, 4)
        theta0 = state.theta
        for p in seq.params:
            state = apply_iteration(p, state, theta0)
        assert state.target_probability == pytest.approx(1.0, abs=1e-10)

    def test_every_step_amplifies(self):
        seq = optimal_sequence(8)
        state = initial_angles(8)
        theta0 = state.theta
        for p in seq.params:
            assert increment(p, state, theta0) > 0.0
            state = apply_iteration(p, state, theta0)

    def test_rejects_dense_marking(self):
        with pytest.raises(ValueError):
            optimal_sequence(3, m=3)

    def test_query_scaling(self):
        # length stays within the ~ (pi/4) sqrt(N) envelope
        for n in (4, 8, 12):
            assert len(optimal_sequence(n)) <= math.pi / 4.0 * math.sqrt(2**n) + 1


class TestRandomQaao:
    def test_each_step_satisfies_predicate(self):
        seq = generate_qaao_sequence(8, seed=3)
        state = initial_angles(8)
        theta0 = state.theta
        for p in seq.params[:-1]:
            assert is_qaao(p, state, theta0, 2**8, seq.c)
            state = apply_iteration(p, state, theta0)
        state = apply_iteration(seq.params[-1], state, theta0)
        assert state.target_probability == pytest.approx(1.0, abs=1e-10)

    def test_deterministic_per_seed(self):
        assert generate_qaao_sequence(8, seed=5) == generate_qaao_sequence(8, seed=5)

    def test_seeds_differ(self):
        assert generate_qaao_sequence(8, seed=1) != generate_qaao_sequence(8, seed=2)

    @pytest.mark.parametrize("seed", range(8))
    def test_length_band(self, seed):
        # random QAAO walks need at least the optimal count and should stay
        # within a small multiple of it
        seq = generate_qaao_sequence(8, seed=seed)
        assert k_star(8) + 1 <= len(seq) <= 60

    def test_partial_threshold_has_no_closing_step(self):
        seq = generate_qaao_sequence(8, seed=0, target_threshold=0.5)
        state = initial_angles(8)
        theta0 = state.theta
        for p in seq.params:
            state = apply_iteration(p, state, theta0)
        assert state.target_probability >= 0.5
        assert state.target_probability < 1.0 - 1e-6

    def test_rejects_bad_c(self):
        with pytest.raises(ValueError):
            generate_qaao_sequence(8, c=0.5)


class TestNoisyOptimal:
    def test_zero_noise_is_optimal(self):
        # beta = pi and beta = -pi generate the same unitary, so compare
        # parameters modulo 2*pi
        noisy = noisy_optimal_sequence(8, 0.0, seed=1).params
        ideal = optimal_sequence(8).params
        assert len(noisy) == len(ideal)
        for a, b in zip(noisy, ideal):
            assert math.isclose(math.cos(a.beta - b.beta), 1.0, abs_tol=1e-12)
            assert math.isclose(math.cos(a.gamma - b.gamma), 1.0, abs_tol=1e-12)

    def test_bounded_perturbation(self):
        # while the noisy trajectory stays out of the closing branch the
        # ideal beta is pi, so the drawn beta stays within delta of it
        delta = 0.2 * math.pi
        seq = noisy_optimal_sequence(8, delta, seed=4)
        for p in seq.params[:-1]:
            assert abs(abs(p.beta) - math.pi) <= delta + 1e-12

    def test_shared_pulse_error(self):
        # beta and gamma carry the same draw, so their offsets from the
        # per-state ideal parameters agree step by step
        delta = 0.1 * math.pi
        seq = noisy_optimal_sequence(8, delta, seed=6)
        state = initial_angles(8)
        theta0 = state.theta
        for p in seq.params:
            ideal = optimal_params(state, theta0)
            offset_b = math.remainder(p.beta - ideal.beta, 2.0 * math.pi)
            offset_g = math.remainder(p.gamma - ideal.gamma, 2.0 * math.pi)
            assert offset_b == pytest.approx(offset_g, abs=1e-12)
            assert abs(offset_b) <= delta
            state = apply_iteration(p, state, theta0)

    def test_rejects_large_delta(self):
        with pytest.raises(ValueError):
            noisy_optimal_sequence(8, math.pi / 2.0)

    def test_mild_noise_still_amplifies(self):
        state = initial_angles(8)
        theta0 = state.theta
        for p in noisy_optimal_sequence(8, 0.05 * math.pi, seed=2).params:
            state = apply_iteration(p, state, theta0)
        assert state.target_probability > 0.9


class TestFixedPoint:
    def test_reproduces_published_n8_schedule(self):
        seq = fixed_point_sequence(21, math.sqrt(0.1))
        for (_, _, _, beta, gamma, _, _), p in zip(FIXED_POINT_N8_L21, seq.params):
            assert p.beta == pytest.approx(beta, abs=1e-3)
            assert p.gamma == pytest.approx(gamma, abs=1e-3)

    def test_reproduces_published_trajectory(self):
        seq = fixed_point_sequence(21, math.sqrt(0.1))
        state = initial_angles(8)
        theta0 = state.theta
        negatives = []
        for (index, theta, phi, _, _, inc, flag), p in zip(
            FIXED_POINT_N8_L21, seq.params
        ):
            assert state.theta == pytest.approx(theta, abs=1e-3)
            # phi is ill-conditioned where theta turns around; allow a bit
            # more slack there than for the well-conditioned columns
            assert state.phi == pytest.approx(phi, abs=3e-3)
            d = increment(p, state, theta0)
            assert d == pytest.approx(inc, abs=1e-3)
            assert (d < 0.0) == (flag == "X")
            if d < 0.0:
                negatives.append(index)
            state = apply_iteration(p, state, theta0)
        assert tuple(negatives) == NON_AMPLIFYING_ROWS
        assert state.target_probability == pytest.approx(0.9841, abs=1e-3)

    def test_gamma_symmetry(self):
        seq = fixed_point_sequence(9, 0.2)
        betas = [p.beta for p in seq.params]
        gammas = [p.gamma for p in seq.params]
        assert gammas == betas[::-1]

    def test_independent_of_register_size(self):
        seq = fixed_point_sequence(7, 0.1)
        assert seq.n is None
        assert seq.queries_per_iteration == 2

    def test_fixed_point_property(self):
        # a sufficiently long schedule ends above 1-delta^2, and so does any
        # longer one (the fixed-point guarantee is on the complete schedule)
        delta = 0.1
        cases = {6: (26, 32, 45), 8: (50, 60, 75)}
        for n, lengths in cases.items():
            theta0 = initial_angles(n).theta
            for length in lengths:
                state = initial_angles(n)
                for p in fixed_point_sequence(length, delta).params:
                    state = apply_iteration(p, state, theta0)
                assert state.target_probability >= 1.0 - delta**2 - 1e-9

    @pytest.mark.parametrize("bad", [0.0, 1.0, -0.3, 2.0])
    def test_rejects_bad_delta(self, bad):
        with pytest.raises(ValueError):
            fixed_point_sequence(5, bad)

    def test_rejects_zero_length(self):
        with pytest.raises(ValueError):
            fixed_point_sequence(0, 0.1)


class TestPi3:
    def test_query_counts(self):
        for depth in range(0, 7):
            assert pi3_sequence(depth).oracle_queries == (3**depth - 1) // 2

    def test_depth_zero_is_identity(self):
        program = pi3_sequence(0)
        assert program.ops == ()
        np.testing.assert_allclose(pi3_matrix(program, 0.3), np.eye(2), atol=1e-15)

    def test_unitarity(self):
        theta0 = initial_angles(8).theta
        for depth in range(0, 6):
            u = pi3_matrix(pi3_sequence(depth), theta0)
            np.testing.assert_allclose(u.conj().T @ u, np.eye(2), atol=1e-12)

    @pytest.mark.parametrize("n", [4, 8, 12])
    def test_cubic_error_reduction(self, n):
        theta0 = initial_angles(n).theta
        eps = math.cos(0.5 * theta0) ** 2
        for depth in range(0, 5):
            got = pi3_failure_probability(depth, theta0)
            assert got == pytest.approx(eps ** (3**depth), rel=1e-9, abs=1e-300)

    def test_eight_qubit_threshold_depth(self):
        # n=8: failure eps = 255/256; depth 6 is the first depth with
        # success probability >= 0.9
        theta0 = initial_angles(8).theta
        probs = [1.0 - pi3_failure_probability(d, theta0) for d in range(0, 8)]
        first = next(d for d, p in enumerate(probs) if p >= 0.9)
        assert first == 6
        assert pi3_sequence(6).oracle_queries == 364

    def test_rejects_out_of_range_depth(self):
        with pytest.raises(ValueError):
            pi3_sequence(-1)
        with pytest.raises(ValueError):
            pi3_sequence(MAX_PI3_DEPTH + 1)

    @settings(max_examples=20, deadline=None)
    @given(st.integers(1, 4), st.floats(0.05, 1.5))
    def test_recursion_structure(self, depth, theta0):
        # U_{m} = U_{m-1} S_t U_{m-1}^dagger S_s U_{m-1} as matrices
        prev = pi3_matrix(pi3_sequence(depth - 1), theta0)
        got = pi3_matrix(pi3_sequence(depth), theta0)
        s0 = np.array([math.sin(0.5 * theta0), math.cos(0.5 * theta0)])
        phase = np.exp(1j * math.pi / 3.0)
        s_t = np.diag([phase, 1.0])
        s_s = np.eye(2, dtype=complex) - (1.0 - phase) * np.outer(s0, s0)
        want = prev @ s_s @ prev.conj().T @ s_t @ prev
        np.testing.assert_allclose(got, want, atol=1e-12)
