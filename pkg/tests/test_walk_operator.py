"""Tests for Fourier blocks, torus operators, evolution and matrix weights."""

import numpy as np
import pytest

from walkzeta.coin_models import crw_from_qw, generalized_grover_coin
from walkzeta.exceptions import DimensionError, SizeCapError, WalkZetaError
from walkzeta.schemas import StateField, TorusSpec
from walkzeta.walk_operator import (
    block_spectrum,
    delta_state,
    evolve_step,
    fourier_block,
    fourier_blocks,
    fourier_grid,
    full_operator,
    matrix_weight_origin,
    matrix_weights,
    measure,
    origin_weights,
    return_probabilities,
    total_measure,
    trajectory,
)


def random_state(rng, torus, d_c):
    values = rng.normal(size=torus.shape + (d_c,)) + 1j * rng.normal(size=torus.shape + (d_c,))
    return StateField(torus=torus, values=values)


class TestFourierGrid:
    """Tests for fourier_grid."""

    def test_shape_and_order(self):
        """Test lexicographic order with the last axis fastest."""
        grid = fourier_grid(2, 3)
        assert grid.shape == (9, 2)
        assert np.allclose(grid[0], [0, 0])
        assert np.allclose(grid[1], [0, 2 * np.pi / 3])
        assert np.allclose(grid[3], [2 * np.pi / 3, 0])

    def test_bad_arguments(self):
        """Test that a zero dimension raises."""
        with pytest.raises(DimensionError):
            fourier_grid(0, 4)


class TestFourierBlock:
    """Tests for fourier_block and fourier_blocks."""

    def test_simple_rw_symbol(self, rw):
        """Test that the simple random walk block is cos k."""
        for k in (0.0, 0.7, 2.0):
            assert fourier_block(rw, [k])[0, 0] == pytest.approx(np.cos(k))

    def test_phase_convention(self, grover3_f):
        """Test that a +1 mover carries exp(-i k)."""
        k = 0.4
        block = fourier_block(grover3_f, [k])
        assert np.allclose(block[2], np.exp(-1j * k) * grover3_f.coin[2])
        assert np.allclose(block[0], np.exp(1j * k) * grover3_f.coin[0])
        assert np.allclose(block[1], grover3_f.coin[1])

    def test_unitary_coin_gives_unitary_blocks(self, qw4_plane):
        """Test that blocks of a unitary walk are unitary."""
        blocks = fourier_blocks(qw4_plane, fourier_grid(2, 5))
        eye = np.eye(4)
        for b in blocks:
            assert np.allclose(b.conj().T @ b, eye)

    def test_wrong_wave_vector(self, qw4_plane):
        """Test that a 1-D wave vector is refused for a 2-D model."""
        with pytest.raises(DimensionError):
            fourier_block(qw4_plane, [0.1])

    def test_block_spectrum_on_unit_circle(self, grover3_f):
        """Test the size and modulus of the block spectrum."""
        spectrum = block_spectrum(grover3_f, 4)
        assert spectrum.shape == (12,)
        assert np.allclose(np.abs(spectrum), 1.0)


class TestFullOperator:
    """Tests for the dense torus operator."""

    def test_size(self, grover3_f, line6):
        """Test the d_c N^d size."""
        assert full_operator(grover3_f, line6).shape == (18, 18)

    def test_matches_evolve_step_line(self, rng, grover3_m, line6):
        """Test that one dense product is one evolution step on the line."""
        state = random_state(rng, line6, 3)
        dense = full_operator(grover3_m, line6) @ state.flat()
        assert np.allclose(dense, evolve_step(grover3_m, state).flat())

    def test_matches_evolve_step_plane(self, rng, qw4_plane, plane3):
        """Test the same on a 2-D torus."""
        state = random_state(rng, plane3, 4)
        dense = full_operator(qw4_plane, plane3) @ state.flat()
        assert np.allclose(dense, evolve_step(qw4_plane, state).flat())

    def test_block_diagonalized_by_fourier(self, grover3_f, line6):
        """Test that the dense spectrum is the union of the block spectra."""
        from walkzeta.numerics import eigenvalues, multiset_distance

        dense = eigenvalues(full_operator(grover3_f, line6))
        assert multiset_distance(dense, block_spectrum(grover3_f, 6)) < 1e-8

    def test_cap(self, grover3_f, line6):
        """Test that the dense cap is enforced."""
        with pytest.raises(SizeCapError):
            full_operator(grover3_f, line6, cap=10)

    def test_dimension_mismatch(self, grover3_f, plane3):
        """Test that a 1-D model on a 2-D torus raises."""
        with pytest.raises(DimensionError):
            full_operator(grover3_f, plane3)


class TestEvolution:
    """Tests for delta_state, evolve_step, trajectory and measure."""

    def test_simple_rw_one_step(self, rw):
        """Test that one step splits the mass between both neighbours."""
        torus = TorusSpec(d=1, N=8)
        state = evolve_step(rw, delta_state(torus, 1))
        mu = measure(state, 1)
        assert mu[1] == pytest.approx(0.5)
        assert mu[7] == pytest.approx(0.5)
        assert mu.sum() == pytest.approx(1.0)

    def test_trajectory_length(self, rw):
        """Test that trajectory yields steps + 1 states."""
        states = list(trajectory(rw, delta_state(TorusSpec(1, 8), 1), 5))
        assert len(states) == 6

    def test_quantum_walk_conserves_l2(self, grover3_f):
        """Test conservation of the p = 2 measure over 20 steps."""
        torus = TorusSpec(d=1, N=32)
        start = delta_state(torus, 3, amplitudes=np.full(3, 1.0 / np.sqrt(3.0)))
        for state in trajectory(grover3_f, start, 20):
            assert total_measure(state, 2) == pytest.approx(1.0, abs=1e-10)

    def test_crw_conserves_l1(self, qw4_plane):
        """Test conservation of the p = 1 measure for a correlated walk."""
        crw = crw_from_qw(qw4_plane)
        torus = TorusSpec(d=2, N=6)
        start = delta_state(torus, 4, amplitudes=np.full(4, 0.25))
        for state in trajectory(crw, start, 15):
            assert total_measure(state, 1) == pytest.approx(1.0, abs=1e-10)

    def test_interpolated_grover_grows(self):
        """Test that U(0) on the torus does not conserve the l2 measure."""
        model = generalized_grover_coin(4, 0.0, "f", "torus")
        torus = TorusSpec(d=2, N=6)
        start = delta_state(torus, 4, amplitudes=np.full(4, 0.5))
        totals = [total_measure(s, 2) for s in trajectory(model, start, 3)]
        assert totals[-1] > totals[0]

    def test_delta_state_chirality(self):
        """Test the default chirality and its range check."""
        state = delta_state(TorusSpec(1, 4), 3, chirality=2)
        assert state.values[0, 2] == 1.0
        with pytest.raises(DimensionError):
            delta_state(TorusSpec(1, 4), 3, chirality=3)

    def test_delta_state_amplitudes_shape(self):
        """Test that the origin vector must have d_c entries."""
        with pytest.raises(DimensionError):
            delta_state(TorusSpec(1, 4), 3, amplitudes=[1.0, 0.0])

    def test_state_model_mismatch(self, grover3_f, rw):
        """Test that a state with the wrong component count raises."""
        with pytest.raises(DimensionError):
            evolve_step(grover3_f, delta_state(TorusSpec(1, 4), 1))

    def test_measure_exponent(self, rw):
        """Test that only p in {1, 2} is accepted."""
        with pytest.raises(WalkZetaError):
            measure(delta_state(TorusSpec(1, 4), 1), 3)

    def test_negative_steps(self, rw):
        """Test that a negative step count raises."""
        with pytest.raises(WalkZetaError):
            list(trajectory(rw, delta_state(TorusSpec(1, 4), 1), -1))


class TestMatrixWeights:
    """Tests for matrix weights on Z^d."""

    def test_origin_at_zero_steps(self, grover3_f):
        """Test that Phi_0(0) is the identity."""
        assert np.allclose(matrix_weight_origin(grover3_f, 0), np.eye(3))

    def test_simple_rw_returns(self, rw):
        """Test the simple random walk return weights."""
        assert matrix_weight_origin(rw, 1)[0, 0] == pytest.approx(0.0)
        assert matrix_weight_origin(rw, 2)[0, 0] == pytest.approx(0.5)
        assert matrix_weight_origin(rw, 4)[0, 0] == pytest.approx(0.375)

    def test_origin_weights_single_pass(self, grover3_f):
        """Test that one recursion run reproduces Phi_r(0) for every r."""
        weights = origin_weights(grover3_f, 5)
        assert len(weights) == 6
        for r, phi in enumerate(weights):
            assert np.allclose(phi, matrix_weight_origin(grover3_f, r), atol=1e-12)

    def test_origin_weights_simple_rw(self, rw):
        """Test the simple random walk return weights from one pass."""
        values = [phi[0, 0].real for phi in origin_weights(rw, 4)]
        assert values == pytest.approx([1.0, 0.0, 0.5, 0.0, 0.375])

    def test_origin_weights_negative(self, rw):
        """Test that a negative r_max raises."""
        with pytest.raises(WalkZetaError):
            origin_weights(rw, -1)

    def test_window_radius(self, rw):
        """Test that the weight window is r * reach wide and zero outside."""
        weights = matrix_weights(rw, 3)
        assert weights.radius == 3
        assert weights.at((3,))[0, 0] == pytest.approx(0.125)
        assert np.allclose(weights.at((5,)), 0.0)

    def test_weights_agree_with_evolution(self, grover3_f):
        """Test that Phi_n(x) psi0 equals the evolved delta state on a large torus."""
        n, torus = 4, TorusSpec(d=1, N=16)
        psi0 = np.array([0.6, 0.0, 0.8])
        state = delta_state(torus, 3, amplitudes=psi0)
        for _ in range(n):
            state = evolve_step(grover3_f, state)
        weights = matrix_weights(grover3_f, n)
        for x in range(-n, n + 1):
            assert np.allclose(weights.at((x,)) @ psi0, state.values[x % 16])

    def test_return_probabilities(self, rw):
        """Test the p = 1 return probabilities of the simple random walk."""
        probs = return_probabilities(rw, 4, psi0=[1.0], p=1)
        assert np.allclose(probs, [1.0, 0.0, 0.5, 0.0, 0.375])
