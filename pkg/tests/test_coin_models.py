"""Tests for coin constructors, classification and model configs."""

import numpy as np
import pytest

from walkzeta.coin_models import (
    GROVER_ETA,
    classify,
    crw_from_qw,
    custom_model,
    flip_flop,
    four_state_qw_1d,
    four_state_qw_2d,
    generalized_grover_coin,
    generalized_grover_matrix,
    grover_coin,
    model_from_config,
    model_to_config,
    multistate_rw,
    simple_rw,
    three_state_qw,
    uniform_rw,
    window_rw,
)
from walkzeta.exceptions import ConfigError, ModelError
from walkzeta.numerics import is_unitary
from walkzeta.schemas import ModelFamily, ShiftType


class TestThreeStateWalk:
    """Tests for three_state_qw."""

    def test_grover_eta_gives_grover_coin(self):
        """Test that cos(eta) = -1/3 reproduces the 3x3 Grover matrix."""
        model = three_state_qw(GROVER_ETA, "m")
        assert np.allclose(model.coin, grover_coin(3))

    def test_unitary_for_any_eta(self):
        """Test unitarity over a spread of angles and both shifts."""
        for eta in (0.0, 0.4, 1.3, GROVER_ETA, 3.0):
            for shift in ("m", "f"):
                assert is_unitary(three_state_qw(eta, shift).coin)

    def test_flip_flop_swaps_outer_rows(self):
        """Test that F-type swaps rows 1 and 3 of the moving coin."""
        m = three_state_qw(0.7, "m").coin
        f = three_state_qw(0.7, "f").coin
        assert np.allclose(f, m[[2, 1, 0]])

    def test_displacements(self):
        """Test the step set and lattice dimension."""
        model = three_state_qw(1.0, ShiftType.F)
        assert model.displacements == ((-1,), (0,), (1,))
        assert model.lattice_dim == 1
        assert model.params == {"eta": 1.0}


class TestFourStateWalks:
    """Tests for the four-state coins."""

    def test_line_unitary(self):
        """Test unitarity on the line for several p."""
        for p in (0.0, 0.3, 0.5, 1.0):
            for shift in ("m", "f"):
                assert is_unitary(four_state_qw_1d(p, shift).coin)

    def test_line_flip_flop_reverses_rows(self):
        """Test that the 1D F-type coin is the moving coin with rows reversed."""
        m = four_state_qw_1d(0.3, "m").coin
        assert np.allclose(four_state_qw_1d(0.3, "f").coin, m[::-1])

    def test_plane_flip_flop(self):
        """Test that the 2D F-type coin is (I_2 (x) sigma) times the moving coin."""
        m = four_state_qw_2d(0.6, "m").coin
        assert np.allclose(four_state_qw_2d(0.6, "f").coin, flip_flop(m, 2))

    def test_plane_displacements(self):
        """Test the (-e1, +e1, -e2, +e2) ordering."""
        model = four_state_qw_2d(0.5, "m")
        assert model.displacements == ((-1, 0), (1, 0), (0, -1), (0, 1))

    def test_p_out_of_range(self):
        """Test that p outside [0, 1] raises."""
        with pytest.raises(ModelError):
            four_state_qw_1d(1.5, "f")

    def test_bad_shift(self):
        """Test that an unknown shift raises."""
        with pytest.raises(ModelError):
            four_state_qw_2d(0.5, "x")


class TestCorrelatedWalks:
    """Tests for crw_from_qw."""

    def test_hadamard_square(self):
        """Test that the CRW coin is the entrywise square of the QW coin."""
        qw = four_state_qw_1d(0.3, "f")
        crw = crw_from_qw(qw)
        assert np.allclose(crw.coin, qw.coin * qw.coin)
        assert crw.family is ModelFamily.CRW
        assert crw.base_family is ModelFamily.FOUR_STATE_QW_1D

    def test_doubly_stochastic(self):
        """Test that squaring a real orthogonal coin gives a doubly stochastic matrix."""
        flags = classify(crw_from_qw(three_state_qw(1.1, "m")))
        assert flags.column_stochastic
        assert flags.doubly_stochastic
        assert flags.conserved_norm == 1

    def test_requires_quantum_parent(self):
        """Test that a random walk has no CRW."""
        with pytest.raises(ModelError):
            crw_from_qw(simple_rw())


class TestGeneralizedGrover:
    """Tests for the U(a) interpolation."""

    def test_endpoints(self):
        """Test a = 1 (Grover) and a = 0 (all-ones minus identity)."""
        assert np.allclose(generalized_grover_matrix(4, 1.0), grover_coin(4))
        assert np.allclose(generalized_grover_matrix(4, 0.0), np.ones((4, 4)) - np.eye(4))

    def test_unitary_only_at_grover(self):
        """Test unitarity of U(a) for d_c = 4."""
        assert is_unitary(generalized_grover_matrix(4, 1.0))
        assert not is_unitary(generalized_grover_matrix(4, 0.5))

    def test_torus_dimension(self):
        """Test that the torus lattice uses d = d_c / 2."""
        model = generalized_grover_coin(6, 0.5, "f", "torus")
        assert model.lattice_dim == 3
        assert len(model.displacements) == 6

    def test_torus_needs_even_size(self):
        """Test that an odd torus coin raises."""
        with pytest.raises(ModelError):
            generalized_grover_coin(5, 0.5, "f", "torus")

    def test_lattice_size_mismatch(self):
        """Test that the 1d3 lattice insists on d_c = 3."""
        with pytest.raises(ModelError):
            generalized_grover_coin(4, 0.5, "f", "1d3")

    def test_a_out_of_range(self):
        """Test that a outside [0, 1] raises."""
        with pytest.raises(ModelError):
            generalized_grover_coin(3, 1.5, "m", "1d3")

    def test_unknown_lattice(self):
        """Test that an unknown lattice name raises."""
        with pytest.raises(ModelError):
            generalized_grover_coin(4, 0.5, "m", "hex")


class TestRandomWalks:
    """Tests for the scalar random walks."""

    def test_simple(self):
        """Test the simple random walk."""
        model = simple_rw()
        assert model.d_c == 1
        assert model.displacements == ((-1,), (1,))
        assert model.jump_weights == (0.5, 0.5)

    def test_weights_must_sum_to_one(self):
        """Test that unnormalized weights raise."""
        with pytest.raises(ModelError):
            multistate_rw({-1: 0.5, 1: 0.4})

    def test_negative_weight(self):
        """Test that a negative weight raises."""
        with pytest.raises(ModelError):
            multistate_rw({-1: 1.5, 1: -0.5})

    def test_window(self):
        """Test the window walk's weights."""
        model = window_rw(0.2, 2)
        weights = dict(zip((v[0] for v in model.displacements), model.jump_weights))
        assert weights[0] == pytest.approx(0.2)
        for x in (-2, -1, 1, 2):
            assert weights[x] == pytest.approx(0.2)

    def test_uniform(self):
        """Test that the uniform walk weighs all 2L+1 jumps equally."""
        model = uniform_rw(3)
        assert len(model.jump_weights) == 7
        assert np.allclose(model.jump_weights, 1.0 / 7.0)

    def test_classification(self):
        """Test that a random walk conserves the p = 1 measure."""
        flags = classify(simple_rw())
        assert not flags.unitary
        assert flags.conserved_norm == 1

    def test_deterministic_walk_is_unitary(self):
        """Test that a single jump carrying all mass counts as unitary."""
        assert classify(multistate_rw({1: 1.0})).conserved_norm == 2


class TestClassify:
    """Tests for classify on coined walks."""

    def test_quantum_walk(self):
        """Test that a quantum walk conserves the p = 2 measure."""
        assert classify(three_state_qw(GROVER_ETA, "f")).conserved_norm == 2

    def test_interpolated_grover_conserves_nothing(self):
        """Test that U(1/2) is neither unitary nor stochastic."""
        flags = classify(generalized_grover_coin(4, 0.5, "f", "2d4"))
        assert flags.conserved_norm is None


class TestModelConfig:
    """Tests for model_from_config and model_to_config."""

    def test_grover_keyword(self):
        """Test that eta may be given as 'grover'."""
        model = model_from_config({"family": "three_state_qw", "eta": "grover", "shift": "m"})
        assert np.allclose(model.coin, grover_coin(3))

    def test_string_weight_keys(self):
        """Test JSON-style string keys for random walk weights."""
        model = model_from_config({"family": "multistate_rw", "weights": {"-1": 0.5, "1": 0.5}})
        assert model.displacements == ((-1,), (1,))

    def test_crw_of(self):
        """Test the nested CRW form."""
        model = model_from_config({"crw_of": {"family": "four_state_qw_2d", "p": 0.4}})
        assert model.family is ModelFamily.CRW
        assert model.base_family is ModelFamily.FOUR_STATE_QW_2D

    def test_torus_grover_from_d(self):
        """Test that a torus Grover config may give d instead of d_c."""
        model = model_from_config({"family": "generalized_grover", "lattice": "torus", "d": 2})
        assert model.d_c == 4

    def test_custom(self):
        """Test a custom coin with [re, im] entries."""
        cfg = {"family": "custom", "coin": [[0, [0, 1]], [[0, 1], 0]], "displacements": [-1, 1]}
        model = model_from_config(cfg)
        assert model.coin[0, 1] == 1j
        assert model.displacements == ((-1,), (1,))

    def test_round_trip(self):
        """Test that constructor-built models survive model_to_config."""
        models = [
            three_state_qw(0.9, "m"),
            four_state_qw_1d(0.3, "f"),
            crw_from_qw(four_state_qw_2d(0.7, "m")),
            generalized_grover_coin(4, 0.25, "f", "1d4"),
            generalized_grover_coin(6, 0.5, "f", "torus"),
            window_rw(0.2, 2),
            custom_model([[0, 1], [1, 0]], [[-1], [1]]),
        ]
        for model in models:
            again = model_from_config(model_to_config(model))
            assert again.model_id == model.model_id
            assert np.allclose(again.coin, model.coin)
            assert again.displacements == model.displacements

    def test_unknown_family(self):
        """Test that an unknown family raises ConfigError."""
        with pytest.raises(ConfigError):
            model_from_config({"family": "levy_flight"})

    def test_model_error_becomes_config_error(self):
        """Test that invalid parameters surface as ConfigError."""
        with pytest.raises(ConfigError):
            model_from_config({"family": "four_state_qw_1d", "p": 2.0})

    def test_missing_weights(self):
        """Test that a random walk without weights raises."""
        with pytest.raises(ConfigError):
            model_from_config({"family": "multistate_rw"})

    def test_not_an_object(self):
        """Test that a list is rejected."""
        with pytest.raises(ConfigError):
            model_from_config([1, 2])
