"""Tests for the closed-form factorizations."""

import math

import numpy as np
import pytest

from walkzeta.closed_forms import (
    F_value,
    F_values,
    all_closed_form_ids,
    alpha_c,
    angle_grid,
    closed_eigenvalues,
    closed_form_for,
    closed_zeta_inv,
    eigen_product_residual,
    eigenvalue_residual,
    has_closed_eigenvalues,
    log_series_lemma,
    model_for,
    prefactor,
    rw_limit_zeta_closed,
    verify_closed_form,
)
from walkzeta.coin_models import (
    GROVER_ETA,
    crw_from_qw,
    custom_model,
    four_state_qw_1d,
    generalized_grover_coin,
    simple_rw,
)
from walkzeta.exceptions import ClosedFormError, DimensionError
from walkzeta.schemas import ClosedFormFamily, ClosedFormId, ShiftType, TorusSpec
from walkzeta.zeta_engine import zeta_inv_finite

CF = ClosedFormFamily
U_SAMPLES = (0.3, -0.45, 0.2 + 0.3j, -0.1 - 0.4j)


def grid_for(cid):
    return angle_grid(cid.lattice_dim, {1: 12, 2: 5, 3: 3}[cid.lattice_dim])


class TestDeterminantFactorization:
    """Tests that det(I - u M(k)) = prefactor(u) F(k, u) for every family."""

    def test_every_family(self):
        """Test the factorization for all families at a spread of parameters."""
        for cid in all_closed_form_ids():
            assert verify_closed_form(cid, grid_for(cid), U_SAMPLES) < 1e-9, cid.label

    def test_grover_three_state_at_zero(self):
        """Test the Grover walk at k = 0, where det(I - u G) = (1 - u)(1 + u)^2."""
        cid = ClosedFormId(CF.QW3, shift=ShiftType.M, eta=GROVER_ETA)
        u = 0.3
        assert prefactor(cid, u) * F_value(cid, 0.0, u) == pytest.approx((1 - u) * (1 + u) ** 2)

    def test_torus_line_case(self):
        """Test that the d = 1 torus form is 1 - 2u cos k + u^2 for any a."""
        for a in (0.0, 0.5, 1.0):
            cid = ClosedFormId(CF.GG_TORUS, a=a, d=1)
            assert F_value(cid, [0.7], 0.4) == pytest.approx(1 - 0.8 * math.cos(0.7) + 0.16)
            assert prefactor(cid, 0.4) == pytest.approx(1.0)

    def test_uniform_rw_near_zero_angle(self):
        """Test that the uniform walk symbol is 1 at t = 0 despite the 0/0 ratio."""
        cid = ClosedFormId(CF.RW_UNIFORM, L=2)
        assert F_value(cid, 0.0, 0.5) == pytest.approx(0.5)
        assert F_value(cid, 1e-9, 0.5) == pytest.approx(0.5)

    def test_window_matches_general(self):
        """Test the window form against the general random walk form."""
        window = ClosedFormId(CF.RW_WINDOW, p0=0.2, L=2)
        general = closed_form_for(model_for(window))
        th = angle_grid(1, 9)
        assert np.allclose(F_values(window, th, 0.7), F_values(general, th, 0.7))

    def test_angle_count_checked(self):
        """Test that a 2-D form refuses three angles."""
        cid = ClosedFormId(CF.QW4_2D, p=0.3)
        with pytest.raises(DimensionError):
            F_value(cid, [0.1, 0.2, 0.3], 0.1)


class TestEigenvalues:
    """Tests for the closed eigenvalue lists."""

    def test_availability(self):
        """Test which families carry closed eigenvalues."""
        assert has_closed_eigenvalues(ClosedFormId(CF.QW3, eta=1.0))
        assert has_closed_eigenvalues(ClosedFormId(CF.QW4_1D, shift=ShiftType.F))
        assert has_closed_eigenvalues(ClosedFormId(CF.CRW4_2D, shift=ShiftType.M))
        assert not has_closed_eigenvalues(ClosedFormId(CF.CRW3, eta=1.0))
        assert not has_closed_eigenvalues(ClosedFormId(CF.QW4_1D, shift=ShiftType.M))
        assert not has_closed_eigenvalues(ClosedFormId(CF.GG_2D, a=0.5))

    def test_missing_list_raises(self):
        """Test that asking for an unknown list raises."""
        with pytest.raises(ClosedFormError):
            closed_eigenvalues(ClosedFormId(CF.GG_TORUS, d=2), [0.1, 0.2])

    def test_qw3_trivial_eigenvalue(self):
        """Test that -(-1)^delta is always an eigenvalue."""
        for shift, expected in ((ShiftType.M, 1.0), (ShiftType.F, -1.0)):
            vals = closed_eigenvalues(ClosedFormId(CF.QW3, shift=shift, eta=1.2), 0.5)
            assert min(abs(v - expected) for v in vals) < 1e-12

    def test_numeric_agreement(self):
        """Test closed against numeric eigenvalues for every family that has them."""
        for cid in all_closed_form_ids():
            if has_closed_eigenvalues(cid):
                assert eigenvalue_residual(cid, grid_for(cid)) < 1e-6, cid.label

    def test_hausdorff_metric(self):
        """Test that the Hausdorff reading is small and never above the matching one."""
        cid = ClosedFormId(CF.QW3, shift=ShiftType.F, eta=1.2)
        grid = grid_for(cid)
        hausdorff = eigenvalue_residual(cid, grid, metric="hausdorff")
        assert hausdorff < 1e-6
        assert hausdorff <= eigenvalue_residual(cid, grid) + 1e-15

    def test_unknown_metric(self):
        """Test that an unknown eigenvalue metric raises."""
        cid = ClosedFormId(CF.QW3, eta=1.2)
        with pytest.raises(ClosedFormError):
            eigenvalue_residual(cid, grid_for(cid), metric="l1")

    def test_eigen_product(self):
        """Test that prod (1 - u lambda) reproduces prefactor times F."""
        for cid in all_closed_form_ids():
            if has_closed_eigenvalues(cid):
                assert eigen_product_residual(cid, grid_for(cid), U_SAMPLES) < 1e-9, cid.label


class TestAlphaReadings:
    """Tests for the two readings of the CRW centre term."""

    def test_agree_at_half(self):
        """Test that both readings coincide when p = 1/2."""
        t = np.linspace(0, 2 * np.pi, 7)
        assert np.allclose(alpha_c(0.5, t), alpha_c(0.5, t, "printed"))

    def test_only_consistent_reading_matches(self):
        """Test that the printed reading misses the numeric eigenvalues once p != 1/2."""
        cid = ClosedFormId(CF.CRW4_1D, shift=ShiftType.F, p=0.8)
        grid = angle_grid(1, 16)
        assert eigenvalue_residual(cid, grid, "consistent") < 1e-6
        assert eigenvalue_residual(cid, grid, "printed") > 1e-3

    def test_unknown_reading(self):
        """Test that an unknown reading raises."""
        with pytest.raises(ClosedFormError):
            alpha_c(0.3, [0.1], "other")


class TestRandomWalkLimit:
    """Tests for the random walk limit formulas."""

    def test_closed_value(self):
        """Test (1 + sqrt(1 - u^2)) / 2 at u = 0.6."""
        assert rw_limit_zeta_closed(0.6) == pytest.approx(0.9)

    def test_closed_value_domain(self):
        """Test that |u| >= 1 raises."""
        with pytest.raises(ClosedFormError):
            rw_limit_zeta_closed(1.0)

    def test_log_series(self):
        """Test the series against log((1 + sqrt(1 - x^2)) / 2)."""
        for x, terms in ((0.1, 60), (0.5, 60), (0.9, 400)):
            exact = math.log((1 + math.sqrt(1 - x * x)) / 2)
            assert log_series_lemma(x, terms) == pytest.approx(exact, abs=1e-12)

    def test_log_series_first_term(self):
        """Test that one term gives -x^2 / 4."""
        assert log_series_lemma(0.4, 1) == pytest.approx(-0.04)

    def test_closed_zeta_matches_engine(self):
        """Test the closed finite-N value against the engine."""
        cid = closed_form_for(simple_rw())
        for N in (4, 9):
            engine = zeta_inv_finite(simple_rw(), TorusSpec(1, N), 0.5)
            assert closed_zeta_inv(cid, 0.5, N) == pytest.approx(engine, rel=1e-12)


class TestLookup:
    """Tests for closed_form_for and model_for."""

    def test_quantum_and_correlated(self):
        """Test the QW and CRW mappings."""
        qw = four_state_qw_1d(0.3, "m")
        assert closed_form_for(qw) == ClosedFormId(CF.QW4_1D, shift=ShiftType.M, p=0.3)
        assert closed_form_for(crw_from_qw(qw)).family is CF.CRW4_1D

    def test_random_walk(self):
        """Test that any scalar walk maps to the general random walk form."""
        cid = closed_form_for(simple_rw())
        assert cid.family is CF.RW_GENERAL
        assert cid.weights == ((-1, 0.5), (1, 0.5))

    def test_torus_grover(self):
        """Test the F-type torus mapping and the missing M-type form."""
        f = closed_form_for(generalized_grover_coin(6, 0.5, "f", "torus"))
        assert f == ClosedFormId(CF.GG_TORUS, shift=ShiftType.F, a=0.5, d=3)
        assert closed_form_for(generalized_grover_coin(6, 0.5, "m", "torus")) is None

    def test_custom(self):
        """Test that custom coins have no closed form."""
        assert closed_form_for(custom_model([[1]], [[1]])) is None

    def test_model_for_round_trip(self):
        """Test that model_for and closed_form_for invert each other."""
        for cid in all_closed_form_ids():
            if cid.family in (CF.RW_WINDOW, CF.RW_UNIFORM):
                continue
            again = closed_form_for(model_for(cid))
            assert again.family is cid.family, cid.label

    def test_torus_m_type_has_no_model(self):
        """Test that the torus form is F-type only."""
        with pytest.raises(ClosedFormError):
            model_for(ClosedFormId(CF.GG_TORUS, shift=ShiftType.M, d=2))

    def test_labels(self):
        """Test the label format."""
        assert ClosedFormId(CF.QW4_2D, shift=ShiftType.M, p=0.25).label == "qw4_2d[m](p=0.25)"
        assert ClosedFormId(CF.RW_WINDOW, p0=0.2, L=3).label == "rw_window(p0=0.2,L=3)"
