"""Coefficient suite: C_r by quadrature, by return matrix weights and in closed form."""

from typing import List, Optional, Sequence, Tuple

from ..closed_forms import closed_form_for, has_closed_eigenvalues
from ..coin_models import GROVER_ETA, four_state_qw_1d, four_state_qw_2d, simple_rw, three_state_qw
from ..schemas import CheckResult, SuiteResult, TorusSpec, WalkModel
from ..zeta_engine import (
    c_r_closed,
    c_r_series,
    c_r_simple_rw_exact,
    c_r_weight_series,
    series_consistency,
)
from .common import make_check

ROUTE_TOL = 1e-8
SERIES_TOL = 1e-10
R_MAX = 12
N_QUAD = 512


def default_models() -> List[WalkModel]:
    return [
        simple_rw(),
        three_state_qw(GROVER_ETA, "m"),
        three_state_qw(GROVER_ETA, "f"),
        four_state_qw_1d(0.5, "f"),
        four_state_qw_2d(0.5, "f"),
    ]


def check_routes(model: WalkModel, r_max: int = R_MAX, n_quad: int = N_QUAD) -> List[CheckResult]:
    quad = c_r_series(model, n_quad, r_max, serial=True)
    weight = c_r_weight_series(model, r_max)
    worst = max(abs(q - w) for q, w in zip(quad, weight))
    checks = [make_check(f"{model.model_id} quadrature vs weight", worst, ROUTE_TOL, r_max)]

    cid = closed_form_for(model)
    if cid is not None and has_closed_eigenvalues(cid):
        closed = [c_r_closed(cid, r, n_quad) for r in range(1, r_max + 1)]
        gap = max(abs(q - c) for q, c in zip(quad, closed))
        checks.append(make_check(f"{model.model_id} quadrature vs closed", gap, ROUTE_TOL, r_max))
    return checks


def check_simple_rw_exact(r_max: int = R_MAX) -> CheckResult:
    weights = c_r_weight_series(simple_rw(), r_max)
    worst = max(abs(w - c_r_simple_rw_exact(r)) for r, w in enumerate(weights, start=1))
    return make_check("simple rw return probabilities", worst, ROUTE_TOL, r_max)


def series_cases() -> List[Tuple[WalkModel, int, float]]:
    return [(simple_rw(), 8, 0.3), (four_state_qw_1d(0.5, "f"), 8, 0.2)]


def check_series(
    cases: Optional[Sequence[Tuple[WalkModel, int, float]]] = None,
) -> List[CheckResult]:
    checks = []
    for model, N, u in cases if cases is not None else series_cases():
        residual = series_consistency(model, TorusSpec(model.lattice_dim, N), u, 40, serial=True)
        checks.append(make_check(f"{model.model_id} log series at u={u}", residual, SERIES_TOL, 40))
    return checks


def check_coefficients(models: Optional[Sequence[WalkModel]] = None) -> SuiteResult:
    """Run the coefficient suite."""
    checks: List[CheckResult] = []
    for model in models if models is not None else default_models():
        checks.extend(check_routes(model))
    checks.append(check_simple_rw_exact())
    checks.extend(check_series())
    return SuiteResult(suite="coefficients", checks=checks)
