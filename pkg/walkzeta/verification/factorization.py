"""Factorization suite: the dense torus determinant against the Fourier product."""

from typing import List, Optional, Sequence, Tuple

from ..closed_forms import model_for
from ..coin_models import (
    GROVER_ETA,
    crw_from_qw,
    four_state_qw_1d,
    four_state_qw_2d,
    generalized_grover_coin,
    three_state_qw,
    uniform_rw,
)
from ..exceptions import WalkZetaError
from ..schemas import (
    CheckResult,
    ClosedFormFamily,
    ClosedFormId,
    ShiftType,
    SuiteResult,
    TorusSpec,
    WalkModel,
)
from ..zeta_engine import (
    factorization_residual,
    spectral_bound,
    zeta_inv_finite,
    zeta_inv_full_operator,
)
from .common import errored_check, make_check

FACTORIZATION_TOL = 1e-8
ROUTE_TOL = 1e-8

# |u| <= 0.5, off the rational zeros 1/3 and 1/2 of the a = 0 Grover blocks.
U_SAMPLES: Sequence[complex] = (
    0.2,
    -0.35,
    0.45,
    0.05,
    -0.45,
    0.3j,
    0.25 + 0.25j,
    -0.4 + 0.1j,
    0.1 - 0.45j,
    -0.15 - 0.2j,
)


def default_cases() -> List[Tuple[WalkModel, TorusSpec]]:
    """Models from every family on tori with d_c N^d <= 256."""
    line8, line16, plane4 = TorusSpec(1, 8), TorusSpec(1, 16), TorusSpec(2, 4)
    cases: List[Tuple[WalkModel, TorusSpec]] = [
        (three_state_qw(GROVER_ETA, "f"), TorusSpec(1, 4)),
        (uniform_rw(2), line16),
    ]
    for shift in (ShiftType.M, ShiftType.F):
        cases += [
            (three_state_qw(1.0, shift), line8),
            (crw_from_qw(three_state_qw(1.0, shift)), line8),
            (four_state_qw_1d(0.3, shift), line16),
            (crw_from_qw(four_state_qw_1d(0.3, shift)), line16),
            (four_state_qw_2d(0.7, shift), plane4),
            (crw_from_qw(four_state_qw_2d(0.7, shift)), plane4),
            (generalized_grover_coin(3, 0.5, shift, "1d3"), line8),
            (generalized_grover_coin(4, 0.5, shift, "1d4"), line16),
            (generalized_grover_coin(4, 0.25, shift, "2d4"), plane4),
        ]
    cases.append((model_for(ClosedFormId(ClosedFormFamily.GG_TORUS, a=0.5, d=3)), TorusSpec(3, 3)))
    return cases


def check_case(model: WalkModel, torus: TorusSpec) -> List[CheckResult]:
    label = f"{model.model_id} on T^{torus.d}_{torus.N}"
    try:
        worst = max(factorization_residual(model, torus, u) for u in U_SAMPLES)
        checks = [make_check(f"{label} determinant", worst, FACTORIZATION_TOL, len(U_SAMPLES))]
        rho = max(spectral_bound(model, torus.N), 1.0)
        route = 0.0
        for u in (0.1 / rho, 0.25 / rho, -0.4 / rho):
            fourier = zeta_inv_finite(model, torus, u, serial=True)
            dense = zeta_inv_full_operator(model, torus, u)
            route = max(route, abs(fourier - dense) / abs(dense))
        checks.append(make_check(f"{label} zeta routes", route, ROUTE_TOL, 3))
        return checks
    except WalkZetaError as exc:
        return [errored_check(f"{label} determinant", FACTORIZATION_TOL, exc)]


def check_factorization(
    cases: Optional[Sequence[Tuple[WalkModel, TorusSpec]]] = None,
) -> SuiteResult:
    """Run the factorization suite."""
    checks: List[CheckResult] = []
    for model, torus in cases if cases is not None else default_cases():
        checks.extend(check_case(model, torus))
    return SuiteResult(suite="factorization", checks=checks)
