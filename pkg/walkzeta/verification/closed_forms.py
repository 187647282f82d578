"""Closed-form suite: every family's factorization against numeric Fourier blocks.

Checks per closed form:
- determinant: det(I - u M(k)) = prefactor(u) F(k, u) on an angle x u grid
- eigenvalues: closed eigenvalue multiset against LAPACK, where a list exists
- eigen product: prod (1 - u lambda) = prefactor F, where a list exists

Plus the random-walk limit, the log-series expansion and the two readings of
the 1D four-state CRW eigenvalue centre.
"""

import math
from typing import List, Optional, Sequence

import numpy as np

from ..closed_forms import (
    all_closed_form_ids,
    alpha_c,
    angle_grid,
    eigen_product_residual,
    eigenvalue_residual,
    has_closed_eigenvalues,
    log_series_lemma,
    rw_limit_zeta_closed,
    verify_closed_form,
)
from ..coin_models import simple_rw
from ..exceptions import WalkZetaError
from ..schemas import CheckResult, ClosedFormFamily, ClosedFormId, ShiftType, SuiteResult
from ..zeta_engine import zeta_inv_limit
from .common import errored_check, make_check

DETERMINANT_TOL = 1e-9
EIGENVALUE_TOL = 1e-6
RW_LIMIT_TOL = 1e-9
LOG_SERIES_TOL = 1e-12

# Mixed real and complex sample points, clear of the structural zeros 1/3 and 1/2.
U_SAMPLES: Sequence[complex] = (
    0.45,
    -0.3,
    0.15,
    -0.05,
    0.4j,
    0.3 + 0.3j,
    -0.2 - 0.35j,
    0.1 - 0.45j,
)

ANGLES_PER_AXIS = {1: 32, 2: 8, 3: 4}


def _grid_for(cid: ClosedFormId) -> np.ndarray:
    return angle_grid(cid.lattice_dim, ANGLES_PER_AXIS.get(cid.lattice_dim, 3))


def check_closed_form(cid: ClosedFormId, serial: bool = True) -> List[CheckResult]:
    grid = _grid_for(cid)
    samples = len(grid) * len(U_SAMPLES)
    checks: List[CheckResult] = []
    try:
        residual = verify_closed_form(cid, grid, U_SAMPLES, serial=serial)
        checks.append(make_check(f"{cid.label} determinant", residual, DETERMINANT_TOL, samples))
        if has_closed_eigenvalues(cid):
            hausdorff = eigenvalue_residual(cid, grid, metric="hausdorff")
            checks.append(
                make_check(
                    f"{cid.label} eigenvalues",
                    eigenvalue_residual(cid, grid),
                    EIGENVALUE_TOL,
                    len(grid),
                    details=[f"hausdorff distance {hausdorff:.3e}"],
                )
            )
            checks.append(
                make_check(
                    f"{cid.label} eigen product",
                    eigen_product_residual(cid, grid, U_SAMPLES),
                    DETERMINANT_TOL,
                    samples,
                )
            )
    except WalkZetaError as exc:
        checks.append(errored_check(f"{cid.label} determinant", DETERMINANT_TOL, exc))
    return checks


def check_alpha_readings(ps: Sequence[float] = (0.2, 0.35, 0.8)) -> CheckResult:
    """The eigenvalue-centre reading that reproduces the determinant.

    Passes when the consistent reading matches; the printed reading's
    residual is reported in the details.
    """
    grid = angle_grid(1, 32)
    consistent, printed = 0.0, 0.0
    for p in ps:
        cid = ClosedFormId(ClosedFormFamily.CRW4_1D, shift=ShiftType.F, p=p)
        consistent = max(consistent, eigenvalue_residual(cid, grid, "consistent"))
        printed = max(printed, eigenvalue_residual(cid, grid, "printed"))
    centre_gap = max(
        float(np.max(np.abs(alpha_c(p, grid[:, 0]) - alpha_c(p, grid[:, 0], "printed"))))
        for p in ps
    )
    return make_check(
        "crw4_1d[f] eigenvalue centre",
        consistent,
        EIGENVALUE_TOL,
        len(grid) * len(ps),
        details=[
            f"consistent reading residual {consistent:.3e}",
            f"printed reading residual {printed:.3e}",
            f"largest centre gap between readings {centre_gap:.3e}",
        ],
    )


def check_rw_limit(
    us: Sequence[float] = (-0.9, -0.6, -0.2, 0.2, 0.6, 0.9), n_quad: int = 4096
) -> CheckResult:
    model = simple_rw()
    worst = max(
        abs(zeta_inv_limit(model, u, n_quad, serial=True) - rw_limit_zeta_closed(u)) for u in us
    )
    return make_check("simple rw limit", worst, RW_LIMIT_TOL, len(us))


def check_log_series(xs: Sequence[float] = (0.1, 0.5, 0.9)) -> CheckResult:
    """Partial sums against ``log((1 + sqrt(1 - x^2)) / 2)``.

    Terms decay like ``x^(2n) / n^1.5``, so x = 0.9 needs a few hundred.
    """
    worst = 0.0
    details = []
    for x in xs:
        n_terms = 60 if x <= 0.5 else 400
        target = math.log((1.0 + math.sqrt(1.0 - x * x)) / 2.0)
        gap = abs(log_series_lemma(x, n_terms) - target)
        details.append(f"x={x}: {n_terms} terms, gap {gap:.3e}")
        worst = max(worst, gap)
    return make_check("log series", worst, LOG_SERIES_TOL, len(xs), details)


def check_closed_forms(
    ids: Optional[Sequence[ClosedFormId]] = None, serial: bool = True
) -> SuiteResult:
    """Run the closed-form suite."""
    checks: List[CheckResult] = []
    for cid in ids if ids is not None else all_closed_form_ids():
        checks.extend(check_closed_form(cid, serial=serial))
    checks.append(check_alpha_readings())
    checks.append(check_rw_limit())
    checks.append(check_log_series())
    return SuiteResult(suite="closed-forms", checks=checks)
