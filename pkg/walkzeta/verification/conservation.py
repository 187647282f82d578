"""Conservation suite: measure conservation and coin classification."""

from typing import List, Optional, Sequence, Tuple

import numpy as np

from ..coin_models import (
    GROVER_ETA,
    classify,
    crw_from_qw,
    four_state_qw_1d,
    four_state_qw_2d,
    generalized_grover_coin,
    generalized_grover_matrix,
    three_state_qw,
)
from ..numerics import is_unitary
from ..schemas import CheckResult, SuiteResult, TorusSpec, WalkModel
from ..walk_operator import delta_state, total_measure, trajectory
from .common import make_check

CONSERVATION_TOL = 1e-10
STEPS = 50


def default_models() -> List[Tuple[WalkModel, TorusSpec]]:
    line, plane = TorusSpec(1, 32), TorusSpec(2, 8)
    quantum = [
        (three_state_qw(GROVER_ETA, "f"), line),
        (three_state_qw(0.7, "m"), line),
        (four_state_qw_1d(0.3, "m"), line),
        (four_state_qw_1d(0.5, "f"), line),
        (four_state_qw_2d(0.6, "f"), plane),
        (generalized_grover_coin(4, 1.0, "m", "2d4"), plane),
    ]
    classical = [(crw_from_qw(m), t) for m, t in quantum if m.family.is_qw]
    return quantum + classical


def check_model(model: WalkModel, torus: TorusSpec, steps: int = STEPS) -> CheckResult:
    """Drift of the conserved total measure from its initial value."""
    p = classify(model).conserved_norm
    name = f"{model.model_id} on T^{torus.d}_{torus.N}"
    if p is None:
        return make_check(
            f"{name} conservation", float("inf"), CONSERVATION_TOL, details=["no conserved norm"]
        )
    weight = 1.0 / np.sqrt(model.d_c) if p == 2 else 1.0 / model.d_c
    amplitudes = np.full(model.d_c, weight)
    start = delta_state(torus, model.d_c, amplitudes=amplitudes)
    totals = [total_measure(state, p) for state in trajectory(model, start, steps)]
    drift = max(abs(t - totals[0]) for t in totals)
    return make_check(f"{name} p={p} conservation", drift, CONSERVATION_TOL, steps + 1)


def check_classification(
    sizes: Sequence[int] = (2, 3, 4, 6), a_values: Sequence[float] = (0.0, 0.5, 1.0)
) -> CheckResult:
    """``U(a)`` is unitary exactly when a = 1, except for d_c = 2 where it always is."""
    wrong = []
    for d_c in sizes:
        for a in a_values:
            expected = d_c == 2 or a == 1.0
            if is_unitary(generalized_grover_matrix(d_c, a)) != expected:
                wrong.append(f"d_c={d_c}, a={a}: expected unitary={expected}")
    samples = len(sizes) * len(a_values)
    return make_check("generalized grover unitarity", float(len(wrong)), 0.5, samples, wrong)


def check_conservation(
    cases: Optional[Sequence[Tuple[WalkModel, TorusSpec]]] = None,
) -> SuiteResult:
    """Run the conservation suite."""
    pairs = cases if cases is not None else default_models()
    checks: List[CheckResult] = [check_model(model, torus) for model, torus in pairs]
    checks.append(check_classification())
    return SuiteResult(suite="conservation", checks=checks)
