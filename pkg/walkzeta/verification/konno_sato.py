"""Konno-Sato suite: arc determinants against the vertex-space formula."""

from typing import List, Optional, Sequence

import numpy as np

from ..exceptions import WalkZetaError
from ..graph_zeta import (
    arc_spectrum_matches_walk,
    arc_traces_match_walk,
    build_graph,
    ihara_check,
    konno_sato_lhs,
    konno_sato_rhs,
    konno_sato_classical_rhs,
    torus_correspondence,
    verify_konno_sato,
)
from ..schemas import CheckResult, RegularGraph, SuiteResult
from .common import errored_check, make_check

IDENTITY_TOL = 1e-9
A_INDEPENDENCE_TOL = 1e-12
CORRESPONDENCE_TOL = 1e-8
SPECTRUM_TOL = 1e-8
TRACE_TOL = 1e-9

A_GRID: Sequence[float] = (0.0, 0.25, 0.5, 0.75, 1.0)

# Ten points in [-0.39, 0.39]: clear of u = +-1/(3 - 2a), the zeros on the 4-regular torus.
U_GRID: Sequence[complex] = tuple(complex(x) for x in np.linspace(-0.39, 0.39, 10))

CORRESPONDENCE_U: Sequence[complex] = (-0.3, -0.1, 0.15, 0.3, 0.2 + 0.1j)


def builtin_graphs() -> List[RegularGraph]:
    return [
        build_graph("cycle", N=5),
        build_graph("complete", n=4),
        build_graph("petersen"),
        build_graph("hypercube", d=3),
        build_graph("torus", d=2, N=4),
    ]


def check_graph(g: RegularGraph, a_grid: Sequence[float] = A_GRID) -> List[CheckResult]:
    samples = len(a_grid) * len(U_GRID)
    identity = verify_konno_sato(g, a_grid, U_GRID)
    checks = [make_check(f"{g.name} identity", identity, IDENTITY_TOL, samples)]

    worst = 0.0
    for a in (0, 1):
        for u in U_GRID:
            general, classical = konno_sato_rhs(g, a, u), konno_sato_classical_rhs(g, a, u)
            worst = max(worst, abs(general - classical) / max(abs(classical), 1e-30))
    checks.append(make_check(f"{g.name} classical forms", worst, IDENTITY_TOL, 2 * len(U_GRID)))
    checks.append(make_check(f"{g.name} ihara", ihara_check(g, U_GRID), IDENTITY_TOL, len(U_GRID)))

    if g.degree == 2:
        spread = max(
            max(abs(konno_sato_lhs(g, a, u) - konno_sato_lhs(g, 0.0, u)) for a in a_grid)
            for u in U_GRID
        )
        checks.append(make_check(f"{g.name} a-independence", spread, A_INDEPENDENCE_TOL, samples))
    return checks


def check_torus(
    d: int = 2, N: int = 4, a_values: Sequence[float] = (0.0, 0.5, 1.0)
) -> List[CheckResult]:
    checks: List[CheckResult] = []
    for a in a_values:
        name = f"torus({d},{N}) a={a} correspondence"
        try:
            residual = torus_correspondence(d, N, a, CORRESPONDENCE_U)
            checks.append(make_check(name, residual, CORRESPONDENCE_TOL, len(CORRESPONDENCE_U)))
        except WalkZetaError as exc:
            checks.append(errored_check(name, CORRESPONDENCE_TOL, exc))
        name = f"torus({d},{N}) a={a} power sums"
        try:
            checks.append(make_check(name, arc_traces_match_walk(d, N, a), TRACE_TOL, 8))
        except WalkZetaError as exc:
            checks.append(errored_check(name, TRACE_TOL, exc))
    # The Grover arc operator is unitary, so its eigenvalues are well conditioned.
    name = f"torus({d},{N}) a=1 spectrum"
    try:
        checks.append(make_check(name, arc_spectrum_matches_walk(d, N, 1.0), SPECTRUM_TOL))
    except WalkZetaError as exc:
        checks.append(errored_check(name, SPECTRUM_TOL, exc))
    return checks


def check_konno_sato(
    graphs: Optional[Sequence[RegularGraph]] = None,
    a_grid: Sequence[float] = A_GRID,
) -> SuiteResult:
    """Run the Konno-Sato suite on the built-in graphs (or on ``graphs``)."""
    checks: List[CheckResult] = []
    for g in graphs if graphs is not None else builtin_graphs():
        try:
            checks.extend(check_graph(g, a_grid))
        except WalkZetaError as exc:
            checks.append(errored_check(f"{g.name} identity", IDENTITY_TOL, exc))
    checks.extend(check_torus())
    return SuiteResult(suite="konno-sato", checks=checks)
