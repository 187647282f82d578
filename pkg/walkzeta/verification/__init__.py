"""Verification suites for walkzeta.

Each suite checks one family of exact identities numerically:
- closed-forms: closed-form factorizations against the Fourier blocks
- konno-sato: arc determinants on regular graphs against the vertex formula
- factorization: dense torus determinants against the Fourier product
- coefficients: agreement of the C_r routes
- conservation: measure conservation and coin classification
"""

import logging
from collections.abc import Callable
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence

from ..exceptions import WalkZetaError
from ..schemas import SUITES, RegularGraph, SuiteResult, VerificationResult
from .closed_forms import check_closed_forms
from .coefficients import check_coefficients
from .common import errored_check, make_check
from .conservation import check_conservation
from .factorization import check_factorization
from .konno_sato import A_GRID, check_konno_sato

logger = logging.getLogger(__name__)

__all__ = [
    "SuiteOptions",
    "check_closed_forms",
    "check_konno_sato",
    "check_factorization",
    "check_coefficients",
    "check_conservation",
    "make_check",
    "run_suites",
    "suite_names",
]


@dataclass(frozen=True)
class SuiteOptions:
    """Knobs the CLI can pass through to the suites."""

    serial: bool = True
    a_grid: Sequence[float] = A_GRID
    graphs: Optional[Sequence[RegularGraph]] = None


_RUNNERS: Dict[str, Callable[[SuiteOptions], SuiteResult]] = {
    "closed-forms": lambda opts: check_closed_forms(serial=opts.serial),
    "konno-sato": lambda opts: check_konno_sato(opts.graphs, opts.a_grid),
    "factorization": lambda opts: check_factorization(),
    "coefficients": lambda opts: check_coefficients(),
    "conservation": lambda opts: check_conservation(),
}


def suite_names(requested: Iterable[str]) -> List[str]:
    """Expand ``all`` and validate suite names, keeping the canonical order."""
    names = set(requested)
    unknown = names - set(SUITES)
    if unknown:
        raise WalkZetaError(f"unknown suite(s) {sorted(unknown)}; expected one of {SUITES}")
    if "all" in names:
        return list(_RUNNERS)
    return [s for s in _RUNNERS if s in names]


def run_suites(
    requested: Optional[Iterable[str]] = None,
    serial: bool = True,
    options: Optional[SuiteOptions] = None,
) -> VerificationResult:
    """Run the requested verification suites.

    Args:
        requested: Suite names; ``None`` or ``["all"]`` runs every suite.
        serial: Evaluate grids in the calling thread only.
        options: Overrides for the a grid and the graph list. ``serial`` is
            ignored when given.

    Returns:
        VerificationResult with one SuiteResult per suite.
    """
    opts = options or SuiteOptions(serial=serial)
    issues: List[str] = []
    suites: List[SuiteResult] = []
    for name in suite_names(requested or ["all"]):
        logger.info("running suite %s", name)
        try:
            result = _RUNNERS[name](opts)
        except WalkZetaError as exc:
            result = SuiteResult(suite=name, checks=[errored_check(f"{name} suite", 0.0, exc)])
        suites.append(result)
        if not result.passed:
            issues.append(f"{name}: {len(result.failures)} failed check(s)")

    return VerificationResult(
        overall_passed=all(s.passed for s in suites),
        suites=suites,
        issues=issues,
    )
