"""Helpers shared by the verification suites."""

import logging
import math
from typing import List, Optional

from ..exceptions import WalkZetaError
from ..schemas import CheckResult

logger = logging.getLogger(__name__)


def make_check(
    name: str,
    residual: float,
    tolerance: float,
    samples: int = 0,
    details: Optional[List[str]] = None,
) -> CheckResult:
    """CheckResult passing iff ``residual`` is finite and below ``tolerance``."""
    passed = math.isfinite(residual) and residual < tolerance
    if not passed:
        logger.warning("%s: residual %.3e exceeds %.1e", name, residual, tolerance)
    return CheckResult(
        name=name,
        passed=passed,
        max_residual=float(residual),
        tolerance=tolerance,
        samples=samples,
        details=list(details or []),
    )


def errored_check(name: str, tolerance: float, exc: WalkZetaError) -> CheckResult:
    """A check that could not be evaluated counts as failed."""
    logger.warning("%s: %s", name, exc)
    return CheckResult(
        name=name,
        passed=False,
        max_residual=math.inf,
        tolerance=tolerance,
        details=[f"{type(exc).__name__}: {exc}"],
    )
