"""Exception hierarchy for the walkzeta package.

Every error raised on purpose by the library derives from ``WalkZetaError``,
which itself is a ``ValueError`` so callers that only catch ``ValueError``
keep working.
"""


class WalkZetaError(ValueError):
    """Base class for all walkzeta errors."""


class DimensionError(WalkZetaError):
    """Matrix or vector shapes do not fit the requested operation."""


class NumericsError(WalkZetaError):
    """A non-finite value would leak into a public result."""


class ConvergenceError(NumericsError):
    """An iterative eigen-solver did not converge."""


class SizeCapError(WalkZetaError):
    """A dense matrix would exceed the configured row cap."""

    def __init__(self, rows: int, cap: int, what: str = "matrix"):
        self.rows = rows
        self.cap = cap
        super().__init__(f"{what} with {rows} rows exceeds dense cap {cap}")


class ConvergenceDiskError(WalkZetaError):
    """|u| * rho_max >= 1, so the log series and the principal branch are unsafe."""

    def __init__(self, u: complex, rho_max: float):
        self.u = u
        self.rho_max = rho_max
        super().__init__(
            f"u outside convergence disk: |u|={abs(u):.6g}, rho_max={rho_max:.6g}, "
            f"|u|*rho_max={abs(u) * rho_max:.6g} >= 1"
        )


class ModelError(WalkZetaError):
    """Invalid walk model or coin parameters."""


class GraphError(WalkZetaError):
    """Graph is not simple, not regular or not connected."""


class ClosedFormError(WalkZetaError):
    """Closed form lookup or evaluation failed."""


class ConfigError(WalkZetaError):
    """Malformed configuration file, flag or environment value."""
