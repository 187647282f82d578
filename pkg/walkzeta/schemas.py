"""Schemas for the walkzeta package.

This module defines the dataclasses shared by the engine, the verification
suites and the CLI: walk models, tori, state fields, graph structures,
evaluation reports and verification results.
"""

from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
from numpy.typing import NDArray

from .exceptions import DimensionError, GraphError, ModelError

Vector = Tuple[int, ...]


def complex_to_dict(z: complex) -> Dict[str, float]:
    """JSON-friendly form of a complex scalar."""
    z = complex(z)
    return {"re": z.real, "im": z.imag}


class ShiftType(Enum):
    """Moving (M) or flip-flop (F) shift."""

    M = "m"
    F = "f"

    @property
    def delta(self) -> int:
        """1 for the moving shift, 0 for the flip-flop shift."""
        return 1 if self is ShiftType.M else 0

    @property
    def sign(self) -> int:
        """(-1) ** delta."""
        return -1 if self is ShiftType.M else 1

    @classmethod
    def parse(cls, value: "str | ShiftType") -> "ShiftType":
        if isinstance(value, ShiftType):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError as exc:
            raise ModelError(f"unknown shift type {value!r}; use 'm' or 'f'") from exc


class ModelFamily(Enum):
    """Constructor families a WalkModel can come from."""

    THREE_STATE_QW = "three_state_qw"
    FOUR_STATE_QW_1D = "four_state_qw_1d"
    FOUR_STATE_QW_2D = "four_state_qw_2d"
    CRW = "crw_of"
    GENERALIZED_GROVER = "generalized_grover"
    MULTISTATE_RW = "multistate_rw"
    CUSTOM = "custom"

    @property
    def is_qw(self) -> bool:
        return self in QW_FAMILIES


QW_FAMILIES = frozenset(
    {ModelFamily.THREE_STATE_QW, ModelFamily.FOUR_STATE_QW_1D, ModelFamily.FOUR_STATE_QW_2D}
)


class GroverLattice(Enum):
    """Lattice variants for the generalized Grover coin."""

    ONE_D_3 = "1d3"
    ONE_D_4 = "1d4"
    TWO_D_4 = "2d4"
    TORUS = "torus"


class ClosedFormFamily(Enum):
    """Walk families with a closed-form zeta integrand."""

    QW3 = "qw3"
    CRW3 = "crw3"
    QW4_1D = "qw4_1d"
    CRW4_1D = "crw4_1d"
    RW_GENERAL = "rw_general"
    RW_WINDOW = "rw_window"
    RW_UNIFORM = "rw_uniform"
    QW4_2D = "qw4_2d"
    CRW4_2D = "crw4_2d"
    GG_1D3 = "gg_1d3"
    GG_1D4 = "gg_1d4"
    GG_2D = "gg_2d"
    GG_TORUS = "gg_torus"


@dataclass(frozen=True)
class ClosedFormId:
    """One closed form together with the parameters it is evaluated at.

    Only the fields relevant to ``family`` are read: ``eta`` for the
    three-state walks, ``p`` for the four-state walks, ``a`` (and ``d``) for
    the generalized Grover walks, ``weights`` / ``p0`` / ``L`` for random walks.
    """

    family: ClosedFormFamily
    shift: ShiftType = ShiftType.F
    eta: float = 0.0
    p: float = 0.5
    a: float = 1.0
    d: int = 1
    L: int = 1
    p0: float = 0.0
    weights: Tuple[Tuple[int, float], ...] = ()

    @property
    def lattice_dim(self) -> int:
        if self.family in (
            ClosedFormFamily.QW4_2D, ClosedFormFamily.CRW4_2D, ClosedFormFamily.GG_2D
        ):
            return 2
        if self.family is ClosedFormFamily.GG_TORUS:
            return self.d
        return 1

    @property
    def p_star(self) -> float:
        """p - 1/2 for the four-state walks; the off-origin weight for window walks."""
        if self.family is ClosedFormFamily.RW_WINDOW:
            return (1.0 - self.p0) / (2 * self.L)
        return self.p - 0.5

    @property
    def label(self) -> str:
        fam = self.family
        if fam in (ClosedFormFamily.QW3, ClosedFormFamily.CRW3):
            args = f"eta={self.eta:.6g}"
        elif fam in (ClosedFormFamily.RW_GENERAL,):
            args = ",".join(f"{x}:{w:.6g}" for x, w in self.weights)
        elif fam is ClosedFormFamily.RW_WINDOW:
            args = f"p0={self.p0:.6g},L={self.L}"
        elif fam is ClosedFormFamily.RW_UNIFORM:
            args = f"L={self.L}"
        elif fam in (ClosedFormFamily.GG_1D3, ClosedFormFamily.GG_1D4, ClosedFormFamily.GG_2D):
            args = f"a={self.a:.6g}"
        elif fam is ClosedFormFamily.GG_TORUS:
            args = f"d={self.d},a={self.a:.6g}"
        else:
            args = f"p={self.p:.6g}"
        if fam.value.startswith("rw"):
            return f"{fam.value}({args})"
        return f"{fam.value}[{self.shift.value}]({args})"


@dataclass(frozen=True, eq=False)
class Jump:
    """One term of the walk: displacement ``v`` carrying matrix ``K_v``."""

    displacement: Vector
    matrix: NDArray[np.complex128]


@dataclass(eq=False)
class WalkModel:
    """Coin matrix plus displacement table plus shift tag.

    Coined walks pair coin row ``j`` with ``displacements[j]``. Scalar random
    walks use a 1x1 coin and carry one weight per displacement in
    ``jump_weights`` instead.
    """

    coin: NDArray[np.complex128]
    displacements: Tuple[Vector, ...]
    lattice_dim: int
    family: ModelFamily
    shift: Optional[ShiftType] = None
    params: Dict[str, Any] = field(default_factory=dict)
    jump_weights: Optional[Tuple[float, ...]] = None
    base_family: Optional[ModelFamily] = None

    def __post_init__(self) -> None:
        self.coin = np.asarray(self.coin, dtype=np.complex128)
        self.displacements = tuple(tuple(int(c) for c in v) for v in self.displacements)
        if self.coin.ndim != 2 or self.coin.shape[0] != self.coin.shape[1]:
            raise ModelError(f"coin must be square, got shape {self.coin.shape}")
        if not np.all(np.isfinite(self.coin)):
            raise ModelError("coin has non-finite entries")
        if self.lattice_dim < 1:
            raise ModelError(f"lattice dimension must be positive, got {self.lattice_dim}")
        for v in self.displacements:
            if len(v) != self.lattice_dim:
                raise DimensionError(
                    f"displacement {v} has dimension {len(v)}, expected {self.lattice_dim}"
                )
        if self.jump_weights is None:
            if len(self.displacements) != self.d_c:
                raise ModelError(
                    f"coin size {self.d_c} does not match {len(self.displacements)} displacements"
                )
        else:
            if self.d_c != 1:
                raise ModelError("weighted jumps require a 1x1 coin")
            if len(self.jump_weights) != len(self.displacements):
                raise ModelError("one weight per displacement is required")

    @property
    def d_c(self) -> int:
        """Number of chirality components."""
        return int(self.coin.shape[0])

    @property
    def reach(self) -> int:
        """Largest sup-norm of any displacement."""
        return max((max(abs(c) for c in v) for v in self.displacements), default=0)

    @property
    def is_real(self) -> bool:
        return bool(np.max(np.abs(self.coin.imag)) == 0.0)

    @property
    def model_id(self) -> str:
        tag = self.family.value
        if self.base_family is not None:
            tag = f"{tag}:{self.base_family.value}"
        if self.shift is not None:
            tag = f"{tag}[{self.shift.value}]"
        shown = {k: v for k, v in sorted(self.params.items()) if k != "weights"}
        if shown:
            tag += "(" + ",".join(f"{k}={v}" for k, v in shown.items()) + ")"
        return tag

    def jumps(self) -> List[Jump]:
        """Displacement/matrix pairs whose phased sum is the Fourier block."""
        if self.jump_weights is not None:
            return [
                Jump(v, np.array([[w]], dtype=np.complex128))
                for v, w in zip(self.displacements, self.jump_weights)
            ]
        out = []
        for j, v in enumerate(self.displacements):
            selected = np.zeros_like(self.coin)
            selected[j, :] = self.coin[j, :]
            out.append(Jump(v, selected))
        return out

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for serialization."""
        return {
            "model_id": self.model_id,
            "family": self.family.value,
            "base_family": self.base_family.value if self.base_family else None,
            "shift": self.shift.value if self.shift else None,
            "params": dict(self.params),
            "lattice_dim": self.lattice_dim,
            "displacements": [list(v) for v in self.displacements],
            "jump_weights": list(self.jump_weights) if self.jump_weights is not None else None,
            "coin": [[complex_to_dict(z) for z in row] for row in self.coin],
        }


@dataclass(frozen=True)
class Classification:
    """Coin class flags, each decided with tolerance 1e-10."""

    unitary: bool
    column_stochastic: bool
    doubly_stochastic: bool

    @property
    def conserved_norm(self) -> Optional[int]:
        """The p for which sum_x mu_n(x) is conserved, if any."""
        if self.unitary:
            return 2
        if self.column_stochastic:
            return 1
        return None

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for serialization."""
        return {
            "unitary": self.unitary,
            "column_stochastic": self.column_stochastic,
            "doubly_stochastic": self.doubly_stochastic,
        }


@dataclass(frozen=True)
class TorusSpec:
    """The d-dimensional torus with N sites per axis."""

    d: int
    N: int

    def __post_init__(self) -> None:
        if self.d < 1:
            raise DimensionError(f"torus dimension must be positive, got {self.d}")
        if self.N < 2:
            raise DimensionError(f"torus side must be at least 2, got {self.N}")

    @property
    def n_sites(self) -> int:
        return self.N**self.d

    @property
    def shape(self) -> Tuple[int, ...]:
        return (self.N,) * self.d


@dataclass(eq=False)
class StateField:
    """Walker state on a torus, ``values[x]`` is the d_c-vector at site x.

    ``values`` has shape ``(N,)*d + (d_c,)`` so a C-order flatten gives the
    site-major, chirality-minor vector used by the full operator.
    """

    torus: TorusSpec
    values: NDArray[np.complex128]

    def __post_init__(self) -> None:
        self.values = np.asarray(self.values, dtype=np.complex128)
        if self.values.shape[:-1] != self.torus.shape or self.values.ndim != self.torus.d + 1:
            raise DimensionError(
                f"state shape {self.values.shape} does not fit torus {self.torus.shape}"
            )

    @property
    def d_c(self) -> int:
        return int(self.values.shape[-1])

    def flat(self) -> NDArray[np.complex128]:
        return self.values.reshape(-1)


@dataclass(eq=False)
class MatrixWeight:
    """Matrix weights Phi_n(x) on the window ``|x|_inf <= radius`` of Z^d."""

    radius: int
    values: NDArray[np.complex128]
    steps: int = 0

    @property
    def d(self) -> int:
        return self.values.ndim - 2

    def at(self, x: Vector) -> NDArray[np.complex128]:
        if len(x) != self.d:
            raise DimensionError(f"site {x} has dimension {len(x)}, expected {self.d}")
        if max(abs(c) for c in x) > self.radius:
            return np.zeros(self.values.shape[-2:], dtype=np.complex128)
        return self.values[tuple(c + self.radius for c in x)]


@dataclass(eq=False)
class RegularGraph:
    """Simple connected (q+1)-regular graph with its symmetric arc set.

    Arc ``2i`` runs along ``edges[i]`` from the smaller to the larger vertex,
    arc ``2i + 1`` is its inverse.
    """

    name: str
    n: int
    edges: Tuple[Tuple[int, int], ...]
    degree: int

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise GraphError(f"{self.name}: degree must be positive")
        if 2 * len(self.edges) != self.n * self.degree:
            raise GraphError(
                f"{self.name}: edge count does not match a {self.degree}-regular graph"
            )

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def q(self) -> int:
        return self.degree - 1

    @property
    def arcs(self) -> List[Tuple[int, int]]:
        out: List[Tuple[int, int]] = []
        for u, v in self.edges:
            out.append((u, v))
            out.append((v, u))
        return out

    @staticmethod
    def inverse(e: int) -> int:
        return e ^ 1

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for serialization."""
        return {"name": self.name, "n": self.n, "m": self.m, "degree": self.degree}


@dataclass
class ZetaReport:
    """One zeta evaluation: value, coefficients and cross-check residuals."""

    model_id: str
    u: complex
    grid_size: int
    limit: bool
    zeta_inv: complex
    route: str
    c_r: List[complex] = field(default_factory=list)
    c_r_route: str = ""
    residuals: Dict[str, float] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if not np.isfinite(self.zeta_inv):
            raise ValueError("zeta_inv must be finite")
        if any(r < 0 for r in self.residuals.values()):
            raise ValueError("residuals must be non-negative")

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for serialization."""
        return {
            "model_id": self.model_id,
            "u": complex_to_dict(self.u),
            "grid_size": self.grid_size,
            "limit": self.limit,
            "zeta_inv": complex_to_dict(self.zeta_inv),
            "route": self.route,
            "c_r": [complex_to_dict(c) for c in self.c_r],
            "c_r_route": self.c_r_route,
            "residuals": dict(self.residuals),
        }


@dataclass
class CheckResult:
    """Outcome of one numerical identity check."""

    name: str
    passed: bool
    max_residual: float
    tolerance: float
    samples: int = 0
    details: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for serialization."""
        return {
            "name": self.name,
            "passed": self.passed,
            "max_residual": self.max_residual,
            "tolerance": self.tolerance,
            "samples": self.samples,
            "details": self.details,
        }


@dataclass
class SuiteResult:
    """Checks of one verification suite."""

    suite: str
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for serialization."""
        return {
            "suite": self.suite,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }


@dataclass
class VerificationResult:
    """Aggregate over all requested suites."""

    overall_passed: bool
    suites: List[SuiteResult] = field(default_factory=list)
    issues: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for serialization."""
        return {
            "overall_passed": self.overall_passed,
            "suites": [s.to_dict() for s in self.suites],
            "issues": self.issues,
        }


COMMANDS = ("zeta", "coeffs", "verify", "simulate")
SUITES = ("closed-forms", "konno-sato", "factorization", "coefficients", "conservation", "all")
FORMATS = ("csv", "json")


@dataclass
class RunConfig:
    """Resolved parameters of one CLI run."""

    command: str
    model: Optional[Dict[str, Any]] = None
    graph: Optional[Dict[str, Any]] = None
    u: List[complex] = field(default_factory=lambda: [0.0])
    N: Optional[int] = None
    n_quad: int = 512
    r_max: int = 12
    a: List[float] = field(default_factory=lambda: [0.0, 0.25, 0.5, 0.75, 1.0])
    steps: int = 20
    p: Optional[int] = None
    suite: str = "all"
    out: Optional[Path] = None
    format: str = "csv"
    serial: bool = False

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for serialization."""
        return {
            "command": self.command,
            "model": self.model,
            "graph": self.graph,
            "u": [complex_to_dict(z) for z in self.u],
            "N": self.N,
            "n_quad": self.n_quad,
            "r_max": self.r_max,
            "a": self.a,
            "steps": self.steps,
            "p": self.p,
            "suite": self.suite,
            "out": str(self.out) if self.out else None,
            "format": self.format,
            "serial": self.serial,
        }
