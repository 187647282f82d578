"""Walk-type zeta function and its series coefficients.

``zeta_inv`` is the reciprocal ``det(I - u M_A)^{1/N^d}`` evaluated through
the Fourier factorization::

    zeta_inv(u) = exp( mean_k log det(I - u M(k)) )

The finite-N value and the N -> infinity limit share one code path; the limit
is the periodic trapezoid rule with ``n_quad`` points per axis.

Branch: every block log is the sum of ``log(1 - u lambda_j)`` over its
eigenvalues, each on the principal branch. This is continuous in ``u`` on the
convergence disk ``|u| rho_max < 1``; outside it ``ConvergenceDiskError`` is
raised.
"""

import logging
import math
from typing import Dict, List, Literal, Optional, Sequence

import numpy as np
from numpy.typing import NDArray

from .closed_forms import closed_eigenvalue_grid, closed_form_for, closed_zeta_inv
from .config import get_settings
from .exceptions import ClosedFormError, ConvergenceDiskError, SizeCapError, WalkZetaError
from .fanout import map_chunks
from .numerics import identity, log_determinant, stack_eigenvalues
from .schemas import ClosedFormId, TorusSpec, WalkModel, ZetaReport
from .walk_operator import (
    fourier_blocks,
    fourier_grid,
    full_operator,
    matrix_weight_origin,
    origin_weights,
)

logger = logging.getLogger(__name__)

CRoute = Literal["quadrature", "weight", "closed"]

ROUTE_AGREEMENT_TOL = 1e-8


def _chunk_log_dets(model: WalkModel, grid: NDArray, u: complex) -> tuple[NDArray, float]:
    """Branch-fixed ``log det(I - u M(k))`` per grid row and the chunk's rho_max."""
    blocks = fourier_blocks(model, grid)
    lams = stack_eigenvalues(blocks)
    rho = float(np.max(np.abs(lams))) if lams.size else 0.0
    if u == 0:
        return np.zeros(len(grid), dtype=np.complex128), rho
    sign, logabs = np.linalg.slogdet(identity(model.d_c)[None] - u * blocks)
    branch = np.sum(np.log(1.0 - u * lams), axis=1)
    principal = np.angle(sign)
    turns = np.round((branch.imag - principal) / (2.0 * np.pi))
    return logabs + 1j * (principal + 2.0 * np.pi * turns), rho


def _mean_log_det(
    model: WalkModel, N: int, u: complex, serial: Optional[bool]
) -> tuple[complex, float]:
    serial = get_settings().serial if serial is None else serial
    grid = fourier_grid(model.lattice_dim, N)
    parts = map_chunks(lambda chunk: _chunk_log_dets(model, chunk, u), grid, serial=serial)
    rho = max(r for _, r in parts)
    if abs(u) * rho >= 1.0:
        raise ConvergenceDiskError(u, rho)
    total = complex(math.fsum(float(p.real.sum()) for p, _ in parts),
                    math.fsum(float(p.imag.sum()) for p, _ in parts))
    return total / len(grid), rho


def spectral_bound(model: WalkModel, N: int) -> float:
    """Largest eigenvalue modulus of ``M(k)`` over the N-point grid.

    A sampled estimate, not a certified bound between grid points.
    """
    blocks = fourier_blocks(model, fourier_grid(model.lattice_dim, N))
    return float(np.max(np.abs(stack_eigenvalues(blocks))))


def zeta_inv_finite(
    model: WalkModel, torus: TorusSpec, u: complex, serial: Optional[bool] = None
) -> complex:
    """Reciprocal walk-type zeta function on the torus ``T^d_N``.

    Raises:
        WalkZetaError: If the torus and model dimensions differ.
        ConvergenceDiskError: If ``|u| * rho_max >= 1`` on the grid.
    """
    if torus.d != model.lattice_dim:
        raise WalkZetaError(f"torus has d={torus.d}, model has d={model.lattice_dim}")
    mean, _ = _mean_log_det(model, torus.N, complex(u), serial)
    return complex(np.exp(mean))


def zeta_inv_limit(
    model: WalkModel, u: complex, n_quad: Optional[int] = None, serial: Optional[bool] = None
) -> complex:
    """The ``N -> infinity`` limit by the periodic trapezoid rule.

    Args:
        model: Walk model.
        u: Spectral parameter inside the convergence disk.
        n_quad: Points per axis; defaults to ``WALKZETA_N_QUAD``.
        serial: Force single-threaded evaluation.
    """
    n = n_quad or get_settings().n_quad
    mean, _ = _mean_log_det(model, n, complex(u), serial)
    return complex(np.exp(mean))


def zeta_inv_full_operator(
    model: WalkModel, torus: TorusSpec, u: complex, cap: Optional[int] = None
) -> complex:
    """``exp(log det(I - u M_A) / N^d)`` from the dense torus operator.

    Uses the principal log of the full determinant, so it matches the
    Fourier route for real coins and real ``u``.
    """
    M = full_operator(model, torus, cap)
    log_det = log_determinant(identity(M.shape[0]) - complex(u) * M)
    return complex(np.exp(log_det / torus.n_sites))


def factorization_residual(
    model: WalkModel, torus: TorusSpec, u: complex, cap: Optional[int] = None
) -> float:
    """Relative gap ``|det(I - u M_A) / prod_k det(I - u M(k)) - 1|``.

    Both sides are compared through their logs, so large or tiny
    determinants stay representable.
    """
    u = complex(u)
    M = full_operator(model, torus, cap)
    lhs = log_determinant(identity(M.shape[0]) - u * M)
    blocks = fourier_blocks(model, fourier_grid(torus.d, torus.N))
    sign, logabs = np.linalg.slogdet(identity(model.d_c)[None] - u * blocks)
    rhs = complex(float(np.sum(logabs)), float(np.sum(np.angle(sign))))
    return float(abs(np.exp(lhs - rhs) - 1.0))


def _chunk_traces(model: WalkModel, grid: NDArray, R: int) -> NDArray:
    """``sum_k Tr(M(k)^r)`` for r = 1..R over one chunk."""
    blocks = fourier_blocks(model, grid)
    power = blocks.copy()
    out = np.zeros(R, dtype=np.complex128)
    for r in range(R):
        out[r] = np.einsum("kii->", power)
        power = power @ blocks
    return out


def c_r_series(model: WalkModel, N: int, R: int, serial: Optional[bool] = None) -> List[complex]:
    """``C_1, ..., C_R`` on the N-point grid."""
    if R < 1:
        return []
    serial = get_settings().serial if serial is None else serial
    grid = fourier_grid(model.lattice_dim, N)
    parts = map_chunks(lambda chunk: _chunk_traces(model, chunk, R), grid, serial=serial)
    total = np.sum(parts, axis=0)
    return [complex(z) for z in total / len(grid)]


def c_r_finite(
    model: WalkModel, torus: TorusSpec, r: int, serial: Optional[bool] = None
) -> complex:
    """``(1/N^d) sum_k Tr(M(k)^r)``."""
    if r < 1:
        raise WalkZetaError(f"r must be positive, got {r}")
    if torus.d != model.lattice_dim:
        raise WalkZetaError(f"torus has d={torus.d}, model has d={model.lattice_dim}")
    return c_r_series(model, torus.N, r, serial)[r - 1]


def c_r_closed(cid: ClosedFormId, r: int, N: int) -> complex:
    """Grid mean of ``sum_j lambda_j(k)^r`` using closed eigenvalues.

    Raises:
        ClosedFormError: If the family has no closed eigenvalue list.
    """
    lams = closed_eigenvalue_grid(cid, fourier_grid(cid.lattice_dim, N))
    return complex(np.mean(np.sum(lams**r, axis=1)))


def c_r_limit(
    model: WalkModel,
    r: int,
    route: CRoute = "quadrature",
    n_quad: Optional[int] = None,
    serial: Optional[bool] = None,
) -> complex:
    """``lim_N C_r`` by quadrature, by the return matrix weight or by closed eigenvalues.

    Raises:
        ClosedFormError: For ``route="closed"`` when no closed eigenvalues exist.
    """
    if r < 1:
        raise WalkZetaError(f"r must be positive, got {r}")
    if route == "quadrature":
        n = n_quad or get_settings().n_quad
        return c_r_series(model, n, r, serial)[r - 1]
    if route == "weight":
        return complex(np.trace(matrix_weight_origin(model, r)))
    if route == "closed":
        cid = closed_form_for(model)
        if cid is None:
            raise ClosedFormError(f"no closed form for {model.model_id}")
        return c_r_closed(cid, r, n_quad or get_settings().n_quad)
    raise WalkZetaError(f"unknown C_r route {route!r}")


def c_r_weight_series(model: WalkModel, R: int) -> List[complex]:
    """``Tr Phi_r(0)`` for r = 1..R from one run of the weight recursion."""
    if R < 1:
        return []
    return [complex(np.trace(phi)) for phi in origin_weights(model, R)[1:]]


def c_r_simple_rw_exact(r: int) -> float:
    """Return probability of the simple random walk: ``C(r, r/2) / 2^r`` for even r."""
    if r < 0:
        raise WalkZetaError(f"r must be non-negative, got {r}")
    if r % 2:
        return 0.0
    return math.comb(r, r // 2) / 2.0**r


def series_consistency(
    model: WalkModel, torus: TorusSpec, u: complex, R: int, serial: Optional[bool] = None
) -> float:
    """``|-log zeta_inv(u) - sum_{r<=R} C_r u^r / r|``; decays like ``(|u| rho)^R``."""
    u = complex(u)
    mean, _ = _mean_log_det(model, torus.N, u, serial)
    cs = c_r_series(model, torus.N, R, serial)
    partial = sum(c * u ** (r + 1) / (r + 1) for r, c in enumerate(cs))
    return float(abs(-mean - partial))


def zeta_report(
    model: WalkModel,
    u: complex,
    N: Optional[int] = None,
    n_quad: Optional[int] = None,
    r_max: int = 0,
    serial: Optional[bool] = None,
    cap: Optional[int] = None,
) -> ZetaReport:
    """Evaluate ``zeta_inv`` at one ``u`` together with every available cross-check.

    With ``N`` the finite torus value is computed, otherwise the limit. The
    residuals map carries ``closed_form`` when a closed form matches the
    model and ``full_operator`` when the dense operator fits under ``cap``.
    """
    u = complex(u)
    limit = N is None
    size = (n_quad or get_settings().n_quad) if N is None else N
    mean, _ = _mean_log_det(model, size, u, serial)
    value = complex(np.exp(mean))
    residuals: Dict[str, float] = {}

    cid = closed_form_for(model)
    if cid is not None:
        try:
            closed = closed_zeta_inv(cid, u, size)
            residuals["closed_form"] = abs(value - closed) / max(abs(closed), 1e-300)
        except ClosedFormError as exc:
            logger.info("closed form skipped: %s", exc)

    if not limit:
        torus = TorusSpec(d=model.lattice_dim, N=size)
        try:
            oracle = zeta_inv_full_operator(model, torus, u, cap)
            residuals["full_operator"] = abs(value - oracle) / max(abs(oracle), 1e-300)
        except SizeCapError as exc:
            logger.info("full operator route skipped: %s", exc)

    cs = c_r_series(model, size, r_max, serial) if r_max else []
    return ZetaReport(
        model_id=model.model_id,
        u=u,
        grid_size=size,
        limit=limit,
        zeta_inv=value,
        route="quadrature" if limit else "fourier",
        c_r=cs,
        c_r_route="quadrature" if limit else "fourier",
        residuals=residuals,
    )


def coefficient_table(
    model: WalkModel, r_max: int, n_quad: Optional[int] = None, serial: Optional[bool] = None
) -> List[Dict[str, object]]:
    """Rows ``(r, quadrature, weight, |diff|)`` for r = 1..r_max."""
    n = n_quad or get_settings().n_quad
    quad = c_r_series(model, n, r_max, serial)
    weight = c_r_weight_series(model, r_max)
    rows: List[Dict[str, object]] = []
    for r, (q, w) in enumerate(zip(quad, weight), start=1):
        rows.append({"r": r, "quadrature": q, "weight": w, "diff": abs(q - w)})
    return rows


def u_grid(radius: float, count: int, complex_points: bool = False) -> Sequence[complex]:
    """``count`` sample points on ``[-radius, radius]`` (or a circle of that radius)."""
    if complex_points:
        return [radius * np.exp(2j * np.pi * (k + 0.25) / count) for k in range(count)]
    return [complex(x) for x in np.linspace(-radius, radius, count)]
