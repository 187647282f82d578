"""Closed-form zeta integrands for the built-in walk families.

Each family's determinant factors as ``det(I - u M(k)) = prefactor(u) * F(k, u)``.
The functions here evaluate both factors, the eigenvalue lists where one is
known in closed form, and the random-walk limit formulas, and check all of
them against the numeric Fourier blocks.

Notation shared by the formulas:

- ``sign = (-1)^delta`` with ``delta = 1`` for M-type and ``0`` for F-type
- ``c = cos(eta)`` for the three-state walks
- ``p_star = p - 1/2`` for the four-state walks
- ``C1 = cos t + cos 2t`` and ``S1 = sin t + sin 2t`` on the line
"""

import logging
import math
from collections.abc import Sequence
from typing import List, Literal, Optional

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .coin_models import (
    crw_from_qw,
    four_state_qw_1d,
    four_state_qw_2d,
    generalized_grover_coin,
    multistate_rw,
    three_state_qw,
    uniform_rw,
    window_rw,
)
from .exceptions import ClosedFormError, DimensionError
from .fanout import map_chunks
from .numerics import hausdorff_distance, multiset_distance, stack_determinants, stack_eigenvalues
from .schemas import (
    ClosedFormFamily,
    ClosedFormId,
    GroverLattice,
    ModelFamily,
    ShiftType,
    WalkModel,
)
from .walk_operator import fourier_blocks, fourier_grid

logger = logging.getLogger(__name__)

CF = ClosedFormFamily

# Below this distance from cos t = 1 the uniform-walk ratio is replaced by its direct sum.
UNIFORM_RATIO_GUARD = 1e-6

AlphaReading = Literal["consistent", "printed"]


def _angles(cid: ClosedFormId, angles: ArrayLike) -> NDArray[np.float64]:
    """Angles as shape (K, dim); a bare scalar is accepted on the line."""
    arr = np.asarray(angles, dtype=np.float64)
    dim = cid.lattice_dim
    if arr.ndim == 0:
        arr = arr.reshape(1, 1)
    elif arr.ndim == 1:
        arr = arr.reshape(1, -1) if arr.size == dim else arr.reshape(-1, 1)
    if arr.ndim != 2 or arr.shape[1] != dim:
        raise DimensionError(f"{cid.label} needs {dim} angle(s) per point, got shape {arr.shape}")
    return arr


def _rw_symbol(cid: ClosedFormId, t: NDArray[np.float64]) -> NDArray[np.complex128]:
    """Fourier symbol ``sum_x p_x exp(-i x t)`` of a scalar random walk."""
    if cid.family is CF.RW_GENERAL:
        if not cid.weights:
            raise ClosedFormError("rw_general needs weights")
        out = np.zeros(t.shape, dtype=np.complex128)
        for x, w in cid.weights:
            out += w * np.exp(-1j * x * t)
        return out
    if cid.family is CF.RW_WINDOW:
        ells = np.arange(1, cid.L + 1)
        cos_sum = np.cos(np.multiply.outer(t, ells)).sum(axis=-1)
        return (cid.p0 + 2.0 * cid.p_star * cos_sum).astype(np.complex128)
    if cid.family is CF.RW_UNIFORM:
        L = cid.L
        denom = np.cos(t) - 1.0
        near = np.abs(denom) < UNIFORM_RATIO_GUARD
        safe = np.where(near, -1.0, denom)
        ratio = (np.cos((L + 1) * t) - np.cos(L * t)) / safe
        ells = np.arange(1, L + 1)
        direct = 1.0 + 2.0 * np.cos(np.multiply.outer(t, ells)).sum(axis=-1)
        return (np.where(near, direct, ratio) / (2 * L + 1)).astype(np.complex128)
    raise ClosedFormError(f"{cid.family.value} is not a random walk")


def _prefactor(cid: ClosedFormId, u: NDArray[np.complex128]) -> NDArray[np.complex128]:
    fam, s = cid.family, cid.shift.sign
    one = np.ones_like(u)
    if fam is CF.QW3:
        return 1.0 + s * u
    if fam is CF.CRW3 or fam.value.startswith("rw"):
        return one
    if fam is CF.QW4_1D:
        return one if cid.shift is ShiftType.M else 1.0 - u**2
    if fam is CF.CRW4_1D:
        return one if cid.shift is ShiftType.M else 1.0 + 4.0 * cid.p_star**2 * u**2
    if fam is CF.QW4_2D:
        return 1.0 - u**2
    if fam is CF.CRW4_2D:
        return 1.0 - 4.0 * cid.p_star**2 * u**2
    if fam is CF.GG_1D3:
        return one if cid.shift is ShiftType.M else 1.0 + u
    if fam in (CF.GG_1D4, CF.GG_2D):
        return one if cid.shift is ShiftType.M else 1.0 - u**2
    if fam is CF.GG_TORUS:
        return (1.0 - u**2) ** (cid.d - 1)
    raise ClosedFormError(f"unknown closed form {fam!r}")


def prefactor(cid: ClosedFormId, u: complex) -> complex:
    """Leading factor outside the exponential; 1 where the family has none."""
    return complex(_prefactor(cid, np.asarray(complex(u), dtype=np.complex128)))


def _qw3_t(cid: ClosedFormId, t: NDArray[np.float64]) -> NDArray[np.float64]:
    s, c = cid.shift.sign, math.cos(cid.eta)
    return s + c + (s - c) * np.cos(t)


def _F(
    cid: ClosedFormId, th: NDArray[np.float64], u: NDArray[np.complex128]
) -> NDArray[np.complex128]:
    """Vectorized F over angle rows ``th`` (K, dim) and matching ``u`` (K,)."""
    fam, s, is_m = cid.family, cid.shift.sign, cid.shift is ShiftType.M
    t = th[:, 0]

    if fam is CF.QW3:
        return 1.0 - _qw3_t(cid, t) * u + u**2

    if fam is CF.CRW3:
        c = math.cos(cid.eta)
        g = (1.0 - s * c) ** 2
        return (
            1.0
            - (u / 2.0) * (g * np.cos(t) + 2.0 * c**2)
            - (s * u**2 / 2.0) * (g * (s + 2.0 * c) * np.cos(t) + c * (1.0 + c**2))
            - (s * u**3 / 2.0) * c * (1.0 - 3.0 * c**2)
        )

    if fam in (CF.QW4_1D, CF.CRW4_1D, CF.GG_1D4):
        C1 = np.cos(t) + np.cos(2 * t)
        S1 = np.sin(t) + np.sin(2 * t)
        ps = cid.p_star
        if fam is CF.QW4_1D:
            if is_m:
                return (
                    1.0
                    + (C1 - 2j * ps * S1) * u
                    - 4j * ps * np.sin(3 * t) * u**2
                    - (C1 + 2j * ps * S1) * u**3
                    - u**4
                )
            return 1.0 - math.sqrt(max(0.0, 1.0 - 4.0 * ps**2)) * C1 * u + u**2
        if fam is CF.CRW4_1D:
            g = 1.0 + 4.0 * ps**2
            if is_m:
                return (
                    1.0
                    - 0.5 * (g * C1 - 4j * ps * S1) * u
                    - 2j * ps * g * np.sin(3 * t) * u**2
                    + 2.0 * ps**2 * (g * C1 + 4j * ps * S1) * u**3
                    - 16.0 * ps**4 * u**4
                )
            return 1.0 - 0.5 * (1.0 - 4.0 * ps**2) * C1 * u - 4.0 * ps**2 * u**2
        a = cid.a
        if is_m:
            return (
                1.0
                + a * C1 * u
                + 2.0 * (a - 1.0) * (1.0 + np.cos(t) + np.cos(3 * t)) * u**2
                + (3.0 * a - 4.0) * C1 * u**3
                + (2.0 * a - 3.0) * u**4
            )
        return 1.0 + (a - 2.0) * C1 * u - (2.0 * a - 3.0) * u**2

    if fam.value.startswith("rw"):
        return 1.0 - u * _rw_symbol(cid, t)

    if fam in (CF.QW4_2D, CF.CRW4_2D, CF.GG_2D):
        c1, c2 = np.cos(th[:, 0]), np.cos(th[:, 1])
        ps = cid.p_star
        if fam is CF.QW4_2D:
            return 1.0 - s * ((1.0 + s * 2 * ps) * c1 + (1.0 - s * 2 * ps) * c2) * u + u**2
        if fam is CF.CRW4_2D:
            return (
                1.0
                - 0.5 * ((s + 2 * ps) ** 2 * c1 + (s - 2 * ps) ** 2 * c2) * u
                + 4.0 * ps**2 * u**2
            )
        a = cid.a
        if is_m:
            return (
                1.0
                + a * (c1 + c2) * u
                + 2.0 * (a - 1.0) * (1.0 + 2.0 * c1 * c2) * u**2
                + (3.0 * a - 4.0) * (c1 + c2) * u**3
                + (2.0 * a - 3.0) * u**4
            )
        return 1.0 + (a - 2.0) * (c1 + c2) * u - (2.0 * a - 3.0) * u**2

    if fam is CF.GG_1D3:
        a = cid.a
        g = 1.0 + 2.0 * np.cos(t)
        if is_m:
            return 1.0 + (a / 3.0) * g * u + ((2.0 * a - 3.0) / 3.0) * g * u**2 + (a - 2.0) * u**3
        return 1.0 + ((a - 3.0) / 3.0) * g * u - (a - 2.0) * u**2

    if fam is CF.GG_TORUS:
        d, a = cid.d, cid.a
        cos_sum = np.cos(th).sum(axis=1)
        return (
            1.0
            - (2.0 * (d + (1 - d) * a) / d) * cos_sum * u
            + (2 * d - 1 + 2 * (1 - d) * a) * u**2
        )

    raise ClosedFormError(f"unknown closed form {fam!r}")


def F_value(cid: ClosedFormId, angles: ArrayLike, u: complex) -> complex:
    """The reduced factor ``F`` at one angle vector.

    Raises:
        DimensionError: If the angle count does not match the lattice dimension.
        ClosedFormError: If ``cid`` names no known family.
    """
    th = _angles(cid, angles)
    if th.shape[0] != 1:
        raise DimensionError(f"F_value takes one angle vector, got {th.shape[0]}")
    return complex(_F(cid, th, np.array([complex(u)]))[0])


def F_values(cid: ClosedFormId, angles: ArrayLike, u: complex) -> NDArray[np.complex128]:
    """``F`` at every row of an angle grid, shape (K,)."""
    th = _angles(cid, angles)
    return _F(cid, th, np.full(th.shape[0], complex(u)))


def alpha_c(
    p: float, angles: ArrayLike, reading: AlphaReading = "consistent"
) -> NDArray[np.float64]:
    """Centre of the non-trivial eigenvalue pair of the 1D four-state CRW, F-type.

    ``consistent`` uses ``(1 - 4 p_star^2) C1 / 4``, the coefficient appearing
    in the F-type factor; ``printed`` uses ``(1 - 4 p_star)^2 C1 / 4``. Only
    the first reproduces the determinant once ``p_star != 0``.
    """
    t = np.atleast_1d(np.asarray(angles, dtype=np.float64)).ravel()
    ps = p - 0.5
    C1 = np.cos(t) + np.cos(2 * t)
    if reading == "consistent":
        return 0.25 * (1.0 - 4.0 * ps**2) * C1
    if reading == "printed":
        return 0.25 * (1.0 - 4.0 * ps) ** 2 * C1
    raise ClosedFormError(f"unknown alpha_c reading {reading!r}")


def _no_eigenvalues(cid: ClosedFormId) -> ClosedFormError:
    return ClosedFormError(f"no closed eigenvalue list for {cid.label}")


def _eigen_grid(
    cid: ClosedFormId, th: NDArray[np.float64], reading: AlphaReading = "consistent"
) -> NDArray[np.complex128]:
    fam, s = cid.family, cid.shift.sign
    t = th[:, 0]
    ones = np.ones_like(t, dtype=np.complex128)

    if fam is CF.QW3:
        tt = _qw3_t(cid, t)
        root = 1j * np.sqrt((4.0 - tt**2).astype(np.complex128))
        return np.stack([-s * ones, (tt + root) / 2.0, (tt - root) / 2.0], axis=1)

    if fam is CF.QW4_1D and cid.shift is ShiftType.F:
        alpha = 0.5 * math.sqrt(max(0.0, 1.0 - 4.0 * cid.p_star**2)) * (np.cos(t) + np.cos(2 * t))
        root = 1j * np.sqrt((1.0 - alpha**2).astype(np.complex128))
        return np.stack([ones, -ones, alpha + root, alpha - root], axis=1)

    if fam is CF.CRW4_1D and cid.shift is ShiftType.F:
        ps = cid.p_star
        alpha = alpha_c(cid.p, t, reading)
        root = np.sqrt((alpha**2 + 4.0 * ps**2).astype(np.complex128))
        return np.stack([2j * ps * ones, -2j * ps * ones, alpha + root, alpha - root], axis=1)

    if fam in (CF.QW4_2D, CF.CRW4_2D):
        delta, ps = cid.shift.delta, cid.p_star
        c1, c2 = np.cos(th[:, 0]), np.cos(th[:, 1])
        if fam is CF.QW4_2D:
            beta = (0.5 - delta + ps) * c1 + (0.5 - delta - ps) * c2
            root = 1j * np.sqrt((1.0 - beta**2).astype(np.complex128))
            return np.stack([ones, -ones, beta + root, beta - root], axis=1)
        beta = (0.5 - delta + ps) ** 2 * c1 + (0.5 - delta - ps) ** 2 * c2
        root = np.sqrt((beta**2 - 4.0 * ps**2).astype(np.complex128))
        return np.stack([2 * ps * ones, -2 * ps * ones, beta + root, beta - root], axis=1)

    if fam.value.startswith("rw"):
        return _rw_symbol(cid, t)[:, None]

    raise _no_eigenvalues(cid)


def closed_eigenvalues(cid: ClosedFormId, angles: ArrayLike) -> List[complex]:
    """Closed-form eigenvalue multiset of ``M(k)`` at one angle vector.

    Raises:
        ClosedFormError: For families without a closed eigenvalue list.
    """
    th = _angles(cid, angles)
    if th.shape[0] != 1:
        raise DimensionError(f"closed_eigenvalues takes one angle vector, got {th.shape[0]}")
    return [complex(z) for z in _eigen_grid(cid, th)[0]]


def has_closed_eigenvalues(cid: ClosedFormId) -> bool:
    try:
        _eigen_grid(cid, np.zeros((1, cid.lattice_dim)))
    except ClosedFormError:
        return False
    return True


def closed_eigenvalue_grid(
    cid: ClosedFormId, angles: ArrayLike, reading: AlphaReading = "consistent"
) -> NDArray[np.complex128]:
    """Closed eigenvalues at every angle row, shape (K, n)."""
    return _eigen_grid(cid, _angles(cid, angles), reading)


def rw_limit_zeta_closed(u: float) -> float:
    """``(1 + sqrt(1 - u^2)) / 2``, the inverse zeta of the simple random walk in the limit.

    Raises:
        ClosedFormError: If ``|u| >= 1``.
    """
    u = float(u)
    if abs(u) >= 1.0:
        raise ClosedFormError(f"rw limit needs |u| < 1, got {u}")
    return (1.0 + math.sqrt(1.0 - u * u)) / 2.0


def log_series_lemma(x: float, n_terms: int) -> float:
    """Partial sum ``-sum_{n=1}^{n_terms} C(2n, n) / (2n) * (x^2/4)^n``.

    Converges to ``log((1 + sqrt(1 - x^2)) / 2)`` for ``|x| < 1``. Terms are
    built by their ratio so large ``n_terms`` never touches huge integers.
    """
    x = float(x)
    if abs(x) >= 1.0:
        raise ClosedFormError(f"series needs |x| < 1, got {x}")
    y = x * x / 4.0
    total = 0.0
    coeff = 1.0  # C(2n, n) * y^n, starting at n = 0
    for n in range(1, n_terms + 1):
        coeff *= y * (2 * n) * (2 * n - 1) / (n * n)
        total -= coeff / (2 * n)
    return total


def model_for(cid: ClosedFormId) -> WalkModel:
    """The walk model whose Fourier block the closed form describes."""
    fam, shift = cid.family, cid.shift
    if fam is CF.QW3:
        return three_state_qw(cid.eta, shift)
    if fam is CF.CRW3:
        return crw_from_qw(three_state_qw(cid.eta, shift))
    if fam is CF.QW4_1D:
        return four_state_qw_1d(cid.p, shift)
    if fam is CF.CRW4_1D:
        return crw_from_qw(four_state_qw_1d(cid.p, shift))
    if fam is CF.QW4_2D:
        return four_state_qw_2d(cid.p, shift)
    if fam is CF.CRW4_2D:
        return crw_from_qw(four_state_qw_2d(cid.p, shift))
    if fam is CF.RW_GENERAL:
        return multistate_rw(dict(cid.weights))
    if fam is CF.RW_WINDOW:
        return window_rw(cid.p0, cid.L)
    if fam is CF.RW_UNIFORM:
        return uniform_rw(cid.L)
    if fam is CF.GG_1D3:
        return generalized_grover_coin(3, cid.a, shift, GroverLattice.ONE_D_3)
    if fam is CF.GG_1D4:
        return generalized_grover_coin(4, cid.a, shift, GroverLattice.ONE_D_4)
    if fam is CF.GG_2D:
        return generalized_grover_coin(4, cid.a, shift, GroverLattice.TWO_D_4)
    if fam is CF.GG_TORUS:
        if shift is not ShiftType.F:
            raise ClosedFormError("the torus closed form exists for F-type only")
        return generalized_grover_coin(2 * cid.d, cid.a, shift, GroverLattice.TORUS)
    raise ClosedFormError(f"unknown closed form {fam!r}")


_QW_TO_CLOSED = {
    ModelFamily.THREE_STATE_QW: (CF.QW3, CF.CRW3),
    ModelFamily.FOUR_STATE_QW_1D: (CF.QW4_1D, CF.CRW4_1D),
    ModelFamily.FOUR_STATE_QW_2D: (CF.QW4_2D, CF.CRW4_2D),
}

_GROVER_TO_CLOSED = {
    GroverLattice.ONE_D_3.value: CF.GG_1D3,
    GroverLattice.ONE_D_4.value: CF.GG_1D4,
    GroverLattice.TWO_D_4.value: CF.GG_2D,
}


def closed_form_for(model: WalkModel) -> Optional[ClosedFormId]:
    """The closed form matching a constructor-built model, or None."""
    fam, params = model.family, model.params
    shift = model.shift or ShiftType.F
    if fam in _QW_TO_CLOSED or (fam is ModelFamily.CRW and model.base_family in _QW_TO_CLOSED):
        base = model.base_family if fam is ModelFamily.CRW else fam
        assert base is not None
        target = _QW_TO_CLOSED[base][1 if fam is ModelFamily.CRW else 0]
        if base is ModelFamily.THREE_STATE_QW:
            return ClosedFormId(target, shift=shift, eta=float(params["eta"]))
        return ClosedFormId(target, shift=shift, p=float(params["p"]))
    if fam is ModelFamily.MULTISTATE_RW:
        weights = tuple(sorted((int(x), float(w)) for x, w in params["weights"].items()))
        return ClosedFormId(CF.RW_GENERAL, weights=weights)
    if fam is ModelFamily.GENERALIZED_GROVER:
        lattice, a = params["lattice"], float(params["a"])
        if lattice in _GROVER_TO_CLOSED:
            return ClosedFormId(_GROVER_TO_CLOSED[lattice], shift=shift, a=a)
        if shift is ShiftType.F:
            return ClosedFormId(CF.GG_TORUS, shift=shift, a=a, d=int(params["d_c"]) // 2)
    return None


def closed_zeta_inv(cid: ClosedFormId, u: complex, N: int) -> complex:
    """``prefactor(u) * exp(mean log F)`` over the N-point periodic grid.

    The principal log is taken point by point; within ``|u| <= 1/2`` and for
    real coefficients this is the branch the engine uses.
    """
    grid = fourier_grid(cid.lattice_dim, N)
    values = F_values(cid, grid, u)
    if np.any(values == 0):
        raise ClosedFormError(f"F vanishes on the grid at u={u}")
    return complex(prefactor(cid, u) * np.exp(np.mean(np.log(values))))


def _det_residual(cid: ClosedFormId, model: WalkModel, th: NDArray, u_grid: NDArray) -> float:
    blocks = fourier_blocks(model, th)
    eye = np.eye(model.d_c, dtype=np.complex128)
    worst = 0.0
    for u in u_grid:
        lhs = stack_determinants(eye[None, :, :] - u * blocks)
        uu = np.full(th.shape[0], u)
        rhs = _prefactor(cid, uu) * _F(cid, th, uu)
        worst = max(worst, float(np.max(np.abs(lhs - rhs))))
    return worst


def verify_closed_form(
    cid: ClosedFormId,
    angle_grid: ArrayLike,
    u_grid: Sequence[complex],
    serial: bool = True,
) -> float:
    """Largest ``|det(I - u M(k)) - prefactor(u) F(k, u)|`` over both grids.

    Args:
        cid: Closed form with its parameters.
        angle_grid: Angle rows, shape (K, dim) (or (K,) on the line).
        u_grid: Spectral parameters; complex values are allowed.
        serial: Evaluate angle chunks in the calling thread only.
    """
    model = model_for(cid)
    th = _angles(cid, angle_grid)
    us = np.asarray(list(u_grid), dtype=np.complex128)
    parts = map_chunks(lambda chunk: _det_residual(cid, model, chunk, us), th, serial=serial)
    residual = max(parts) if parts else 0.0
    logger.debug("%s: determinant residual %.3e over %d points", cid.label, residual, th.size)
    return residual


def eigenvalue_residual(
    cid: ClosedFormId,
    angle_grid: ArrayLike,
    reading: AlphaReading = "consistent",
    metric: Literal["multiset", "hausdorff"] = "multiset",
) -> float:
    """Worst distance between numeric and closed eigenvalues over a grid.

    ``metric="multiset"`` matches eigenvalues one to one, so multiplicities
    count. ``"hausdorff"`` only compares the two point sets and never exceeds it.

    Raises:
        ClosedFormError: For families without a closed eigenvalue list.
    """
    if metric not in ("multiset", "hausdorff"):
        raise ClosedFormError(f"unknown eigenvalue metric {metric!r}")
    th = _angles(cid, angle_grid)
    closed = _eigen_grid(cid, th, reading)
    numeric = stack_eigenvalues(fourier_blocks(model_for(cid), th))
    distance = multiset_distance if metric == "multiset" else hausdorff_distance
    return max(distance(n, c) for n, c in zip(numeric, closed))


def eigen_product_residual(
    cid: ClosedFormId, angle_grid: ArrayLike, u_grid: Sequence[complex]
) -> float:
    """Worst ``|prod (1 - u lambda) - prefactor F|`` using the closed eigenvalues."""
    th = _angles(cid, angle_grid)
    closed = _eigen_grid(cid, th)
    worst = 0.0
    for u in u_grid:
        uu = np.full(th.shape[0], complex(u))
        lhs = np.prod(1.0 - u * closed, axis=1)
        worst = max(worst, float(np.max(np.abs(lhs - _prefactor(cid, uu) * _F(cid, th, uu)))))
    return worst


def all_closed_form_ids(
    etas: Sequence[float] = (0.3, 1.0, math.pi / 2, float(np.arccos(-1.0 / 3.0)), 2.8),
    ps: Sequence[float] = (0.0, 0.2, 0.5, 0.85, 1.0),
    a_values: Sequence[float] = (0.0, 0.3, 0.5, 1.0),
    dims: Sequence[int] = (1, 2, 3),
) -> List[ClosedFormId]:
    """Every family at a spread of parameters, both shifts where they exist."""
    ids: List[ClosedFormId] = []
    shifts = (ShiftType.M, ShiftType.F)
    for shift in shifts:
        for eta in etas:
            ids.append(ClosedFormId(CF.QW3, shift=shift, eta=eta))
            ids.append(ClosedFormId(CF.CRW3, shift=shift, eta=eta))
        for p in ps:
            for fam in (CF.QW4_1D, CF.CRW4_1D, CF.QW4_2D, CF.CRW4_2D):
                ids.append(ClosedFormId(fam, shift=shift, p=p))
        for a in a_values:
            for fam in (CF.GG_1D3, CF.GG_1D4, CF.GG_2D):
                ids.append(ClosedFormId(fam, shift=shift, a=a))
    for d in dims:
        for a in a_values:
            ids.append(ClosedFormId(CF.GG_TORUS, shift=ShiftType.F, a=a, d=d))
    ids.append(ClosedFormId(CF.RW_GENERAL, weights=((-1, 0.5), (1, 0.5))))
    ids.append(ClosedFormId(CF.RW_GENERAL, weights=((-3, 0.1), (-1, 0.25), (0, 0.3), (2, 0.35))))
    for L in (1, 2, 3):
        ids.append(ClosedFormId(CF.RW_WINDOW, p0=0.2, L=L))
        ids.append(ClosedFormId(CF.RW_UNIFORM, L=L))
    return ids


def angle_grid(dim: int, n: int, offset: float = 0.1) -> NDArray[np.float64]:
    """Product grid of ``n`` angles per axis, shifted off the Fourier points."""
    axis = offset + 2.0 * np.pi * np.arange(n) / n
    mesh = np.meshgrid(*([axis] * dim), indexing="ij")
    return np.stack([m.ravel() for m in mesh], axis=1)


