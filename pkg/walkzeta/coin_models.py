"""Coin matrix families packaged as WalkModel values.

Every constructor returns a ``WalkModel``: a coin, one lattice displacement
per coin row and a shift tag. Correlated random walks are derived from their
quantum parents by entrywise squaring, never hard-coded.

Available constructors
----------------------
- three_state_qw(eta, shift): 3-state walk on Z, steps -1, 0, +1
- four_state_qw_1d(p, shift): 4-state walk on Z, steps -2, -1, +1, +2
- four_state_qw_2d(p, shift): 4-state walk on Z^2, steps -e1, +e1, -e2, +e2
- crw_from_qw(model): correlated random walk of a quantum model
- generalized_grover_coin(d_c, a, shift, lattice): U(a) interpolation
- multistate_rw(weights): scalar random walk with jumps in {-L..L}
- custom_model(coin, displacements): user-supplied coin
"""

import logging
import math
from collections.abc import Mapping, Sequence
from typing import Any, Dict, Optional, Union

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .exceptions import ConfigError, ModelError
from .numerics import (
    SIGMA,
    hadamard,
    identity,
    is_column_stochastic,
    is_doubly_stochastic,
    is_unitary,
    kronecker,
)
from .schemas import Classification, GroverLattice, ModelFamily, ShiftType, Vector, WalkModel

logger = logging.getLogger(__name__)

# cos(eta) = -1/3 turns the 3-state coin into the Grover matrix.
GROVER_ETA = float(np.arccos(-1.0 / 3.0))

WEIGHT_SUM_TOL = 1e-12

_LINE_3: tuple[Vector, ...] = ((-1,), (0,), (1,))
_LINE_4: tuple[Vector, ...] = ((-2,), (-1,), (1,), (2,))


def _axis_moves(d: int) -> tuple[Vector, ...]:
    """Nearest-neighbour steps ordered (-e1, +e1, ..., -ed, +ed)."""
    moves = []
    for j in range(d):
        for sign in (-1, 1):
            v = [0] * d
            v[j] = sign
            moves.append(tuple(v))
    return tuple(moves)


def _check_probability(p: float) -> float:
    p = float(p)
    if not 0.0 <= p <= 1.0:
        raise ModelError(f"p must lie in [0, 1], got {p}")
    return p


def grover_coin(d_c: int) -> NDArray[np.complex128]:
    """Grover matrix with entries ``2/d_c - delta_ij``."""
    if d_c < 1:
        raise ModelError(f"Grover coin requires d_c >= 1, got {d_c}")
    return np.full((d_c, d_c), 2.0 / d_c, dtype=np.complex128) - identity(d_c)


def flip_flop(coin: ArrayLike, d: int) -> NDArray[np.complex128]:
    """Left-multiply by ``I_d (x) sigma``: swap rows 2j and 2j+1 for each axis."""
    return kronecker(identity(d), SIGMA) @ np.asarray(coin, dtype=np.complex128)


def _swap_rows(coin: NDArray[np.complex128], i: int, j: int) -> NDArray[np.complex128]:
    out = coin.copy()
    out[[i, j]] = out[[j, i]]
    return out


def three_state_qw(eta: float, shift: Union[ShiftType, str]) -> WalkModel:
    """Three-state walk on the line with parameter ``eta``.

    Args:
        eta: Coin angle; ``GROVER_ETA`` gives the Grover walk.
        shift: ``M`` for the moving coin, ``F`` for rows 1 and 3 swapped.

    Returns:
        Model with displacements (-1, 0, +1).
    """
    shift = ShiftType.parse(shift)
    c, s = math.cos(eta), math.sin(eta)
    h = s / math.sqrt(2.0)
    coin = np.array(
        [
            [-(1 + c) / 2, h, (1 - c) / 2],
            [h, c, h],
            [(1 - c) / 2, h, -(1 + c) / 2],
        ],
        dtype=np.complex128,
    )
    if shift is ShiftType.F:
        coin = _swap_rows(coin, 0, 2)
    return WalkModel(
        coin=coin,
        displacements=_LINE_3,
        lattice_dim=1,
        family=ModelFamily.THREE_STATE_QW,
        shift=shift,
        params={"eta": float(eta)},
    )


def _watabe_moving(p: float) -> NDArray[np.complex128]:
    q = 1.0 - p
    r = math.sqrt(p * q)
    return np.array(
        [
            [-q, p, r, r],
            [p, -q, r, r],
            [r, r, -p, q],
            [r, r, q, -p],
        ],
        dtype=np.complex128,
    )


def four_state_qw_1d(p: float, shift: Union[ShiftType, str]) -> WalkModel:
    """Four-state walk on the line, jumping one or two sites either way.

    The flip-flop coin is its own displayed matrix, i.e. the moving coin with
    its rows permuted as (1 4)(2 3); it is not ``(I_2 (x) sigma)`` times the
    moving coin.

    Raises:
        ModelError: If ``p`` is outside [0, 1].
    """
    p = _check_probability(p)
    shift = ShiftType.parse(shift)
    coin = _watabe_moving(p)
    if shift is ShiftType.F:
        coin = coin[::-1].copy()
    return WalkModel(
        coin=coin,
        displacements=_LINE_4,
        lattice_dim=1,
        family=ModelFamily.FOUR_STATE_QW_1D,
        shift=shift,
        params={"p": p},
    )


def four_state_qw_2d(p: float, shift: Union[ShiftType, str]) -> WalkModel:
    """Four-state walk on the square lattice; F-type is ``(I_2 (x) sigma) A_M``.

    Raises:
        ModelError: If ``p`` is outside [0, 1].
    """
    p = _check_probability(p)
    shift = ShiftType.parse(shift)
    coin = _watabe_moving(p)
    if shift is ShiftType.F:
        coin = flip_flop(coin, 2)
    return WalkModel(
        coin=coin,
        displacements=_axis_moves(2),
        lattice_dim=2,
        family=ModelFamily.FOUR_STATE_QW_2D,
        shift=shift,
        params={"p": p},
    )


def crw_from_qw(model: WalkModel) -> WalkModel:
    """Correlated random walk whose coin is the Hadamard square of a QW coin.

    Raises:
        ModelError: If ``model`` does not come from a QW constructor.
    """
    if not model.family.is_qw:
        raise ModelError(f"crw_from_qw needs a quantum walk model, got {model.family.value}")
    return WalkModel(
        coin=hadamard(model.coin, model.coin),
        displacements=model.displacements,
        lattice_dim=model.lattice_dim,
        family=ModelFamily.CRW,
        shift=model.shift,
        params=dict(model.params),
        base_family=model.family,
    )


def generalized_grover_matrix(d_c: int, a: float) -> NDArray[np.complex128]:
    """``U(a)`` with entries ``(2/d_c - 1) a + 1 - delta_ij``."""
    off = (2.0 / d_c - 1.0) * a + 1.0
    return np.full((d_c, d_c), off, dtype=np.complex128) - identity(d_c)


_LATTICE_SIZE = {GroverLattice.ONE_D_3: 3, GroverLattice.ONE_D_4: 4, GroverLattice.TWO_D_4: 4}


def generalized_grover_coin(
    d_c: int,
    a: float,
    shift: Union[ShiftType, str],
    lattice: Union[GroverLattice, str],
) -> WalkModel:
    """Walk driven by the generalized Grover matrix ``U(a)``.

    ``a = 1`` is the Grover matrix, ``a = 0`` its positive support. Row
    arrangements per lattice:

    - ``1d3``: F swaps rows 1 and 3, steps (-1, 0, +1)
    - ``1d4``: F reverses the rows, steps (-2, -1, +1, +2)
    - ``2d4`` and ``torus``: F is ``(I_d (x) sigma) U(a)``, steps +-e_j

    Args:
        d_c: Coin size; 3 or 4 for the line/plane variants, 2d for ``torus``.
        a: Interpolation parameter in [0, 1].
        shift: Shift type.
        lattice: One of ``1d3``, ``1d4``, ``2d4``, ``torus``.

    Raises:
        ModelError: If ``d_c`` does not fit the lattice or ``a`` is outside [0, 1].
    """
    shift = ShiftType.parse(shift)
    try:
        lattice = GroverLattice(lattice)
    except ValueError as exc:
        raise ModelError(f"unknown lattice {lattice!r}") from exc
    a = float(a)
    if not 0.0 <= a <= 1.0:
        raise ModelError(f"a must lie in [0, 1], got {a}")

    if lattice is GroverLattice.TORUS:
        if d_c < 2 or d_c % 2:
            raise ModelError(f"torus lattice needs an even d_c >= 2, got {d_c}")
        d = d_c // 2
        displacements = _axis_moves(d)
    else:
        if d_c != _LATTICE_SIZE[lattice]:
            need = _LATTICE_SIZE[lattice]
            raise ModelError(f"lattice {lattice.value} needs d_c={need}, got {d_c}")
        d = 2 if lattice is GroverLattice.TWO_D_4 else 1
        displacements = {
            GroverLattice.ONE_D_3: _LINE_3,
            GroverLattice.ONE_D_4: _LINE_4,
            GroverLattice.TWO_D_4: _axis_moves(2),
        }[lattice]

    coin = generalized_grover_matrix(d_c, a)
    if shift is ShiftType.F:
        if lattice is GroverLattice.ONE_D_3:
            coin = _swap_rows(coin, 0, 2)
        elif lattice is GroverLattice.ONE_D_4:
            coin = coin[::-1].copy()
        else:
            coin = flip_flop(coin, d)

    return WalkModel(
        coin=coin,
        displacements=displacements,
        lattice_dim=d,
        family=ModelFamily.GENERALIZED_GROVER,
        shift=shift,
        params={"a": a, "lattice": lattice.value, "d_c": d_c},
    )


def multistate_rw(weights: Mapping[int, float]) -> WalkModel:
    """Random walk on the line jumping to ``x + j`` with probability ``p_j``.

    Args:
        weights: Map from jump ``j`` in {-L..L} to its probability.

    Raises:
        ModelError: If a weight is outside [0, 1] or the weights do not sum to 1.
    """
    if not weights:
        raise ModelError("multistate_rw needs at least one jump")
    clean: Dict[int, float] = {}
    for x, w in weights.items():
        w = float(w)
        if not 0.0 <= w <= 1.0:
            raise ModelError(f"weight p_{x}={w} outside [0, 1]")
        clean[int(x)] = clean.get(int(x), 0.0) + w
    total = math.fsum(clean.values())
    if abs(total - 1.0) > WEIGHT_SUM_TOL:
        raise ModelError(f"weights sum to {total!r}, expected 1")
    jumps = sorted(clean)
    return WalkModel(
        coin=np.ones((1, 1), dtype=np.complex128),
        displacements=tuple((x,) for x in jumps),
        lattice_dim=1,
        family=ModelFamily.MULTISTATE_RW,
        params={"L": max(abs(x) for x in jumps), "weights": {x: clean[x] for x in jumps}},
        jump_weights=tuple(clean[x] for x in jumps),
    )


def simple_rw() -> WalkModel:
    return multistate_rw({-1: 0.5, 1: 0.5})


def window_rw(p0: float, L: int) -> WalkModel:
    """Stay with probability ``p0``, else jump uniformly to one of the 2L neighbours."""
    if L < 1:
        raise ModelError(f"window half-width must be positive, got {L}")
    p0 = _check_probability(p0)
    p_star = (1.0 - p0) / (2 * L)
    weights = {x: p_star for x in range(-L, L + 1) if x}
    weights[0] = p0
    return multistate_rw(weights)


def uniform_rw(L: int) -> WalkModel:
    """All 2L+1 jumps in {-L..L}, the origin included, equally likely."""
    return window_rw(1.0 / (2 * L + 1), L)


def custom_model(coin: ArrayLike, displacements: Sequence[Sequence[int]]) -> WalkModel:
    """Model from an arbitrary coin; no closed form is attached to it."""
    displacements = [tuple(int(c) for c in v) for v in displacements]
    if not displacements:
        raise ModelError("custom model needs displacements")
    return WalkModel(
        coin=np.asarray(coin, dtype=np.complex128),
        displacements=tuple(displacements),
        lattice_dim=len(displacements[0]),
        family=ModelFamily.CUSTOM,
    )


def classify(model: WalkModel) -> Classification:
    """Unitary / column-stochastic / doubly-stochastic flags for a model.

    Scalar random walks are judged on their jump weights: they are
    stochastic, and unitary only when a single jump carries all the mass.
    """
    if model.jump_weights is not None:
        weights = np.asarray(model.jump_weights)
        stochastic = bool(np.all(weights >= 0) and abs(weights.sum() - 1.0) < 1e-10)
        return Classification(
            unitary=int(np.count_nonzero(weights)) == 1,
            column_stochastic=stochastic,
            doubly_stochastic=stochastic,
        )
    return Classification(
        unitary=is_unitary(model.coin),
        column_stochastic=is_column_stochastic(model.coin),
        doubly_stochastic=is_doubly_stochastic(model.coin),
    )


def _parse_scalar(value: Any) -> complex:
    if isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise ConfigError(f"complex entries are [re, im] pairs, got {value!r}")
        return complex(float(value[0]), float(value[1]))
    return complex(value)


def _parse_eta(value: Any) -> float:
    if isinstance(value, str):
        if value.strip().lower() == "grover":
            return GROVER_ETA
        raise ConfigError(f"eta must be a number or 'grover', got {value!r}")
    return float(value)


def model_from_config(cfg: Mapping[str, Any]) -> WalkModel:
    """Build a model from its JSON description.

    Accepted shapes::

        {"family": "three_state_qw", "shift": "f", "eta": 1.9106}
        {"family": "four_state_qw_1d" | "four_state_qw_2d", "shift": "m", "p": 0.5}
        {"crw_of": {...quantum model...}}
        {"family": "generalized_grover", "shift": "f", "a": 0.5, "lattice": "2d4"}
        {"family": "generalized_grover", "lattice": "torus", "d": 3, "a": 1}
        {"family": "multistate_rw", "weights": {"-1": 0.5, "1": 0.5}}
        {"family": "custom", "coin": [[0, 1], [1, 0]], "displacements": [[-1], [1]]}

    Raises:
        ConfigError: If the description is malformed.
    """
    if not isinstance(cfg, Mapping):
        raise ConfigError(f"model config must be an object, got {type(cfg).__name__}")
    try:
        if "crw_of" in cfg:
            return crw_from_qw(model_from_config(cfg["crw_of"]))
        family = cfg.get("family")
        if family == "crw_of":
            return crw_from_qw(model_from_config(cfg["of"]))
        shift = cfg.get("shift", "f")
        if family == ModelFamily.THREE_STATE_QW.value:
            return three_state_qw(_parse_eta(cfg.get("eta", "grover")), shift)
        if family == ModelFamily.FOUR_STATE_QW_1D.value:
            return four_state_qw_1d(float(cfg.get("p", 0.5)), shift)
        if family == ModelFamily.FOUR_STATE_QW_2D.value:
            return four_state_qw_2d(float(cfg.get("p", 0.5)), shift)
        if family == ModelFamily.GENERALIZED_GROVER.value:
            lattice = GroverLattice(cfg.get("lattice", "torus"))
            if "d_c" in cfg:
                d_c = int(cfg["d_c"])
            elif lattice is GroverLattice.TORUS:
                d_c = 2 * int(cfg.get("d", 1))
            else:
                d_c = _LATTICE_SIZE[lattice]
            return generalized_grover_coin(d_c, float(cfg.get("a", 1.0)), shift, lattice)
        if family == ModelFamily.MULTISTATE_RW.value:
            raw = cfg.get("weights")
            if not isinstance(raw, Mapping):
                raise ConfigError("multistate_rw needs a 'weights' object")
            return multistate_rw({int(k): float(v) for k, v in raw.items()})
        if family == ModelFamily.CUSTOM.value:
            coin = [[_parse_scalar(z) for z in row] for row in cfg["coin"]]
            moves = [v if isinstance(v, (list, tuple)) else [v] for v in cfg["displacements"]]
            return custom_model(coin, moves)
    except (KeyError, TypeError) as exc:
        raise ConfigError(f"malformed model config {dict(cfg)!r}: {exc}") from exc
    except ValueError as exc:
        if isinstance(exc, ConfigError):
            raise
        raise ConfigError(str(exc)) from exc
    raise ConfigError(f"unknown model family {cfg.get('family')!r}")


def model_to_config(model: WalkModel) -> Dict[str, Any]:
    """Inverse of ``model_from_config`` for constructor-built models."""
    shift: Optional[str] = model.shift.value if model.shift else None
    if model.family is ModelFamily.CRW:
        assert model.base_family is not None
        parent = dict(model.params)
        parent.update({"family": model.base_family.value, "shift": shift})
        return {"crw_of": parent}
    if model.family is ModelFamily.MULTISTATE_RW:
        return {
            "family": model.family.value,
            "weights": {str(k): v for k, v in model.params["weights"].items()},
        }
    if model.family is ModelFamily.CUSTOM:
        return {
            "family": model.family.value,
            "coin": [[[z.real, z.imag] for z in row] for row in model.coin.tolist()],
            "displacements": [list(v) for v in model.displacements],
        }
    cfg: Dict[str, Any] = {"family": model.family.value, "shift": shift}
    cfg.update(model.params)
    return cfg
