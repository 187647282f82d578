"""Fourier blocks, full torus operators, time evolution and matrix weights.

Conventions:

- One step is ``Psi_{n+1}(x) = sum_j K_j Psi_n(x - v_j)`` where ``K_j`` is
  coin row ``j`` (all other rows zeroed) and ``v_j`` its displacement.
- The Fourier block is ``M(k) = sum_j exp(-i <v_j, k>) K_j``, so a ``+e_j``
  mover carries ``exp(-i k_j)``.
- Full operators index ``x * d_c + c`` with sites ``x`` enumerated
  lexicographically (last axis fastest), wrapping with mathematical mod.
"""

import logging
from typing import Iterator, List, Optional, Sequence

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .config import get_settings
from .exceptions import DimensionError, SizeCapError, WalkZetaError
from .numerics import ComplexMatrix, identity, stack_eigenvalues
from .schemas import MatrixWeight, StateField, TorusSpec, WalkModel

logger = logging.getLogger(__name__)


def _jump_table(model: WalkModel) -> tuple[NDArray[np.int64], NDArray[np.complex128]]:
    jumps = model.jumps()
    vectors = np.array([j.displacement for j in jumps], dtype=np.int64)
    vectors = vectors.reshape(-1, model.lattice_dim)
    matrices = np.stack([j.matrix for j in jumps])
    return vectors, matrices


def fourier_grid(d: int, N: int) -> NDArray[np.float64]:
    """Angles ``2 pi k / N`` for every ``k`` in {0..N-1}^d, lexicographic, shape (N^d, d)."""
    if d < 1 or N < 1:
        raise DimensionError(f"grid needs d >= 1 and N >= 1, got d={d}, N={N}")
    ks = np.indices((N,) * d).reshape(d, -1).T
    return (2.0 * np.pi / N) * ks.astype(np.float64)


def fourier_block(model: WalkModel, k: ArrayLike) -> ComplexMatrix:
    """The d_c x d_c block ``M(k)``.

    Raises:
        DimensionError: If ``k`` does not have ``model.lattice_dim`` entries.
    """
    angles = np.atleast_1d(np.asarray(k, dtype=np.float64))
    if angles.shape != (model.lattice_dim,):
        raise DimensionError(
            f"wave vector has shape {angles.shape}, expected ({model.lattice_dim},)"
        )
    return fourier_blocks(model, angles[None, :])[0]


def fourier_blocks(model: WalkModel, grid: ArrayLike) -> NDArray[np.complex128]:
    """``M(k)`` for every row of ``grid`` (shape (K, d)); returns (K, d_c, d_c)."""
    angles = np.asarray(grid, dtype=np.float64)
    if angles.ndim != 2 or angles.shape[1] != model.lattice_dim:
        raise DimensionError(
            f"grid has shape {angles.shape}, expected (K, {model.lattice_dim})"
        )
    vectors, matrices = _jump_table(model)
    phases = np.exp(-1j * (angles @ vectors.T))
    return np.einsum("kj,jab->kab", phases, matrices)


def block_spectrum(model: WalkModel, N: int) -> NDArray[np.complex128]:
    """Union of the eigenvalues of ``M(2 pi k / N)`` over the grid, flattened."""
    blocks = fourier_blocks(model, fourier_grid(model.lattice_dim, N))
    return stack_eigenvalues(blocks).ravel()


def _check_cap(rows: int, cap: Optional[int], what: str) -> None:
    limit = get_settings().dense_cap if cap is None else cap
    if rows > limit:
        raise SizeCapError(rows, limit, what)


def _sites(torus: TorusSpec) -> NDArray[np.int64]:
    return np.indices(torus.shape).reshape(torus.d, -1).T


def full_operator(model: WalkModel, torus: TorusSpec, cap: Optional[int] = None) -> ComplexMatrix:
    """Dense ``M_A`` on the torus, size ``d_c N^d``.

    Block ``(x, y)`` collects ``K_j`` for every ``j`` with ``y = x - v_j (mod N)``,
    which makes ``full_operator @ state.flat()`` one ``evolve_step``.

    Raises:
        DimensionError: If the torus and model dimensions differ.
        SizeCapError: If the operator would exceed the dense cap.
    """
    if torus.d != model.lattice_dim:
        raise DimensionError(f"torus has d={torus.d}, model has d={model.lattice_dim}")
    n, d_c = torus.n_sites, model.d_c
    _check_cap(n * d_c, cap, "full operator")
    sites = _sites(torus)
    x_idx = np.arange(n)
    blocks = np.zeros((n, d_c, n, d_c), dtype=np.complex128)
    for jump in model.jumps():
        source = np.mod(sites - np.asarray(jump.displacement), torus.N)
        y_idx = np.ravel_multi_index(source.T, torus.shape)
        blocks[x_idx, :, y_idx, :] += jump.matrix
    return blocks.reshape(n * d_c, n * d_c)


def delta_state(
    torus: TorusSpec,
    d_c: int,
    chirality: int = 0,
    amplitudes: Optional[Sequence[complex]] = None,
) -> StateField:
    """State concentrated at the origin.

    Args:
        torus: Torus carrying the state.
        d_c: Number of chirality components.
        chirality: Component set to 1 when ``amplitudes`` is not given.
        amplitudes: Explicit origin vector of length ``d_c``.
    """
    values = np.zeros(torus.shape + (d_c,), dtype=np.complex128)
    origin = (0,) * torus.d
    if amplitudes is not None:
        vec = np.asarray(amplitudes, dtype=np.complex128)
        if vec.shape != (d_c,):
            raise DimensionError(f"origin vector has shape {vec.shape}, expected ({d_c},)")
        values[origin] = vec
    else:
        if not 0 <= chirality < d_c:
            raise DimensionError(f"chirality {chirality} outside 0..{d_c - 1}")
        values[origin + (chirality,)] = 1.0
    return StateField(torus=torus, values=values)


def evolve_step(model: WalkModel, state: StateField) -> StateField:
    """One step ``Psi(x) <- sum_j K_j Psi(x - v_j)`` with periodic wrap."""
    if state.torus.d != model.lattice_dim:
        raise DimensionError(
            f"state lives on a {state.torus.d}-torus, model on Z^{model.lattice_dim}"
        )
    if state.d_c != model.d_c:
        raise DimensionError(f"state has {state.d_c} components, model has {model.d_c}")
    axes = tuple(range(state.torus.d))
    out = np.zeros_like(state.values)
    for jump in model.jumps():
        shifted = np.roll(state.values, shift=jump.displacement, axis=axes)
        out += np.einsum("ab,...b->...a", jump.matrix, shifted)
    return StateField(torus=state.torus, values=out)


def trajectory(model: WalkModel, state: StateField, steps: int) -> Iterator[StateField]:
    """Yield ``Psi_0, Psi_1, ..., Psi_steps``."""
    if steps < 0:
        raise WalkZetaError(f"steps must be non-negative, got {steps}")
    yield state
    for _ in range(steps):
        state = evolve_step(model, state)
        yield state


def measure(state: StateField, p: int) -> NDArray[np.float64]:
    """``mu(x) = sum_c |Psi^c(x)|^p`` for every site, shape ``torus.shape``."""
    if p not in (1, 2):
        raise WalkZetaError(f"measure needs p in {{1, 2}}, got {p}")
    return np.sum(np.abs(state.values) ** p, axis=-1)


def total_measure(state: StateField, p: int) -> float:
    return float(np.sum(measure(state, p)))


def _weight_step(
    values: NDArray[np.complex128], vectors: NDArray[np.int64], matrices: NDArray[np.complex128]
) -> NDArray[np.complex128]:
    axes = tuple(range(values.ndim - 2))
    out = np.zeros_like(values)
    for v, K in zip(vectors, matrices):
        out += np.einsum("ab,...bc->...ac", K, np.roll(values, shift=tuple(v), axis=axes))
    return out


def matrix_weights(model: WalkModel, r: int) -> MatrixWeight:
    """``Phi_r(x)`` on Z^d by the one-step recursion from ``Phi_0 = I`` at the origin.

    The window has radius ``r * reach``, which is exactly the support after
    ``r`` steps, so the periodic roll never wraps a nonzero entry.
    """
    if r < 0:
        raise WalkZetaError(f"step count must be non-negative, got {r}")
    radius = r * model.reach
    width = 2 * radius + 1
    d, d_c = model.lattice_dim, model.d_c
    values = np.zeros((width,) * d + (d_c, d_c), dtype=np.complex128)
    values[(radius,) * d] = identity(d_c)
    vectors, matrices = _jump_table(model)
    for _ in range(r):
        values = _weight_step(values, vectors, matrices)
    return MatrixWeight(radius=radius, values=values, steps=r)


def matrix_weight_origin(model: WalkModel, r: int) -> ComplexMatrix:
    """Return matrix weight ``Phi_r(0)`` on Z^d."""
    return matrix_weights(model, r).at((0,) * model.lattice_dim)


def origin_weights(model: WalkModel, r_max: int) -> List[ComplexMatrix]:
    """``Phi_0(0), ..., Phi_{r_max}(0)`` from a single run of the recursion."""
    if r_max < 0:
        raise WalkZetaError(f"step count must be non-negative, got {r_max}")
    radius = r_max * model.reach
    d, d_c = model.lattice_dim, model.d_c
    values = np.zeros((2 * radius + 1,) * d + (d_c, d_c), dtype=np.complex128)
    origin = (radius,) * d
    values[origin] = identity(d_c)
    vectors, matrices = _jump_table(model)
    out = [values[origin].copy()]
    for _ in range(r_max):
        values = _weight_step(values, vectors, matrices)
        out.append(values[origin].copy())
    return out


def return_probabilities(
    model: WalkModel, steps: int, psi0: Optional[Sequence[complex]] = None, p: int = 2
) -> List[float]:
    """``sum_c |(Phi_n(0) psi0)_c|^p`` for n = 0..steps on Z^d.

    Defaults to the uniform normalized start vector. Unitary walks with a
    localized component keep this bounded away from zero.
    """
    if psi0 is None:
        vec = np.full(model.d_c, 1.0 / np.sqrt(model.d_c), dtype=np.complex128)
    else:
        vec = np.asarray(psi0, dtype=np.complex128)
    return [float(np.sum(np.abs(phi @ vec) ** p)) for phi in origin_weights(model, steps)]
