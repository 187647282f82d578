"""Generalized Grover operators on regular graphs and the Konno-Sato identity.

For a simple connected (q+1)-regular graph with n vertices and m edges::

    det(I_2m - u U(a)) = (1 - u^2)^(m - n)
                         * det[(1 + (q + (1-q)a) u^2) I_n - (1 + q + (1-q)a) u P]

where ``U(a)`` is the arc operator below and ``P = A / (q + 1)`` the simple
random walk. ``a = 1`` is the Grover walk, ``a = 0`` the non-backtracking
(Hashimoto) operator, for which the identity is Ihara's formula.
"""

import logging
from collections.abc import Mapping, Sequence
from typing import Any, Dict, List, Optional

import networkx as nx
import numpy as np
from numpy.typing import NDArray

from .closed_forms import F_values, closed_zeta_inv, model_for, prefactor
from .config import get_settings
from .exceptions import ConfigError, GraphError, SizeCapError, WalkZetaError
from .numerics import (
    ComplexMatrix,
    determinant,
    eigenvalues,
    identity,
    log_determinant,
    multiset_distance,
)
from .schemas import ClosedFormFamily, ClosedFormId, RegularGraph, ShiftType
from .walk_operator import block_spectrum, fourier_blocks, fourier_grid
from .zeta_engine import spectral_bound

logger = logging.getLogger(__name__)

GRAPH_KINDS = ("cycle", "complete", "petersen", "hypercube", "torus")

# Relative residuals are floored here because both sides share their zeros in u.
RESIDUAL_FLOOR = 1e-30


def _from_networkx(name: str, G: nx.Graph) -> RegularGraph:
    """Canonical RegularGraph from a networkx graph (sorted vertex labels)."""
    if nx.number_of_selfloops(G):
        raise GraphError(f"{name}: not simple (self-loops)")
    if G.number_of_nodes() == 0 or not nx.is_connected(G):
        raise GraphError(f"{name}: not connected")
    H = nx.convert_node_labels_to_integers(G, ordering="sorted")
    degrees = {deg for _, deg in H.degree()}
    if len(degrees) != 1:
        raise GraphError(f"{name}: not regular (degrees {sorted(degrees)})")
    edges = tuple(sorted((min(u, v), max(u, v)) for u, v in H.edges()))
    return RegularGraph(name=name, n=H.number_of_nodes(), edges=edges, degree=degrees.pop())


def build_graph(
    kind: str, n: Optional[int] = None, d: Optional[int] = None, N: Optional[int] = None
) -> RegularGraph:
    """One of the built-in regular graphs.

    Args:
        kind: ``cycle`` (N), ``complete`` (n), ``petersen``, ``hypercube`` (d)
            or ``torus`` (d, N).
        n: Vertex count for ``complete``.
        d: Dimension for ``hypercube`` and ``torus``.
        N: Side length for ``cycle`` and ``torus``.

    Raises:
        GraphError: If the parameters give a multigraph or a degenerate graph.
    """
    if kind == "cycle":
        side = N if N is not None else n
        if side is None:
            raise GraphError("cycle needs N")
        if side < 3:
            raise GraphError(f"cycle({side}) is not simple")
        return _from_networkx(f"cycle({side})", nx.cycle_graph(side))
    if kind == "complete":
        if n is None or n < 2:
            raise GraphError(f"complete graph needs n >= 2, got {n}")
        return _from_networkx(f"complete({n})", nx.complete_graph(n))
    if kind == "petersen":
        return _from_networkx("petersen", nx.petersen_graph())
    if kind == "hypercube":
        if d is None or d < 1:
            raise GraphError(f"hypercube needs d >= 1, got {d}")
        return _from_networkx(f"hypercube({d})", nx.hypercube_graph(d))
    if kind == "torus":
        if d is None or N is None or d < 1:
            raise GraphError(f"torus needs d >= 1 and N, got d={d}, N={N}")
        if N < 3:
            raise GraphError(f"torus({d}, {N}) is not simple")
        return _from_networkx(f"torus({d},{N})", nx.grid_graph(dim=[N] * d, periodic=True))
    raise GraphError(f"unknown graph kind {kind!r}; expected one of {GRAPH_KINDS}")


def graph_from_config(cfg: Mapping[str, Any]) -> RegularGraph:
    """Build a graph from ``{"kind": ..., "n": ..., "d": ..., "N": ...}``."""
    if not isinstance(cfg, Mapping) or "kind" not in cfg:
        raise ConfigError(f"graph config needs a 'kind', got {cfg!r}")
    try:
        return build_graph(
            str(cfg["kind"]),
            n=int(cfg["n"]) if "n" in cfg else None,
            d=int(cfg["d"]) if "d" in cfg else None,
            N=int(cfg["N"]) if "N" in cfg else None,
        )
    except (TypeError, ValueError) as exc:
        if isinstance(exc, GraphError):
            raise
        raise ConfigError(f"malformed graph config {dict(cfg)!r}: {exc}") from exc


def adjacency_matrix(g: RegularGraph) -> NDArray[np.float64]:
    A = np.zeros((g.n, g.n))
    for u, v in g.edges:
        A[u, v] = A[v, u] = 1.0
    return A


def transition_matrix(g: RegularGraph) -> NDArray[np.float64]:
    """Simple random walk ``P = A / (q + 1)``; rows sum to 1."""
    return adjacency_matrix(g) / g.degree


def _arc_ends(g: RegularGraph) -> tuple[NDArray[np.int64], NDArray[np.int64]]:
    arcs = np.asarray(g.arcs, dtype=np.int64)
    return arcs[:, 0], arcs[:, 1]


def arc_operator(g: RegularGraph, a: float) -> ComplexMatrix:
    """The 2m x 2m generalized Grover operator on arcs.

    Entry ``(e, f)`` is ``(2/deg(t(f)) - 1) a + 1 - [e = f^-1]`` when
    ``o(e) = t(f)`` and 0 otherwise.
    """
    origin, terminus = _arc_ends(g)
    deg = np.full(g.n, float(g.degree))
    weight = (2.0 / deg[terminus] - 1.0) * a + 1.0
    W = np.where(origin[:, None] == terminus[None, :], weight[None, :], 0.0).astype(np.complex128)
    rows = np.arange(2 * g.m)
    W[rows, rows ^ 1] -= 1.0
    return W


def hashimoto_matrix(g: RegularGraph) -> NDArray[np.float64]:
    """Non-backtracking matrix: ``B[e, f] = 1`` iff ``f`` follows ``e`` without reversing it."""
    arcs = g.arcs
    arc_index = {arc: i for i, arc in enumerate(arcs)}
    neighbours: Dict[int, List[int]] = {v: [] for v in range(g.n)}
    for u, v in g.edges:
        neighbours[u].append(v)
        neighbours[v].append(u)
    B = np.zeros((len(arcs), len(arcs)))
    for e_idx, (u, v) in enumerate(arcs):
        for w in neighbours[v]:
            if w != u:
                B[e_idx, arc_index[(v, w)]] = 1.0
    return B


def _dense_limit(cap: Optional[int]) -> int:
    return get_settings().dense_cap if cap is None else cap


def _check_cap(g: RegularGraph, cap: Optional[int]) -> None:
    limit = _dense_limit(cap)
    if 2 * g.m > limit:
        raise SizeCapError(2 * g.m, limit, "arc operator")


def konno_sato_lhs(g: RegularGraph, a: float, u: complex, cap: Optional[int] = None) -> complex:
    """``det(I - u U(a))`` on the arcs.

    Raises:
        SizeCapError: If 2m exceeds the dense cap.
    """
    _check_cap(g, cap)
    W = arc_operator(g, a)
    return determinant(identity(W.shape[0]) - complex(u) * W)


def _vertex_side(g: RegularGraph, quad: float, lin: float, u: complex) -> complex:
    M = (1.0 + quad * u * u) * identity(g.n) - lin * u * transition_matrix(g)
    return (1.0 - u * u) ** (g.m - g.n) * determinant(M)


def konno_sato_rhs(g: RegularGraph, a: float, u: complex) -> complex:
    """Vertex-space side of the generalized Konno-Sato identity."""
    q, u = g.q, complex(u)
    return _vertex_side(g, q + (1 - q) * a, 1 + q + (1 - q) * a, u)


def konno_sato_classical_rhs(g: RegularGraph, a: int, u: complex) -> complex:
    """The two classical forms: Ihara's (``a = 0``) and the Grover walk's (``a = 1``).

    Raises:
        WalkZetaError: If ``a`` is not 0 or 1.
    """
    q, u = g.q, complex(u)
    if a == 0:
        return _vertex_side(g, q, q + 1, u)
    if a == 1:
        return _vertex_side(g, 1.0, 2.0, u)
    raise WalkZetaError(f"classical forms exist for a in {{0, 1}}, got {a}")


def _relative(lhs: complex, rhs: complex) -> float:
    return abs(lhs - rhs) / max(abs(lhs), abs(rhs), RESIDUAL_FLOOR)


def verify_konno_sato(
    g: RegularGraph, a_grid: Sequence[float], u_grid: Sequence[complex], cap: Optional[int] = None
) -> float:
    """Largest relative gap between both sides over the a and u grids.

    Grids should stay off the common zeros of both sides, where the relative
    residual is meaningless.
    """
    worst = 0.0
    for a in a_grid:
        for u in u_grid:
            worst = max(worst, _relative(konno_sato_lhs(g, a, u, cap), konno_sato_rhs(g, a, u)))
    logger.debug("%s: konno-sato residual %.3e", g.name, worst)
    return worst


def ihara_check(g: RegularGraph, u_grid: Sequence[complex]) -> float:
    """Ihara's formula through the Hashimoto matrix, plus ``U(0) = B^T``.

    Returns the larger of the entrywise gap between ``arc_operator(g, 0)``
    and ``B^T`` and the relative determinant residual over ``u_grid``.
    """
    B = hashimoto_matrix(g)
    gap = float(np.max(np.abs(arc_operator(g, 0.0) - B.T)))
    A = adjacency_matrix(g)
    worst = gap
    for u in u_grid:
        u = complex(u)
        lhs = determinant(identity(B.shape[0]) - u * B)
        vertex = identity(g.n) - u * A + g.q * u * u * identity(g.n)
        rhs = (1.0 - u * u) ** (g.m - g.n) * determinant(vertex)
        worst = max(worst, _relative(lhs, rhs))
    return worst


def _torus_form(d: int, a: float) -> ClosedFormId:
    return ClosedFormId(ClosedFormFamily.GG_TORUS, shift=ShiftType.F, a=a, d=d)


def torus_correspondence(
    d: int, N: int, a: float, u_grid: Sequence[complex], cap: Optional[int] = None
) -> float:
    """Arc-operator route against the lattice walk's closed form on ``T^d_N``.

    Compares ``det(I - u U(a))`` with ``prod_k (1 - u^2)^(d-1) F(k, u, a)`` for
    every ``u``; for real ``u`` inside the convergence disk it also compares the
    ``N^d``-th roots, i.e. the two reciprocal zeta values.
    """
    g = build_graph("torus", d=d, N=N)
    cid = _torus_form(d, a)
    grid = fourier_grid(d, N)
    rho = spectral_bound(model_for(cid), N)
    worst = 0.0
    for u in u_grid:
        u = complex(u)
        lhs = konno_sato_lhs(g, a, u, cap)
        rhs = complex(np.prod(prefactor(cid, u) * F_values(cid, grid, u)))
        worst = max(worst, _relative(lhs, rhs))
        if u.imag == 0 and abs(u) * rho < 1.0:
            W = arc_operator(g, a)
            arc_root = complex(np.exp(log_determinant(identity(W.shape[0]) - u * W) / g.n))
            worst = max(worst, _relative(arc_root, closed_zeta_inv(cid, u, N)))
    return worst


def arc_spectrum_matches_walk(d: int, N: int, a: float, cap: Optional[int] = None) -> float:
    """Multiset distance between the arc spectrum and the union of Fourier-block spectra.

    Well conditioned at ``a = 1`` where ``U(a)`` is unitary. For ``a < 1`` the
    arc operator is not normal and eigenvalues near a defective pair move by
    about the square root of the rounding error; use ``arc_traces_match_walk``
    there.

    Raises:
        SizeCapError: If 2m exceeds the dense cap.
    """
    g = build_graph("torus", d=d, N=N)
    _check_cap(g, cap)
    arc = eigenvalues(arc_operator(g, a), cap=_dense_limit(cap))
    walk = block_spectrum(model_for(_torus_form(d, a)), N)
    return multiset_distance(arc, walk)


def arc_traces_match_walk(
    d: int, N: int, a: float, r_max: int = 8, cap: Optional[int] = None
) -> float:
    """Power sums of the arc spectrum against those of the Fourier blocks.

    Compares ``Tr(U(a)^r)`` with ``sum_k Tr(M(k)^r)`` for r = 1..r_max. Equal
    power sums up to the matrix size mean equal spectra, and unlike the
    eigenvalues themselves they stay well conditioned for every ``a``.

    Returns:
        Largest gap relative to ``max(1, |sum_k Tr(M(k)^r)|)``.

    Raises:
        SizeCapError: If 2m exceeds the dense cap.
    """
    if r_max < 1:
        raise WalkZetaError(f"r_max must be positive, got {r_max}")
    g = build_graph("torus", d=d, N=N)
    _check_cap(g, cap)
    W = arc_operator(g, a)
    blocks = fourier_blocks(model_for(_torus_form(d, a)), fourier_grid(d, N))
    arc_power, block_power = W.copy(), blocks.copy()
    worst = 0.0
    for _ in range(r_max):
        arc_trace = complex(np.trace(arc_power))
        walk_trace = complex(np.einsum("kii->", block_power))
        worst = max(worst, abs(arc_trace - walk_trace) / max(1.0, abs(walk_trace)))
        arc_power = arc_power @ W
        block_power = block_power @ blocks
    logger.debug("torus(%d,%d) a=%s: power sum residual %.3e", d, N, a, worst)
    return worst


def graph_summary(g: RegularGraph) -> Dict[str, Any]:
    info = g.to_dict()
    info["q"] = g.q
    info["arcs"] = 2 * g.m
    return info
