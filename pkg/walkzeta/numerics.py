"""Dense complex linear algebra kernel.

All matrices are ``numpy`` arrays of dtype ``complex128``. Nothing here keeps
state, so every function is safe to call from several threads at once.
"""

import logging
from collections.abc import Iterable, Sequence
from typing import Union

import numpy as np
import scipy.linalg
from numpy.typing import ArrayLike, NDArray
from scipy.optimize import linear_sum_assignment

from .exceptions import ConvergenceError, DimensionError, NumericsError, SizeCapError

logger = logging.getLogger(__name__)

ComplexMatrix = NDArray[np.complex128]
Complex = Union[complex, np.complex128]

# Default row limit for eigenvalue problems; arc operators use the dense cap instead.
EIGEN_SIZE_CAP = 64

UNITARY_TOL = 1e-10
STOCHASTIC_TOL = 1e-10

SIGMA: ComplexMatrix = np.array([[0, 1], [1, 0]], dtype=np.complex128)


def as_matrix(m: ArrayLike) -> ComplexMatrix:
    """Convert ``m`` to a finite 2-D complex128 array.

    Args:
        m: Anything ``numpy`` can turn into a 2-D array.

    Returns:
        The matrix as ``complex128``.

    Raises:
        DimensionError: If the input is not 2-D or has an empty axis.
        NumericsError: If any entry is NaN or infinite.
    """
    arr = np.asarray(m, dtype=np.complex128)
    if arr.ndim != 2 or arr.shape[0] == 0 or arr.shape[1] == 0:
        raise DimensionError(f"expected a non-empty 2-D matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise NumericsError("matrix has non-finite entries")
    return arr


def _square(m: ArrayLike) -> ComplexMatrix:
    arr = as_matrix(m)
    if arr.shape[0] != arr.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {arr.shape}")
    return arr


def identity(n: int) -> ComplexMatrix:
    return np.eye(n, dtype=np.complex128)


def mat_mul(a: ArrayLike, b: ArrayLike) -> ComplexMatrix:
    """Matrix product ``a @ b``.

    Raises:
        DimensionError: If ``a.cols != b.rows``.
    """
    left, right = as_matrix(a), as_matrix(b)
    if left.shape[1] != right.shape[0]:
        raise DimensionError(
            f"cannot multiply {left.shape[0]}x{left.shape[1]} by {right.shape[0]}x{right.shape[1]}"
        )
    return left @ right


def _lu_diagonal(m: ComplexMatrix) -> tuple[NDArray[np.complex128], int]:
    """LU with partial pivoting; returns the U diagonal and the transposition count."""
    lu, piv = scipy.linalg.lu_factor(m, check_finite=False)
    swaps = int(np.count_nonzero(piv != np.arange(piv.size)))
    return np.diag(lu), swaps


def determinant(m: ArrayLike) -> complex:
    """Determinant via LU factorization with partial pivoting.

    Args:
        m: Square complex matrix.

    Returns:
        ``det(m)`` as a Python complex.

    Raises:
        DimensionError: If ``m`` is not square.
    """
    arr = _square(m)
    diag, swaps = _lu_diagonal(arr)
    det = complex(np.prod(diag))
    return -det if swaps % 2 else det


def log_determinant(m: ArrayLike) -> complex:
    """Principal logarithm of ``det(m)`` without forming the determinant.

    The modulus is accumulated as a sum of ``log|u_ii|`` so it survives
    determinants far outside double range; the phase is wrapped to (-pi, pi].

    Raises:
        DimensionError: If ``m`` is not square.
        NumericsError: If ``m`` is singular.
    """
    arr = _square(m)
    diag, swaps = _lu_diagonal(arr)
    moduli = np.abs(diag)
    if np.any(moduli == 0.0):
        raise NumericsError("log of a singular determinant")
    log_abs = float(np.sum(np.log(moduli)))
    phase = float(np.sum(np.angle(diag))) + np.pi * swaps
    phase = float(np.angle(np.exp(1j * phase)))
    return complex(log_abs, phase)


def eigenvalues(m: ArrayLike, cap: int = EIGEN_SIZE_CAP) -> NDArray[np.complex128]:
    """All eigenvalues of a square matrix, with multiplicity, unordered.

    Args:
        m: Square matrix with at most ``cap`` rows.
        cap: Row limit; callers with their own dense cap pass it here.

    Raises:
        DimensionError: If ``m`` is not square.
        SizeCapError: If ``m`` has more than ``cap`` rows.
        ConvergenceError: If the QR iteration fails.
    """
    arr = _square(m)
    if arr.shape[0] > cap:
        raise SizeCapError(arr.shape[0], cap, "eigenvalue problem")
    try:
        vals = np.linalg.eigvals(arr)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(f"eigenvalue iteration did not converge: {exc}") from exc
    return vals.astype(np.complex128)


def trace_of_power(m: ArrayLike, r: int) -> complex:
    """``Tr(m^r)`` by binary powering. ``r = 0`` gives the matrix size."""
    arr = _square(m)
    if r < 0:
        raise DimensionError(f"power must be non-negative, got {r}")
    return complex(np.trace(np.linalg.matrix_power(arr, r)))


def kronecker(a: ArrayLike, b: ArrayLike) -> ComplexMatrix:
    """Kronecker product with block layout ``a_ij * b``."""
    return np.kron(as_matrix(a), as_matrix(b))


def hadamard(a: ArrayLike, b: ArrayLike) -> ComplexMatrix:
    """Entrywise product.

    Raises:
        DimensionError: If the shapes differ.
    """
    left, right = as_matrix(a), as_matrix(b)
    if left.shape != right.shape:
        raise DimensionError(f"shape mismatch {left.shape} vs {right.shape}")
    return left * right


def spectral_radius(m: ArrayLike) -> float:
    return float(np.max(np.abs(eigenvalues(m))))


def is_unitary(m: ArrayLike, tol: float = UNITARY_TOL) -> bool:
    arr = _square(m)
    gap = arr.conj().T @ arr - identity(arr.shape[0])
    return bool(np.max(np.abs(gap)) < tol)


def is_column_stochastic(m: ArrayLike, tol: float = STOCHASTIC_TOL) -> bool:
    """Real, non-negative entries and every column summing to 1."""
    arr = _square(m)
    if np.max(np.abs(arr.imag)) >= tol:
        return False
    real = arr.real
    if np.min(real) < -tol:
        return False
    return bool(np.max(np.abs(real.sum(axis=0) - 1.0)) < tol)


def is_doubly_stochastic(m: ArrayLike, tol: float = STOCHASTIC_TOL) -> bool:
    arr = _square(m)
    return is_column_stochastic(arr, tol) and is_column_stochastic(arr.T, tol)


def stack_determinants(stack: NDArray[np.complex128]) -> NDArray[np.complex128]:
    """Determinants of a ``(K, n, n)`` stack, one LAPACK LU per slice."""
    if stack.ndim != 3 or stack.shape[1] != stack.shape[2]:
        raise DimensionError(f"expected a (K, n, n) stack, got shape {stack.shape}")
    return np.linalg.det(stack).astype(np.complex128)


def stack_eigenvalues(stack: NDArray[np.complex128]) -> NDArray[np.complex128]:
    """Eigenvalues of every slice of a ``(K, n, n)`` stack, shape ``(K, n)``."""
    if stack.ndim != 3 or stack.shape[1] != stack.shape[2]:
        raise DimensionError(f"expected a (K, n, n) stack, got shape {stack.shape}")
    if stack.shape[1] > EIGEN_SIZE_CAP:
        raise SizeCapError(stack.shape[1], EIGEN_SIZE_CAP, "eigenvalue problem")
    try:
        return np.linalg.eigvals(stack).astype(np.complex128)
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(f"eigenvalue iteration did not converge: {exc}") from exc


def multiset_distance(xs: Sequence[Complex] | NDArray, ys: Sequence[Complex] | NDArray) -> float:
    """Largest pair gap under the optimal one-to-one matching of two multisets.

    The matching minimizes the total gap (Hungarian algorithm); the reported
    figure is the worst matched pair, which is zero iff the multisets agree.

    Raises:
        DimensionError: If the multisets have different sizes.
    """
    left = np.asarray(xs, dtype=np.complex128).ravel()
    right = np.asarray(ys, dtype=np.complex128).ravel()
    if left.size != right.size:
        raise DimensionError(f"multiset sizes differ: {left.size} vs {right.size}")
    if left.size == 0:
        return 0.0
    cost = np.abs(left[:, None] - right[None, :])
    rows, cols = linear_sum_assignment(cost)
    return float(np.max(cost[rows, cols]))


def hausdorff_distance(xs: Iterable[Complex], ys: Iterable[Complex]) -> float:
    """Symmetric Hausdorff distance between two finite point sets in C."""
    left = np.asarray(list(xs), dtype=np.complex128).ravel()
    right = np.asarray(list(ys), dtype=np.complex128).ravel()
    if left.size == 0 or right.size == 0:
        raise DimensionError("hausdorff distance of an empty set")
    cost = np.abs(left[:, None] - right[None, :])
    return float(max(cost.min(axis=1).max(), cost.min(axis=0).max()))
