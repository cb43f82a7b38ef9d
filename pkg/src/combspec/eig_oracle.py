"""Brute-force spectral oracle.

Nothing here knows about combs or Chebyshev polynomials: it is the ground
truth the closed-form machinery is checked against.

* ``eig_dense``: row-cyclic Jacobi rotations (compiled with numba; a
  400 x 400 matrix takes well under a second).
* ``eig_tridiag``: Sturm-sequence bisection for symmetric tridiagonal
  (Jacobi) matrices.
* ``det_dense``: det(lam I - M) by LU with partial pivoting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numba
import numpy as np

from .errors import ConvergenceError, InvalidArgument

MAX_DENSE_DIM = 4000
MAX_DET_DIM = 500
MAX_BISECTIONS = 200


@dataclass(frozen=True)
class TridiagonalSymmetric:
    """J({b_j}, {a_j}): diagonal b_1..b_N, off-diagonal a_1..a_{N-1}."""

    diag: np.ndarray
    offdiag: np.ndarray

    def __post_init__(self) -> None:
        b = np.asarray(self.diag, dtype=float)
        a = np.asarray(self.offdiag, dtype=float)
        if b.ndim != 1 or a.ndim != 1 or len(b) < 1 or len(a) != len(b) - 1:
            raise InvalidArgument(
                f"need N diagonal and N-1 off-diagonal entries, got {b.shape} and {a.shape}"
            )
        object.__setattr__(self, "diag", b)
        object.__setattr__(self, "offdiag", a)

    @property
    def dim(self) -> int:
        return len(self.diag)

    def to_dense(self) -> np.ndarray:
        return np.diag(self.diag) + np.diag(self.offdiag, 1) + np.diag(self.offdiag, -1)

    @classmethod
    def free(cls, N: int) -> "TridiagonalSymmetric":
        """N x N truncation of the discrete Laplacian (b = 0, a = 1)."""
        return cls(np.zeros(N), np.ones(N - 1))


def as_symmetric(M) -> np.ndarray:
    m = np.array(M, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise InvalidArgument(f"expected a square matrix, got shape {m.shape}")
    if not np.array_equal(m, m.T):
        raise InvalidArgument("matrix is not exactly symmetric")
    return m


@numba.njit(cache=True)
def _off_norm(a: np.ndarray) -> float:
    n = a.shape[0]
    acc = 0.0
    for i in range(n):
        for j in range(n):
            if i != j:
                acc += a[i, j] * a[i, j]
    return math.sqrt(acc)


@numba.njit(cache=True)
def _cyclic_jacobi(a: np.ndarray, threshold: float, max_sweeps: int) -> int:
    """Row-cyclic Jacobi sweeps on ``a`` in place; returns sweeps used or -1."""
    n = a.shape[0]
    for sweep in range(max_sweeps + 1):
        if _off_norm(a) <= threshold:
            return sweep
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                sgn = 1.0 if theta >= 0.0 else -1.0
                t = sgn / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                for r in range(n):
                    x = a[r, p]
                    y = a[r, q]
                    a[r, p] = c * x - s * y
                    a[r, q] = s * x + c * y
                for r in range(n):
                    x = a[p, r]
                    y = a[q, r]
                    a[p, r] = c * x - s * y
                    a[q, r] = s * x + c * y
                a[p, q] = 0.0
                a[q, p] = 0.0
    return -1


def off_norm(a: np.ndarray) -> float:
    return float(_off_norm(np.ascontiguousarray(a, dtype=float)))


def eig_dense(M, tol: float = 1e-10, max_sweeps: int = 60) -> np.ndarray:
    """All eigenvalues of a real symmetric matrix, ascending.

    Sweeps continue until the off-diagonal Frobenius norm drops below
    ``tol`` times the Frobenius norm of the input.
    """
    a = as_symmetric(M)
    n = a.shape[0]
    if n > MAX_DENSE_DIM:
        raise InvalidArgument(f"dimension {n} exceeds {MAX_DENSE_DIM}")
    scale = float(np.linalg.norm(a))
    sweeps = _cyclic_jacobi(a, tol * scale, max_sweeps)
    if sweeps < 0:
        raise ConvergenceError(f"Jacobi sweeps did not converge in {max_sweeps} sweeps")
    return np.sort(a.diagonal())


def sturm_count(T: TridiagonalSymmetric, x) -> np.ndarray | int:
    """Number of eigenvalues of T strictly below each x (LDL^T inertia)."""
    xs = np.atleast_1d(np.asarray(x, dtype=float))
    b, a2 = T.diag, T.offdiag**2
    tiny = np.finfo(float).tiny ** 0.5
    count = np.zeros(xs.shape, dtype=int)
    q = b[0] - xs
    for i in range(T.dim):
        if i > 0:
            q = b[i] - xs - a2[i - 1] / q
        q = np.where(q == 0.0, -tiny, q)
        count += q < 0
    return int(count[0]) if np.ndim(x) == 0 else count


def gershgorin_bounds(T: TridiagonalSymmetric) -> tuple[float, float]:
    r = np.zeros(T.dim)
    r[:-1] += np.abs(T.offdiag)
    r[1:] += np.abs(T.offdiag)
    return float((T.diag - r).min()), float((T.diag + r).max())


def eig_tridiag(
    T: TridiagonalSymmetric, window: tuple[float, float] | None = None, tol: float = 1e-12
) -> np.ndarray:
    """Eigenvalues of T in the half-open window [lo, hi), ascending.

    The number returned is certified by the Sturm counts at the window ends.
    """
    glo, ghi = gershgorin_bounds(T)
    lo, hi = window if window is not None else (glo - 1.0, ghi + 1.0)
    if not lo < hi:
        raise InvalidArgument(f"empty window ({lo}, {hi})")
    c_lo, c_hi = sturm_count(T, lo), sturm_count(T, hi)
    m = c_hi - c_lo
    if m == 0:
        return np.zeros(0)
    # eigenvalue index i (0-based, ascending) is the x where count jumps past i
    index = np.arange(c_lo, c_hi)
    left = np.full(m, max(lo, glo))
    right = np.full(m, min(hi, ghi + 1.0))
    for _ in range(MAX_BISECTIONS):
        if (right - left).max() <= tol:
            break
        mid = 0.5 * (left + right)
        go_left = sturm_count(T, mid) > index
        right = np.where(go_left, mid, right)
        left = np.where(go_left, left, mid)
    return 0.5 * (left + right)


def lu_factor(M) -> tuple[np.ndarray, np.ndarray, int]:
    """LU with partial pivoting.  Returns (LU packed, pivot magnitudes, permutation sign)."""
    a = np.array(M, dtype=float)
    n = a.shape[0]
    sign = 1
    pivots = np.zeros(n)
    for j in range(n):
        r = j + int(np.argmax(np.abs(a[j:, j])))
        if r != j:
            a[[j, r]] = a[[r, j]]
            sign = -sign
        pivots[j] = abs(a[j, j])
        if a[j, j] != 0.0:
            a[j + 1 :, j] /= a[j, j]
            a[j + 1 :, j + 1 :] -= np.outer(a[j + 1 :, j], a[j, j + 1 :])
    return a, pivots, sign


def lu_det(M) -> float:
    a, _, sign = lu_factor(M)
    return float(sign * np.prod(a.diagonal()))


def det_dense(M, lam: float) -> float:
    """det(lam I - M)."""
    m = np.asarray(M, dtype=float)
    if m.shape[0] > MAX_DET_DIM:
        raise InvalidArgument(f"dimension {m.shape[0]} exceeds {MAX_DET_DIM}")
    return lu_det(lam * np.eye(m.shape[0]) - m)
