"""Block matrices of scalar type and Schur-complement determinants.

A block matrix of scalar type has every n x n block equal to a multiple of
I_n; it is the "inflation" I(a) = kron(a, I_n) of its m x m symbol a, and
det I(a) = det(a)^n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .chebyshev import greens_function
from .eig_oracle import lu_det, lu_factor
from .errors import InvalidArgument, SingularBlockError

SINGULAR_RTOL = 1e-12


@dataclass(frozen=True)
class ScalarTypeBlockMatrix:
    symbol: np.ndarray
    block_dim: int

    def __post_init__(self) -> None:
        a = np.atleast_2d(np.asarray(self.symbol, dtype=float))
        if a.shape[0] != a.shape[1]:
            raise InvalidArgument(f"symbol must be square, got {a.shape}")
        if self.block_dim < 1:
            raise InvalidArgument(f"block dimension must be >= 1, got {self.block_dim}")
        object.__setattr__(self, "symbol", a)

    @property
    def realization(self) -> np.ndarray:
        return np.kron(self.symbol, np.eye(self.block_dim))

    @property
    def dim(self) -> int:
        return self.symbol.shape[0] * self.block_dim

    def det(self) -> float:
        return lu_det(self.symbol) ** self.block_dim

    def inverse(self) -> "ScalarTypeBlockMatrix":
        return ScalarTypeBlockMatrix(np.linalg.inv(self.symbol), self.block_dim)

    def combine(self, lam: float, other: "ScalarTypeBlockMatrix", mu: float) -> "ScalarTypeBlockMatrix":
        """lam * self + mu * other, computed on the symbols."""
        if other.block_dim != self.block_dim:
            raise InvalidArgument("block dimensions differ")
        return ScalarTypeBlockMatrix(lam * self.symbol + mu * other.symbol, self.block_dim)


def inflate(a, n: int) -> ScalarTypeBlockMatrix:
    return ScalarTypeBlockMatrix(a, n)


def path_matrix(m: int) -> np.ndarray:
    """J_m, the adjacency matrix of the path on m vertices."""
    return np.eye(m, k=1) + np.eye(m, k=-1)


def _check_invertible(block: np.ndarray, scale: float, name: str) -> None:
    _, pivots, _ = lu_factor(block)
    if pivots.min() < SINGULAR_RTOL * scale:
        raise SingularBlockError(f"pivot block {name} is numerically singular")


def schur_det(A, B, C, D, pivot: str = "D") -> float:
    """Determinant of [[A, B], [C, D]] through a Schur complement.

    ``pivot="D"`` uses |A - B D^-1 C| |D|; ``pivot="A"`` uses |A| |D - C A^-1 B|.
    """
    A, B, C, D = (np.atleast_2d(np.asarray(x, dtype=float)) for x in (A, B, C, D))
    scale = max(np.abs(x).max() for x in (A, B, C, D))
    if scale == 0.0:
        scale = 1.0
    if pivot == "D":
        _check_invertible(D, scale, "D")
        return lu_det(A - B @ np.linalg.solve(D, C)) * lu_det(D)
    if pivot == "A":
        _check_invertible(A, scale, "A")
        return lu_det(A) * lu_det(D - C @ np.linalg.solve(A, B))
    raise InvalidArgument(f"pivot must be 'A' or 'D', got {pivot!r}")


class CombPartition(NamedTuple):
    top_left: np.ndarray
    top_right: np.ndarray
    bottom_left: np.ndarray
    bottom_right: ScalarTypeBlockMatrix

    def assemble(self) -> np.ndarray:
        return np.block(
            [[self.top_left, self.top_right], [self.bottom_left, self.bottom_right.realization]]
        )


def comb_partition(n: int, k: int, lam: float) -> CombPartition:
    """lam I - A(P_n > P_k) split after the backbone block (level labelling).

    The lower-right block is the inflation of lam - J_{k-1}.
    """
    if n < 1 or k < 2:
        raise InvalidArgument(f"need n >= 1 and k >= 2, got n={n}, k={k}")
    top_left = lam * np.eye(n) - path_matrix(n)
    top_right = np.zeros((n, (k - 1) * n))
    top_right[:, :n] = -np.eye(n)
    d = inflate(lam * np.eye(k - 1) - path_matrix(k - 1), n)
    return CombPartition(top_left, top_right, top_right.T.copy(), d)


def comb_det_schur(n: int, k: int, lam: float) -> float:
    """det(lam I - A(P_n > P_k)) via the Schur complement of whichever block is invertible."""
    part = comb_partition(n, k, lam)
    blocks = (part.top_left, part.top_right, part.bottom_left, part.bottom_right.realization)
    try:
        return schur_det(*blocks, pivot="D")
    except SingularBlockError:
        return schur_det(*blocks, pivot="A")


def comb_schur_complement(n: int, k: int, lam: float) -> tuple[np.ndarray, float]:
    """Return (A - B D^-1 C, G_{k-1}(lam)) for the comb partition.

    B D^-1 C collapses to G_{k-1}(lam) I_n, so the complement equals
    (lam - G_{k-1}(lam)) I_n - J_n.
    """
    part = comb_partition(n, k, lam)
    d = part.bottom_right
    scale = max(1.0, abs(lam) + 2.0)
    _check_invertible(d.symbol, scale, "D")
    d_inv = d.inverse().realization
    complement = part.top_left - part.top_right @ d_inv @ part.bottom_left
    return complement, greens_function(k - 1, lam)
