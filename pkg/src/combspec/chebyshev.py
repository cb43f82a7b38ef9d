"""Monic Chebyshev polynomials of the second kind and derived rational functions.

V_m(t) = U_m(t/2) obeys V_0 = 1, V_1 = t, V_{m+2} = t V_{m+1} - V_m and has
the zeros 2 cos(j pi / (m+1)), j = 1..m.

Anything evaluated far from [-2, 2] or for large m goes through the ratio
V_m / V_{m-1}, which obeys r_1 = t, r_{m+1} = t - 1/r_m and never overflows.
Raw ``eval_V`` is meant for small degrees and tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import InvalidArgument, PoleError

POLE_TOL = 1e-9


def eval_V(m: int, t):
    """V_m(t) by the three-term recurrence.  Accepts scalars or arrays."""
    if m < 0:
        raise InvalidArgument(f"degree must be >= 0, got {m}")
    t = np.asarray(t, dtype=float)
    prev, cur = np.ones_like(t), t.copy()
    if m == 0:
        return _unwrap(prev)
    for _ in range(m - 1):
        prev, cur = cur, t * cur - prev
    return _unwrap(cur)


def eval_U(m: int, x):
    return eval_V(m, 2.0 * np.asarray(x, dtype=float))


def eval_V_closed(m: int, t):
    """V_m(t) from sin((m+1)x)/sin(x), t = 2 cos x, or its sinh analogue off [-2, 2].

    Independent of the recurrence; used to cross-check it.
    """
    if m < 0:
        raise InvalidArgument(f"degree must be >= 0, got {m}")
    t = np.atleast_1d(np.asarray(t, dtype=float))
    out = np.empty_like(t)
    inside = np.abs(t) < 2.0
    x = np.arccos(t[inside] / 2.0)
    out[inside] = np.sin((m + 1) * x) / np.sin(x)
    edge = np.abs(t) == 2.0
    out[edge] = np.sign(t[edge]) ** m * (m + 1)
    outside = np.abs(t) > 2.0
    y = np.arccosh(np.abs(t[outside]) / 2.0)
    out[outside] = np.sign(t[outside]) ** m * np.sinh((m + 1) * y) / np.sinh(y)
    return _unwrap(out)


def eval_V_deriv(m: int, t):
    """V'_m(t) by differentiating the recurrence: V'_{m+2} = V_{m+1} + t V'_{m+1} - V'_m."""
    if m < 0:
        raise InvalidArgument(f"degree must be >= 0, got {m}")
    t = np.asarray(t, dtype=float)
    v_prev, v_cur = np.ones_like(t), t.copy()
    d_prev, d_cur = np.zeros_like(t), np.ones_like(t)
    if m == 0:
        return _unwrap(d_prev)
    for _ in range(m - 1):
        v_prev, v_cur, d_prev, d_cur = v_cur, t * v_cur - v_prev, d_cur, v_cur + t * d_cur - d_prev
    return _unwrap(d_cur)


def zeros_V(m: int) -> np.ndarray:
    """Zeros of V_m, strictly decreasing."""
    if m < 1:
        raise InvalidArgument(f"degree must be >= 1, got {m}")
    j = np.arange(1, m + 1)
    return 2.0 * np.cos(j * np.pi / (m + 1))


def vk_ratio(k: int, lam):
    """v_k(lam) = V_k(lam)/V_{k-1}(lam) by the forward ratio recurrence, no pole guard.

    A vanishing intermediate ratio propagates as +-inf and is absorbed at
    the next step, so zeros of V_m for m < k-1 are harmless.  At zeros of
    V_{k-1} the result is +-inf.
    """
    if k < 1:
        raise InvalidArgument(f"k must be >= 1, got {k}")
    lam = np.asarray(lam, dtype=float)
    r = lam.copy()
    with np.errstate(divide="ignore"):
        for _ in range(k - 1):
            r = lam - 1.0 / r
    return _unwrap(r)


def eval_vk(k: int, lam):
    """v_k(lam), raising PoleError within POLE_TOL of a zero of V_{k-1}."""
    if k < 1:
        raise InvalidArgument(f"k must be >= 1, got {k}")
    if k >= 2:
        _guard_poles(zeros_V(k - 1), lam)
    return vk_ratio(k, lam)


def greens_function(m: int, lam):
    """G_m(lam) = V_{m-1}(lam)/V_m(lam), the (1,1) resolvent entry of the path P_m."""
    if m < 1:
        raise InvalidArgument(f"m must be >= 1, got {m}")
    _guard_poles(zeros_V(m), lam)
    with np.errstate(divide="ignore"):
        return _unwrap(1.0 / np.asarray(vk_ratio(m, lam)))


def residues_vk(k: int) -> np.ndarray:
    """Weights d_{j,k} in v_k(t) = t + sum_j d_{j,k} / (t_{j,k-1} - t)."""
    if k < 2:
        raise InvalidArgument(f"k must be >= 2, got {k}")
    poles = zeros_V(k - 1)
    return -np.asarray(eval_V(k, poles)) / np.asarray(eval_V_deriv(k - 1, poles))


def branch_intervals(k: int) -> list[tuple[float, float]]:
    """Intervals L_{m,k} = (t_{m,k-1}, t_{m-1,k-1}), m = 1..k, on which v_k increases."""
    if k < 1:
        raise InvalidArgument(f"k must be >= 1, got {k}")
    ends = [math.inf] + (list(zeros_V(k - 1)) if k >= 2 else []) + [-math.inf]
    return [(float(ends[m]), float(ends[m - 1])) for m in range(1, k + 1)]


@dataclass(frozen=True)
class VkFunction:
    k: int

    def __post_init__(self) -> None:
        if self.k < 2:
            raise InvalidArgument(f"k must be >= 2, got {self.k}")

    @cached_property
    def poles(self) -> np.ndarray:
        return zeros_V(self.k - 1)

    @cached_property
    def residues(self) -> np.ndarray:
        return residues_vk(self.k)

    @cached_property
    def branch_intervals(self) -> list[tuple[float, float]]:
        return branch_intervals(self.k)

    def __call__(self, lam):
        return eval_vk(self.k, lam)

    def partial_fractions(self, t):
        """Evaluate v_k through its pole expansion."""
        t = np.asarray(t, dtype=float)
        terms = self.residues[:, None] / (self.poles[:, None] - np.atleast_1d(t)[None, :])
        return _unwrap((np.atleast_1d(t) + terms.sum(axis=0)).reshape(t.shape))


def eval_sk(k: int, y: float) -> float:
    """sinh((k+1)y)/sinh(ky) = e^y (1 - e^{-(2k+2)y}) / (1 - e^{-2ky}), stable for large ky."""
    if y <= 0:
        raise InvalidArgument(f"y must be positive, got {y}")
    return math.exp(y) * math.expm1(-(2 * k + 2) * y) / math.expm1(-2 * k * y)


def _guard_poles(poles: np.ndarray, lam) -> None:
    lam = np.atleast_1d(np.asarray(lam, dtype=float))
    gap = np.abs(lam[:, None] - poles[None, :])
    if gap.size and gap.min() < POLE_TOL:
        bad = lam[np.argmin(gap.min(axis=1))]
        raise PoleError(f"argument {bad!r} within {POLE_TOL} of a pole")


def _unwrap(a):
    a = np.asarray(a)
    return float(a) if a.ndim == 0 else a
