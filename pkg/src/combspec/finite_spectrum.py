"""Spectrum of the finite comb Gamma_{n,k} = P_n > P_k.

The characteristic polynomial factors as V_n(v_k(lam)) * V_{k-1}(lam)^n, so
lam is an eigenvalue iff v_k(lam) = 2 cos(j pi/(n+1)) for some j.  Since v_k
increases from -inf to +inf on each branch interval L_{m,k}, every such
equation has exactly one root per branch; roots are isolated by bisection.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .chebyshev import POLE_TOL, branch_intervals, eval_sk, eval_V, vk_ratio, zeros_V
from .errors import InternalConsistencyError, InvalidArgument, PrecisionError

LAMBDA0 = 2.5
Y0 = math.log(2.0)
GERSHGORIN = 3.0
DEFAULT_TOL = 1e-12
INTEGER_GUARD = 1e-9
MAX_BISECTIONS = 200


@dataclass(frozen=True)
class SpectrumReport:
    n: int
    k: int
    groups: tuple[tuple[float, ...], ...]
    p: int
    lambda1_k: float | None
    lambda0: float = field(default=LAMBDA0)
    y0: float = field(default=Y0)

    def eigenvalues(self) -> np.ndarray:
        """All n*k eigenvalues, ascending."""
        return np.sort(np.concatenate([np.asarray(g) for g in self.groups]))

    @property
    def max_eigenvalue(self) -> float:
        return self.groups[0][0]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "groups": [list(g) for g in self.groups],
            "p": self.p,
            "lambda1_k": self.lambda1_k,
        }


def char_poly_eval(n: int, k: int, lam: float) -> float:
    """P(lam, Gamma_{n,k}) = det(lam I - A).

    Near a pole t_{j,k-1} of v_k the factored form is 0 * inf; there the
    polynomial equals V_k(lam)^n up to a relative O((V_{k-1}/V_k)^2) term.
    """
    _check_orders(n, k, minimum=1)
    if k == 1:
        return float(eval_V(n, lam))
    if n == 1:
        return float(eval_V(k, lam))
    poles = zeros_V(k - 1)
    if np.abs(poles - lam).min() < POLE_TOL:
        return float(eval_V(k, lam)) ** n
    w = float(vk_ratio(k, lam))
    return float(eval_V(n, w)) * float(eval_V(k - 1, lam)) ** n


def _bisect_increasing(k: int, targets: np.ndarray, lo: float, hi: float, tol: float) -> np.ndarray:
    """Solve v_k(lam) = target for every target on (lo, hi), where v_k increases."""
    left = np.full(targets.shape, lo)
    right = np.full(targets.shape, hi)
    for _ in range(MAX_BISECTIONS):
        if (right - left).max() <= tol:
            break
        mid = 0.5 * (left + right)
        above = np.asarray(vk_ratio(k, mid)) > targets
        right = np.where(above, mid, right)
        left = np.where(above, left, mid)
    roots = 0.5 * (left + right)
    if np.any(roots - lo <= tol) or np.any(hi - roots <= tol):
        raise InternalConsistencyError(f"bracket ({lo}, {hi}) did not contain all roots for k={k}")
    return roots


def branch_roots(n: int, k: int, m: int, tol: float = DEFAULT_TOL) -> np.ndarray:
    """The n eigenvalues lambda_{1,m} > ... > lambda_{n,m} lying in L_{m,k}."""
    lo, hi = branch_intervals(k)[m - 1]
    lo, hi = max(lo, -GERSHGORIN), min(hi, GERSHGORIN)
    return _bisect_increasing(k, zeros_V(n), lo, hi, tol)


def eigenvalues(n: int, k: int, tol: float = DEFAULT_TOL) -> SpectrumReport:
    _check_orders(n, k, minimum=1)
    if tol <= 0:
        raise InvalidArgument(f"tol must be positive, got {tol}")
    if k == 1:
        groups = (tuple(zeros_V(n)),)
    elif n == 1:
        groups = tuple((float(t),) for t in zeros_V(k))
    else:
        groups = tuple(tuple(branch_roots(n, k, m, tol)) for m in range(1, k + 1))
    if n >= 2 and k >= 2:
        p = count_above_two(n, k)
        lam1 = lambda1(k, tol)
    else:
        p = sum(1 for g in groups for x in g if x > 2.0)
        lam1 = lambda1(k, tol) if k >= 2 else None
    return SpectrumReport(n, k, groups, p, lam1)


def omega(k: int) -> float:
    """arccos((k+1)/(2k)), the angle with 2 cos(omega) = v_k(2)."""
    if k < 2:
        raise InvalidArgument(f"k must be >= 2, got {k}")
    return math.acos((k + 1) / (2 * k))


def count_above_two(n: int, k: int) -> int:
    """Number of eigenvalues of Gamma_{n,k} exceeding 2: floor(omega_k (n+1) / pi)."""
    _check_orders(n, k, minimum=2)
    x = omega(k) * (n + 1) / math.pi
    if abs(x - round(x)) < INTEGER_GUARD:
        raise PrecisionError(f"omega_k (n+1)/pi = {x!r} is within {INTEGER_GUARD} of an integer")
    return math.floor(x)


def lambda1(k: int, tol: float = DEFAULT_TOL) -> float:
    """Largest root of v_k(lam) = 2; it lies in (2, 5/2).

    5/2 - lambda1(k) decays like 4^-k, so from k ~ 26 on the result is the
    double nearest 5/2 (possibly 5/2 itself).
    """
    if k < 2:
        raise InvalidArgument(f"k must be >= 2, got {k}")
    lo, hi = 2.0, LAMBDA0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if float(vk_ratio(k, mid)) > 2.0:
            hi = mid
        else:
            lo = mid
    if lo == 2.0:
        raise InternalConsistencyError(f"v_k(lam) = 2 has no root above 2 for k={k}")
    return 0.5 * (lo + hi)


def y1(k: int, tol: float = DEFAULT_TOL) -> float:
    """Root of s_k(y) = 2 on (0, log 2); lambda1(k) = 2 cosh(y1(k))."""
    if k < 2:
        raise InvalidArgument(f"k must be >= 2, got {k}")
    lo, hi = 1e-300, Y0
    # s_k increases in y, from (k+1)/k at 0 to above e^y
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if eval_sk(k, mid) > 2.0:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def max_eigenvalue_k2(n: int) -> float:
    """Closed form for the top eigenvalue of Gamma_{n,2}."""
    if n < 2:
        raise InvalidArgument(f"n must be >= 2, got {n}")
    c = math.cos(math.pi / (n + 1))
    return c + math.sqrt(c * c + 1.0)


def top_eigenvalue(n: int, k: int, tol: float = DEFAULT_TOL) -> float:
    """lambda_{1,1}(n,k) alone, without solving for the rest of the spectrum."""
    _check_orders(n, k, minimum=2)
    lo = float(zeros_V(k - 1)[0])
    return float(_bisect_increasing(k, zeros_V(n)[:1], lo, GERSHGORIN, tol)[0])


def _check_orders(n: int, k: int, minimum: int) -> None:
    if n < minimum or k < minimum:
        raise InvalidArgument(f"need n, k >= {minimum}, got n={n}, k={k}")
