"""Discrete spectrum of H_{n,k}: the comb Gamma_{n,k} with a one-sided infinite path
attached at backbone vertex n.

The essential spectrum is the band [-2, 2].  With lam = x + 1/x, x in (-1, 1),
an eigenvalue off the band solves

    V_n(w) - x V_{n-1}(w) = 0,   w = v_k(lam),

equivalently v_{n,k}(lam) = V_{n-1}(w)/V_n(w) = 1/x = v(lam) for lam > 2.
v_{n,k} decreases between consecutive top-group eigenvalues of Gamma_{n,k}
(its poles) while v increases, which pins down one root per gap; the extra
root on (2, lambda_{p,1}) exists iff a_{n,k} = v_{n,k}(2) > 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import finite_spectrum as fs
from .chebyshev import eval_V, vk_ratio
from .eig_oracle import TridiagonalSymmetric, eig_dense
from .errors import InternalConsistencyError, InvalidArgument, PrecisionError, ValidationFailure
from .graphs import adjacency, truncated_tail

A_NK_GUARD = 1e-9
TOP_BRACKET = 3.0
BAND_MARGIN = 1e-4
MULTIPLICITY_BUDGET = (2, 4)
PERTURBATION_RANK = 2


@dataclass(frozen=True)
class TailSpectrumReport:
    n: int
    k: int
    count: int
    omega_k: float
    a_nk: float
    heaviside_term: int
    positive_eigenvalues: tuple[float, ...]
    p: int
    band: tuple[float, float] = (-2.0, 2.0)
    multiplicity_budget: tuple[int, int] = MULTIPLICITY_BUDGET
    hidden_spectrum_disclaimer: bool = True

    @property
    def negative_eigenvalues(self) -> tuple[float, ...]:
        return tuple(-x for x in reversed(self.positive_eigenvalues))

    def discrete_spectrum(self) -> np.ndarray:
        return np.array(self.negative_eigenvalues + self.positive_eigenvalues)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "count": self.count,
            "omega_k": self.omega_k,
            "a_nk": self.a_nk,
            "heaviside_term": self.heaviside_term,
            "positive_eigenvalues": list(self.positive_eigenvalues),
            "multiplicity_budget": list(self.multiplicity_budget),
            "hidden_spectrum_disclaimer": self.hidden_spectrum_disclaimer,
        }


def joukowski_inverse(lam):
    """v(lam) = (lam + sqrt(lam^2 - 4))/2 = 1/x for lam >= 2."""
    lam = np.asarray(lam, dtype=float)
    if np.any(lam < 2.0):
        raise InvalidArgument("Joukowski inverse branch needs lam >= 2")
    out = 0.5 * (lam + np.sqrt((lam - 2.0) * (lam + 2.0)))
    return float(out) if out.ndim == 0 else out


def joukowski(x: float) -> float:
    if x == 0 or not -1 < x < 1:
        raise InvalidArgument(f"x must lie in (-1, 1) minus 0, got {x}")
    return x + 1.0 / x


def v_nk(n: int, k: int, lam):
    """V_{n-1}(w)/V_n(w) with w = v_k(lam), via q_1 = w, q_{m+1} = w - 1/q_m."""
    w = np.asarray(vk_ratio(k, lam), dtype=float)
    with np.errstate(divide="ignore"):
        q = w.copy()
        for _ in range(n - 1):
            q = w - 1.0 / q
        out = 1.0 / q
    return float(out) if out.ndim == 0 else out


def a_nk(n: int, k: int) -> float:
    w = fs.omega(k)
    return math.sin(n * w) / math.sin((n + 1) * w)


def heaviside_term(n: int, k: int) -> int:
    a = a_nk(n, k)
    if abs(a - 1.0) < A_NK_GUARD:
        raise PrecisionError(f"a_{{{n},{k}}} = {a!r} is within {A_NK_GUARD} of 1")
    return int(a > 1.0)


def count_formula(n: int, k: int) -> int:
    """floor(omega_k (n+1)/pi) + chi(a_{n,k} - 1)."""
    return fs.count_above_two(n, k) + heaviside_term(n, k)


def root_equation_residual(n: int, k: int, lam: float) -> float:
    """R_{n,k} = V_n(w) - x V_{n-1}(w), w = v_k(lam), x = 1/v(lam); lam > 2."""
    if lam <= 2.0:
        raise InvalidArgument(f"lam must exceed 2, got {lam}")
    w = float(vk_ratio(k, lam))
    x = 1.0 / joukowski_inverse(lam)
    return float(eval_V(n, w)) - x * float(eval_V(n - 1, w))


def root_equation_uncancelled(n: int, k: int, lam: float) -> float:
    """P(lam, Gamma_{n,k}) - x P(lam, Gamma_{n-1,k}) P(lam, P_{k-1})."""
    if lam <= 2.0:
        raise InvalidArgument(f"lam must exceed 2, got {lam}")
    x = 1.0 / joukowski_inverse(lam)
    return fs.char_poly_eval(n, k, lam) - x * fs.char_poly_eval(n - 1, k, lam) * float(
        eval_V(k - 1, lam)
    )


def _gap(n: int, k: int, lam: float) -> float:
    return v_nk(n, k, lam) - joukowski_inverse(lam)


def _bisect_decreasing(n: int, k: int, lo: float, hi: float, tol: float) -> float:
    """Root of v_{n,k} - v on (lo, hi), where the difference decreases."""
    left, right = lo, hi
    for _ in range(fs.MAX_BISECTIONS):
        if right - left <= tol:
            break
        mid = 0.5 * (left + right)
        if _gap(n, k, mid) > 0.0:
            left = mid
        else:
            right = mid
    root = 0.5 * (left + right)
    if root - lo <= tol or hi - root <= tol:
        raise InternalConsistencyError(
            f"no root of the tail equation inside ({lo}, {hi}) for n={n}, k={k}"
        )
    return root


def root_brackets(n: int, k: int, tol: float = fs.DEFAULT_TOL) -> list[tuple[float, float]]:
    """Disjoint intervals in (2, 3) each holding exactly one positive discrete eigenvalue."""
    p = fs.count_above_two(n, k)
    top = fs.branch_roots(n, k, 1, tol)[:p] if p else np.zeros(0)
    brackets = []
    upper = TOP_BRACKET
    for lam in top:
        brackets.append((float(lam), upper))
        upper = float(lam)
    if heaviside_term(n, k):
        brackets.append((2.0, upper))
    return brackets


def discrete_spectrum(n: int, k: int, tol: float = fs.DEFAULT_TOL) -> TailSpectrumReport:
    if n < 2 or k < 2:
        raise InvalidArgument(f"need n, k >= 2, got n={n}, k={k}")
    expected = count_formula(n, k)
    roots = tuple(_bisect_decreasing(n, k, lo, hi, tol) for lo, hi in root_brackets(n, k, tol))
    if len(roots) != expected:
        raise InternalConsistencyError(f"found {len(roots)} roots, count formula gives {expected}")
    if roots and roots[-1] <= 2.0:
        raise PrecisionError(f"smallest root {roots[-1]!r} is not above the band")
    return TailSpectrumReport(
        n=n,
        k=k,
        count=expected,
        omega_k=fs.omega(k),
        a_nk=a_nk(n, k),
        heaviside_term=heaviside_term(n, k),
        positive_eigenvalues=roots,
        p=fs.count_above_two(n, k),
    )


@dataclass(frozen=True)
class PerturbationBound:
    """Spectral multiplicity argument on I = (2, 3) for a rank-2 perturbation."""

    interval: tuple[float, float]
    unperturbed_count: int
    rank: int
    multiplicity_bound: int
    distinct_roots: int

    @property
    def doubles_allowed(self) -> int:
        return self.multiplicity_bound - self.distinct_roots


def multiplicity_budget(n: int, k: int) -> tuple[int, int]:
    """(max multiplicity of a discrete eigenvalue, max number of double ones)."""
    if n < 2 or k < 2:
        raise InvalidArgument(f"need n, k >= 2, got n={n}, k={k}")
    return MULTIPLICITY_BUDGET


def perturbation_bound(n: int, k: int) -> PerturbationBound:
    p = fs.count_above_two(n, k)
    return PerturbationBound(
        interval=(2.0, TOP_BRACKET),
        unperturbed_count=p,
        rank=PERTURBATION_RANK,
        multiplicity_bound=p + PERTURBATION_RANK,
        distinct_roots=count_formula(n, k),
    )


@dataclass(frozen=True)
class TruncationComparison:
    n: int
    k: int
    L: int
    predicted: tuple[float, ...]
    observed: tuple[float, ...]
    errors: tuple[float, ...]
    margin_violations: tuple[float, ...]
    tol: float

    @property
    def max_error(self) -> float:
        return max(self.errors, default=0.0)

    @property
    def passed(self) -> bool:
        return len(self.predicted) == len(self.observed) and self.max_error <= self.tol

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "L": self.L,
            "predicted": list(self.predicted),
            "observed": list(self.observed),
            "max_error": self.max_error,
            "margin_violations": list(self.margin_violations),
            "passed": self.passed,
        }


def truncation_eigenvalues(n: int, k: int, L: int, adjacency_hook=None) -> np.ndarray:
    """Oracle spectrum of the comb with a tail truncated to L vertices."""
    a = adjacency(truncated_tail((n, k), L))
    if adjacency_hook is not None:
        a = adjacency_hook(a)
    return eig_dense(a)


def truncation_check(
    n: int,
    k: int,
    L: int = 300,
    tol: float = 1e-6,
    margin: float = BAND_MARGIN,
    strict: bool = True,
    adjacency_hook=None,
) -> TruncationComparison:
    """Match oracle eigenvalues of the truncation above 2 + margin against the root equation.

    Eigenvalues in (2, 2 + margin] on either side are reported as margin
    violations, not silently dropped.
    """
    if L < 50:
        raise InvalidArgument(f"truncation length must be >= 50, got {L}")
    report = discrete_spectrum(n, k)
    eig = truncation_eigenvalues(n, k, L, adjacency_hook)
    observed = tuple(sorted((float(x) for x in eig if x > 2.0 + margin), reverse=True))
    predicted_all = report.positive_eigenvalues
    predicted = tuple(x for x in predicted_all if x > 2.0 + margin)
    violations = tuple(
        sorted(
            {float(x) for x in eig if 2.0 < x <= 2.0 + margin}
            | {x for x in predicted_all if x <= 2.0 + margin}
        )
    )
    errors = tuple(abs(a - b) for a, b in zip(predicted, observed))
    result = TruncationComparison(n, k, L, predicted, observed, errors, violations, tol)
    if strict and not result.passed:
        raise ValidationFailure(
            f"truncation mismatch for n={n}, k={k}, L={L}: "
            f"predicted {predicted}, observed {observed}"
        )
    return result


H32_OFFDIAG_HEAD = (1 / math.sqrt(3), 1 / math.sqrt(6), math.sqrt(1.5), 1.0, math.sqrt(2.0))


def h32_jacobi(N: int) -> TridiagonalSymmetric:
    """N x N truncation of the Jacobi component of H_{3,2} (zero diagonal)."""
    if N <= len(H32_OFFDIAG_HEAD):
        raise InvalidArgument(f"N must exceed {len(H32_OFFDIAG_HEAD)}, got {N}")
    off = np.ones(N - 1)
    off[: len(H32_OFFDIAG_HEAD)] = H32_OFFDIAG_HEAD
    return TridiagonalSymmetric(np.zeros(N), off)
