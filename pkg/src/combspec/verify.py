"""Cross-verification sweeps: closed forms against the brute-force oracle."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import finite_spectrum as fs
from . import tail_spectrum as ts
from .chebyshev import branch_intervals
from .eig_oracle import eig_dense
from .graphs import adjacency, comb

CHECKS = ("counts", "finite", "bounds", "symmetry")
FINITE_TOL = 1e-9
SYMMETRY_TOL = 1e-9
MIN_GAP = 1e-8

AdjacencyHook = Callable[[np.ndarray], np.ndarray]


@dataclass
class CheckResult:
    name: str
    cells: int = 0
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, **info) -> None:
        self.failures.append(info)

    def to_dict(self) -> dict:
        return {"cells": self.cells, "passed": self.passed, "failures": self.failures}


def flip_entry(i: int, j: int) -> AdjacencyHook:
    """Negative control: toggle the (i, j) and (j, i) entries (1-based)."""

    def hook(a: np.ndarray) -> np.ndarray:
        a = a.copy()
        a[i - 1, j - 1] = a[j - 1, i - 1] = 1.0 - a[i - 1, j - 1]
        return a

    return hook


def check_counts(n: int, k: int, L: int, tol: float, result: CheckResult, hook=None) -> None:
    formula = ts.count_formula(n, k)
    report = ts.discrete_spectrum(n, k)
    cmp = ts.truncation_check(n, k, L, tol, strict=False, adjacency_hook=hook)
    if not (formula == report.count == len(report.positive_eigenvalues) == len(cmp.observed)):
        result.fail(n=n, k=k, formula=formula, roots=len(report.positive_eigenvalues),
                    oracle=len(cmp.observed))
    elif not cmp.passed:
        result.fail(n=n, k=k, max_error=cmp.max_error)
    if cmp.margin_violations:
        result.fail(n=n, k=k, margin_violations=list(cmp.margin_violations))


def check_finite(n: int, k: int, result: CheckResult, hook=None) -> None:
    report = fs.eigenvalues(n, k)
    a = adjacency(comb(n, k))
    if hook is not None:
        a = hook(a)
    oracle = eig_dense(a)
    ours = report.eigenvalues()
    err = float(np.abs(ours - oracle).max())
    if err > FINITE_TOL:
        result.fail(n=n, k=k, max_error=err)
    for (lo, hi), group in zip(branch_intervals(k), report.groups):
        if len(group) != n or not all(lo < x < hi for x in group):
            result.fail(n=n, k=k, branch=(lo, hi), size=len(group))
    gap = float(np.diff(ours).min())
    if gap <= MIN_GAP:
        result.fail(n=n, k=k, min_gap=gap)
    oracle_p = int((oracle > 2.0).sum())
    if fs.count_above_two(n, k) != oracle_p:
        result.fail(n=n, k=k, p=fs.count_above_two(n, k), oracle_p=oracle_p)


def check_bounds(n: int, k: int, result: CheckResult) -> None:
    top = fs.top_eigenvalue(n, k)
    lam1 = fs.lambda1(k)
    if not top < lam1 < fs.LAMBDA0:
        result.fail(n=n, k=k, top=top, lambda1=lam1)
    nus = ts.discrete_spectrum(n, k).positive_eigenvalues
    if not all(2.0 < x < fs.LAMBDA0 for x in nus):
        result.fail(n=n, k=k, discrete=list(nus))
    if nus and not top < nus[0] < lam1:
        result.fail(n=n, k=k, top=top, nu1=nus[0], lambda1=lam1)
    if k == 2 and not all(x <= 1.0 + math.sqrt(2.0) for x in nus + (top,)):
        result.fail(n=n, k=k, discrete=list(nus), top=top)


def check_symmetry(n: int, k: int, result: CheckResult) -> None:
    eig = fs.eigenvalues(n, k).eigenvalues()
    err = float(np.abs(eig + eig[::-1]).max())
    if err > SYMMETRY_TOL:
        result.fail(n=n, k=k, asymmetry=err)
    # the negative part of sigma_d is the mirror of the positive part by
    # construction; check the residual parity R(-lam) = (-1)^n R(lam) instead
    for nu in ts.discrete_spectrum(n, k).positive_eigenvalues:
        w_pos = fs.char_poly_eval(n, k, nu)
        w_neg = fs.char_poly_eval(n, k, -nu)
        if not math.isclose(w_neg, (-1) ** (n * k) * w_pos, rel_tol=1e-9, abs_tol=1e-12):
            result.fail(n=n, k=k, parity_at=nu)


def run_verify(
    n_max: int = 12,
    k_max: int = 8,
    L: int = 300,
    tol: float = 1e-6,
    checks: tuple[str, ...] = CHECKS,
    n_min: int = 2,
    k_min: int = 2,
    adjacency_hook: AdjacencyHook | None = None,
) -> dict[str, CheckResult]:
    results = {name: CheckResult(name) for name in checks}
    for k in range(k_min, k_max + 1):
        for n in range(n_min, n_max + 1):
            for name, result in results.items():
                result.cells += 1
                if name == "counts":
                    check_counts(n, k, L, tol, result, adjacency_hook)
                elif name == "finite":
                    check_finite(n, k, result, adjacency_hook)
                elif name == "bounds":
                    check_bounds(n, k, result)
                elif name == "symmetry":
                    check_symmetry(n, k, result)
                else:
                    raise ValueError(f"unknown check {name!r}")
    return results
