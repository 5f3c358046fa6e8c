"""Cesaro binomial coefficients A_n^alpha and their identities.

A_0^alpha = 1, A_n^alpha = A_{n-1}^alpha * (alpha + n) / n. The convention
A_{-1}^alpha = 0 is used wherever telescoping needs it. Tables are built by
the multiplicative recurrence only; no Gamma-function shortcuts, so values
stay exact for integer alpha and fully reproducible otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, UsageError


def _check_order(alpha: float):
    if alpha < 0 and float(alpha).is_integer():
        raise DomainError(f"order alpha={alpha} is a negative integer")


@dataclass(frozen=True)
class CesaroTable:
    """Values A_0^alpha .. A_nmax^alpha with the A_{-1} = 0 convention."""

    alpha: float
    values: np.ndarray

    def a(self, n: int) -> float:
        if n == -1:
            return 0.0
        if not 0 <= n < len(self.values):
            raise UsageError(f"index {n} outside -1..{len(self.values) - 1}")
        return float(self.values[n])


def cesaro_table(alpha: float, n_max: int) -> CesaroTable:
    _check_order(alpha)
    if n_max < 0:
        raise UsageError(f"table length {n_max} is negative")
    values = np.empty(n_max + 1, dtype=np.float64)
    values[0] = 1.0
    for n in range(1, n_max + 1):
        values[n] = values[n - 1] * ((alpha + n) / n)
    values.setflags(write=False)
    return CesaroTable(alpha=alpha, values=values)


def cesaro_coefficient(n: int, alpha: float) -> float:
    if n < 0:
        return 0.0
    return cesaro_table(alpha, n).a(n)


@dataclass(frozen=True)
class IdentityReport:
    """Residuals of the defining identities on 1..n_max.

    Relative residuals are normalized by the largest magnitude among the
    participating terms; normalizing by the (cancellation-small) difference
    alone is not meaningful in float64 once n is large.
    """

    alpha: float
    n_max: int
    difference_max_rel: float   # A_n^a - A_{n-1}^a = A_n^{a-1}
    sum_max_rel: float          # sum_{k=0}^{n} A_k^{a-1} = A_n^a
    sum_shifted_max_rel: float  # the k <= n-1 variant, reported for comparison

    @property
    def max_residual(self) -> float:
        return max(self.difference_max_rel, self.sum_max_rel)


def identity_report(alpha: float, n_max: int) -> IdentityReport:
    if n_max < 1:
        raise UsageError(f"n_max={n_max} must be at least 1")
    t = cesaro_table(alpha, n_max).values
    t_lower = cesaro_table(alpha - 1, n_max).values

    diff = t[1:] - t[:-1]
    scale = np.maximum.reduce([np.abs(t[1:]), np.abs(t[:-1]), np.abs(t_lower[1:])])
    scale = np.maximum(scale, np.finfo(np.float64).tiny)
    diff_rel = float(np.max(np.abs(diff - t_lower[1:]) / scale))

    sum_rel = 0.0
    sum_shifted_rel = 0.0
    partial = 0.0
    comp = 0.0
    for n in range(0, n_max + 1):
        prev = partial
        # Kahan update keeps the running sum exact enough for the residual
        # to reflect the table entries, not the summation.
        y = float(t_lower[n]) - comp
        s = partial + y
        comp = (s - partial) - y
        partial = s
        if n >= 1:
            denom = max(abs(t[n]), abs(partial), np.finfo(np.float64).tiny)
            sum_rel = max(sum_rel, abs(partial - t[n]) / denom)
            sum_shifted_rel = max(sum_shifted_rel, abs(prev - t[n]) / denom)
    return IdentityReport(
        alpha=alpha,
        n_max=n_max,
        difference_max_rel=diff_rel,
        sum_max_rel=sum_rel,
        sum_shifted_max_rel=sum_shifted_rel,
    )


def block_sum(table: CesaroTable, start: int, stop: int) -> float:
    """sum_{j=start}^{stop-1} A_j^alpha, compensated; equals A_{stop-1}^{alpha+1} - A_{start-1}^{alpha+1}."""
    if not 0 <= start <= stop <= len(table.values):
        raise UsageError(f"block {start}..{stop} outside the table")
    return math.fsum(float(v) for v in table.values[start:stop])


def asymptotic_ratio_residual(alpha: float, n: int) -> float:
    """|A_n^alpha / A_{2n}^alpha - 2^{-alpha}|; decays like O(1/n)."""
    if n < 1:
        raise UsageError(f"n={n} must be at least 1")
    t = cesaro_table(alpha, 2 * n).values
    if t[2 * n] == 0.0:
        raise DomainError(f"A_{2 * n}^{alpha} vanished; ratio undefined")
    return abs(float(t[n] / t[2 * n]) - 2.0 ** (-alpha))
