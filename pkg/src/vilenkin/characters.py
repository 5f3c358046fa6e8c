"""Generalized Rademacher functions and the Vilenkin character system.

r_k(x) = exp(2 pi i x_k / m_k) and psi_n = prod_k r_k^{n_k}. All values are
read from per-radix root-of-unity tables with the angle reduced to an index
mod m_k first, so equal angles always produce bit-identical complex values.
"""

from __future__ import annotations

import functools

import numpy as np

from .errors import UsageError, ValidationError
from .group import GroupElement, NumberSystem, digit_matrix, digits_of


@functools.lru_cache(maxsize=None)
def root_table(m: int) -> np.ndarray:
    """The m-th roots of unity exp(2 pi i a / m), a = 0..m-1.

    Quarter-turn angles are snapped to exact 1, -1, i, -i so the Walsh
    case (m = 2) stays exactly real and conjugation pairs cancel exactly.
    """
    a = np.arange(m)
    table = np.exp(2j * np.pi * a / m)
    exact = {0: 1.0, 1: 1j, 2: -1.0, 3: -1j}
    quads = a * 4 % m == 0
    table[quads] = [exact[q] for q in a[quads] * 4 // m]
    table.setflags(write=False)
    return table


@functools.lru_cache(maxsize=None)
def synthesis_matrix(m: int) -> np.ndarray:
    """(m, m) matrix F[a, b] = exp(2 pi i a b / m), built from the root table."""
    a = np.arange(m)
    F = root_table(m)[np.outer(a, a) % m]
    F.setflags(write=False)
    return F


@functools.lru_cache(maxsize=None)
def analysis_matrix(m: int) -> np.ndarray:
    F = synthesis_matrix(m).conj()
    F.setflags(write=False)
    return F


def rademacher(x: GroupElement, k: int, power: int = 1) -> complex:
    """r_k(x)^power, angle reduced mod 2 pi via the index."""
    if not 0 <= k < len(x.digits):
        raise ValidationError(f"coordinate {k} outside 0..{len(x.digits) - 1}")
    m = x.ns.radix.radices[k]
    return complex(root_table(m)[(power * x.digits[k]) % m])


def vilenkin_value(ns: NumberSystem, n: int, x: GroupElement) -> complex:
    """psi_n(x) for a single point."""
    out = complex(1.0)
    for k, nk in enumerate(digits_of(ns, n)):
        if nk:
            m = ns.radix.radices[k]
            out *= complex(root_table(m)[(nk * x.digits[k]) % m])
    return out


def vilenkin_on_cells(ns: NumberSystem, n: int, resolution: int | None = None) -> np.ndarray:
    """psi_n evaluated on every cell at the given resolution.

    psi_n depends only on digits below the scale of n, so the requested
    resolution must cover every nonzero digit of n.
    """
    r = ns.resolution if resolution is None else resolution
    if not 0 <= n < ns.cell_count:
        raise ValidationError(f"character index {n} outside 0..{ns.cell_count - 1}")
    if n >= ns.M[r]:
        raise UsageError(f"character {n} does not live at resolution {r}")
    D = digit_matrix(ns, r)
    out = np.ones(ns.cells_at(r), dtype=np.complex128)
    for j, nj in enumerate(digits_of(ns, n)[:r]):
        if nj:
            m = ns.radix.radices[j]
            out *= root_table(m)[(nj * D[:, j]) % m]
    return out


def character_block(ns: NumberSystem, start: int, stop: int, resolution: int | None = None) -> np.ndarray:
    """Rows psi_n on all cells for n = start..stop-1, shape (stop-start, M_r).

    Entry (n, x) is the tensor product prod_j F_j[n_j, x_j] of the per-radix
    synthesis matrices, gathered digitwise.
    """
    r = ns.resolution if resolution is None else resolution
    if not 0 <= start <= stop <= ns.M[r]:
        raise UsageError(f"character range {start}..{stop} outside 0..{ns.M[r]}")
    D = digit_matrix(ns, r)
    rows = np.arange(start, stop, dtype=np.int64)
    out = np.ones((stop - start, ns.cells_at(r)), dtype=np.complex128)
    for j in range(r):
        m = ns.radix.radices[j]
        nj = (rows // ns.M[j]) % m
        if np.any(nj):
            out *= synthesis_matrix(m)[np.ix_(nj, D[:, j])]
    return out


def character_shift_residual(ns: NumberSystem, resolution: int | None = None) -> float:
    """Max deviation in psi_{M_k}^{-n_k}(e_k) psi_{M_k}^{n_k}(t) = psi_{M_k}^{n_k}(t - e_k).

    Checked for every k < r, every 1 <= n_k < m_k, every cell t.
    """
    r = ns.resolution if resolution is None else resolution
    D = digit_matrix(ns, r)
    worst = 0.0
    for k in range(r):
        m = ns.radix.radices[k]
        roots = root_table(m)
        tk = D[:, k]
        for nk in range(1, m):
            lhs = roots[(-nk) % m] * roots[(nk * tk) % m]
            rhs = roots[(nk * ((tk - 1) % m)) % m]
            worst = max(worst, float(np.abs(lhs - rhs).max()))
    return worst


def unity_gap_residual(ns: NumberSystem) -> tuple[float, float]:
    """Check |1 - psi_{M_k}^{-n_k}(e_k)| = 2 sin(pi n_k / m_k) over all k, n_k.

    Returns (max identity residual, min gap - 2 sin(pi / max_radix)); the
    second entry is nonnegative when the uniform lower bound holds.
    """
    worst = 0.0
    min_gap = np.inf
    for k, m in enumerate(ns.radix.radices):
        roots = root_table(m)
        for nk in range(1, m):
            gap = abs(1 - roots[(-nk) % m])
            worst = max(worst, abs(gap - 2 * np.sin(np.pi * nk / m)))
            min_gap = min(min_gap, gap)
    return worst, float(min_gap - 2 * np.sin(np.pi / ns.radix.max_radix))
