"""Dirichlet, Fejer, and negative-order Cesaro kernels plus bound scans.

D_n = sum_{k<n} psi_k with D_0 = 0. Kernels are materialized on the coarsest
grid that carries their frequencies and lifted on demand. The scans quantify
kernel bounds empirically: each returns the scanned ratios so stability can
be asserted rather than assumed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import binomials
from .characters import character_block, root_table, vilenkin_on_cells
from .errors import DomainError, UsageError
from .group import NumberSystem, coset_rep, digit_matrix, digits_of, negate_indices, scale_of
from .oscillation import modulus_of_continuity
from .transform import StepFunction, convolve, synthesize

_TABLE_CELL_CAP = 1 << 24


def _extended_digits(ns: NumberSystem, n: int) -> list[int]:
    """Digits of 1 <= n <= M_N; n = M_N gets the virtual digit n_N = 1."""
    if n == ns.cell_count:
        return [0] * ns.resolution + [1]
    return list(digits_of(ns, n))


def dirichlet(ns: NumberSystem, n: int, strategy: str = "auto",
              resolution: int | None = None) -> StepFunction:
    """D_n via "naive" (literal character sum), "closed" (n = M_k only,
    M_k times the I_k indicator), or "recursive" (digit product form)."""
    if not 0 <= n <= ns.cell_count:
        raise UsageError(f"kernel order {n} outside 0..{ns.cell_count}")
    if n == 0:
        scale = -1
    elif n == ns.cell_count:
        scale = ns.resolution
    else:
        scale = scale_of(ns, n)
    # D_n is constant on I_{scale+1} cells; that is its natural grid.
    r = min(scale + 1, ns.resolution) if resolution is None else resolution
    if ns.M[r] < n:
        raise UsageError(f"resolution {r} cannot carry {n} frequencies")
    cells = ns.cells_at(r)
    if strategy == "auto":
        strategy = "closed" if n in ns.M else "recursive"
    if strategy == "naive":
        acc = np.zeros(cells, dtype=np.complex128)
        for k in range(n):
            acc += vilenkin_on_cells(ns, k, r)
        return StepFunction(ns, r, acc)
    if strategy == "closed":
        if n not in ns.M:
            raise UsageError(f"closed form needs n = M_k, got {n}")
        out = np.zeros(cells, dtype=np.complex128)
        if n == 0:
            return StepFunction(ns, r, out)
        out[np.arange(cells) % n == 0] = n
        return StepFunction(ns, r, out)
    if strategy == "recursive":
        if n == ns.cell_count:
            # No digit expansion at position N; the closed form is exact here.
            return dirichlet(ns, n, "closed", r)
        if r <= scale:
            raise UsageError(f"recursive strategy needs resolution > {scale}")
        dd = digits_of(ns, n)
        D = digit_matrix(ns, r)
        idx = np.arange(cells)
        acc = np.zeros(cells, dtype=np.complex128)
        for j, nj in enumerate(dd):
            if nj == 0:
                continue
            m = ns.radix.radices[j]
            roots = root_table(m)
            gsum = np.zeros(cells, dtype=np.complex128)
            for a in range(m - nj, m):
                gsum += roots[(a * D[:, j]) % m]
            acc += ns.M[j] * (idx % ns.M[j] == 0) * gsum
        return StepFunction(ns, r, vilenkin_on_cells(ns, n, r) * acc)
    raise UsageError(f"unknown Dirichlet strategy {strategy!r}")


def dirichlet_table(ns: NumberSystem, n_max: int, resolution: int | None = None) -> np.ndarray:
    """Rows D_0 .. D_{n_max} on every cell, built as cumulative character sums."""
    if not 0 <= n_max <= ns.cell_count:
        raise UsageError(f"table top {n_max} outside 0..{ns.cell_count}")
    r = ns.resolution if resolution is None else resolution
    cells = ns.cells_at(r)
    if (n_max + 1) * cells > _TABLE_CELL_CAP:
        raise UsageError(f"table of {(n_max + 1) * cells} entries exceeds the cap")
    out = np.zeros((n_max + 1, cells), dtype=np.complex128)
    chunk = max(1, min(n_max, (1 << 20) // max(cells, 1)))
    for start in range(0, n_max, chunk):
        stop = min(n_max, start + chunk)
        block = character_block(ns, start, stop, r)
        out[start + 1 : stop + 1] = np.cumsum(block, axis=0)
        if start > 0:
            out[start + 1 : stop + 1] += out[start]
    return out


def fejer_kernel(ns: NumberSystem, n: int, resolution: int | None = None) -> StepFunction:
    """(1/n) sum_{k=1}^{n} D_k = sum_{nu<n} (n - nu)/n psi_nu."""
    if not 1 <= n <= ns.cell_count:
        raise UsageError(f"kernel order {n} outside 1..{ns.cell_count}")
    weights = (n - np.arange(n)) / n
    return synthesize(ns, weights, resolution)


def cesaro_kernel(ns: NumberSystem, n: int, alpha: float,
                  resolution: int | None = None) -> StepFunction:
    """K_n^{-alpha} = (1/A_{n-1}^{-alpha}) sum_{nu<n} A_{n-1-nu}^{-alpha} psi_nu."""
    if not 1 <= n <= ns.cell_count:
        raise UsageError(f"kernel order {n} outside 1..{ns.cell_count}")
    if not 0.0 < alpha < 1.0:
        raise UsageError(f"order -alpha with alpha={alpha} outside (0, 1)")
    t = binomials.cesaro_table(-alpha, n - 1)
    weights = t.values[::-1] / t.a(n - 1)
    return synthesize(ns, weights, resolution)


@dataclass(frozen=True)
class RecursionReport:
    """Max residual per Dirichlet identity over its admissible parameter range."""

    n_max: int
    residuals: dict

    @property
    def max_residual(self) -> float:
        return max(self.residuals.values())


def verify_dirichlet_recursions(ns: NumberSystem, n_max: int | None = None) -> RecursionReport:
    """Exhaustive residual scan of the Dirichlet kernel identities.

    Checked on every cell at full resolution, for every admissible parameter
    tuple with kernel order at most n_max:

    - scale_indicator: D_{M_k} = M_k 1_{I_k}
    - mean: cell average of D_n is 1 for n >= 1
    - digit_split: D_n = (sum_{q<n_k} r_k^q) D_{M_k} + r_k^{n_k} D_{n'},
      n = n_k M_k + n', the geometric factor written as an explicit root sum
      (the quotient form is 0/0 where r_k = 1)
    - block_shift: D_{j + n_k M_k} = D_{n_k M_k} + psi_{n_k M_k} D_j, j <= M_k
    - block_geometric: D_{j + r M_k} = (sum_{q<r} r_k^q) D_{M_k} + r_k^r D_j,
      1 <= r < m_k and j < M_k, plus r = m_k with j = 0
    - reflection: D_{n_s M_s - j} = D_{n_s M_s} - psi_{n_s M_s - 1} conj(D_j),
      1 <= n_s < m_s, 0 <= j <= n_s M_s
    - product_form: D_n = psi_n sum_j D_{M_j} sum_{a=m_j-n_j}^{m_j-1} r_j^a
    """
    N = ns.resolution
    top = ns.cell_count if n_max is None else n_max
    if not 1 <= top <= ns.cell_count:
        raise UsageError(f"n_max {top} outside 1..{ns.cell_count}")
    T = dirichlet_table(ns, top)
    cells = ns.cell_count
    D = digit_matrix(ns, N)
    idx = np.arange(cells)
    # r_k^a on every cell, per coordinate
    powers = []
    for k in range(N):
        m = ns.radix.radices[k]
        roots = root_table(m)
        powers.append(np.stack([roots[(a * D[:, k]) % m] for a in range(m + 1)]))

    res = {key: 0.0 for key in (
        "scale_indicator", "mean", "digit_split", "block_shift",
        "block_geometric", "reflection", "product_form")}

    for k in range(N + 1):
        if ns.M[k] > top:
            break
        ref = np.where(idx % ns.M[k] == 0, ns.M[k], 0).astype(np.complex128)
        res["scale_indicator"] = max(res["scale_indicator"],
                                     float(np.abs(T[ns.M[k]] - ref).max()))

    means = T[1 : top + 1].mean(axis=1)
    res["mean"] = float(np.abs(means - 1.0).max())

    for k in range(N):
        m = ns.radix.radices[k]
        Mk = ns.M[k]
        if Mk > top:
            break
        geo = np.cumsum(powers[k][:m], axis=0)  # geo[q] = sum_{a<=q} r_k^a
        for nk in range(1, m):
            base = nk * Mk
            if base > top:
                break
            gs = geo[nk - 1]
            for rest in range(0, min(Mk, top - base + 1)):
                lhs = T[base + rest]
                res["digit_split"] = max(res["digit_split"], float(
                    np.abs(lhs - gs * T[Mk] - powers[k][nk] * T[rest]).max()))
            for j in range(0, min(Mk, top - base) + 1):
                lhs = T[base + j]
                res["block_shift"] = max(res["block_shift"], float(
                    np.abs(lhs - T[base] - powers[k][nk] * T[j]).max()))
        for rr in range(1, m + 1):
            base = rr * Mk
            if base > top:
                break
            j_top = 1 if rr == m else min(Mk, top - base + 1)
            for j in range(j_top):
                lhs = T[base + j]
                res["block_geometric"] = max(res["block_geometric"], float(
                    np.abs(lhs - geo[rr - 1] * T[Mk] - powers[k][rr] * T[j]).max()))

    for s in range(N):
        m = ns.radix.radices[s]
        for n_s in range(1, m):
            base = n_s * ns.M[s]
            if base > top:
                break
            psi = vilenkin_on_cells(ns, base - 1, N)
            for j in range(base + 1):
                lhs = T[base - j]
                res["reflection"] = max(res["reflection"], float(
                    np.abs(lhs - T[base] + psi * T[j].conj()).max()))

    for n in range(1, top + 1):
        prod = dirichlet(ns, n, "recursive").lift(N)
        res["product_form"] = max(res["product_form"], float(
            np.abs(prod.cells - T[n]).max()))

    return RecursionReport(n_max=top, residuals=res)


def block_decomposition_residual(ns: NumberSystem, n: int, alpha: float,
                                 table: np.ndarray | None = None) -> float:
    """Residual of the digit-block expansion of sum_{j=1}^{n} A_{n-j}^{-alpha-1} D_j.

    The left side drives the order -alpha kernel (it equals
    A_{n-1}^{-alpha} K_n^{-alpha}); the right side resolves it into per-digit
    blocks: for each nonzero digit n_k,

        (prod_{l>k} psi_{n_l M_l}) [ D_{n_k M_k} A_{n^(k)-1}^{-alpha}
            - psi_{n_k M_k - 1} sum_{j<n_k M_k} A_{n^(k-1)+j}^{-alpha-1} conj(D_j) ].

    Zero digits contribute nothing and are skipped, so psi_{-1} never arises.
    """
    if not 1 <= n <= ns.cell_count:
        raise UsageError(f"order {n} outside 1..{ns.cell_count}")
    if not 0.0 < alpha < 1.0:
        raise UsageError(f"alpha={alpha} outside (0, 1)")
    T = dirichlet_table(ns, n) if table is None else table
    cells = T.shape[1]
    t0 = binomials.cesaro_table(-alpha, n - 1)
    t1 = binomials.cesaro_table(-alpha - 1, n - 1)

    lhs = np.tensordot(t1.values[:n][::-1], T[1 : n + 1], axes=(0, 0))

    dd = _extended_digits(ns, n)
    rhs = np.zeros(cells, dtype=np.complex128)
    suffix = np.ones(cells, dtype=np.complex128)  # prod_{l>k} psi_{n_l M_l}
    trunc = n  # n^(k) going down
    for k in range(len(dd) - 1, -1, -1):
        nk = dd[k]
        if nk == 0:
            continue
        base = nk * ns.M[k]
        trunc_below = trunc - base  # n^(k-1)
        block = T[base] * t0.a(trunc - 1)
        inner = np.tensordot(t1.values[trunc_below : trunc_below + base],
                             T[:base].conj(), axes=(0, 0))
        block = block - vilenkin_on_cells(ns, base - 1, ns.resolution) * inner
        rhs += suffix * block
        if k < ns.resolution:
            suffix = suffix * vilenkin_on_cells(ns, base, ns.resolution)
        trunc = trunc_below
    return float(np.abs(lhs - rhs).max())


@dataclass(frozen=True)
class BoundScanRecord:
    """One scanned kernel bound: the ratio that theory asserts is O(1)."""

    kind: str
    n: int
    alpha: float
    sup_ratio: float
    argmax_cell: int
    resolution: int
    beta_ratios: np.ndarray | None = None


def majorant_ratio_scan(ns: NumberSystem, alpha: float, n_values) -> list[BoundScanRecord]:
    """|K_n^{-alpha}| |A_{n-1}^{-alpha}| against sum_{l<=A} M_l^{-alpha} D_{M_l}.

    The l = 0 term is identically 1, so the majorant never vanishes.
    """
    if not 0.0 < alpha < 1.0:
        raise UsageError(f"alpha={alpha} outside (0, 1)")
    out = []
    for n in n_values:
        if not 1 <= n <= ns.cell_count:
            raise UsageError(f"order {n} outside 1..{ns.cell_count}")
        K = cesaro_kernel(ns, n, alpha)
        r = K.resolution
        cells = ns.cells_at(r)
        A = scale_of(ns, n) if n < ns.cell_count else ns.resolution
        idx = np.arange(cells)
        majorant = np.zeros(cells)
        for l in range(min(A, r) + 1):
            majorant += ns.M[l] ** (1.0 - alpha) * (idx % ns.M[l] == 0)
        a_n = binomials.cesaro_coefficient(n - 1, -alpha)
        ratios = np.abs(K.cells) * abs(a_n) / majorant
        arg = int(np.argmax(ratios))
        out.append(BoundScanRecord(kind="majorant", n=n, alpha=alpha,
                                   sup_ratio=float(ratios[arg]), argmax_cell=arg,
                                   resolution=r))
    return out


def coset_decay_scan(ns: NumberSystem, alpha: float, k: int,
                     n_values=None) -> list[BoundScanRecord]:
    """beta^{1-alpha} |K_n^{-alpha}(Z_beta^(k))| / M_k over beta = 1..M_k-1.

    The decay estimate is sharp for orders n comparable to M_k; far above
    that the normalized kernel grows without bound.  The default n range is
    therefore the top admissible block [M_{k-1}, M_k].
    """
    if not 0.0 < alpha < 1.0:
        raise UsageError(f"alpha={alpha} outside (0, 1)")
    if not 1 <= k <= ns.resolution:
        raise UsageError(f"scale {k} outside 1..{ns.resolution}")
    if n_values is None:
        n_values = list(range(ns.M[k - 1], ns.M[k] + 1))
    out = []
    for n in n_values:
        if not 1 <= n <= ns.cell_count:
            raise UsageError(f"order {n} outside 1..{ns.cell_count}")
        K = cesaro_kernel(ns, n, alpha)
        r = K.resolution
        ratios = np.empty(ns.M[k] - 1)
        cells_at = np.empty(ns.M[k] - 1, dtype=np.int64)
        for beta in range(1, ns.M[k]):
            z = coset_rep(ns, beta, k)
            ci = z.cell_index(r)
            cells_at[beta - 1] = ci
            ratios[beta - 1] = abs(K.cells[ci]) * beta ** (1.0 - alpha) / ns.M[k]
        arg = int(np.argmax(ratios))
        out.append(BoundScanRecord(kind="coset_decay", n=n, alpha=alpha,
                                   sup_ratio=float(ratios[arg]),
                                   argmax_cell=int(cells_at[arg]),
                                   resolution=r, beta_ratios=ratios))
    return out


def dirichlet_l1_ratio(ns: NumberSystem, coeffs) -> float:
    """[(1/n) integral |sum_k a_k D_k|] * sqrt(n) / ||a||_2.

    The combination sum_{k=1}^{n} a_k D_k collapses to the character sum with
    suffix weights sum_{k>nu} a_k, so one synthesis evaluates it.
    """
    a = np.asarray(coeffs, dtype=np.float64)
    if a.ndim != 1 or len(a) == 0:
        raise UsageError("coefficient vector must be one-dimensional and nonempty")
    n = len(a)
    if n > ns.cell_count:
        raise UsageError(f"{n} coefficients exceed M_N = {ns.cell_count}")
    norm = float(np.linalg.norm(a))
    if norm == 0.0:
        raise UsageError("coefficient vector is zero")
    suffix = np.cumsum(a[::-1])[::-1]
    comb = synthesize(ns, suffix)
    l1 = float(np.abs(comb.cells).mean())
    return (l1 / n) * math.sqrt(n) / norm


def low_block_ratio(f: StepFunction, n: int, k: int, alpha: float) -> float:
    """Low-frequency block residue against the scaled modulus of continuity.

    LHS: sup_x |avg_u h(u) (f(x+u) - f(x))| / |A_n^{-alpha}| with
    h = sum_{nu < M_{k-1}} A_{n-nu}^{-alpha} psi_nu.
    RHS: sum_{r<k} (M_r / M_k) omega(f, 1/M_k).

    Returns LHS/RHS. A zero modulus with a nonvanishing LHS is flagged as a
    DomainError: band-limited inputs do leave a small residue (the kernel
    weights vary with nu), and no finite ratio describes them.
    """
    ns = f.ns
    if not 1 <= k < ns.resolution or not ns.M[k] <= n < ns.M[k + 1]:
        raise UsageError(f"need 1 <= k < {ns.resolution} and M_k <= n < M_(k+1); got k={k}, n={n}")
    if not 0.0 < alpha < 1.0:
        raise UsageError(f"alpha={alpha} outside (0, 1)")
    t0 = binomials.cesaro_table(-alpha, n)
    weights = t0.values[n : n - ns.M[k - 1] : -1]  # A_{n-nu}, nu = 0..M_{k-1}-1
    h = synthesize(ns, weights, f.resolution)
    reflected = StepFunction(ns, f.resolution, h.cells[negate_indices(ns, f.resolution)])
    correlated = convolve(f, reflected)  # avg_u h(u) f(x+u)
    g = correlated.cells - f.cells * t0.a(n)
    lhs = float(np.abs(g).max()) / abs(t0.a(n))
    omega = modulus_of_continuity(f, k)
    scale = math.fsum(ns.M[r] / ns.M[k] for r in range(k))
    rhs = scale * omega
    if rhs == 0.0:
        if lhs <= 1e-12 * n:
            return 0.0
        raise DomainError(
            f"modulus of continuity vanished at scale {k} but the low block residue is {lhs:g}")
    return lhs / rhs
