"""Oscillation functionals on coset structure, Young functions, series tests.

omega_beta(k) is the value diameter of f over the beta-th coset of I_k;
omega(f, 1/M_k) = max_beta omega_beta(k) is the modulus of continuity,
O(f, M_k) sums beta >= 1, nu(M_k, f) sums every coset including beta = 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ConfigurationError, DomainError, UsageError, ValidationError
from .group import basis_element, coset_key_table, coset_rep, translate_indices
from .transform import StepFunction

_IMAG_TOL = 1e-13


def _coset_values(f: StepFunction, k: int) -> np.ndarray:
    """(M_k, M_r/M_k) array: row beta holds f on the beta-th coset of I_k."""
    ns, r = f.ns, f.resolution
    if not 0 <= k <= r:
        raise UsageError(f"scale {k} outside 0..{r}")
    key = coset_key_table(ns, r, k)
    order = np.argsort(key, kind="stable")
    return f.cells[order].reshape(ns.M[k], ns.cells_at(r) // ns.M[k])


def _row_diameters(rows: np.ndarray) -> np.ndarray:
    """Per-row diameter max |z_i - z_j|; real rows use max - min."""
    if float(np.abs(rows.imag).max(initial=0.0)) <= _IMAG_TOL * max(1.0, float(np.abs(rows).max(initial=0.0))):
        re = rows.real
        return re.max(axis=1) - re.min(axis=1)
    diffs = np.abs(rows[:, :, None] - rows[:, None, :])
    return diffs.max(axis=(1, 2))


def coset_oscillation(f: StepFunction, k: int, beta: int) -> float:
    """omega_beta(k): diameter of f over the coset Z_beta^(k) + I_k."""
    ns = f.ns
    if not 0 <= k <= f.resolution:
        raise UsageError(f"scale {k} outside 0..{f.resolution}")
    if not 0 <= beta < ns.M[k]:
        raise UsageError(f"coset index {beta} outside 0..{ns.M[k] - 1}")
    key = coset_key_table(ns, f.resolution, k)
    vals = f.cells[key == beta]
    return float(_row_diameters(vals[None, :])[0])


def modulus_of_continuity(f: StepFunction, k: int) -> float:
    """omega(f, 1/M_k) = sup over x, t in I_k of |f(x - t) - f(x)|.

    Translating by t in I_k preserves digits below k, so the sup equals the
    largest coset diameter at scale k. For k >= resolution it is 0.
    """
    if k < 0:
        raise UsageError(f"scale {k} is negative")
    if k >= f.resolution:
        return 0.0
    return float(_row_diameters(_coset_values(f, k)).max())


@dataclass(frozen=True)
class OscillationProfile:
    """Per-scale oscillation summary for k = 0..resolution."""

    resolution: int
    scale_cells: tuple[int, ...]          # M_k
    omega: np.ndarray                     # max_beta omega_beta(k)
    total: np.ndarray                     # O(f, M_k) = sum_{beta>=1} omega_beta
    nu: np.ndarray                        # nu(M_k, f) = sum over all beta


def oscillation_profile(f: StepFunction) -> OscillationProfile:
    r = f.resolution
    omega = np.zeros(r + 1)
    total = np.zeros(r + 1)
    nu = np.zeros(r + 1)
    for k in range(r + 1):
        d = _row_diameters(_coset_values(f, k))
        omega[k] = d.max()
        nu[k] = math.fsum(float(v) for v in d)
        total[k] = nu[k] - float(d[0])
    return OscillationProfile(
        resolution=r,
        scale_cells=tuple(f.ns.M[: r + 1]),
        omega=omega,
        total=total,
        nu=nu,
    )


@dataclass(frozen=True)
class YoungFunction:
    """Convex M with M(0) = 0, strictly increasing; power or tabulated."""

    kind: str
    p: float = 0.0
    grid: np.ndarray | None = None
    values: np.ndarray | None = None

    def __post_init__(self):
        if self.kind == "power":
            if self.p < 1.0:
                raise ValidationError(f"power Young function needs p >= 1, got {self.p}")
        elif self.kind == "table":
            g, v = np.asarray(self.grid, float), np.asarray(self.values, float)
            if g.shape != v.shape or g.ndim != 1 or len(g) < 2:
                raise ValidationError("tabulated Young function needs matching 1-d grids")
            if g[0] != 0.0 or v[0] != 0.0:
                raise ValidationError("tabulated Young function must start at (0, 0)")
            if np.any(np.diff(g) <= 0) or np.any(np.diff(v) <= 0):
                raise ValidationError("tabulated Young function must be strictly increasing")
            slopes = np.diff(v) / np.diff(g)
            if np.any(np.diff(slopes) < -1e-12 * max(1.0, float(np.abs(slopes).max()))):
                raise ValidationError("tabulated Young function must be convex")
        else:
            raise ValidationError(f"unknown Young function kind {self.kind!r}")

    def __call__(self, u: float) -> float:
        if u < 0:
            raise DomainError(f"Young function argument {u} is negative")
        if self.kind == "power":
            return float(u) ** self.p
        if u > self.grid[-1]:
            raise DomainError(f"argument {u} beyond tabulated range {self.grid[-1]}")
        return float(np.interp(u, self.grid, self.values))

    def inverse(self, v: float) -> float:
        if v < 0:
            raise DomainError(f"Young function value {v} is negative")
        if self.kind == "power":
            return float(v) ** (1.0 / self.p)
        if v > self.values[-1]:
            raise DomainError(f"value {v} beyond tabulated range {self.values[-1]}")
        return float(np.interp(v, self.values, self.grid))


def young_from_spec(spec) -> YoungFunction:
    if not isinstance(spec, dict) or "kind" not in spec:
        raise ConfigurationError(f"Young function spec {spec!r} needs a 'kind'")
    if spec["kind"] == "power":
        return YoungFunction(kind="power", p=float(spec.get("p", 2.0)))
    if spec["kind"] == "table":
        return YoungFunction(
            kind="table",
            grid=np.asarray(spec["u"], float),
            values=np.asarray(spec["M"], float),
        )
    raise ConfigurationError(f"unknown Young function kind {spec['kind']!r}")


def young_oscillation_score(f: StepFunction, M: YoungFunction) -> float:
    """sup_k sum_{beta=1}^{M_k - 1} M(omega_beta(k))."""
    best = 0.0
    for k in range(f.resolution + 1):
        d = _row_diameters(_coset_values(f, k))
        best = max(best, math.fsum(M(float(v)) for v in d[1:]))
    return best


def difference_condition(f: StepFunction, k: int, alpha: float) -> float:
    """sup_x sum_{beta=1}^{M_k - 1} beta^{alpha-1} |f(x - Z_beta) - f(x - Z_beta - e_k)|."""
    ns = f.ns
    if not 1 <= k < f.resolution:
        raise UsageError(f"scale {k} outside 1..{f.resolution - 1}")
    if not 0.0 < alpha < 1.0:
        raise UsageError(f"alpha={alpha} outside (0, 1)")
    ek = basis_element(ns, k)
    shifted = f.translate(ek)
    d = np.abs(f.cells - shifted.cells)  # d(y) = |f(y) - f(y - e_k)|
    acc = np.zeros(len(d))
    for beta in range(1, ns.M[k]):
        z = coset_rep(ns, beta, k)
        idx = translate_indices(ns, f.resolution, z)
        acc += beta ** (alpha - 1.0) * d[idx]
    return float(acc.max())


@dataclass(frozen=True)
class SeriesReport:
    """Partial sums of a positive series plus the increments for diagnosis."""

    terms: np.ndarray
    partials: np.ndarray
    converges: bool | None = None

    @property
    def total(self) -> float:
        return float(self.partials[-1]) if len(self.partials) else 0.0


def oscillation_series(f: StepFunction, alpha: float, k_max: int | None = None) -> SeriesReport:
    """Terms nu(M_k, f) / M_k^{1-alpha} for k = 1..k_max."""
    if not 0.0 < alpha < 1.0:
        raise UsageError(f"alpha={alpha} outside (0, 1)")
    prof = oscillation_profile(f)
    kk = prof.resolution if k_max is None else k_max
    if not 1 <= kk <= prof.resolution:
        raise UsageError(f"k_max {kk} outside 1..{prof.resolution}")
    terms = np.array([prof.nu[k] / prof.scale_cells[k] ** (1.0 - alpha) for k in range(1, kk + 1)])
    return SeriesReport(terms=terms, partials=np.cumsum(terms))


def young_series(M: YoungFunction, ns, alpha: float, k_max: int | None = None) -> SeriesReport:
    """Terms M_k^alpha * M^{-1}(1/M_k) for k = 1..k_max, with a decay verdict.

    converges is True when the trailing term ratios stay strictly below 1,
    the geometric-decay signature; for M(u) = u^p the ratio is
    (M_{k+1}/M_k)^{alpha - 1/p}, below 1 exactly when alpha < 1/p.
    """
    kk = ns.resolution if k_max is None else k_max
    if not 1 <= kk <= ns.resolution:
        raise UsageError(f"k_max {kk} outside 1..{ns.resolution}")
    terms = np.array([ns.M[k] ** alpha * M.inverse(1.0 / ns.M[k]) for k in range(1, kk + 1)])
    converges = None
    if len(terms) >= 2:
        ratios = terms[1:] / terms[:-1]
        tail = ratios[len(ratios) // 2 :]
        converges = bool(np.all(tail < 0.999))
    return SeriesReport(terms=terms, partials=np.cumsum(terms), converges=converges)


def jensen_step_residual(f: StepFunction, M: YoungFunction) -> float:
    """Largest violation of M(nu_k / M_k) <= (1/M_k) sum_beta M(omega_beta(k)); <= 0 when Jensen holds."""
    worst = -np.inf
    for k in range(f.resolution + 1):
        d = _row_diameters(_coset_values(f, k))
        mk = f.ns.M[k]
        lhs = M(math.fsum(float(v) for v in d) / mk)
        rhs = math.fsum(M(float(v)) for v in d) / mk
        worst = max(worst, lhs - rhs)
    return float(worst)
