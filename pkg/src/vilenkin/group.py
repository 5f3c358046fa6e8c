"""Bounded Vilenkin group arithmetic and mixed-radix indexing.

The group G_m is the product of cyclic groups Z_{m_0} x Z_{m_1} x ... with
coordinatewise addition mod m_k. Indices n < M_N and group elements are
identified with their mixed-radix digit vectors through the number system
M_0 = 1, M_{k+1} = m_k * M_k. Everything downstream (characters, kernels,
transforms) works on flat cell indices; this module owns the digit/index
plumbing and the coset representative map.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from .errors import ConfigurationError, UsageError, ValidationError

# Cell counts must stay addressable as signed 64-bit indices.
_INDEX_LIMIT = 2**62


@dataclass(frozen=True)
class RadixSequence:
    """Generating radix vector m_0 .. m_{N-1}, every entry at least 2."""

    radices: tuple[int, ...]

    def __post_init__(self):
        if len(self.radices) == 0:
            raise ValidationError("radix sequence must be nonempty")
        for k, m in enumerate(self.radices):
            if not isinstance(m, int) or isinstance(m, bool):
                raise ValidationError(f"radix m_{k}={m!r} is not an integer")
            if m < 2:
                raise ValidationError(f"radix m_{k}={m} is below 2")

    def __len__(self) -> int:
        return len(self.radices)

    @property
    def max_radix(self) -> int:
        return max(self.radices)


def radix_from_spec(spec) -> RadixSequence:
    """Build a RadixSequence from a config fragment.

    Accepted forms: a bare list of ints, {"list": [...]},
    {"constant": m, "length": N}, or {"pattern": [...], "length": N}
    (pattern cycled to total length N).
    """
    if isinstance(spec, (list, tuple)):
        return RadixSequence(tuple(int(m) for m in spec))
    if not isinstance(spec, dict):
        raise ConfigurationError(f"radix spec {spec!r} is not a list or mapping")
    if "list" in spec:
        return RadixSequence(tuple(int(m) for m in spec["list"]))
    if "constant" in spec:
        n = int(spec.get("length", 0))
        if n < 1:
            raise ConfigurationError("constant radix spec needs length >= 1")
        return RadixSequence((int(spec["constant"]),) * n)
    if "pattern" in spec:
        pat = [int(m) for m in spec["pattern"]]
        n = int(spec.get("length", 0))
        if not pat or n < 1:
            raise ConfigurationError("pattern radix spec needs a nonempty pattern and length >= 1")
        return RadixSequence(tuple(pat[k % len(pat)] for k in range(n)))
    raise ConfigurationError(f"radix spec keys {sorted(spec)} not recognized")


@dataclass(frozen=True)
class NumberSystem:
    """Radix vector plus the ladder M_0=1, M_{k+1} = m_k M_k."""

    radix: RadixSequence
    M: tuple[int, ...]

    @property
    def resolution(self) -> int:
        return len(self.radix)

    @property
    def cell_count(self) -> int:
        return self.M[-1]

    def cells_at(self, resolution: int) -> int:
        if not 0 <= resolution <= self.resolution:
            raise UsageError(f"resolution {resolution} outside 0..{self.resolution}")
        return self.M[resolution]


def build_number_system(radix: RadixSequence) -> NumberSystem:
    ladder = [1]
    for m in radix.radices:
        ladder.append(ladder[-1] * m)
        if ladder[-1] > _INDEX_LIMIT:
            raise ConfigurationError(
                f"cell count {ladder[-1]} exceeds the addressable limit {_INDEX_LIMIT}"
            )
    return NumberSystem(radix=radix, M=tuple(ladder))


def number_system(radices) -> NumberSystem:
    """Shorthand: build a NumberSystem straight from an iterable of radices."""
    return build_number_system(RadixSequence(tuple(int(m) for m in radices)))


@dataclass(frozen=True)
class GroupElement:
    """Point of G_m, stored as the full digit vector x_0 .. x_{N-1}."""

    ns: NumberSystem
    digits: tuple[int, ...]

    def __post_init__(self):
        if len(self.digits) != self.ns.resolution:
            raise ValidationError(
                f"digit vector length {len(self.digits)} != resolution {self.ns.resolution}"
            )
        for k, (d, m) in enumerate(zip(self.digits, self.ns.radix.radices)):
            if not 0 <= d < m:
                raise ValidationError(f"digit x_{k}={d} outside 0..{m - 1}")

    def cell_index(self, resolution: int | None = None) -> int:
        """Flat index of the I_r-cell containing this point (r defaults to full)."""
        r = self.ns.resolution if resolution is None else resolution
        return sum(d * w for d, w in zip(self.digits[:r], self.ns.M[:r]))


def zero(ns: NumberSystem) -> GroupElement:
    return GroupElement(ns, (0,) * ns.resolution)


def basis_element(ns: NumberSystem, n: int) -> GroupElement:
    """e_n: digit 1 in coordinate n, zero elsewhere."""
    if not 0 <= n < ns.resolution:
        raise UsageError(f"coordinate {n} outside 0..{ns.resolution - 1}")
    digits = [0] * ns.resolution
    digits[n] = 1
    return GroupElement(ns, tuple(digits))


def _require_same_ns(x: GroupElement, y: GroupElement):
    if x.ns is not y.ns and x.ns != y.ns:
        raise ValidationError("operands live on different groups")


def add(x: GroupElement, y: GroupElement) -> GroupElement:
    _require_same_ns(x, y)
    ms = x.ns.radix.radices
    return GroupElement(x.ns, tuple((a + b) % m for a, b, m in zip(x.digits, y.digits, ms)))


def neg(x: GroupElement) -> GroupElement:
    ms = x.ns.radix.radices
    return GroupElement(x.ns, tuple((-a) % m for a, m in zip(x.digits, ms)))


def sub(x: GroupElement, y: GroupElement) -> GroupElement:
    _require_same_ns(x, y)
    ms = x.ns.radix.radices
    return GroupElement(x.ns, tuple((a - b) % m for a, b, m in zip(x.digits, y.digits, ms)))


def digits_of(ns: NumberSystem, n: int) -> tuple[int, ...]:
    """Mixed-radix digits n_0 .. n_{N-1} of an index 0 <= n < M_N."""
    if not 0 <= n < ns.cell_count:
        raise UsageError(f"index {n} outside 0..{ns.cell_count - 1}")
    out = []
    for m in ns.radix.radices:
        out.append(n % m)
        n //= m
    return tuple(out)


def index_of(ns: NumberSystem, digits) -> int:
    digits = tuple(digits)
    if len(digits) > ns.resolution:
        raise UsageError(f"{len(digits)} digits exceed resolution {ns.resolution}")
    for k, (d, m) in enumerate(zip(digits, ns.radix.radices)):
        if not 0 <= d < m:
            raise ValidationError(f"digit n_{k}={d} outside 0..{m - 1}")
    return sum(d * w for d, w in zip(digits, ns.M))


def element_of(ns: NumberSystem, n: int) -> GroupElement:
    return GroupElement(ns, digits_of(ns, n))


def truncate(ns: NumberSystem, n: int, A: int) -> int:
    """Digit truncation n^(A) = n_A M_A + ... + n_0 M_0, with n^(-1) = 0."""
    if A < -1 or A >= ns.resolution:
        raise UsageError(f"truncation level {A} outside -1..{ns.resolution - 1}")
    if A == -1:
        return 0
    return n % ns.M[A + 1]


def scale_of(ns: NumberSystem, n: int) -> int:
    """The A with M_A <= n < M_{A+1}; requires n >= 1."""
    if n < 1 or n >= ns.cell_count:
        raise UsageError(f"index {n} outside 1..{ns.cell_count - 1}")
    A = 0
    while ns.M[A + 1] <= n:
        A += 1
    return A


def coset_rep(ns: NumberSystem, beta: int, k: int) -> GroupElement:
    """Representative Z_beta^(k) of the beta-th coset of I_k.

    beta = sum_{j<k} x_j * (M_k / M_{j+1}) enumerates the cosets; the digits
    are recovered greedily from the largest weight down, so the map is a
    bijection from 0..M_k-1 onto the digit boxes below level k.
    """
    if not 0 <= k <= ns.resolution:
        raise UsageError(f"scale {k} outside 0..{ns.resolution}")
    if not 0 <= beta < ns.M[k]:
        raise UsageError(f"coset index {beta} outside 0..{ns.M[k] - 1}")
    digits = [0] * ns.resolution
    rem = beta
    for j in range(k):
        w = ns.M[k] // ns.M[j + 1]
        digits[j], rem = divmod(rem, w)
    return GroupElement(ns, tuple(digits))


def coset_index(ns: NumberSystem, x: GroupElement, k: int) -> int:
    """Inverse of coset_rep: which coset of I_k contains x."""
    if not 0 <= k <= ns.resolution:
        raise UsageError(f"scale {k} outside 0..{ns.resolution}")
    return sum(x.digits[j] * (ns.M[k] // ns.M[j + 1]) for j in range(k))


@functools.lru_cache(maxsize=None)
def digit_matrix(ns: NumberSystem, resolution: int) -> np.ndarray:
    """(M_r, r) int64 array: row i holds the digits of cell index i."""
    r = resolution
    cells = ns.cells_at(r)
    idx = np.arange(cells, dtype=np.int64)
    out = np.empty((cells, r), dtype=np.int64)
    for j in range(r):
        out[:, j] = (idx // ns.M[j]) % ns.radix.radices[j]
    out.setflags(write=False)
    return out


@functools.lru_cache(maxsize=None)
def coset_key_table(ns: NumberSystem, resolution: int, k: int) -> np.ndarray:
    """Coset index of every resolution-r cell at scale k (vectorized coset_index)."""
    if not 0 <= k <= resolution:
        raise UsageError(f"scale {k} outside 0..{resolution}")
    D = digit_matrix(ns, resolution)
    w = np.array([ns.M[k] // ns.M[j + 1] for j in range(k)], dtype=np.int64)
    if k == 0:
        return np.zeros(ns.cells_at(resolution), dtype=np.int64)
    key = D[:, :k] @ w
    key.setflags(write=False)
    return key


def translate_indices(ns: NumberSystem, resolution: int, t: GroupElement) -> np.ndarray:
    """Index permutation i -> index(x_i - t) at the given resolution."""
    D = digit_matrix(ns, resolution)
    ms = np.array(ns.radix.radices[:resolution], dtype=np.int64)
    td = np.array(t.digits[:resolution], dtype=np.int64)
    shifted = (D - td) % ms
    weights = np.array(ns.M[:resolution], dtype=np.int64)
    return shifted @ weights


def negate_indices(ns: NumberSystem, resolution: int) -> np.ndarray:
    """Index permutation i -> index(-x_i) at the given resolution."""
    D = digit_matrix(ns, resolution)
    ms = np.array(ns.radix.radices[:resolution], dtype=np.int64)
    weights = np.array(ns.M[:resolution], dtype=np.int64)
    return ((-D) % ms) @ weights
