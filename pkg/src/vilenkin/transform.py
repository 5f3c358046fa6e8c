"""Step functions on G_m, the Vilenkin transform, and Cesaro means.

A StepFunction holds one complex value per I_r-cell, indexed by the mixed
radix cell index. The character system is a pure tensor product, so analysis
and synthesis factor into one small DFT per coordinate; the fast paths below
run those stages explicitly against the shared root-of-unity tables.

Cesaro mean convention (all three routes implemented and cross-checked):

    sigma_n^{-alpha} f
        = (1/A_{n-1}^{-alpha}) sum_{nu=0}^{n-1} A_{n-1-nu}^{-alpha} fhat(nu) psi_nu
        = (1/A_{n-1}^{-alpha}) sum_{nu=1}^{n}   A_{n-nu}^{-alpha-1} S_nu f
        = f convolved with the order -alpha kernel of length n.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from . import binomials
from .characters import analysis_matrix, character_block, synthesis_matrix
from .errors import UsageError, ValidationError
from .group import (
    GroupElement,
    NumberSystem,
    number_system,
    translate_indices,
)

_DIRECT_CONVOLUTION_CAP = 4096


@dataclass
class StepFunction:
    """Function constant on the I_resolution cells of G_m."""

    ns: NumberSystem
    resolution: int
    cells: np.ndarray

    def __post_init__(self):
        self.cells = np.asarray(self.cells, dtype=np.complex128)
        if self.cells.ndim != 1:
            raise ValidationError("cells must be one-dimensional")
        expect = self.ns.cells_at(self.resolution)
        if len(self.cells) != expect:
            raise ValidationError(
                f"{len(self.cells)} cells != M_{self.resolution} = {expect}"
            )

    def lift(self, resolution: int) -> "StepFunction":
        """Re-express on the finer grid; values depend only on low digits."""
        if resolution < self.resolution:
            raise UsageError(f"cannot lift {self.resolution} down to {resolution}")
        reps = self.ns.cells_at(resolution) // len(self.cells)
        return StepFunction(self.ns, resolution, np.tile(self.cells, reps))

    def value_at(self, x: GroupElement) -> complex:
        return complex(self.cells[x.cell_index(self.resolution)])

    def translate(self, t: GroupElement) -> "StepFunction":
        """g with g(x) = f(x - t)."""
        idx = translate_indices(self.ns, self.resolution, t)
        return StepFunction(self.ns, self.resolution, self.cells[idx])

    def sup_norm(self) -> float:
        return float(np.abs(self.cells).max())

    def cell_average(self) -> complex:
        return complex(self.cells.mean())

    def _check_compatible(self, other: "StepFunction"):
        if self.ns != other.ns or self.resolution != other.resolution:
            raise ValidationError("operands live on different grids")

    def __add__(self, other: "StepFunction") -> "StepFunction":
        self._check_compatible(other)
        return StepFunction(self.ns, self.resolution, self.cells + other.cells)

    def __sub__(self, other: "StepFunction") -> "StepFunction":
        self._check_compatible(other)
        return StepFunction(self.ns, self.resolution, self.cells - other.cells)

    def __mul__(self, other):
        if isinstance(other, StepFunction):
            self._check_compatible(other)
            return StepFunction(self.ns, self.resolution, self.cells * other.cells)
        return StepFunction(self.ns, self.resolution, self.cells * complex(other))

    __rmul__ = __mul__


@dataclass
class CoefficientVector:
    """fhat(0) .. fhat(M_r - 1) for a resolution-r step function."""

    ns: NumberSystem
    resolution: int
    coeffs: np.ndarray

    def __post_init__(self):
        self.coeffs = np.asarray(self.coeffs, dtype=np.complex128)
        if self.coeffs.ndim != 1:
            raise ValidationError("coeffs must be one-dimensional")
        expect = self.ns.cells_at(self.resolution)
        if len(self.coeffs) != expect:
            raise ValidationError(
                f"{len(self.coeffs)} coeffs != M_{self.resolution} = {expect}"
            )


def _staged(values: np.ndarray, ns: NumberSystem, resolution: int, analysis: bool,
            stage_order=None) -> np.ndarray:
    """Apply one small DFT per coordinate; stage order is mathematically inert."""
    r = resolution
    if r == 0:
        return values.copy()
    radices = ns.radix.radices[:r]
    order = range(r) if stage_order is None else list(stage_order)
    if sorted(order) != list(range(r)):
        raise UsageError(f"stage order {order} is not a permutation of 0..{r - 1}")
    # Cell index sum_j x_j M_j puts digit 0 on the fastest axis, so digit j
    # lives on axis r-1-j of the C-order tensor.
    arr = values.reshape(tuple(radices[::-1]))
    for j in order:
        m = radices[j]
        mat = analysis_matrix(m) if analysis else synthesis_matrix(m)
        axis = r - 1 - j
        arr = np.moveaxis(np.tensordot(mat, arr, axes=([1], [axis])), 0, axis)
    return arr.reshape(-1)


def forward(f: StepFunction, strategy: str = "fast", stage_order=None) -> CoefficientVector:
    """fhat(k) = (1/M_r) sum_cells f(x) conj(psi_k(x)).

    "fast" runs the per-coordinate stages, O(M_r * sum m_j); "naive" is the
    literal character sum, O(M_r^2), kept as the oracle.
    """
    ns, r = f.ns, f.resolution
    cells = ns.cells_at(r)
    if strategy == "fast":
        coeffs = _staged(f.cells, ns, r, analysis=True, stage_order=stage_order) / cells
    elif strategy == "naive":
        coeffs = np.empty(cells, dtype=np.complex128)
        chunk = max(1, min(cells, (1 << 22) // max(cells, 1)))
        for start in range(0, cells, chunk):
            stop = min(cells, start + chunk)
            block = character_block(ns, start, stop, r)
            coeffs[start:stop] = block.conj() @ f.cells / cells
    else:
        raise UsageError(f"unknown forward strategy {strategy!r}")
    return CoefficientVector(ns, r, coeffs)


def inverse(c: CoefficientVector, stage_order=None) -> StepFunction:
    """f(x) = sum_k fhat(k) psi_k(x)."""
    cells = _staged(c.coeffs, c.ns, c.resolution, analysis=False, stage_order=stage_order)
    return StepFunction(c.ns, c.resolution, cells)


def minimal_resolution(ns: NumberSystem, n_freqs: int) -> int:
    """Smallest r with M_r >= n_freqs: the coarsest grid carrying psi_0..psi_{n-1}."""
    if n_freqs > ns.cell_count:
        raise UsageError(f"{n_freqs} frequencies exceed M_N = {ns.cell_count}")
    r = 0
    while ns.M[r] < n_freqs:
        r += 1
    return r


def synthesize(ns: NumberSystem, weights, resolution: int | None = None) -> StepFunction:
    """sum_nu weights[nu] psi_nu as a StepFunction."""
    w = np.asarray(weights, dtype=np.complex128)
    r = minimal_resolution(ns, len(w)) if resolution is None else resolution
    cells = ns.cells_at(r)
    if len(w) > cells:
        raise UsageError(f"{len(w)} weights exceed M_{r} = {cells}")
    padded = np.zeros(cells, dtype=np.complex128)
    padded[: len(w)] = w
    return inverse(CoefficientVector(ns, r, padded))


def partial_sum(f: StepFunction, n: int) -> StepFunction:
    """S_n f = sum_{nu < n} fhat(nu) psi_nu; S_0 f = 0."""
    if not 0 <= n <= f.ns.cell_count:
        raise UsageError(f"partial sum order {n} outside 0..{f.ns.cell_count}")
    c = forward(f)
    cut = min(n, len(c.coeffs))
    kept = np.zeros_like(c.coeffs)
    kept[:cut] = c.coeffs[:cut]
    return inverse(CoefficientVector(f.ns, f.resolution, kept))


def fejer_mean(f: StepFunction, n: int) -> StepFunction:
    """(1/n) sum_{k=1}^{n} S_k f."""
    if not 1 <= n <= f.ns.cell_count:
        raise UsageError(f"mean order {n} outside 1..{f.ns.cell_count}")
    c = forward(f)
    out = np.zeros_like(c.coeffs)
    cut = min(n, len(c.coeffs))
    nu = np.arange(cut)
    out[:cut] = c.coeffs[:cut] * (n - nu) / n
    return inverse(CoefficientVector(f.ns, f.resolution, out))


def cesaro_mean(f: StepFunction, n: int, alpha: float, route: str = "coefficients") -> StepFunction:
    """sigma_n^{-alpha} f for 0 < alpha < 1; see the module docstring for the convention."""
    ns = f.ns
    if not 1 <= n <= ns.cell_count:
        raise UsageError(f"mean order {n} outside 1..{ns.cell_count}")
    if not 0.0 < alpha < 1.0:
        raise UsageError(f"order -alpha with alpha={alpha} outside (0, 1)")
    if route == "coefficients":
        t = binomials.cesaro_table(-alpha, n - 1)
        c = forward(f)
        out = np.zeros_like(c.coeffs)
        cut = min(n, len(c.coeffs))
        weights = t.values[n - 1 :: -1][:cut]
        out[:cut] = c.coeffs[:cut] * weights / t.a(n - 1)
        return inverse(CoefficientVector(ns, f.resolution, out))
    if route == "partial_sums":
        t0 = binomials.cesaro_table(-alpha, n - 1)
        t1 = binomials.cesaro_table(-alpha - 1, n)
        c = forward(f)
        cells = ns.cells_at(f.resolution)
        running = np.zeros(cells, dtype=np.complex128)  # S_nu f, updated in place
        acc = np.zeros(cells, dtype=np.complex128)
        chunk = 64
        for base in range(0, n, chunk):
            top = min(n, base + chunk)
            hi = min(top, cells)
            block = character_block(ns, base, hi, f.resolution) if base < cells else None
            for nu in range(base + 1, top + 1):
                if nu - 1 < cells:
                    running = running + c.coeffs[nu - 1] * block[nu - 1 - base]
                acc += t1.a(n - nu) * running
        return StepFunction(ns, f.resolution, acc / t0.a(n - 1))
    if route == "convolution":
        from .kernels import cesaro_kernel

        kernel = cesaro_kernel(ns, n, alpha, resolution=f.resolution)
        return convolve(f, kernel, strategy="fast")
    raise UsageError(f"unknown route {route!r}")


def convolve(f: StepFunction, g: StepFunction, strategy: str = "auto") -> StepFunction:
    """(f * g)(x) = integral of f(x - t) g(t) over the normalized Haar measure."""
    if f.ns != g.ns:
        raise ValidationError("operands live on different groups")
    r = max(f.resolution, g.resolution)
    ff, gg = f.lift(r), g.lift(r)
    if strategy == "auto":
        strategy = "fast"
    if strategy == "fast":
        cf, cg = forward(ff), forward(gg)
        return inverse(CoefficientVector(f.ns, r, cf.coeffs * cg.coeffs))
    if strategy == "direct":
        cells = f.ns.cells_at(r)
        if cells > _DIRECT_CONVOLUTION_CAP:
            raise UsageError(f"direct convolution capped at {_DIRECT_CONVOLUTION_CAP} cells")
        from .group import digit_matrix

        D = digit_matrix(f.ns, r)
        ms = np.array(f.ns.radix.radices[:r], dtype=np.int64)
        weights = np.array(f.ns.M[:r], dtype=np.int64)
        acc = np.zeros(cells, dtype=np.complex128)
        for t in range(cells):
            if gg.cells[t] == 0:
                continue
            idx = ((D - D[t]) % ms) @ weights
            acc += gg.cells[t] * ff.cells[idx]
        return StepFunction(f.ns, r, acc / cells)
    raise UsageError(f"unknown convolution strategy {strategy!r}")


def sup_distance(f: StepFunction, g: StepFunction) -> float:
    """Uniform distance; resolutions are aligned first."""
    if f.ns != g.ns:
        raise ValidationError("operands live on different groups")
    r = max(f.resolution, g.resolution)
    return float(np.abs(f.lift(r).cells - g.lift(r).cells).max())


def _complex_pairs(values: np.ndarray) -> list:
    return [[float(v.real), float(v.imag)] for v in values]


def _pairs_complex(pairs) -> np.ndarray:
    out = np.empty(len(pairs), dtype=np.complex128)
    for i, (re, im) in enumerate(pairs):
        out[i] = complex(re, im)
    return out


def step_to_dict(f: StepFunction) -> dict:
    return {
        "radix": list(f.ns.radix.radices),
        "resolution": f.resolution,
        "cells": _complex_pairs(f.cells),
    }


def step_from_dict(d: dict) -> StepFunction:
    ns = number_system(d["radix"])
    return StepFunction(ns, int(d["resolution"]), _pairs_complex(d["cells"]))


def coeffs_to_dict(c: CoefficientVector) -> dict:
    return {
        "radix": list(c.ns.radix.radices),
        "resolution": c.resolution,
        "coeffs": _complex_pairs(c.coeffs),
    }


def coeffs_from_dict(d: dict) -> CoefficientVector:
    ns = number_system(d["radix"])
    return CoefficientVector(ns, int(d["resolution"]), _pairs_complex(d["coeffs"]))


def dump_step(f: StepFunction) -> str:
    return json.dumps(step_to_dict(f), sort_keys=True)


def load_step(text: str) -> StepFunction:
    return step_from_dict(json.loads(text))


def dump_coeffs(c: CoefficientVector) -> str:
    return json.dumps(coeffs_to_dict(c), sort_keys=True)


def load_coeffs(text: str) -> CoefficientVector:
    return coeffs_from_dict(json.loads(text))
