"""Built-in test-function families, shared by the CLI and the test suite."""

from __future__ import annotations

import numpy as np

from .errors import ConfigurationError, UsageError
from .group import NumberSystem, coset_key_table, digit_matrix
from .characters import root_table
from .transform import StepFunction, load_step


def lacunary(ns: NumberSystem, coeffs, resolution: int | None = None) -> StepFunction:
    """f = sum_k c_k Re psi_{M_k}; coordinate k contributes c_k cos(2 pi x_k / m_k)."""
    c = np.asarray(coeffs, dtype=np.float64)
    r = ns.resolution if resolution is None else resolution
    if len(c) > r:
        raise UsageError(f"{len(c)} coefficients exceed resolution {r}")
    D = digit_matrix(ns, r)
    cells = np.zeros(ns.cells_at(r), dtype=np.complex128)
    for k, ck in enumerate(c):
        if ck:
            m = ns.radix.radices[k]
            cells += ck * root_table(m)[D[:, k]].real
    return StepFunction(ns, r, cells)


def inverse_scale_coeffs(ns: NumberSystem) -> np.ndarray:
    """c_k = 1 / M_k, the standard summable lacunary profile."""
    return 1.0 / np.array(ns.M[: ns.resolution], dtype=np.float64)


def digit_indicator(ns: NumberSystem, level: int, coset: int = 0,
                    resolution: int | None = None) -> StepFunction:
    """Indicator of the coset Z_coset^(level) + I_level."""
    r = ns.resolution if resolution is None else resolution
    if not 0 <= level <= r:
        raise UsageError(f"level {level} outside 0..{r}")
    if not 0 <= coset < ns.M[level]:
        raise UsageError(f"coset {coset} outside 0..{ns.M[level] - 1}")
    key = coset_key_table(ns, r, level)
    return StepFunction(ns, r, (key == coset).astype(np.complex128))


def random_lipschitz(ns: NumberSystem, rng: np.random.Generator, bound: float = 1.0,
                     resolution: int | None = None) -> StepFunction:
    """f(x) = sum_k u_k x_k / (m_k M_k) with u_k uniform in [-bound, bound].

    Each digit change at scale k moves f by at most bound/M_k, a Lipschitz
    profile matched to the scale ladder.
    """
    r = ns.resolution if resolution is None else resolution
    u = rng.uniform(-bound, bound, size=r)
    D = digit_matrix(ns, r)
    scale = np.array([u[k] / (ns.radix.radices[k] * ns.M[k]) for k in range(r)])
    return StepFunction(ns, r, (D @ scale).astype(np.complex128))


def random_cells(ns: NumberSystem, rng: np.random.Generator,
                 resolution: int | None = None, real: bool = False) -> StepFunction:
    """Independent standard normal cells, complex unless real=True."""
    r = ns.resolution if resolution is None else resolution
    cells = rng.standard_normal(ns.cells_at(r))
    if not real:
        cells = cells + 1j * rng.standard_normal(ns.cells_at(r))
    return StepFunction(ns, r, cells.astype(np.complex128))


def from_cells(ns: NumberSystem, values, resolution: int | None = None) -> StepFunction:
    r = ns.resolution if resolution is None else resolution
    return StepFunction(ns, r, np.asarray(values, dtype=np.complex128))


def family_from_spec(ns: NumberSystem, spec: dict, rng: np.random.Generator):
    """Build (label, StepFunction) from a config fragment."""
    if not isinstance(spec, dict) or "family" not in spec:
        raise ConfigurationError(f"function spec {spec!r} needs a 'family'")
    name = spec["family"]
    if name == "lacunary":
        if spec.get("decay") == "inverse_scale":
            coeffs = inverse_scale_coeffs(ns)
            label = "lacunary-inverse_scale"
        else:
            coeffs = [float(c) for c in spec.get("coeffs", [])]
            if not coeffs:
                raise ConfigurationError("lacunary spec needs 'coeffs' or decay='inverse_scale'")
            label = "lacunary-" + ",".join(repr(c) for c in coeffs)
        return label, lacunary(ns, coeffs)
    if name == "digit_indicator":
        level = int(spec.get("level", 1))
        coset = int(spec.get("coset", 0))
        return f"digit_indicator-{level}-{coset}", digit_indicator(ns, level, coset)
    if name == "random_lipschitz":
        bound = float(spec.get("bound", 1.0))
        return f"random_lipschitz-{bound!r}", random_lipschitz(ns, rng, bound)
    if name == "file":
        path = spec.get("path")
        if not path:
            raise ConfigurationError("file spec needs a 'path'")
        with open(path, "r", encoding="utf-8") as fh:
            f = load_step(fh.read())
        if f.ns != ns:
            raise ConfigurationError(f"function in {path} lives on a different group")
        return f"file-{path}", f
    raise ConfigurationError(f"unknown function family {name!r}")
