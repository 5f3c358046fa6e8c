"""Fourier analysis on bounded Vilenkin groups.

Group and digit plumbing (group), the character system (characters), Cesaro
binomials (binomials), step functions and transforms (transform), kernels and
bound scans (kernels), oscillation functionals (oscillation), test-function
families (families), and a CLI (cli, entry point `vilenkin`).
"""

from .group import (
    GroupElement,
    NumberSystem,
    RadixSequence,
    add,
    basis_element,
    build_number_system,
    coset_index,
    coset_rep,
    digits_of,
    element_of,
    index_of,
    neg,
    number_system,
    radix_from_spec,
    scale_of,
    sub,
    truncate,
    zero,
)
from .errors import (
    ConfigurationError,
    DomainError,
    UsageError,
    ValidationError,
    VilenkinError,
)
from .characters import (
    character_block,
    character_shift_residual,
    rademacher,
    unity_gap_residual,
    vilenkin_on_cells,
    vilenkin_value,
)
from .binomials import CesaroTable, cesaro_coefficient, cesaro_table, identity_report
from .transform import (
    CoefficientVector,
    StepFunction,
    cesaro_mean,
    convolve,
    dump_coeffs,
    dump_step,
    fejer_mean,
    forward,
    inverse,
    load_coeffs,
    load_step,
    partial_sum,
    sup_distance,
    synthesize,
)
from .kernels import (
    BoundScanRecord,
    block_decomposition_residual,
    cesaro_kernel,
    coset_decay_scan,
    dirichlet,
    dirichlet_l1_ratio,
    fejer_kernel,
    low_block_ratio,
    majorant_ratio_scan,
    verify_dirichlet_recursions,
)
from .oscillation import (
    OscillationProfile,
    SeriesReport,
    YoungFunction,
    coset_oscillation,
    difference_condition,
    jensen_step_residual,
    modulus_of_continuity,
    oscillation_profile,
    oscillation_series,
    young_from_spec,
    young_oscillation_score,
    young_series,
)
from .families import family_from_spec
from . import families

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
