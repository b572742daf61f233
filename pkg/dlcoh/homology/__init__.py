"""Chain complexes of permutation modules and their integer homology."""

from .complexes import (
    ChainComplex,
    HomologyResult,
    ModularHomology,
    build_stseq,
    cached_stseq,
    homology,
    inclusion_matrix,
    mod_pm_acyclicity,
    modular_homology,
    steinberg_cokernel,
)
from .matrices import IntMatrix, SmithForm, elementary_divisors, smith_normal_form

__all__ = [
    "ChainComplex",
    "HomologyResult",
    "IntMatrix",
    "ModularHomology",
    "SmithForm",
    "build_stseq",
    "cached_stseq",
    "elementary_divisors",
    "homology",
    "inclusion_matrix",
    "mod_pm_acyclicity",
    "modular_homology",
    "smith_normal_form",
    "steinberg_cokernel",
]
