"""Cohomology reports, spectral pages and cross-checks."""

from .cohomology import (
    all_reports,
    canonical_sheaf_cohomology,
    compact_support_cohomology,
    etale_constant_cohomology,
    irreducible_components,
    is_affine,
    is_irreducible,
    structure_sheaf_cohomology,
)
from .spectral import spectral_pages
from .cross_check import cross_check

__all__ = [
    "all_reports",
    "canonical_sheaf_cohomology",
    "compact_support_cohomology",
    "cross_check",
    "etale_constant_cohomology",
    "irreducible_components",
    "is_affine",
    "is_irreducible",
    "spectral_pages",
    "structure_sheaf_cohomology",
]
