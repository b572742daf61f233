"""Pydantic schemas for reports and exports."""

from .reports import (
    BoundaryExport,
    CoefficientKind,
    CoefficientTag,
    CohomologyReport,
    ComplexExport,
    ConjugationStepOut,
    CriterionResult,
    HomologyExport,
    ReduceResult,
    RepDescription,
    RepKind,
    SpectralEntry,
    SpectralPage,
    VerificationReport,
    Variety,
    WeylSummary,
)

__all__ = [
    "BoundaryExport",
    "CoefficientKind",
    "CoefficientTag",
    "CohomologyReport",
    "ComplexExport",
    "ConjugationStepOut",
    "CriterionResult",
    "HomologyExport",
    "ReduceResult",
    "RepDescription",
    "RepKind",
    "SpectralEntry",
    "SpectralPage",
    "VerificationReport",
    "Variety",
    "WeylSummary",
]
