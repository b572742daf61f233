"""Report schemas shared by the engine, the CLI and the HTTP API."""

from enum import Enum
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field


class CoefficientKind(str, Enum):
    STRUCTURE_SHEAF = "STRUCTURE_SHEAF"
    MOD_P_M = "MOD_P^M"
    Z_P = "Z_P"
    CANONICAL_SHEAF = "CANONICAL_SHEAF"


class RepKind(str, Enum):
    INDUCED_TRIVIAL = "INDUCED_TRIVIAL"
    INDUCED_STEINBERG = "INDUCED_STEINBERG"
    ZERO = "ZERO"


class Variety(str, Enum):
    COMPACTIFIED = "COMPACTIFIED"
    OPEN_COMPACT_SUPPORT = "OPEN_COMPACT_SUPPORT"


class CoefficientTag(BaseModel):
    """Coefficient system of a cohomology report."""

    kind: CoefficientKind
    p: Optional[int] = Field(default=None, description="Characteristic of the coefficients")
    m: Optional[int] = Field(default=None, ge=1, description="Exponent for Z/p^m")


class RepDescription(BaseModel):
    """A GL_n(F_q)-module described by its induction shape and free rank."""

    kind: RepKind
    parabolic: List[int] = Field(default_factory=list)
    dimension: int = Field(default=0, ge=0)


class CohomologyReport(BaseModel):
    """Cohomology of a (compactified) Deligne-Lusztig variety, degree by degree."""

    variety: Variety
    word: List[int]
    n: int
    q: int
    coefficients: CoefficientTag
    entries: Dict[int, RepDescription]
    cross_checked: bool = False
    affine: Optional[bool] = Field(default=None, description="X(w) known to be affine; None when no criterion applies")
    trace: Optional[List[str]] = None
    notes: List[str] = Field(default_factory=list)

    def nonzero_degrees(self) -> List[int]:
        return sorted(k for k, rep in self.entries.items() if rep.kind != RepKind.ZERO)

    def dimension(self, degree: int) -> int:
        rep = self.entries.get(degree)
        return rep.dimension if rep is not None else 0


class SpectralEntry(BaseModel):
    i: int
    j: int
    dimension: int


class SpectralPage(BaseModel):
    """One page of the stratification spectral sequence."""

    page_index: int = Field(ge=1, le=2)
    entries: List[SpectralEntry] = Field(default_factory=list)

    def at(self, i: int, j: int) -> int:
        for entry in self.entries:
            if entry.i == i and entry.j == j:
                return entry.dimension
        return 0

    def row(self, j: int) -> List[int]:
        width = max((e.i for e in self.entries), default=-1) + 1
        return [self.at(i, j) for i in range(width)]

    def support(self) -> List[Tuple[int, int]]:
        return sorted((e.i, e.j) for e in self.entries if e.dimension)


class ConjugationStepOut(BaseModel):
    generator: int
    element: List[int]
    length: int


class WeylSummary(BaseModel):
    """Everything the weyl command reports about one element."""

    n: int
    word: List[int]
    one_line: List[int]
    length: int
    support: List[int]
    height: int
    in_cmin: bool
    is_coxeter: bool
    reduced_word: List[int]
    gp_result: List[int]
    gp_chain: List[ConjugationStepOut]


class ReduceResult(BaseModel):
    n: int
    word: List[int]
    result: List[int]
    steps: int
    complete: bool
    trace: List[str]


class BoundaryExport(BaseModel):
    degree: int
    rows: int
    cols: int
    triplets: List[Tuple[int, int, int]]


class HomologyExport(BaseModel):
    free_ranks: List[int]
    torsion: List[List[int]]
    cokernel_rank: int
    d0_injective: bool
    interior_vanishes: bool
    modular_lengths: Optional[List[int]] = None


class ComplexExport(BaseModel):
    """JSON mirror of the text complex format."""

    word: List[int]
    n: int
    q: int
    ring: str
    ranks: List[int]
    boundaries: List[BoundaryExport]
    homology: Optional[HomologyExport] = None


class CriterionResult(BaseModel):
    name: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0


class VerificationReport(BaseModel):
    scale: str
    criteria: List[CriterionResult] = Field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.criteria) and all(c.passed for c in self.criteria)

    def to_table(self) -> str:
        width = max((len(c.name) for c in self.criteria), default=4)
        lines = [f"{'criterion'.ljust(width)}  result  seconds  detail"]
        for c in self.criteria:
            status = "PASS" if c.passed else "FAIL"
            lines.append(f"{c.name.ljust(width)}  {status:6}  {c.seconds:7.2f}  {c.detail}")
        return "\n".join(lines)
