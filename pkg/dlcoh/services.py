"""Operations shared by the command line and the HTTP API.

Each function takes plain values, validates them, and returns a pydantic
payload; domain failures surface as ``DLCohError`` subclasses.
"""

from typing import List, Optional, Sequence, Tuple

from dlcoh.core.errors import InvalidInputError
from dlcoh.engine.cohomology import (
    canonical_sheaf_cohomology,
    compact_support_cohomology,
    etale_constant_cohomology,
    structure_sheaf_cohomology,
)
from dlcoh.engine.cross_check import cross_check
from dlcoh.groups.fields import field_for_order
from dlcoh.homology.complexes import ChainComplex, build_stseq, homology
from dlcoh.monoid.rewriting import reduce_to_coxeter
from dlcoh.monoid.words import Word
from dlcoh.schemas.reports import (
    BoundaryExport,
    CohomologyReport,
    ComplexExport,
    ConjugationStepOut,
    HomologyExport,
    ReduceResult,
    WeylSummary,
)
from dlcoh.weyl.conjugacy import cmin, gp_reduce, height
from dlcoh.weyl.elements import is_coxeter, length, reduced_words, support

COEFFICIENTS = ("structure", "canonical", "modp", "zp")
VARIETIES = ("compactified", "open")


def weyl_summary(n: int, letters: Sequence[int]) -> WeylSummary:
    w = Word.of(letters, n).element()
    reduced, chain = gp_reduce(w)
    supp = support(w)
    return WeylSummary(
        n=n,
        word=list(letters),
        one_line=list(w.images),
        length=length(w),
        support=list(supp.indices),
        height=height(w),
        in_cmin=w in cmin(w),
        is_coxeter=is_coxeter(w, supp),
        reduced_word=list(reduced_words(w)[0]),
        gp_result=list(reduced.images),
        gp_chain=[
            ConjugationStepOut(generator=s, element=list(v.images), length=length(v))
            for s, v in chain.steps
        ],
    )


def reduce_word(n: int, letters: Sequence[int], budget: Optional[int] = None) -> ReduceResult:
    trace = reduce_to_coxeter(Word.of(letters, n), budget)
    return ReduceResult(
        n=n,
        word=list(letters),
        result=list(trace.final.letters),
        steps=len(trace.steps),
        complete=trace.is_complete,
        trace=trace.to_text().splitlines(),
    )


def _coefficients(q: int, p: Optional[int], m: Optional[int]) -> Tuple[int, int]:
    return (p if p is not None else field_for_order(q).p, m if m is not None else 1)


def cohomology_report(
    n: int,
    q: int,
    letters: Sequence[int],
    coeff: str = "structure",
    variety: str = "compactified",
    p: Optional[int] = None,
    m: Optional[int] = None,
    run_cross_check: bool = False,
) -> CohomologyReport:
    if coeff not in COEFFICIENTS:
        raise InvalidInputError(f"unknown coefficients {coeff!r}; use one of {', '.join(COEFFICIENTS)}")
    if variety not in VARIETIES:
        raise InvalidInputError(f"unknown variety {variety!r}; use one of {', '.join(VARIETIES)}")
    w = Word.of(letters, n)
    if not w.letters:
        raise InvalidInputError("cohomology needs a nonempty word")
    prime, exponent = _coefficients(q, p, m)

    if coeff in ("structure", "canonical"):
        if variety == "open":
            raise InvalidInputError(f"{coeff} coefficients are reported on the compactified variety only")
        report = structure_sheaf_cohomology(w, n, q) if coeff == "structure" else canonical_sheaf_cohomology(w, n, q)
    else:
        ring_m = exponent if coeff == "modp" else None
        if variety == "open":
            report = compact_support_cohomology(w, n, q, prime, ring_m)
        else:
            report = etale_constant_cohomology(w, n, q, prime, ring_m)

    if run_cross_check:
        check_m = None if coeff == "zp" else exponent
        report.cross_checked = cross_check(w, n, q, field_for_order(q).p, check_m)
    return report


def export_complex(C: ChainComplex, with_homology: bool = False, p: Optional[int] = None, m: Optional[int] = None) -> ComplexExport:
    payload = ComplexExport(
        word=list(C.word.letters),
        n=C.n,
        q=C.q,
        ring=C.ring_tag,
        ranks=list(C.ranks),
        boundaries=[
            BoundaryExport(degree=i, rows=d.rows, cols=d.cols, triplets=list(d.triplets()))
            for i, d in enumerate(C.boundaries)
        ],
    )
    if with_homology:
        H = homology(C, p, m)
        payload.homology = HomologyExport(
            free_ranks=list(H.free_ranks),
            torsion=[list(t) for t in H.torsion],
            cokernel_rank=H.cokernel_rank,
            d0_injective=H.d0_injective,
            interior_vanishes=H.interior_vanishes(),
            modular_lengths=list(H.modular.lengths) if H.modular else None,
        )
    return payload


def build_complex(
    n: int, q: int, letters: Sequence[int], p: Optional[int] = None, m: Optional[int] = None
) -> ChainComplex:
    coefficients = (p, m if m is not None else 1) if p is not None else None
    return build_stseq(Word.of(letters, n), n, q, coefficients=coefficients)


def parse_letters(text: str) -> List[int]:
    """Comma-separated generator indices; the empty string is the identity."""
    text = text.strip().strip("[]")
    if not text:
        return []
    try:
        return [int(part) for part in text.split(",")]
    except ValueError as exc:
        raise InvalidInputError(f"malformed word {text!r}") from exc
