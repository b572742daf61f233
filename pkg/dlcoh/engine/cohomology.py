"""Cohomology reports for words in the free monoid.

For I = supp(w) and P_I the standard parabolic:

* compactified variety, structure sheaf (and constant Z/p^m, Z_p with p the
  characteristic): ``ind_{P_I}^{G} 1`` in degree 0, zero above;
* canonical sheaf: ``ind_{P_I}^{G} 1`` in the top degree l(w) only;
* open variety, compact support, Z/p^m or Z_p: ``ind_{P_I}^{G} St_{L_I}`` in
  degree l(w) only.

Here l(w) is the length of w in the free monoid, so non-reduced words keep
their top degree. Repeated-letter words are reduced first and the trace is
attached to the report.
"""

from typing import Dict, List, Optional, Tuple

from dlcoh.core.errors import CoefficientError, InvalidInputError
from dlcoh.core.logging import get_logger
from dlcoh.groups.counting import parabolic_index, steinberg_dim
from dlcoh.groups.fields import field_for_order
from dlcoh.monoid.rewriting import RewriteTrace, reduce_to_coxeter
from dlcoh.monoid.words import Word
from dlcoh.schemas.reports import (
    CoefficientKind,
    CoefficientTag,
    CohomologyReport,
    RepDescription,
    RepKind,
    Variety,
)
from dlcoh.weyl.elements import GeneratorSet, coxeter_number, is_coxeter

logger = get_logger(__name__)

WITT_NOTE = (
    "H^0 of the Witt vector sheaf W_m(O) is induced from P_I with coefficients "
    "W_m(F_p-bar); its rank equals the Z/p^m rank above and is not computed separately"
)
ZP_NOTE = "Z_p ranks are the ranks shared by every Z/p^m (inverse limit not materialized)"


def _check_word(w: Word, n: int, allow_empty: bool = False) -> None:
    if w.n != n:
        raise InvalidInputError(f"word of rank {w.n} used with n={n}")
    if not w.letters and not allow_empty:
        raise InvalidInputError("cohomology needs a nonempty word")


def _check_etale(q: int, p: int, m: Optional[int]) -> CoefficientTag:
    char = field_for_order(q).p
    if p != char:
        raise CoefficientError(f"coefficients Z/{p}^m need p = char(F_{q}) = {char}")
    if m is None:
        return CoefficientTag(kind=CoefficientKind.Z_P, p=p)
    if m < 1:
        raise CoefficientError(f"coefficient exponent m={m} must be >= 1")
    return CoefficientTag(kind=CoefficientKind.MOD_P_M, p=p, m=m)


def _trace_for(w: Word) -> Optional[RewriteTrace]:
    if w.is_distinct:
        return None
    return reduce_to_coxeter(w)


def _induced_trivial(I: GeneratorSet, n: int, q: int) -> RepDescription:
    return RepDescription(
        kind=RepKind.INDUCED_TRIVIAL,
        parabolic=list(I.indices),
        dimension=parabolic_index(n, q, I),
    )


def _induced_steinberg(I: GeneratorSet, n: int, q: int) -> RepDescription:
    return RepDescription(
        kind=RepKind.INDUCED_STEINBERG,
        parabolic=list(I.indices),
        dimension=parabolic_index(n, q, I) * steinberg_dim(I, n, q),
    )


def _concentrated(top: int, degree: int, rep: RepDescription) -> Dict[int, RepDescription]:
    return {k: rep if k == degree else RepDescription(kind=RepKind.ZERO) for k in range(top + 1)}


def _report(
    variety: Variety,
    w: Word,
    q: int,
    coefficients: CoefficientTag,
    entries: Dict[int, RepDescription],
    trace: Optional[RewriteTrace] = None,
    notes: Tuple[str, ...] = (),
) -> CohomologyReport:
    report = CohomologyReport(
        variety=variety,
        word=list(w.letters),
        n=w.n,
        q=q,
        coefficients=coefficients,
        entries=entries,
        affine=is_affine(w, w.n, q),
        trace=trace.to_text().splitlines() if trace is not None else None,
        notes=list(notes),
    )
    logger.info(
        "cohomology_report",
        variety=variety.value,
        coefficients=coefficients.kind.value,
        word=str(w),
        n=w.n,
        q=q,
        nonzero=report.nonzero_degrees(),
    )
    return report


def structure_sheaf_cohomology(w: Word, n: int, q: int) -> CohomologyReport:
    """``H^k(X-bar(w), O)``: induced trivial in degree 0, zero above."""
    _check_word(w, n)
    trace = _trace_for(w)
    tag = CoefficientTag(kind=CoefficientKind.STRUCTURE_SHEAF, p=field_for_order(q).p)
    entries = _concentrated(len(w), 0, _induced_trivial(w.support, n, q))
    return _report(Variety.COMPACTIFIED, w, q, tag, entries, trace)


def etale_constant_cohomology(w: Word, n: int, q: int, p: int, m: Optional[int] = None) -> CohomologyReport:
    """``H^k_et(X-bar(w), Z/p^m)`` (``m=None`` for Z_p); the empty word is the finite set G/B."""
    _check_word(w, n, allow_empty=True)
    tag = _check_etale(q, p, m)
    trace = _trace_for(w) if w.letters else None
    entries = _concentrated(len(w), 0, _induced_trivial(w.support, n, q))
    notes = (WITT_NOTE,) if m is not None else (ZP_NOTE,)
    return _report(Variety.COMPACTIFIED, w, q, tag, entries, trace, notes)


def compact_support_cohomology(w: Word, n: int, q: int, p: int, m: Optional[int] = None) -> CohomologyReport:
    """``H^k_c(X(w), Z/p^m)``: induced Steinberg in degree l(w), zero elsewhere."""
    _check_word(w, n)
    tag = _check_etale(q, p, m)
    trace = _trace_for(w)
    entries = _concentrated(len(w), len(w), _induced_steinberg(w.support, n, q))
    notes = (ZP_NOTE,) if m is None else ()
    return _report(Variety.OPEN_COMPACT_SUPPORT, w, q, tag, entries, trace, notes)


def canonical_sheaf_cohomology(w: Word, n: int, q: int) -> CohomologyReport:
    """``H^k(X-bar(w), Omega^{l(w)})``, Serre dual to the structure sheaf."""
    _check_word(w, n)
    trace = _trace_for(w)
    tag = CoefficientTag(kind=CoefficientKind.CANONICAL_SHEAF, p=field_for_order(q).p)
    entries = _concentrated(len(w), len(w), _induced_trivial(w.support, n, q))
    return _report(Variety.COMPACTIFIED, w, q, tag, entries, trace)


def is_affine(w: Word, n: int, q: int) -> Optional[bool]:
    """Whether X(w) is known to be affine.

    True when w is a reduced word and either q exceeds the Coxeter number of
    S_n or w is a Coxeter element of its support. None when neither criterion
    applies; the variety may still be affine.
    """
    _check_word(w, n, allow_empty=True)
    if not w.is_reduced():
        return None
    if q > coxeter_number(n) or is_coxeter(w.element(), w.support):
        return True
    return None


def irreducible_components(w: Word, n: int, q: int) -> int:
    """Number of irreducible components of X-bar(w), ``[G : P_{supp(w)}]``."""
    _check_word(w, n)
    return parabolic_index(n, q, w.support)


def is_irreducible(w: Word, n: int) -> bool:
    _check_word(w, n)
    return w.support == GeneratorSet.full(n)


def all_reports(w: Word, n: int, q: int, ms: Tuple[int, ...] = (1, 2, 3)) -> List[CohomologyReport]:
    """Every report kind for w, with each Z/p^m in ``ms`` and Z_p."""
    p = field_for_order(q).p
    reports = [structure_sheaf_cohomology(w, n, q), canonical_sheaf_cohomology(w, n, q)]
    for m in (*ms, None):
        reports.append(etale_constant_cohomology(w, n, q, p, m))
        reports.append(compact_support_cohomology(w, n, q, p, m))
    return reports
