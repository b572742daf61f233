"""E_1 and E_2 pages of the spectral sequence of the stratification of X(w) by closed strata."""

from typing import Optional, Tuple

from dlcoh.core.errors import InvalidInputError, VerificationError
from dlcoh.core.logging import get_logger
from dlcoh.homology.complexes import cached_stseq, homology, modular_homology
from dlcoh.monoid.words import Word, subword_positions
from dlcoh.schemas.reports import SpectralEntry, SpectralPage

from .cohomology import etale_constant_cohomology

logger = get_logger(__name__)


def spectral_pages(
    w: Word, n: int, q: int, p: int, m: Optional[int] = None
) -> Tuple[SpectralPage, SpectralPage]:
    """``E_1^{i,j} = sum over subwords u of length l(w)-i of H^j(X-bar(u), Z/p^m)`` and its E_2.

    E_1 is read off the etale reports of the strata. E_2 is the homology of
    row 0, computed on the permutation-module complex; ``m=None`` means Z_p.
    """
    if not w.is_distinct:
        raise InvalidInputError(f"{w} repeats a letter; spectral pages need distinct letters")
    if not w.letters:
        raise InvalidInputError("spectral pages need a nonempty word")
    top = len(w)

    e1 = []
    for i in range(top + 1):
        column = [0] * (top + 1)
        for _, u in subword_positions(w, top - i):
            report = etale_constant_cohomology(u, n, q, p, m)
            for j in range(top + 1):
                column[j] += report.dimension(j)
        e1.extend(SpectralEntry(i=i, j=j, dimension=d) for j, d in enumerate(column))
    page1 = SpectralPage(page_index=1, entries=e1)

    complex_ = cached_stseq(w, n, q)
    if tuple(page1.row(0)) != complex_.ranks:
        raise VerificationError(f"E_1 row 0 {page1.row(0)} differs from the complex ranks {complex_.ranks}")
    if any(page1.row(j) != [0] * (top + 1) for j in range(1, top + 1)):
        raise VerificationError("E_1 has a nonzero entry off row 0")

    if m is None:
        dims = list(homology(complex_).free_ranks)
    else:
        dims = list(modular_homology(complex_, p, m).free_ranks)
    e2 = [SpectralEntry(i=i, j=0, dimension=d) for i, d in enumerate(dims)]
    e2 += [SpectralEntry(i=i, j=j, dimension=0) for j in range(1, top + 1) for i in range(top + 1)]
    page2 = SpectralPage(page_index=2, entries=e2)
    if page2.support() not in ([], [(top, 0)]):
        raise VerificationError(f"E_2 is supported on {page2.support()}, not only on ({top}, 0)")

    logger.debug("spectral_pages", word=str(w), n=n, q=q, e1_row0=page1.row(0), e2_top=page2.at(top, 0))
    return page1, page2
