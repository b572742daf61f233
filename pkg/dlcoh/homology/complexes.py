"""The complex of induced permutation modules attached to a distinct-letter word.

Degree i is the direct sum, over subwords u of length ``l(w) - i``, of the
permutation module on ``GL_n(F_q)/P_{supp(u)}``. The boundary sends u to
every subword obtained by deleting one letter; when the deleted letter is
the r-th letter of u (1-based) the block is ``(-1)^r`` times the inclusion
matrix of the two coset spaces.
"""

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, List, Optional, Tuple

from sympy import isprime, multiplicity

from dlcoh.core.config import get_settings
from dlcoh.core.errors import CoefficientError, InvalidInputError, VerificationError
from dlcoh.core.logging import get_logger
from dlcoh.groups.counting import parabolic_index, steinberg_dim
from dlcoh.groups.flags import coset_index, coset_projection, enumerate_cosets
from dlcoh.monoid.words import Word, subword_positions
from dlcoh.weyl.elements import GeneratorSet

from .matrices import IntMatrix, elementary_divisors

logger = get_logger(__name__)


def inclusion_matrix(
    n: int,
    q: int,
    I_big: GeneratorSet,
    I_small: GeneratorSet,
    bound: Optional[int] = None,
) -> IntMatrix:
    """Rows: cosets of P_{I_small}; columns: cosets of P_{I_big}; 1 where a row refines a column."""
    if not I_small.issubset(I_big):
        raise InvalidInputError(f"{I_small} is not contained in {I_big}")
    small = enumerate_cosets(n, q, I_small, bound)
    big = coset_index(enumerate_cosets(n, q, I_big, bound))
    entries = {(r, big[coset_projection(x, I_big)]): 1 for r, x in enumerate(small)}
    return IntMatrix(len(small), len(big), entries)


@dataclass(frozen=True)
class Summand:
    """One subword u of w inside a term, with its block offset."""

    positions: Tuple[int, ...]
    word: Word
    parabolic: GeneratorSet
    cosets: int
    offset: int


@dataclass(frozen=True)
class Term:
    degree: int
    summands: Tuple[Summand, ...]

    @property
    def rank(self) -> int:
        return sum(s.cosets for s in self.summands)


@dataclass(frozen=True)
class ChainComplex:
    """Cochain complex ``C_0 -> C_1 -> ... -> C_l`` with ``d_i`` of shape ``rank C_{i+1} x rank C_i``."""

    word: Word
    n: int
    q: int
    terms: Tuple[Term, ...]
    boundaries: Tuple[IntMatrix, ...]
    ring_tag: str = "Z"

    @property
    def top(self) -> int:
        return len(self.terms) - 1

    @property
    def ranks(self) -> Tuple[int, ...]:
        return tuple(t.rank for t in self.terms)

    @cached_property
    def boundary_divisors(self) -> Tuple[Tuple[int, ...], ...]:
        return tuple(elementary_divisors(d) for d in self.boundaries)

    def squares_to_zero(self) -> bool:
        return all((b @ a).is_zero() for a, b in zip(self.boundaries, self.boundaries[1:]))

    def euler_characteristic(self) -> int:
        return sum((-1) ** i * r for i, r in enumerate(self.ranks))

    def to_text(self) -> str:
        lines = [f"# complex word={self.word} n={self.n} q={self.q} ring={self.ring_tag}", "degree rank"]
        lines.extend(f"{i} {r}" for i, r in enumerate(self.ranks))
        for i, d in enumerate(self.boundaries):
            lines.append(f"d {i} {d.rows} {d.cols}")
            lines.extend(f"{r} {c} {v}" for r, c, v in d.triplets())
        return "\n".join(lines)


def ring_tag(p: Optional[int] = None, m: Optional[int] = None) -> str:
    if p is None:
        return "Z"
    return f"Z/{p}^{m}"


def check_coefficients(p: int, m: int) -> None:
    if not isprime(p):
        raise CoefficientError(f"coefficient prime p={p} is not prime")
    if m < 1:
        raise CoefficientError(f"coefficient exponent m={m} must be >= 1")


def build_stseq(
    w: Word,
    n: int,
    q: int,
    bound: Optional[int] = None,
    signs: bool = True,
    verify: bool = True,
    coefficients: Optional[Tuple[int, int]] = None,
) -> ChainComplex:
    """Assemble the complex of w and certify ``d o d = 0``."""
    if w.n != n:
        raise InvalidInputError(f"word of rank {w.n} used with n={n}")
    if not w.letters:
        raise InvalidInputError("the complex needs a nonempty word")
    if not w.is_distinct:
        raise InvalidInputError(f"{w} repeats a letter; reduce it to distinct letters first")
    if coefficients is not None:
        check_coefficients(*coefficients)

    top = len(w)
    terms = []
    lookup: Dict[Tuple[int, ...], Summand] = {}
    for degree in range(top + 1):
        summands = []
        offset = 0
        for positions, u in subword_positions(w, top - degree):
            count = len(enumerate_cosets(n, q, u.support, bound))
            summand = Summand(positions, u, u.support, count, offset)
            summands.append(summand)
            lookup[positions] = summand
            offset += count
        terms.append(Term(degree, tuple(summands)))

    boundaries = []
    for degree in range(top):
        entries: Dict[Tuple[int, int], int] = {}
        for source in terms[degree].summands:
            for r in range(1, len(source.positions) + 1):
                target = lookup[source.positions[: r - 1] + source.positions[r:]]
                sign = (-1) ** r if signs else 1
                block = inclusion_matrix(n, q, source.parabolic, target.parabolic, bound)
                for (row, col), v in block.entries.items():
                    entries[(target.offset + row, source.offset + col)] = sign * v
        boundaries.append(IntMatrix(terms[degree + 1].rank, terms[degree].rank, entries))

    complex_ = ChainComplex(
        word=w,
        n=n,
        q=q,
        terms=tuple(terms),
        boundaries=tuple(boundaries),
        ring_tag=ring_tag(*coefficients) if coefficients else "Z",
    )
    if verify and not complex_.squares_to_zero():
        raise VerificationError(f"d o d != 0 for the complex of {w}")
    logger.debug("complex_built", word=str(w), n=n, q=q, ranks=list(complex_.ranks))
    return complex_


def cached_stseq(w: Word, n: int, q: int, bound: Optional[int] = None) -> ChainComplex:
    """Memoised ``build_stseq``; the effective coset bound is part of the key."""
    return _stseq(w, n, q, bound if bound is not None else get_settings().coset_bound)


@lru_cache(maxsize=128)
def _stseq(w: Word, n: int, q: int, bound: int) -> ChainComplex:
    return build_stseq(w, n, q, bound)


@dataclass(frozen=True)
class ModularHomology:
    """Homology over Z/p^m, as lengths (log_p of the orders) per degree."""

    p: int
    m: int
    lengths: Tuple[int, ...]

    @property
    def free_ranks(self) -> Tuple[int, ...]:
        return tuple(length // self.m for length in self.lengths)


@dataclass(frozen=True)
class HomologyResult:
    ranks: Tuple[int, ...]
    free_ranks: Tuple[int, ...]
    torsion: Tuple[Tuple[int, ...], ...]
    boundary_divisors: Tuple[Tuple[int, ...], ...]
    modular: Optional[ModularHomology] = None

    @property
    def top(self) -> int:
        return len(self.ranks) - 1

    @property
    def cokernel_rank(self) -> int:
        return self.free_ranks[-1]

    @property
    def d0_injective(self) -> bool:
        return not self.boundary_divisors or len(self.boundary_divisors[0]) == self.ranks[0]

    def interior_vanishes(self) -> bool:
        """Zero homology below the top degree, and no torsion there."""
        return all(f == 0 for f in self.free_ranks[:-1]) and not any(self.torsion[:-1])


def _image_length(divisors: Tuple[int, ...], p: int, m: int) -> int:
    return sum(m - min(multiplicity(p, e), m) for e in divisors)


def modular_homology(C: ChainComplex, p: int, m: int) -> ModularHomology:
    """Homology lengths over Z/p^m from the integer elementary divisors."""
    check_coefficients(p, m)
    images = [_image_length(d, p, m) for d in C.boundary_divisors]
    lengths = []
    for i, rank in enumerate(C.ranks):
        kernel = m * rank - (images[i] if i < len(images) else 0)
        incoming = images[i - 1] if i > 0 else 0
        lengths.append(kernel - incoming)
    return ModularHomology(p, m, tuple(lengths))


def homology(C: ChainComplex, p: Optional[int] = None, m: Optional[int] = None) -> HomologyResult:
    """Integer homology, plus Z/p^m lengths when ``p`` and ``m`` are given."""
    divisors = C.boundary_divisors
    free, torsion = [], []
    for i, rank in enumerate(C.ranks):
        outgoing = len(divisors[i]) if i < len(divisors) else 0
        incoming = divisors[i - 1] if i > 0 else ()
        free.append(rank - outgoing - len(incoming))
        torsion.append(tuple(e for e in incoming if e > 1))
    modular = modular_homology(C, p, m) if p is not None and m is not None else None
    return HomologyResult(
        ranks=C.ranks,
        free_ranks=tuple(free),
        torsion=tuple(torsion),
        boundary_divisors=divisors,
        modular=modular,
    )


def steinberg_cokernel(w: Word, n: int, q: int) -> Tuple[int, bool]:
    """Rank of the top cokernel and whether it equals ``[G:P_I] * St_{L_I}``, I = supp(w)."""
    result = homology(cached_stseq(w, n, q))
    dimension = result.cokernel_rank
    expected = parabolic_index(n, q, w.support) * steinberg_dim(w.support, n, q)
    return dimension, dimension == expected and not result.torsion[-1]


def mod_pm_acyclicity(w: Word, n: int, q: int, p: int, m: int) -> bool:
    """Below the top degree the complex stays exact over Z/p^m."""
    modular = modular_homology(cached_stseq(w, n, q), p, m)
    return all(length == 0 for length in modular.lengths[:-1])
