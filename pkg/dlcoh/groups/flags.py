"""GL_n(F_q)/P_I as canonical partial flags.

The coset ``g P_I`` is the chain of column spans of the first ``D_1 < D_2 < ...``
columns of g, where the ``D_k`` are the partial sums of the Levi composition.
Right multiplication by a block upper triangular element of P_I keeps these
spans, so the chain, stored as reduced row echelon bases, is a canonical
invariant of the coset.
"""

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from typing import Dict, Iterator, List, Optional, Tuple

from dlcoh.core.config import get_settings
from dlcoh.core.errors import BoundExceededError, InvalidInputError
from dlcoh.core.logging import get_logger
from dlcoh.weyl.elements import GeneratorSet

from .counting import levi_composition, parabolic_index
from .fields import FieldSpec, FqMatrix, field_for_order, rref_rows

logger = get_logger(__name__)

Basis = Tuple[Tuple[int, ...], ...]


def flag_dimensions(I: GeneratorSet) -> Tuple[int, ...]:
    """``{i : s_i not in I}``, the dimensions of the proper subspaces."""
    return tuple(i for i in range(1, I.n) if i not in I)


def parabolic_of_dimensions(dims: Tuple[int, ...], n: int) -> GeneratorSet:
    return GeneratorSet(tuple(i for i in range(1, n) if i not in dims), n)


@dataclass(frozen=True, order=True)
class FlagCoset:
    """A partial flag ``V_{D_1} < V_{D_2} < ... < F_q^n``, each V in RREF."""

    n: int
    q: int
    dims: Tuple[int, ...]
    subspaces: Tuple[Basis, ...]

    @property
    def parabolic(self) -> GeneratorSet:
        return parabolic_of_dimensions(self.dims, self.n)

    @property
    def flag_type(self) -> Tuple[int, ...]:
        return levi_composition(self.parabolic, self.n).parts

    def bases(self) -> List[FqMatrix]:
        field = field_for_order(self.q)
        return [FqMatrix.from_rows(field, basis, self.n) for basis in self.subspaces]

    def to_text(self) -> str:
        sep = "," if self.q > 10 else ""
        lines = ["type " + ",".join(str(part) for part in self.flag_type) + f" q={self.q}"]
        for dim, basis in zip(self.dims, self.subspaces):
            lines.append(f"dim {dim}")
            lines.extend(sep.join(str(e) for e in row) for row in basis)
        return "\n".join(lines)


def _canonical(field: FieldSpec, rows: List[List[int]], n: int) -> Basis:
    reduced, _ = rref_rows(field, rows, n)
    return tuple(tuple(row) for row in reduced)


def flag_of(g: FqMatrix, I: GeneratorSet) -> FlagCoset:
    """The canonical flag of the coset ``g P_I``."""
    n = g.rows
    if g.cols != n or I.n != n:
        raise InvalidInputError("flag_of needs a square matrix of the parabolic's rank")
    columns = g.column_lists()
    dims = flag_dimensions(I)
    subspaces = tuple(_canonical(g.field, columns[:d], n) for d in dims)
    if any(len(basis) != d for basis, d in zip(subspaces, dims)):
        raise InvalidInputError("flag_of needs an invertible matrix")
    return FlagCoset(n, g.field.q, dims, subspaces)


def _subspaces(field: FieldSpec, n: int, k: int) -> Iterator[Basis]:
    """Every k-dimensional subspace of F_q^n, by pivot pattern and free entries."""
    for pivots in combinations(range(n), k):
        free = [(r, c) for r in range(k) for c in range(pivots[r] + 1, n) if c not in pivots]
        for values in product(field.elements(), repeat=len(free)):
            rows = [[0] * n for _ in range(k)]
            for r, c in enumerate(pivots):
                rows[r][c] = 1
            for (r, c), value in zip(free, values):
                rows[r][c] = value
            yield tuple(tuple(row) for row in rows)


@lru_cache(maxsize=64)
def _grassmannian(q: int, n: int, k: int) -> Tuple[Basis, ...]:
    return tuple(_subspaces(field_for_order(q), n, k))


def _contains(field: FieldSpec, big: Basis, small: Basis, n: int) -> bool:
    reduced, _ = rref_rows(field, [list(r) for r in big] + [list(r) for r in small], n)
    return len(reduced) == len(big)


def enumerate_cosets(n: int, q: int, I: GeneratorSet, bound: Optional[int] = None) -> List[FlagCoset]:
    """All flags of the type of I, sorted canonically."""
    if I.n != n:
        raise InvalidInputError(f"generator set of rank {I.n} used with n={n}")
    limit = bound if bound is not None else get_settings().coset_bound
    expected = parabolic_index(n, q, I)
    if expected > limit:
        raise BoundExceededError(f"cosets of P_{I} in GL_{n}(F_{q})", expected, limit)
    return list(_enumerate(n, q, I.indices))


@lru_cache(maxsize=256)
def _enumerate(n: int, q: int, indices: Tuple[int, ...]) -> Tuple[FlagCoset, ...]:
    field = field_for_order(q)
    dims = flag_dimensions(GeneratorSet(indices, n))
    chains: List[Tuple[Basis, ...]] = [()]
    for d in dims:
        extended = []
        for chain in chains:
            for candidate in _grassmannian(q, n, d):
                if not chain or _contains(field, candidate, chain[-1], n):
                    extended.append(chain + (candidate,))
        chains = extended
    cosets = tuple(sorted(FlagCoset(n, q, dims, chain) for chain in chains))
    logger.debug("cosets_enumerated", n=n, q=q, parabolic=list(indices), count=len(cosets))
    return cosets


def coset_projection(x: FlagCoset, I: GeneratorSet) -> FlagCoset:
    """Forget the subspaces of x whose dimensions the coarser type of I lacks."""
    if I.n != x.n:
        raise InvalidInputError(f"generator set of rank {I.n} used with n={x.n}")
    if not x.parabolic.issubset(I):
        raise InvalidInputError(f"{x.parabolic} is not contained in {I}")
    keep = set(flag_dimensions(I))
    pairs = [(d, basis) for d, basis in zip(x.dims, x.subspaces) if d in keep]
    return FlagCoset(x.n, x.q, tuple(d for d, _ in pairs), tuple(basis for _, basis in pairs))


def coset_index(cosets: List[FlagCoset]) -> Dict[FlagCoset, int]:
    return {coset: i for i, coset in enumerate(cosets)}


def random_group_element(field: FieldSpec, n: int, rng: random.Random) -> FqMatrix:
    while True:
        g = FqMatrix(field, n, n, tuple(rng.randrange(field.q) for _ in range(n * n)))
        if g.is_invertible():
            return g


def random_parabolic_element(field: FieldSpec, I: GeneratorSet, rng: random.Random) -> FqMatrix:
    """A random element of the block upper triangular parabolic P_I."""
    n = I.n
    blocks = I.blocks()
    block_of = {}
    for b, (lo, hi) in enumerate(blocks):
        for x in range(lo, hi + 1):
            block_of[x - 1] = b
    while True:
        entries = []
        for r in range(n):
            for c in range(n):
                entries.append(rng.randrange(field.q) if block_of[r] <= block_of[c] else 0)
        p = FqMatrix(field, n, n, tuple(entries))
        if p.is_invertible():
            return p


def count_flag_stabilizer(field: FieldSpec, n: int, I: GeneratorSet) -> int:
    """Brute-force ``|P_I(F_q)|`` as the stabilizer of the standard flag; tiny cases only."""
    standard = flag_of(FqMatrix.identity(field, n), I)
    total = 0
    for entries in product(field.elements(), repeat=n * n):
        g = FqMatrix(field, n, n, tuple(entries))
        if g.is_invertible() and flag_of(g, I) == standard:
            total += 1
    return total
