"""Sparse integer matrices and Smith normal form.

``smith_normal_form`` hands the whole matrix to sympy's decomposition and
keeps the transforms, ``S * M * T = D``. ``elementary_divisors`` is the sparse
route for large boundaries: it eliminates unit pivots in Markowitz order and
gives whatever is left to sympy's invariant factors.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors, smith_normal_decomp

from dlcoh.core.errors import InvalidInputError, VerificationError
from dlcoh.core.logging import get_logger

logger = get_logger(__name__)

Dense = List[List[int]]


@dataclass(frozen=True)
class IntMatrix:
    """Arbitrary-precision integer matrix stored as ``{(row, col): value}``, zeros omitted."""

    rows: int
    cols: int
    entries: Dict[Tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise InvalidInputError(f"negative dimensions {self.rows}x{self.cols}")
        for (r, c), v in self.entries.items():
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise InvalidInputError(f"entry ({r}, {c}) outside {self.rows}x{self.cols}")
            if v == 0:
                raise InvalidInputError(f"explicit zero stored at ({r}, {c})")

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "IntMatrix":
        width = cols if cols is not None else (len(rows[0]) if rows else 0)
        entries = {(r, c): int(v) for r, row in enumerate(rows) for c, v in enumerate(row) if v}
        return cls(len(rows), width, entries)

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    def to_dense(self) -> Dense:
        dense = [[0] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            dense[r][c] = v
        return dense

    def triplets(self) -> Iterator[Tuple[int, int, int]]:
        for (r, c) in sorted(self.entries):
            yield r, c, self.entries[(r, c)]

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise InvalidInputError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        by_row: Dict[int, List[Tuple[int, int]]] = {}
        for (r, c), v in other.entries.items():
            by_row.setdefault(r, []).append((c, v))
        out: Dict[Tuple[int, int], int] = {}
        for (r, k), a in self.entries.items():
            for c, b in by_row.get(k, ()):
                out[(r, c)] = out.get((r, c), 0) + a * b
        return IntMatrix(self.rows, other.cols, {key: v for key, v in out.items() if v})

    def column_sums(self) -> List[int]:
        sums = [0] * self.cols
        for (_, c), v in self.entries.items():
            sums[c] += v
        return sums

    def to_domain(self) -> DomainMatrix:
        return _domain(self.to_dense(), self.rows, self.cols)


@dataclass(frozen=True)
class SmithForm:
    """``S * M * T = D`` with S, T unimodular and D diagonal, ``d_1 | d_2 | ...``."""

    divisors: Tuple[int, ...]
    S: IntMatrix
    D: IntMatrix
    T: IntMatrix

    @property
    def rank(self) -> int:
        return len(self.divisors)


def _domain(dense: Dense, rows: int, cols: int) -> DomainMatrix:
    return DomainMatrix([[ZZ(v) for v in row] for row in dense], (rows, cols), ZZ)


def _from_domain(m: DomainMatrix) -> IntMatrix:
    rows, cols = m.shape
    if not rows:
        return IntMatrix(0, cols)
    return IntMatrix.from_dense([[int(v) for v in row] for row in m.to_list()], cols)


def _chain(factors: Iterable[int]) -> Tuple[int, ...]:
    return tuple(abs(int(d)) for d in factors if d)


def smith_normal_form(M: IntMatrix, verify: bool = True) -> SmithForm:
    """Smith normal form with unimodular transforms, ``S * M * T = D``."""
    if M.is_zero():
        identity_rows, identity_cols = IntMatrix.identity(M.rows), IntMatrix.identity(M.cols)
        return SmithForm((), identity_rows, IntMatrix(M.rows, M.cols), identity_cols)
    smf, s, t = smith_normal_decomp(M.to_domain())
    D = _from_domain(smf)
    form = SmithForm(
        divisors=_chain(D.entries.get((i, i), 0) for i in range(min(M.rows, M.cols))),
        S=_from_domain(s),
        D=D,
        T=_from_domain(t),
    )
    if verify:
        if form.S @ M @ form.T != D:
            raise VerificationError("Smith transforms do not carry the input to its diagonal form")
        if any(key[0] != key[1] for key in D.entries):
            raise VerificationError("Smith form has an off-diagonal entry")
        if any(b % a for a, b in zip(form.divisors, form.divisors[1:])):
            raise VerificationError(f"divisor chain {form.divisors} is not a divisibility chain")
    return form


def elementary_divisors(M: IntMatrix) -> Tuple[int, ...]:
    """Nonzero invariant factors of M, without transforms."""
    rows: Dict[int, Dict[int, int]] = {}
    columns: Dict[int, Set[int]] = {}
    for (r, c), v in M.entries.items():
        rows.setdefault(r, {})[c] = v
        columns.setdefault(c, set()).add(r)

    units = 0
    while True:
        pivot = _markowitz_pivot(rows, columns)
        if pivot is None:
            break
        pr, pc = pivot
        prow = rows.pop(pr)
        sign = prow[pc]
        for c in prow:
            columns[c].discard(pr)
        for r in list(columns[pc]):
            row = rows[r]
            factor = row[pc] * sign
            for c, v in prow.items():
                updated = row.get(c, 0) - factor * v
                if updated:
                    if c not in row:
                        columns.setdefault(c, set()).add(r)
                    row[c] = updated
                else:
                    row.pop(c, None)
                    columns[c].discard(r)
            if not row:
                del rows[r]
        del columns[pc]
        units += 1

    residual_rows = sorted(r for r, row in rows.items() if row)
    residual_cols = sorted({c for row in rows.values() for c in row})
    residual: Tuple[int, ...] = ()
    if residual_rows:
        col_at = {c: i for i, c in enumerate(residual_cols)}
        dense = [[0] * len(residual_cols) for _ in residual_rows]
        for i, r in enumerate(residual_rows):
            for c, v in rows[r].items():
                dense[i][col_at[c]] = v
        residual = _chain(invariant_factors(_domain(dense, len(residual_rows), len(residual_cols))))
    logger.debug(
        "elementary_divisors",
        shape=(M.rows, M.cols),
        nnz=M.nnz,
        unit_pivots=units,
        residual=(len(residual_rows), len(residual_cols)),
    )
    return (1,) * units + residual


def _markowitz_pivot(
    rows: Dict[int, Dict[int, int]], columns: Dict[int, Set[int]]
) -> Optional[Tuple[int, int]]:
    """A unit entry in a shortest row, taken from its sparsest column."""
    best: Optional[Tuple[int, int]] = None
    best_cost: Optional[Tuple[int, int]] = None
    for r, row in rows.items():
        if best_cost is not None and len(row) > best_cost[0]:
            continue
        for c, v in row.items():
            if v in (1, -1):
                cost = (len(row), len(columns[c]))
                if best_cost is None or cost < best_cost:
                    best, best_cost = (r, c), cost
    return best


def rank(M: IntMatrix) -> int:
    return len(elementary_divisors(M))
