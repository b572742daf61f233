"""Finite fields F_q and matrices over them.

Elements are integer codes ``0..q-1``: base-p digit ``i`` of a code is the
coefficient of ``x^i`` in the polynomial basis. Moduli are coefficient
tuples from the leading term down, the convention of
``sympy.polys.galoistools``.
"""

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import factorint, isprime
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p, gf_mul, gf_rem, gf_strip

from dlcoh.core.errors import InvalidInputError

TABLE_LIMIT = 256

# Conway polynomials, leading coefficient first.
DEFAULT_MODULI: Dict[int, Tuple[int, ...]] = {
    4: (1, 1, 1),
    8: (1, 0, 1, 1),
    9: (1, 2, 2),
    16: (1, 0, 0, 1, 1),
    25: (1, 4, 2),
    27: (1, 0, 2, 1),
}


@dataclass(frozen=True)
class FieldSpec:
    """F_q with q = p^m, presented as F_p[x] / (modulus)."""

    p: int
    m: int
    modulus: Tuple[int, ...] = ()

    @property
    def q(self) -> int:
        return self.p**self.m

    def __str__(self) -> str:
        return f"F_{self.q}"

    # Conversions between codes and galoistools polynomials.

    def to_poly(self, code: int) -> List[int]:
        digits = []
        while code:
            code, digit = divmod(code, self.p)
            digits.append(digit)
        return gf_strip(digits[::-1])

    def from_poly(self, poly: Sequence[int]) -> int:
        code = 0
        for coefficient in poly:
            code = code * self.p + int(coefficient) % self.p
        return code

    # Arithmetic.

    def add(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        return self._digitwise(a, b, 1)

    def sub(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a - b) % self.p
        if self.p == 2:
            return a ^ b
        return self._digitwise(a, b, -1)

    def neg(self, a: int) -> int:
        return self.sub(0, a)

    def _digitwise(self, a: int, b: int, sign: int) -> int:
        code, place = 0, 1
        while a or b:
            a, da = divmod(a, self.p)
            b, db = divmod(b, self.p)
            code += ((da + sign * db) % self.p) * place
            place *= self.p
        return code

    def mul(self, a: int, b: int) -> int:
        if self.m == 1:
            return (a * b) % self.p
        if self.q <= TABLE_LIMIT:
            return self._mul_table[a][b]
        return self._mul_poly(a, b)

    def _mul_poly(self, a: int, b: int) -> int:
        product = gf_mul(self.to_poly(a), self.to_poly(b), self.p, ZZ)
        return self.from_poly(gf_rem(product, list(self.modulus), self.p, ZZ))

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("zero has no inverse in a field")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        if self.q <= TABLE_LIMIT:
            return self._inv_table[a]
        return self._pow(a, self.q - 2)

    def _pow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    @cached_property
    def _mul_table(self) -> List[List[int]]:
        return [[self._mul_poly(a, b) for b in range(self.q)] for a in range(self.q)]

    @cached_property
    def _inv_table(self) -> List[int]:
        table = [0] * self.q
        for a in range(1, self.q):
            row = self._mul_table[a]
            table[a] = row.index(1)
        return table

    def elements(self) -> range:
        return range(self.q)

    def units(self) -> range:
        return range(1, self.q)


def build_field(p: int, m: int = 1, modulus: Optional[Sequence[int]] = None) -> FieldSpec:
    """Validate and construct F_{p^m}."""
    if not isprime(p):
        raise InvalidInputError(f"characteristic {p} is not prime")
    if m < 1:
        raise InvalidInputError(f"extension degree must be >= 1, got {m}")
    if m == 1:
        return FieldSpec(p, 1, ())

    q = p**m
    if modulus is None:
        if q not in DEFAULT_MODULI:
            raise InvalidInputError(f"no default modulus for q={q}; pass one explicitly")
        coefficients = DEFAULT_MODULI[q]
    else:
        coefficients = tuple(int(c) % p for c in modulus)
    if len(coefficients) != m + 1 or coefficients[0] != 1:
        raise InvalidInputError(f"modulus {list(coefficients)} is not monic of degree {m}")
    if not gf_irreducible_p(list(coefficients), p, ZZ):
        raise InvalidInputError(f"modulus {list(coefficients)} is reducible over F_{p}")
    return FieldSpec(p, m, coefficients)


@lru_cache(maxsize=64)
def field_for_order(q: int) -> FieldSpec:
    """The field of order q with its default modulus."""
    if q < 2:
        raise InvalidInputError(f"q={q} is not a prime power")
    factors = factorint(q)
    if len(factors) != 1:
        raise InvalidInputError(f"q={q} is not a prime power")
    ((p, m),) = factors.items()
    return build_field(int(p), int(m))


def characteristic(q: int) -> int:
    return field_for_order(q).p


# Matrices.

Rows = List[List[int]]


@dataclass(frozen=True)
class FqMatrix:
    """Row-major matrix of field codes."""

    field: FieldSpec
    rows: int
    cols: int
    entries: Tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.entries) != self.rows * self.cols:
            raise InvalidInputError(f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix")
        if any(not 0 <= e < self.field.q for e in self.entries):
            raise InvalidInputError(f"entry code outside 0..{self.field.q - 1}")

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "FqMatrix":
        width = cols if cols is not None else (len(rows[0]) if rows else 0)
        return cls(field, len(rows), width, tuple(e for row in rows for e in row))

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "FqMatrix":
        return cls.from_rows(field, [[int(i == j) for j in range(n)] for i in range(n)])

    def row_lists(self) -> Rows:
        return [list(self.entries[r * self.cols : (r + 1) * self.cols]) for r in range(self.rows)]

    def column_lists(self) -> Rows:
        return [[self.entries[r * self.cols + c] for r in range(self.rows)] for c in range(self.cols)]

    def __getitem__(self, index: Tuple[int, int]) -> int:
        r, c = index
        return self.entries[r * self.cols + c]

    def __matmul__(self, other: "FqMatrix") -> "FqMatrix":
        if self.cols != other.rows or self.field != other.field:
            raise InvalidInputError("incompatible matrices")
        f = self.field
        out = []
        columns = other.column_lists()
        for row in self.row_lists():
            for col in columns:
                total = 0
                for a, b in zip(row, col):
                    if a and b:
                        total = f.add(total, f.mul(a, b))
                out.append(total)
        return FqMatrix(f, self.rows, other.cols, tuple(out))

    def rref(self) -> Tuple["FqMatrix", Tuple[int, ...]]:
        rows, pivots = rref_rows(self.field, self.row_lists(), self.cols)
        return FqMatrix.from_rows(self.field, rows, self.cols), pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def is_invertible(self) -> bool:
        return self.rows == self.cols and self.rank() == self.rows


def rref_rows(field: FieldSpec, rows: Rows, cols: int) -> Tuple[Rows, Tuple[int, ...]]:
    """Reduced row echelon form; zero rows are dropped."""
    work = [list(r) for r in rows]
    pivots: List[int] = []
    lead = 0
    for c in range(cols):
        pivot = next((r for r in range(lead, len(work)) if work[r][c]), None)
        if pivot is None:
            continue
        work[lead], work[pivot] = work[pivot], work[lead]
        scale = field.inv(work[lead][c])
        work[lead] = [field.mul(scale, e) for e in work[lead]]
        for r in range(len(work)):
            factor = work[r][c]
            if r != lead and factor:
                work[r] = [field.sub(a, field.mul(factor, b)) for a, b in zip(work[r], work[lead])]
        pivots.append(c)
        lead += 1
        if lead == len(work):
            break
    return work[:lead], tuple(pivots)


def count_invertible_matrices(field: FieldSpec, n: int) -> int:
    """Brute-force ``|GL_n(F_q)|`` by testing every matrix; tiny cases only."""
    total = 0
    for entries in product(field.elements(), repeat=n * n):
        if FqMatrix(field, n, n, tuple(entries)).is_invertible():
            total += 1
    return total
