"""q-analog counting for GL_n(F_q) and its standard parabolics."""

from dataclasses import dataclass
from functools import reduce
from operator import mul
from typing import Tuple

from sympy import Poly, Symbol

from dlcoh.core.errors import InvalidInputError
from dlcoh.weyl.elements import GeneratorSet

q_symbol = Symbol("q")


@dataclass(frozen=True)
class Composition:
    """Levi block sizes ``n_1 + ... + n_r = n``."""

    parts: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.parts or any(part < 1 for part in self.parts):
            raise InvalidInputError(f"{self.parts} is not a composition")

    @property
    def n(self) -> int:
        return sum(self.parts)

    def partial_sums(self) -> Tuple[int, ...]:
        """Dimensions of the proper subspaces of a flag of this type."""
        sums, total = [], 0
        for part in self.parts[:-1]:
            total += part
            sums.append(total)
        return tuple(sums)

    def unipotent_exponent(self) -> int:
        return sum(part * (part - 1) // 2 for part in self.parts)


def levi_composition(I: GeneratorSet, n: int) -> Composition:
    if I.n != n:
        raise InvalidInputError(f"generator set of rank {I.n} used with n={n}")
    return Composition(tuple(hi - lo + 1 for lo, hi in I.blocks()))


def group_order(n: int, q: int) -> int:
    """``|GL_n(F_q)| = q^{n(n-1)/2} prod_{i=1}^{n} (q^i - 1)``."""
    if n < 1:
        raise InvalidInputError(f"rank must be positive, got n={n}")
    return q ** (n * (n - 1) // 2) * reduce(mul, (q**i - 1 for i in range(1, n + 1)), 1)


def q_integer(k: int, q: int) -> int:
    return sum(q**j for j in range(k))


def q_factorial(k: int, q: int) -> int:
    return reduce(mul, (q_integer(j, q) for j in range(1, k + 1)), 1)


def gaussian_multinomial(parts: Tuple[int, ...], q: int) -> int:
    numerator = q_factorial(sum(parts), q)
    denominator = reduce(mul, (q_factorial(part, q) for part in parts), 1)
    return numerator // denominator


def parabolic_index(n: int, q: int, I: GeneratorSet) -> int:
    """``[GL_n(F_q) : P_I(F_q)]``, the number of flags of the type of I."""
    return gaussian_multinomial(levi_composition(I, n).parts, q)


def parabolic_order(n: int, q: int, I: GeneratorSet) -> int:
    return group_order(n, q) // parabolic_index(n, q, I)


def steinberg_dim(I: GeneratorSet, n: int, q: int) -> int:
    """Dimension of the Steinberg module of L_I, ``q^{l(w_{0,I})}``."""
    return q ** levi_composition(I, n).unipotent_exponent()


def _q_integer_poly(k: int) -> Poly:
    return Poly([1] * k, q_symbol) if k else Poly(0, q_symbol)


def _q_factorial_poly(k: int) -> Poly:
    result = Poly(1, q_symbol)
    for j in range(1, k + 1):
        result = result * _q_integer_poly(j)
    return result


def flag_point_polynomial(I: GeneratorSet, n: int) -> Poly:
    """Point count of G/P_I as a polynomial in q with nonnegative integer coefficients."""
    parts = levi_composition(I, n).parts
    denominator = Poly(1, q_symbol)
    for part in parts:
        denominator = denominator * _q_factorial_poly(part)
    return _q_factorial_poly(n).exquo(denominator)
