"""The symmetric group S_n as a Coxeter system of type A_{n-1}.

Elements are permutations in one-line notation. Products compose right to
left, ``(u * v)(x) = u(v(x))``, so right multiplication by ``s_i`` swaps
positions ``i, i+1`` and left multiplication swaps the values ``i, i+1``.
The word ``s_1 s_2 s_1`` is the one-line permutation ``(3, 2, 1)``.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Iterator, List, Sequence, Tuple

from dlcoh.core.errors import InvalidInputError


@dataclass(frozen=True)
class GeneratorSet:
    """A subset I of the simple reflections {s_1, ..., s_{n-1}}."""

    indices: Tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidInputError(f"rank must be positive, got n={self.n}")
        ordered = tuple(sorted(self.indices))
        if len(set(ordered)) != len(ordered):
            raise InvalidInputError(f"duplicate generator indices in {list(self.indices)}")
        for i in ordered:
            if not 1 <= i <= self.n - 1:
                raise InvalidInputError(f"generator index {i} outside 1..{self.n - 1}")
        object.__setattr__(self, "indices", ordered)

    @classmethod
    def of(cls, indices: Iterable[int], n: int) -> "GeneratorSet":
        return cls(tuple(sorted(set(indices))), n)

    @classmethod
    def full(cls, n: int) -> "GeneratorSet":
        return cls(tuple(range(1, n)), n)

    @classmethod
    def empty(cls, n: int) -> "GeneratorSet":
        return cls((), n)

    def __contains__(self, i: object) -> bool:
        return i in self.indices

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)

    def __len__(self) -> int:
        return len(self.indices)

    def issubset(self, other: "GeneratorSet") -> bool:
        _same_rank(self.n, other.n)
        return set(self.indices) <= set(other.indices)

    def blocks(self) -> List[Tuple[int, int]]:
        """Levi blocks as inclusive ranges of {1..n}, left to right.

        A maximal run ``i, i+1, ..., j`` of indices in I covers ``i..j+1``;
        every point not covered is a block of size one.
        """
        result: List[Tuple[int, int]] = []
        start = 1
        for k in range(1, self.n):
            if k not in self.indices:
                result.append((start, k))
                start = k + 1
        result.append((start, self.n))
        return result

    def __str__(self) -> str:
        return "{" + ",".join(str(i) for i in self.indices) + "}"


@dataclass(frozen=True)
class WeylElement:
    """A permutation of {1..n} in one-line notation."""

    images: Tuple[int, ...]

    def __post_init__(self) -> None:
        images = tuple(self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise InvalidInputError(f"{list(images)} is not a permutation of 1..{len(images)}")
        object.__setattr__(self, "images", images)

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "WeylElement":
        if n < 1:
            raise InvalidInputError(f"rank must be positive, got n={n}")
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def generator(cls, i: int, n: int) -> "WeylElement":
        if not 1 <= i <= n - 1:
            raise InvalidInputError(f"generator index {i} outside 1..{n - 1}")
        return cls.identity(n).right_mul(i)

    @classmethod
    def from_word(cls, letters: Sequence[int], n: int) -> "WeylElement":
        """The product ``s_{a_1} s_{a_2} ... s_{a_k}``."""
        w = cls.identity(n)
        for a in letters:
            if not 1 <= a <= n - 1:
                raise InvalidInputError(f"generator index {a} outside 1..{n - 1}")
            w = w.right_mul(a)
        return w

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        _same_rank(self.n, other.n)
        return WeylElement(tuple(self.images[x - 1] for x in other.images))

    def inverse(self) -> "WeylElement":
        inv = [0] * self.n
        for position, value in enumerate(self.images, start=1):
            inv[value - 1] = position
        return WeylElement(tuple(inv))

    def right_mul(self, i: int) -> "WeylElement":
        images = list(self.images)
        images[i - 1], images[i] = images[i], images[i - 1]
        return WeylElement(tuple(images))

    def left_mul(self, i: int) -> "WeylElement":
        swap = {i: i + 1, i + 1: i}
        return WeylElement(tuple(swap.get(x, x) for x in self.images))

    def conjugate(self, i: int) -> "WeylElement":
        """``s_i * w * s_i``."""
        return self.left_mul(i).right_mul(i)

    def has_right_descent(self, i: int) -> bool:
        return self.images[i - 1] > self.images[i]

    def cycle_type(self) -> Tuple[int, ...]:
        seen = [False] * self.n
        parts = []
        for start in range(self.n):
            if seen[start]:
                continue
            size, x = 0, start
            while not seen[x]:
                seen[x] = True
                x = self.images[x] - 1
                size += 1
            parts.append(size)
        return tuple(sorted(parts, reverse=True))

    def __str__(self) -> str:
        return "(" + ",".join(str(x) for x in self.images) + ")"


def _same_rank(a: int, b: int) -> None:
    if a != b:
        raise InvalidInputError(f"rank mismatch: n={a} vs n={b}")


def length(w: WeylElement) -> int:
    """Bruhat length, the inversion count of the one-line notation."""
    images = w.images
    return sum(
        1
        for a in range(len(images))
        for b in range(a + 1, len(images))
        if images[a] > images[b]
    )


def bruhat_leq(u: WeylElement, v: WeylElement) -> bool:
    """Bruhat order via the tableau criterion.

    ``u <= v`` iff for every k the sorted prefix ``u(1..k)`` is dominated
    entrywise by the sorted prefix ``v(1..k)``. This agrees with the subword
    criterion on reduced words (see ``bruhat_leq_subword``).
    """
    _same_rank(u.n, v.n)
    for k in range(1, u.n):
        pu = sorted(u.images[:k])
        pv = sorted(v.images[:k])
        if any(a > b for a, b in zip(pu, pv)):
            return False
    return True


def bruhat_leq_subword(u: WeylElement, v: WeylElement) -> bool:
    """Subword criterion: some reduced word of v contains a reduced word of u."""
    _same_rank(u.n, v.n)
    target = length(u)
    if target > length(v):
        return False
    word = reduced_words(v)[0]
    # Any single reduced word of v suffices for the subword property.
    return _has_subword_product(word, u, v.n)


def _has_subword_product(word: Tuple[int, ...], u: WeylElement, n: int) -> bool:
    reachable = {WeylElement.identity(n)}
    for letter in word:
        reachable |= {x.right_mul(letter) for x in reachable}
    return u in reachable


def support(w: WeylElement) -> GeneratorSet:
    """Generators below w: ``i`` is in the support iff ``max(w(1..i)) > i``."""
    running = 0
    indices = []
    for i in range(1, w.n):
        running = max(running, w.images[i - 1])
        if running > i:
            indices.append(i)
    return GeneratorSet(tuple(indices), w.n)


def in_parabolic(w: WeylElement, I: GeneratorSet) -> bool:
    return support(w).issubset(I)


def is_coxeter(w: WeylElement, I: GeneratorSet) -> bool:
    """True iff w has a reduced word using each generator of I exactly once."""
    if not in_parabolic(w, I):
        raise InvalidInputError(f"{w} is not in the parabolic subgroup W_{I}")
    return support(w) == I and length(w) == len(I)


@lru_cache(maxsize=4096)
def reduced_words(w: WeylElement) -> Tuple[Tuple[int, ...], ...]:
    """All reduced expressions of w in lexicographic order."""
    if length(w) == 0:
        return ((),)
    words: List[Tuple[int, ...]] = []
    for i in range(1, w.n):
        if w.has_right_descent(i):
            words.extend(prefix + (i,) for prefix in reduced_words(w.right_mul(i)))
    return tuple(sorted(words))


def coxeter_element(I: GeneratorSet) -> WeylElement:
    """The standard Coxeter element ``s_{i_1} ... s_{i_k}`` with increasing indices."""
    return WeylElement.from_word(I.indices, I.n)


def longest_element(I: GeneratorSet, n: int) -> WeylElement:
    """The longest element of W_I: every Levi block reversed."""
    if I.n != n:
        raise InvalidInputError(f"generator set of rank {I.n} used with n={n}")
    images: List[int] = []
    for lo, hi in I.blocks():
        images.extend(range(hi, lo - 1, -1))
    return WeylElement(tuple(images))


def all_elements(n: int) -> Iterator[WeylElement]:
    """Every element of S_n; callers are responsible for the size."""
    for images in permutations(range(1, n + 1)):
        yield WeylElement(images)


def coxeter_number(n: int) -> int:
    """Order of any Coxeter element of S_n, which is n in type A_{n-1}."""
    if n < 1:
        raise InvalidInputError(f"rank must be positive, got n={n}")
    return n
