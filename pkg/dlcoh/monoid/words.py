"""Words in the free monoid on the simple reflections, and the elementary moves on them.

Positions are 1-based throughout, matching the command line and trace format.
"""

from dataclasses import dataclass
from enum import Enum
from itertools import combinations
from typing import Iterator, List, Sequence, Tuple

from dlcoh.core.errors import InvalidInputError
from dlcoh.weyl.elements import GeneratorSet, WeylElement, length


class Side(str, Enum):
    LEFT = "LEFT"
    RIGHT = "RIGHT"


@dataclass(frozen=True)
class Word:
    """An element of the free monoid: letters ``a_1 ... a_k`` with ``1 <= a_j <= n-1``."""

    letters: Tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        letters = tuple(int(a) for a in self.letters)
        if self.n < 1:
            raise InvalidInputError(f"rank must be positive, got n={self.n}")
        for a in letters:
            if not 1 <= a <= self.n - 1:
                raise InvalidInputError(f"letter {a} outside 1..{self.n - 1} for n={self.n}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def of(cls, letters: Sequence[int], n: int) -> "Word":
        return cls(tuple(letters), n)

    @classmethod
    def parse(cls, text: str, n: int) -> "Word":
        """Parse comma-separated letters; the empty string is the empty word."""
        text = text.strip().strip("[]")
        if not text:
            return cls((), n)
        try:
            letters = tuple(int(part) for part in text.split(","))
        except ValueError as exc:
            raise InvalidInputError(f"malformed word {text!r}") from exc
        return cls(letters, n)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, pos: int) -> int:
        return self.letters[pos]

    @property
    def support(self) -> GeneratorSet:
        return GeneratorSet.of(self.letters, self.n)

    @property
    def is_distinct(self) -> bool:
        return len(set(self.letters)) == len(self.letters)

    @property
    def ends_match(self) -> bool:
        return len(self.letters) >= 2 and self.letters[0] == self.letters[-1]

    def element(self) -> WeylElement:
        """Image of the word in W."""
        return WeylElement.from_word(self.letters, self.n)

    def is_reduced(self) -> bool:
        return length(self.element()) == len(self.letters)

    def subword(self, positions: Sequence[int]) -> "Word":
        return Word(tuple(self.letters[p - 1] for p in positions), self.n)

    def __str__(self) -> str:
        return "[" + ",".join(str(a) for a in self.letters) + "]"


def _check_position(w: Word, pos: int, width: int) -> None:
    if not 1 <= pos <= len(w) - width + 1:
        raise InvalidInputError(f"position {pos} out of range for {w}")


def apply_c(w: Word) -> Word:
    """Cyclic shift: move the first letter to the end."""
    if not w.letters:
        raise InvalidInputError("cannot shift the empty word")
    return Word(w.letters[1:] + w.letters[:1], w.n)


def apply_k(w: Word, pos: int) -> Word:
    """Swap the commuting pair at ``pos, pos+1``."""
    _check_position(w, pos, 2)
    s, t = w.letters[pos - 1], w.letters[pos]
    if abs(s - t) < 2:
        raise InvalidInputError(f"s_{s} and s_{t} do not commute (position {pos} of {w})")
    letters = list(w.letters)
    letters[pos - 1], letters[pos] = t, s
    return Word(tuple(letters), w.n)


def apply_r(w: Word, pos: int) -> Word:
    """Braid substitution ``s t s -> t s t`` at ``pos..pos+2``."""
    _check_position(w, pos, 3)
    s, t, s2 = w.letters[pos - 1 : pos + 2]
    if s != s2 or abs(s - t) != 1:
        raise InvalidInputError(f"no braid pattern s,t,s at position {pos} of {w}")
    letters = w.letters[: pos - 1] + (t, s, t) + w.letters[pos + 2 :]
    return Word(letters, w.n)


def contract(w: Word, side: Side = Side.LEFT) -> Word:
    """``s w' s -> w' s`` (LEFT) or ``s w'`` (RIGHT)."""
    if not w.ends_match:
        raise InvalidInputError(f"first and last letters of {w} differ")
    if side == Side.LEFT:
        return Word(w.letters[1:], w.n)
    return Word(w.letters[:-1], w.n)


def subword_positions(w: Word, k: int) -> List[Tuple[Tuple[int, ...], Word]]:
    """All position subsets of size k with the subword each one reads."""
    if not 0 <= k <= len(w):
        raise InvalidInputError(f"subword length {k} outside 0..{len(w)}")
    return [
        (positions, w.subword(positions))
        for positions in combinations(range(1, len(w) + 1), k)
    ]
