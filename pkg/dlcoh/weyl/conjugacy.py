"""Conjugacy classes, minimal-length elements, heights and Geck-Pfeiffer reduction."""

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Dict, FrozenSet, List, Optional, Tuple

from dlcoh.core.config import get_settings
from dlcoh.core.errors import BoundExceededError, InvalidInputError, VerificationError
from dlcoh.core.logging import get_logger

from .elements import GeneratorSet, WeylElement, is_coxeter, length

logger = get_logger(__name__)


@dataclass(frozen=True)
class ConjugationChain:
    """A chain ``w_i = s_i w_{i-1} s_i`` of generator conjugations."""

    start: WeylElement
    steps: Tuple[Tuple[int, WeylElement], ...] = ()

    def __post_init__(self) -> None:
        previous = self.start
        for s, w in self.steps:
            if previous.conjugate(s) != w:
                raise VerificationError(f"chain step s_{s}: {w} != s{previous}s")
            if length(w) > length(previous):
                raise VerificationError(f"chain step s_{s} increases length at {w}")
            previous = w

    @property
    def end(self) -> WeylElement:
        return self.steps[-1][1] if self.steps else self.start

    @property
    def generators(self) -> List[int]:
        return [s for s, _ in self.steps]

    def lengths(self) -> List[int]:
        return [length(self.start)] + [length(w) for _, w in self.steps]

    def __len__(self) -> int:
        return len(self.steps)


def _check_bound(n: int, bound: Optional[int]) -> None:
    limit = bound if bound is not None else get_settings().weyl_bound
    if n > limit:
        raise BoundExceededError("weyl rank", n, limit)


def _representative(n: int, cycle_type: Tuple[int, ...]) -> WeylElement:
    images: List[int] = []
    start = 1
    for size in cycle_type:
        block = list(range(start, start + size))
        images.extend(block[1:] + block[:1])
        start += size
    return WeylElement(tuple(images))


@lru_cache(maxsize=256)
def _class_of_type(n: int, cycle_type: Tuple[int, ...]) -> FrozenSet[WeylElement]:
    seed = _representative(n, cycle_type)
    seen = {seed}
    queue = deque([seed])
    while queue:
        w = queue.popleft()
        for s in range(1, n):
            v = w.conjugate(s)
            if v not in seen:
                seen.add(v)
                queue.append(v)
    logger.debug("conjugacy_class_closed", n=n, cycle_type=cycle_type, size=len(seen))
    return frozenset(seen)


def conjugacy_class(w: WeylElement, bound: Optional[int] = None) -> FrozenSet[WeylElement]:
    """The class of w, closed under conjugation by generators; cached per cycle type."""
    _check_bound(w.n, bound)
    return _class_of_type(w.n, w.cycle_type())


def cmin(w: WeylElement, bound: Optional[int] = None) -> FrozenSet[WeylElement]:
    """Minimal-length elements of the conjugacy class of w."""
    cls = conjugacy_class(w, bound)
    shortest = min(length(v) for v in cls)
    return frozenset(v for v in cls if length(v) == shortest)


def min_class_length(w: WeylElement, bound: Optional[int] = None) -> int:
    return min(length(v) for v in conjugacy_class(w, bound))


def length_two_descents(w: WeylElement) -> List[int]:
    """Generators s with ``l(s w s) = l(w) - 2``."""
    target = length(w) - 2
    return [s for s in range(1, w.n) if length(w.conjugate(s)) == target]


def height(w: WeylElement, bound: Optional[int] = None) -> int:
    """Number of length-two descents to C_min, minimized over the choices."""
    _check_bound(w.n, bound)
    return _height(w)


@lru_cache(maxsize=65536)
def _height(w: WeylElement) -> int:
    if length(w) == min_class_length(w, w.n):
        return 0
    descents = length_two_descents(w)
    if not descents:
        raise VerificationError(f"{w} is not of minimal length yet has no length-two descent")
    return 1 + min(_height(w.conjugate(s)) for s in descents)


def _bfs(
    start: WeylElement,
    accept: Callable[[WeylElement], bool],
    allow: Callable[[WeylElement, WeylElement], bool],
) -> Optional[ConjugationChain]:
    parents: Dict[WeylElement, Tuple[Optional[WeylElement], int]] = {start: (None, 0)}
    queue = deque([start])
    found: Optional[WeylElement] = start if accept(start) else None
    while queue and found is None:
        w = queue.popleft()
        for s in range(1, w.n):
            v = w.conjugate(s)
            if v in parents or not allow(w, v):
                continue
            parents[v] = (w, s)
            if accept(v):
                found = v
                break
            queue.append(v)
    if found is None:
        return None

    steps: List[Tuple[int, WeylElement]] = []
    node = found
    while True:
        parent, s = parents[node]
        if parent is None:
            break
        steps.append((s, node))
        node = parent
    steps.reverse()
    return ConjugationChain(start, tuple(steps))


def gp_reduce(
    w: WeylElement, bound: Optional[int] = None
) -> Tuple[WeylElement, ConjugationChain]:
    """Reach C_min by generator conjugations that never increase length.

    Breadth-first, generators tried in increasing order, so the chain is a
    shortest one and the output is deterministic.
    """
    minimal = cmin(w, bound)
    chain = _bfs(
        w,
        accept=lambda v: v in minimal,
        allow=lambda u, v: length(v) <= length(u),
    )
    if chain is None:
        raise VerificationError(f"no length-non-increasing chain from {w} reaches C_min")
    logger.debug("gp_reduce", start=str(w), end=str(chain.end), steps=len(chain))
    return chain.end, chain


def coxeter_shift_path(
    w1: WeylElement, w2: WeylElement, bound: Optional[int] = None
) -> ConjugationChain:
    """Equal-length conjugation path between two Coxeter elements of W."""
    if w1.n != w2.n:
        raise InvalidInputError(f"rank mismatch: n={w1.n} vs n={w2.n}")
    _check_bound(w1.n, bound)
    full = GeneratorSet.full(w1.n)
    for w in (w1, w2):
        if not is_coxeter(w, full):
            raise InvalidInputError(f"{w} is not a Coxeter element of S_{w.n}")
    chain = _bfs(
        w1,
        accept=lambda v: v == w2,
        allow=lambda u, v: length(v) == length(u),
    )
    if chain is None:
        raise VerificationError(f"no cyclic-shift path from {w1} to {w2}")
    return chain
