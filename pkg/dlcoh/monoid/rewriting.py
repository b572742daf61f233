"""Cohomology-preserving rewriting of words down to distinct letters.

Every step keeps the cohomology of the structure sheaf on the compactified
variety: C, K and R keep the length, a contraction ``s w' s -> w' s`` lowers
it by one. The driver alternates contractions with a breadth-first search
over C/K/R moves until the word has pairwise distinct letters.
"""

import re
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

from dlcoh.core.config import get_settings
from dlcoh.core.errors import BudgetExhaustedError, InvalidInputError, VerificationError
from dlcoh.core.logging import get_logger

from .words import Side, Word, apply_c, apply_k, apply_r, contract

logger = get_logger(__name__)


class StepKind(str, Enum):
    C = "C"
    K = "K"
    R = "R"
    CONTRACT_LEFT = "CONTRACT_LEFT"
    CONTRACT_RIGHT = "CONTRACT_RIGHT"


JUSTIFICATIONS: Dict[StepKind, str] = {
    StepKind.C: "cyclic-shift-equivariant-iso",
    StepKind.K: "commutation-birational",
    StepKind.R: "braid-via-hat-letter-birational",
    StepKind.CONTRACT_LEFT: "p1-fibration-drop-left",
    StepKind.CONTRACT_RIGHT: "p1-fibration-drop-right",
}


@dataclass(frozen=True)
class RewriteStep:
    kind: StepKind
    position: int
    before: Word
    after: Word
    justification: str = ""

    def __post_init__(self) -> None:
        if not self.justification:
            object.__setattr__(self, "justification", JUSTIFICATIONS[self.kind])

    def verify(self) -> None:
        """Recompute the move and check it lands on ``after`` with the same support."""
        expected = _apply(self.kind, self.before, self.position)
        if expected != self.after:
            raise VerificationError(f"{self.kind.value} at {self.position} of {self.before} gives {expected}, not {self.after}")
        if self.before.support != self.after.support:
            raise VerificationError(f"{self.kind.value} changed the support of {self.before}")

    def to_line(self) -> str:
        return f"{self.kind.value} {self.position} {self.before} -> {self.after} # {self.justification}"


@dataclass(frozen=True)
class RewriteTrace:
    start: Word
    steps: Tuple[RewriteStep, ...] = ()
    result: Optional[Word] = field(default=None)

    def __post_init__(self) -> None:
        if self.result is None:
            end = self.steps[-1].after if self.steps else self.start
            object.__setattr__(self, "result", end)

    @property
    def final(self) -> Word:
        assert self.result is not None
        return self.result

    @property
    def is_complete(self) -> bool:
        return self.final.is_distinct

    def verify(self) -> None:
        current = self.start
        for step in self.steps:
            if step.before != current:
                raise VerificationError(f"trace breaks before {step.to_line()}")
            step.verify()
            current = step.after
        if current != self.final:
            raise VerificationError(f"trace ends at {current}, result says {self.final}")
        if self.is_complete and len(self.final) != len(self.start.support):
            raise VerificationError(f"result {self.final} has length != |supp({self.start})|")

    def to_text(self) -> str:
        lines = [f"# start n={self.start.n} {self.start}"]
        lines.extend(step.to_line() for step in self.steps)
        lines.append(f"# result {self.final}")
        return "\n".join(lines)


_STEP_LINE = re.compile(
    r"^(?P<kind>[A-Z_]+) (?P<pos>\d+) (?P<before>\[[\d,]*\]) -> (?P<after>\[[\d,]*\]) # (?P<tag>\S+)$"
)
_START_LINE = re.compile(r"^# start n=(?P<n>\d+) (?P<word>\[[\d,]*\])$")


def parse_trace(text: str) -> RewriteTrace:
    """Inverse of ``RewriteTrace.to_text``."""
    lines = [line.strip() for line in text.strip().splitlines() if line.strip()]
    if not lines:
        raise InvalidInputError("empty trace")
    head = _START_LINE.match(lines[0])
    if head is None:
        raise InvalidInputError(f"trace must begin with a start line, got {lines[0]!r}")
    n = int(head["n"])
    start = Word.parse(head["word"], n)
    steps = []
    for line in lines[1:]:
        if line.startswith("#"):
            continue
        match = _STEP_LINE.match(line)
        if match is None:
            raise InvalidInputError(f"malformed trace line {line!r}")
        try:
            kind = StepKind(match["kind"])
        except ValueError as exc:
            raise InvalidInputError(f"unknown step kind {match['kind']!r}") from exc
        steps.append(
            RewriteStep(
                kind=kind,
                position=int(match["pos"]),
                before=Word.parse(match["before"], n),
                after=Word.parse(match["after"], n),
                justification=match["tag"],
            )
        )
    return RewriteTrace(start=start, steps=tuple(steps))


def _apply(kind: StepKind, w: Word, pos: int) -> Word:
    if kind == StepKind.C:
        return apply_c(w)
    if kind == StepKind.K:
        return apply_k(w, pos)
    if kind == StepKind.R:
        return apply_r(w, pos)
    side = Side.LEFT if kind == StepKind.CONTRACT_LEFT else Side.RIGHT
    return contract(w, side)


def _moves(w: Word) -> List[Tuple[StepKind, int, Word]]:
    """Length-preserving moves out of w: C first, then K, then R, by position."""
    moves = [(StepKind.C, 1, apply_c(w))]
    letters = w.letters
    for pos in range(1, len(letters)):
        if abs(letters[pos - 1] - letters[pos]) >= 2:
            moves.append((StepKind.K, pos, apply_k(w, pos)))
    for pos in range(1, len(letters) - 1):
        s, t, s2 = letters[pos - 1 : pos + 2]
        if s == s2 and abs(s - t) == 1:
            moves.append((StepKind.R, pos, apply_r(w, pos)))
    return moves


class _Budget:
    def __init__(self, limit: int):
        self.limit = limit
        self.used = 0

    def spend(self) -> bool:
        self.used += 1
        return self.used <= self.limit


def _search_matching_ends(w: Word, budget: _Budget) -> Optional[List[RewriteStep]]:
    """Shortest C/K/R path from w to a word whose first and last letters agree.

    Returns None when the budget runs out first.
    """
    parents: Dict[Word, Optional[RewriteStep]] = {w: None}
    queue = deque([w])
    while queue:
        if not budget.spend():
            return None
        current = queue.popleft()
        for kind, pos, nxt in _moves(current):
            if nxt in parents:
                continue
            step = RewriteStep(kind=kind, position=pos, before=current, after=nxt)
            parents[nxt] = step
            if nxt.ends_match:
                path = []
                node: Optional[RewriteStep] = step
                while node is not None:
                    path.append(node)
                    node = parents[node.before]
                path.reverse()
                return path
            queue.append(nxt)
    raise VerificationError(f"no C/K/R sequence brings {w} to the shape s w' s")


def reduce_to_coxeter(
    w: Word,
    budget: Optional[int] = None,
    side: Side = Side.LEFT,
) -> RewriteTrace:
    """Rewrite w to a word of distinct letters with the same support.

    The budget counts contractions plus search expansions. On exhaustion a
    ``BudgetExhaustedError`` carries the partial trace.
    """
    if not w.letters:
        raise InvalidInputError("cannot reduce the empty word")
    limit = budget if budget is not None else get_settings().rewrite_budget
    meter = _Budget(limit)
    contraction = StepKind.CONTRACT_LEFT if side == Side.LEFT else StepKind.CONTRACT_RIGHT

    steps: List[RewriteStep] = []
    current = w
    while not current.is_distinct:
        if current.ends_match:
            if not meter.spend():
                break
            after = contract(current, side)
            position = 1 if side == Side.LEFT else len(current)
            steps.append(RewriteStep(kind=contraction, position=position, before=current, after=after))
            current = after
            continue
        path = _search_matching_ends(current, meter)
        if path is None:
            break
        steps.extend(path)
        current = path[-1].after

    trace = RewriteTrace(start=w, steps=tuple(steps), result=current)
    if not current.is_distinct:
        logger.info("reduction_budget_exhausted", word=str(w), budget=limit, steps=len(steps))
        raise BudgetExhaustedError(
            f"reduction of {w} exhausted its budget of {limit} after {len(steps)} steps",
            trace=trace,
        )
    trace.verify()
    logger.debug("reduced_to_coxeter", word=str(w), result=str(current), steps=len(steps), used=meter.used)
    return trace
