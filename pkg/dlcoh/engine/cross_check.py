"""Formula versus complex versus spectral sequence, for one word."""

from functools import lru_cache
from typing import TYPE_CHECKING, Optional

from dlcoh.core.errors import InvalidInputError
from dlcoh.monoid.words import Word

if TYPE_CHECKING:
    from dlcoh.workflows.cross_check_workflow import CrossCheckWorkflow


@lru_cache(maxsize=1)
def _workflow() -> "CrossCheckWorkflow":
    # The workflow graph imports this package's report functions.
    from dlcoh.workflows.cross_check_workflow import create_cross_check_workflow

    return create_cross_check_workflow()


def cross_check(w: Word, n: int, q: int, p: int, m: Optional[int] = 1) -> bool:
    """True iff the Steinberg formula, the cokernel, Z/p^m exactness and E_2 agree."""
    if w.n != n:
        raise InvalidInputError(f"word of rank {w.n} used with n={n}")
    if not w.letters:
        raise InvalidInputError("cross_check needs a nonempty word")
    state = _workflow().run(w, q, p, m)
    return bool(state["passed"])
