"""Free monoid words and the rewriting system that reduces them."""

from .rewriting import (
    RewriteStep,
    RewriteTrace,
    StepKind,
    parse_trace,
    reduce_to_coxeter,
)
from .words import Side, Word, apply_c, apply_k, apply_r, contract, subword_positions

__all__ = [
    "Word",
    "Side",
    "StepKind",
    "RewriteStep",
    "RewriteTrace",
    "apply_c",
    "apply_k",
    "apply_r",
    "contract",
    "parse_trace",
    "reduce_to_coxeter",
    "subword_positions",
]
