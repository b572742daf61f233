"""Type A Weyl group combinatorics."""

from .conjugacy import (
    ConjugationChain,
    cmin,
    conjugacy_class,
    coxeter_shift_path,
    gp_reduce,
    height,
    length_two_descents,
    min_class_length,
)
from .elements import (
    GeneratorSet,
    WeylElement,
    all_elements,
    bruhat_leq,
    bruhat_leq_subword,
    coxeter_element,
    coxeter_number,
    in_parabolic,
    is_coxeter,
    length,
    longest_element,
    reduced_words,
    support,
)

__all__ = [
    "GeneratorSet",
    "WeylElement",
    "ConjugationChain",
    "all_elements",
    "bruhat_leq",
    "bruhat_leq_subword",
    "cmin",
    "conjugacy_class",
    "coxeter_element",
    "coxeter_number",
    "coxeter_shift_path",
    "gp_reduce",
    "height",
    "in_parabolic",
    "is_coxeter",
    "length",
    "length_two_descents",
    "longest_element",
    "min_class_length",
    "reduced_words",
    "support",
]
