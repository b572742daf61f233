"""State for the dlcoh LangGraph workflows."""

import operator
from typing import Annotated, List, Optional, TypedDict


class CrossCheckState(TypedDict, total=False):
    word: List[int]
    n: int
    q: int
    p: int
    m: Optional[int]
    reduced_word: List[int]
    trace: List[str]
    formula_dimension: int
    cokernel_dimension: int
    cokernel_matches: bool
    acyclic: bool
    e2_top: int
    e2_concentrated: bool
    passed: bool
    messages: Annotated[List[dict], operator.add]


class VerificationState(TypedDict, total=False):
    scale: str
    seed: int
    max_n: int
    fields: List[int]
    exponents: List[int]
    gp_max_n: int
    reduce_max_n: int
    reduce_max_length: int
    criteria: Annotated[List[dict], operator.add]
    messages: Annotated[List[dict], operator.add]
