"""Acceptance suite as a LangGraph pipeline, one node per criterion.

Each node runs its sweep, times it and appends a row to ``criteria``. A
failing check or an engine error marks the row failed; the pipeline always
runs to the end so the table is complete.
"""

import random
import time
from enum import Enum
from itertools import combinations, permutations, product
from typing import Any, Callable, Dict, Iterator, List, Tuple

from langgraph.graph import END, StateGraph

from dlcoh.core.errors import DLCohError, InvalidInputError
from dlcoh.core.logging import get_logger
from dlcoh.engine.cohomology import all_reports, structure_sheaf_cohomology
from dlcoh.engine.spectral import spectral_pages
from dlcoh.groups.counting import group_order, parabolic_index, parabolic_order, steinberg_dim
from dlcoh.groups.fields import count_invertible_matrices, field_for_order
from dlcoh.groups.flags import (
    count_flag_stabilizer,
    enumerate_cosets,
    flag_of,
    random_group_element,
    random_parabolic_element,
)
from dlcoh.homology.complexes import cached_stseq, homology, mod_pm_acyclicity, steinberg_cokernel
from dlcoh.monoid.rewriting import StepKind, reduce_to_coxeter
from dlcoh.monoid.words import Word
from dlcoh.schemas.reports import (
    CoefficientKind,
    CohomologyReport,
    CriterionResult,
    Variety,
    VerificationReport,
)
from dlcoh.weyl.conjugacy import cmin, coxeter_shift_path, gp_reduce, height, length_two_descents
from dlcoh.weyl.elements import GeneratorSet, all_elements, is_coxeter, length, support

from .global_state import VerificationState

logger = get_logger(__name__)

Check = Tuple[bool, str]


class Scale(str, Enum):
    SMALL = "small"
    FULL_DESK = "full-desk"


SCALES: Dict[Scale, Dict[str, Any]] = {
    Scale.SMALL: {
        "max_n": 3,
        "fields": [2, 3],
        "exponents": [1, 2, 3],
        "gp_max_n": 4,
        "reduce_max_n": 3,
        "reduce_max_length": 5,
    },
    Scale.FULL_DESK: {
        "max_n": 4,
        "fields": [2, 3],
        "exponents": [1, 2, 3],
        "gp_max_n": 5,
        "reduce_max_n": 4,
        "reduce_max_length": 6,
    },
}


def distinct_words(n: int) -> Iterator[Word]:
    """Every nonempty word over s_1..s_{n-1} with pairwise distinct letters."""
    letters = range(1, n)
    for size in range(1, n):
        for chosen in permutations(letters, size):
            yield Word(chosen, n)


def all_words(n: int, max_length: int) -> Iterator[Word]:
    for size in range(1, max_length + 1):
        for letters in product(range(1, n), repeat=size):
            yield Word(letters, n)


def _sweep(state: VerificationState) -> Iterator[Tuple[Word, int, int]]:
    for n in range(2, state["max_n"] + 1):
        for q in state["fields"]:
            for w in distinct_words(n):
                yield w, n, q


def check_acyclicity(state: VerificationState) -> Check:
    count = 0
    for w, n, q in _sweep(state):
        C = cached_stseq(w, n, q)
        H = homology(C)
        if not (H.interior_vanishes() and H.d0_injective):
            return False, f"nonzero interior homology for {w}, n={n}, q={q}"
        if any(e != 1 for divisors in H.boundary_divisors for e in divisors):
            return False, f"non-unit elementary divisor for {w}, n={n}, q={q}"
        count += 1
    return True, f"{count} complexes"


def check_steinberg(state: VerificationState) -> Check:
    count = 0
    for w, n, q in _sweep(state):
        dimension, matches = steinberg_cokernel(w, n, q)
        if not matches:
            return False, f"cokernel {dimension} for {w}, n={n}, q={q}"
        count += 1
    flagship = cached_stseq(Word((1, 2), 3), 3, 2)
    if flagship.ranks != (1, 14, 21) or steinberg_cokernel(Word((1, 2), 3), 3, 2)[0] != 8:
        return False, f"flagship ranks {flagship.ranks}"
    return True, f"{count} cokernels"


def check_modular(state: VerificationState) -> Check:
    count = 0
    for w, n, q in _sweep(state):
        for p in (2, 3):
            for m in state["exponents"]:
                if not mod_pm_acyclicity(w, n, q, p, m):
                    return False, f"not exact mod {p}^{m} for {w}, n={n}, q={q}"
                count += 1
    return True, f"{count} (word, p, m) cases"


def check_spectral(state: VerificationState) -> Check:
    count = 0
    for w, n, q in _sweep(state):
        p = field_for_order(q).p
        _, page2 = spectral_pages(w, n, q, p, 1)
        expected = parabolic_index(n, q, w.support) * steinberg_dim(w.support, n, q)
        if page2.support() != [(len(w), 0)] or page2.at(len(w), 0) != expected:
            return False, f"E_2 support {page2.support()} for {w}, n={n}, q={q}"
        count += 1
    return True, f"{count} E_2 pages"


def check_counting(state: VerificationState) -> Check:
    count = 0
    for n in range(1, state["max_n"] + 1):
        for q in state["fields"]:
            for size in range(n):
                for indices in combinations(range(1, n), size):
                    I = GeneratorSet(indices, n)
                    if len(enumerate_cosets(n, q, I)) != parabolic_index(n, q, I):
                        return False, f"flag count mismatch for I={I}, n={n}, q={q}"
                    count += 1
    for n, q in ((2, 2), (2, 3), (3, 2)):
        if count_invertible_matrices(field_for_order(q), n) != group_order(n, q):
            return False, f"|GL_{n}(F_{q})| mismatch"
        for size in range(n):
            for indices in combinations(range(1, n), size):
                I = GeneratorSet(indices, n)
                if count_flag_stabilizer(field_for_order(q), n, I) != parabolic_order(n, q, I):
                    return False, f"|P_I(F_{q})| mismatch for I={I}, n={n}"
    samples = _check_canonicity(state)
    if samples < 0:
        return False, "flag of g P_I depends on the representative"
    return True, f"{count} flag types, 3 group orders and their parabolics, {samples} canonicity samples"


def _check_canonicity(state: VerificationState, per_type: int = 10, twists: int = 3) -> int:
    """Random g and p in P_I: the flag of g and of g p must agree. Returns -1 on failure."""
    rng = random.Random(state.get("seed", 0))
    samples = 0
    for n in range(2, min(state["max_n"], 3) + 1):
        for q in state["fields"]:
            field = field_for_order(q)
            for size in range(n):
                for indices in combinations(range(1, n), size):
                    I = GeneratorSet(indices, n)
                    for _ in range(per_type):
                        g = random_group_element(field, n, rng)
                        flag = flag_of(g, I)
                        for _ in range(twists):
                            if flag_of(g @ random_parabolic_element(field, I, rng), I) != flag:
                                return -1
                            samples += 1
    return samples


def check_geck_pfeiffer(state: VerificationState) -> Check:
    count = 0
    for n in range(1, state["gp_max_n"] + 1):
        full = GeneratorSet.full(n)
        coxeters = []
        for w in all_elements(n):
            minimal = w in cmin(w)
            if minimal == bool(length_two_descents(w)):
                return False, f"{w}: C_min membership and length-two descents disagree"
            if (height(w) == 0) != is_coxeter(w, support(w)):
                return False, f"{w}: height 0 does not match the Coxeter property"
            reduced, _ = gp_reduce(w)
            if length(reduced) != min(length(v) for v in cmin(w)):
                return False, f"{w}: gp_reduce missed C_min"
            if is_coxeter(w, full):
                coxeters.append(w)
            count += 1
        for a in coxeters:
            for b in coxeters:
                chain = coxeter_shift_path(a, b)
                if any(x != n - 1 for x in chain.lengths()):
                    return False, f"shift path {a} -> {b} changes length"
    return True, f"{count} elements"


def check_reduction(state: VerificationState) -> Check:
    count = 0
    for n in range(2, state["reduce_max_n"] + 1):
        for w in all_words(n, state["reduce_max_length"]):
            trace = reduce_to_coxeter(w)
            result = trace.final
            if not result.is_distinct or result.support != w.support or len(result) != len(w.support):
                return False, f"{w} reduced to {result}"
            for step in trace.steps:
                if step.kind in (StepKind.C, StepKind.K, StepKind.R):
                    before = structure_sheaf_cohomology(step.before, n, 2).dimension(0)
                    after = structure_sheaf_cohomology(step.after, n, 2).dimension(0)
                    if before != after:
                        return False, f"H^0 changed along {step.to_line()}"
            count += 1
    return True, f"{count} words"


def _expected_degrees(report: CohomologyReport) -> List[int]:
    top = len(report.word)
    if report.variety == Variety.OPEN_COMPACT_SUPPORT:
        return [top]
    if report.coefficients.kind == CoefficientKind.CANONICAL_SHEAF:
        return [top]
    return [0]


def check_reports(state: VerificationState) -> Check:
    count = 0
    etale_kinds = (CoefficientKind.MOD_P_M, CoefficientKind.Z_P)
    for n in range(2, state["max_n"] + 1):
        for q in state["fields"]:
            for w in all_words(n, 3):
                reports = all_reports(w, n, q, tuple(state["exponents"]))
                for report in reports:
                    if report.nonzero_degrees() != _expected_degrees(report):
                        return False, f"{w}: {report.coefficients.kind.value} nonzero in {report.nonzero_degrees()}"
                closed = {
                    r.dimension(0)
                    for r in reports
                    if r.variety == Variety.COMPACTIFIED and r.coefficients.kind in etale_kinds
                }
                compact = {r.dimension(len(w)) for r in reports if r.variety == Variety.OPEN_COMPACT_SUPPORT}
                if len(closed) != 1 or len(compact) != 1:
                    return False, f"{w}: ranks depend on m"
                structure, canonical = reports[0], reports[1]
                if canonical.dimension(len(w)) != structure.dimension(0):
                    return False, f"{w}: canonical top rank differs from H^0 rank"
                count += 1
    return True, f"{count} report families"



CRITERIA: List[Tuple[str, str, Callable[[VerificationState], Check]]] = [
    ("acyclicity", "complex acyclicity", check_acyclicity),
    ("steinberg", "steinberg cokernel", check_steinberg),
    ("modular", "mod p^m acyclicity", check_modular),
    ("spectral", "spectral degeneration", check_spectral),
    ("counting", "counting cross-validation", check_counting),
    ("geck_pfeiffer", "geck-pfeiffer suite", check_geck_pfeiffer),
    ("reduction", "reduction totality", check_reduction),
    ("reports", "report shape", check_reports),
]


class VerificationWorkflow:
    """Runs every acceptance criterion in sequence and collects a pass/fail row for each."""

    def __init__(self) -> None:
        self.workflow = self._build_workflow()

    def _build_workflow(self) -> Any:
        workflow = StateGraph(VerificationState)
        for node, title, check in CRITERIA:
            workflow.add_node(node, self._make_node(title, check))

        workflow.set_entry_point(CRITERIA[0][0])
        for (a, _, _), (b, _, _) in zip(CRITERIA, CRITERIA[1:]):
            workflow.add_edge(a, b)
        workflow.add_edge(CRITERIA[-1][0], END)

        return workflow.compile()

    @staticmethod
    def _make_node(
        title: str, check: Callable[[VerificationState], Check]
    ) -> Callable[[VerificationState], Dict[str, Any]]:
        def node(state: VerificationState) -> Dict[str, Any]:
            started = time.perf_counter()
            try:
                passed, detail = check(state)
            except DLCohError as exc:
                passed, detail = False, f"{type(exc).__name__}: {exc}"
            elapsed = time.perf_counter() - started
            logger.info("criterion", name=title, passed=passed, seconds=round(elapsed, 3))
            row = CriterionResult(name=title, passed=passed, detail=detail, seconds=elapsed)
            return {
                "criteria": [row.model_dump()],
                "messages": [{"role": "node", "node": title, "content": detail}],
            }

        return node

    def run(self, scale: str, seed: int = 0) -> VerificationReport:
        try:
            chosen = Scale(scale)
        except ValueError as exc:
            raise InvalidInputError(f"unknown scale {scale!r}; use small or full-desk") from exc
        initial: VerificationState = {"scale": chosen.value, "seed": seed, "criteria": [], "messages": [], **SCALES[chosen]}  # type: ignore[typeddict-item]
        final = self.workflow.invoke(initial)
        return VerificationReport(
            scale=chosen.value,
            criteria=[CriterionResult(**row) for row in final["criteria"]],
        )

    def get_workflow(self) -> Any:
        return self.workflow


def create_verification_workflow() -> VerificationWorkflow:
    return VerificationWorkflow()
