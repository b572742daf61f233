"""Cross-check workflow: formula, complex and spectral sequence must agree.

``reduce`` fans out to three independent nodes that LangGraph runs in the
same superstep; ``compare`` joins them.
"""

from typing import Any, Dict, Optional

from langgraph.graph import END, StateGraph

from dlcoh.core.logging import get_logger
from dlcoh.engine.cohomology import compact_support_cohomology
from dlcoh.engine.spectral import spectral_pages
from dlcoh.homology.complexes import mod_pm_acyclicity, steinberg_cokernel
from dlcoh.monoid.rewriting import reduce_to_coxeter
from dlcoh.monoid.words import Word

from .global_state import CrossCheckState

logger = get_logger(__name__)


def _message(node: str, content: str) -> Dict[str, Any]:
    return {"role": "node", "node": node, "content": content}


class CrossCheckWorkflow:
    """Ties the closed-form Steinberg answer to the complex and to E_2."""

    def __init__(self) -> None:
        self.workflow = self._build_workflow()

    def _build_workflow(self) -> Any:
        workflow = StateGraph(CrossCheckState)

        workflow.add_node("reduce", self._reduce_node)
        workflow.add_node("formula", self._formula_node)
        workflow.add_node("complex", self._complex_node)
        workflow.add_node("spectral", self._spectral_node)
        workflow.add_node("compare", self._compare_node)

        workflow.set_entry_point("reduce")
        workflow.add_edge("reduce", "formula")
        workflow.add_edge("reduce", "complex")
        workflow.add_edge("reduce", "spectral")
        workflow.add_edge(["formula", "complex", "spectral"], "compare")
        workflow.add_edge("compare", END)

        return workflow.compile()

    @staticmethod
    def _word(state: CrossCheckState, key: str = "word") -> Word:
        return Word.of(state[key], state["n"])  # type: ignore[literal-required]

    def _reduce_node(self, state: CrossCheckState) -> Dict[str, Any]:
        """Bring the word to distinct letters; the complex only sees supports."""
        w = self._word(state)
        trace = reduce_to_coxeter(w)
        return {
            "reduced_word": list(trace.final.letters),
            "trace": trace.to_text().splitlines(),
            "messages": [_message("reduce", f"{w} -> {trace.final} in {len(trace.steps)} steps")],
        }

    def _formula_node(self, state: CrossCheckState) -> Dict[str, Any]:
        w = self._word(state, "reduced_word")
        report = compact_support_cohomology(w, state["n"], state["q"], state["p"], state.get("m"))
        dimension = report.dimension(len(w))
        return {
            "formula_dimension": dimension,
            "messages": [_message("formula", f"top degree {len(w)} dimension {dimension}")],
        }

    def _complex_node(self, state: CrossCheckState) -> Dict[str, Any]:
        w = self._word(state, "reduced_word")
        n, q, p = state["n"], state["q"], state["p"]
        dimension, matches = steinberg_cokernel(w, n, q)
        acyclic = mod_pm_acyclicity(w, n, q, p, state.get("m") or 1)
        return {
            "cokernel_dimension": dimension,
            "cokernel_matches": matches,
            "acyclic": acyclic,
            "messages": [_message("complex", f"cokernel {dimension}, acyclic mod p^m: {acyclic}")],
        }

    def _spectral_node(self, state: CrossCheckState) -> Dict[str, Any]:
        w = self._word(state, "reduced_word")
        _, page2 = spectral_pages(w, state["n"], state["q"], state["p"], state.get("m"))
        top = len(w)
        return {
            "e2_top": page2.at(top, 0),
            "e2_concentrated": page2.support() == [(top, 0)],
            "messages": [_message("spectral", f"E_2 support {page2.support()}")],
        }

    def _compare_node(self, state: CrossCheckState) -> Dict[str, Any]:
        passed = (
            state["formula_dimension"] == state["cokernel_dimension"] == state["e2_top"]
            and state["cokernel_matches"]
            and state["acyclic"]
            and state["e2_concentrated"]
        )
        logger.info("cross_check", word=state["word"], n=state["n"], q=state["q"], passed=passed)
        return {"passed": passed, "messages": [_message("compare", f"passed: {passed}")]}

    def run(self, word: Word, q: int, p: int, m: Optional[int] = None) -> CrossCheckState:
        initial: CrossCheckState = {
            "word": list(word.letters),
            "n": word.n,
            "q": q,
            "p": p,
            "m": m,
            "messages": [],
        }
        return self.workflow.invoke(initial)  # type: ignore[no-any-return]

    def get_workflow(self) -> Any:
        return self.workflow


def create_cross_check_workflow() -> CrossCheckWorkflow:
    return CrossCheckWorkflow()
