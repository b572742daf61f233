"""Tests for the reduction driver and its traces."""

import pytest

from dlcoh.core.errors import BudgetExhaustedError, InvalidInputError, VerificationError
from dlcoh.monoid import (
    RewriteStep,
    RewriteTrace,
    Side,
    StepKind,
    Word,
    parse_trace,
    reduce_to_coxeter,
)
from dlcoh.workflows.verification_workflow import all_words


class TestReduceToCoxeter:
    def test_single_contraction(self):
        trace = reduce_to_coxeter(Word((1, 2, 1), 3))
        assert [step.kind for step in trace.steps] == [StepKind.CONTRACT_LEFT]
        assert trace.final.letters == (2, 1)
        assert trace.steps[0].justification == "p1-fibration-drop-left"

    def test_right_side(self):
        trace = reduce_to_coxeter(Word((1, 2, 1), 3), side=Side.RIGHT)
        assert trace.steps[0].kind == StepKind.CONTRACT_RIGHT
        assert trace.steps[0].position == 3
        assert trace.final.letters == (1, 2)

    def test_distinct_input_is_untouched(self):
        trace = reduce_to_coxeter(Word((2, 1, 3), 4))
        assert trace.steps == ()
        assert trace.final.letters == (2, 1, 3)

    def test_repeated_letter(self):
        trace = reduce_to_coxeter(Word((1, 1), 2))
        assert trace.final.letters == (1,)

    def test_needs_search(self):
        trace = reduce_to_coxeter(Word((1, 2, 1, 3), 4))
        trace.verify()
        kinds = {step.kind for step in trace.steps}
        assert StepKind.CONTRACT_LEFT in kinds
        assert sorted(trace.final.letters) == [1, 2, 3]

    @pytest.mark.parametrize("n, max_length", [(3, 5), (4, 5)])
    def test_every_short_word_reduces(self, n, max_length):
        for w in all_words(n, max_length):
            trace = reduce_to_coxeter(w)
            assert trace.is_complete
            assert trace.final.support == w.support
            assert len(trace.final) == len(w.support)
            contractions = sum(
                1
                for step in trace.steps
                if step.kind in (StepKind.CONTRACT_LEFT, StepKind.CONTRACT_RIGHT)
            )
            assert contractions == len(w) - len(w.support)

    def test_budget_exhaustion_carries_partial_trace(self):
        w = Word((1, 2, 1, 3, 2, 1), 4)
        with pytest.raises(BudgetExhaustedError) as info:
            reduce_to_coxeter(w, budget=1)
        partial = info.value.trace
        assert partial.start == w
        assert not partial.is_complete
        assert info.value.exit_code == 4

    def test_empty_word(self):
        with pytest.raises(InvalidInputError):
            reduce_to_coxeter(Word((), 3))

    def test_budget_from_settings(self, monkeypatch):
        monkeypatch.setenv("DLCOH_REWRITE_BUDGET", "1")
        with pytest.raises(BudgetExhaustedError):
            reduce_to_coxeter(Word((1, 2, 1, 3, 2, 1), 4))


class TestTrace:
    def test_text_round_trip(self):
        trace = reduce_to_coxeter(Word((2, 1, 3, 2, 1), 4))
        text = trace.to_text()
        assert text.splitlines()[0] == "# start n=4 [2,1,3,2,1]"
        assert text.splitlines()[-1] == f"# result {trace.final}"
        parsed = parse_trace(text)
        parsed.verify()
        assert parsed == trace

    def test_step_line(self):
        step = RewriteStep(
            kind=StepKind.K,
            position=1,
            before=Word((1, 3, 2), 4),
            after=Word((3, 1, 2), 4),
        )
        assert step.to_line() == "K 1 [1,3,2] -> [3,1,2] # commutation-birational"

    def test_tampered_step_is_rejected(self):
        bad = RewriteStep(
            kind=StepKind.C,
            position=1,
            before=Word((1, 2), 3),
            after=Word((1, 2), 3),
        )
        with pytest.raises(VerificationError):
            bad.verify()

    def test_broken_chain_is_rejected(self):
        step = RewriteStep(
            kind=StepKind.C,
            position=1,
            before=Word((2, 1), 3),
            after=Word((1, 2), 3),
        )
        with pytest.raises(VerificationError):
            RewriteTrace(start=Word((1, 2), 3), steps=(step,)).verify()

    def test_malformed_text(self):
        with pytest.raises(InvalidInputError):
            parse_trace("C 1 [1,2] -> [2,1] # x")
        with pytest.raises(InvalidInputError):
            parse_trace("# start n=3 [1,2]\nZ 1 [1,2] -> [2,1] # x")


def test_reduced_words_of_one_element_reduce_to_its_support():
    from dlcoh.weyl import all_elements, reduced_words, support

    for w in all_elements(4):
        for letters in reduced_words(w):
            if not letters:
                continue
            trace = reduce_to_coxeter(Word(letters, 4))
            assert trace.final.support == support(w)
