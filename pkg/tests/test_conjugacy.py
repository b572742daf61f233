"""Tests for conjugacy classes, heights and conjugation chains."""

from itertools import product

import pytest

from dlcoh.core.errors import BoundExceededError, InvalidInputError, VerificationError
from dlcoh.weyl import (
    ConjugationChain,
    GeneratorSet,
    WeylElement,
    all_elements,
    cmin,
    conjugacy_class,
    coxeter_shift_path,
    gp_reduce,
    height,
    is_coxeter,
    length_two_descents,
    length,
    support,
)


def w_of(letters, n):
    return WeylElement.from_word(letters, n)


class TestConjugacyClass:
    def test_transpositions_of_s3(self):
        cls = conjugacy_class(w_of([1], 3))
        assert {w.images for w in cls} == {(2, 1, 3), (1, 3, 2), (3, 2, 1)}

    @pytest.mark.parametrize("n", [3, 4])
    def test_classes_partition_the_group(self, n):
        seen = set()
        for w in all_elements(n):
            cls = conjugacy_class(w)
            assert w in cls
            assert all(v.cycle_type() == w.cycle_type() for v in cls)
            seen |= cls
        assert len(seen) == len(list(all_elements(n)))

    def test_bound(self):
        with pytest.raises(BoundExceededError) as info:
            conjugacy_class(WeylElement.identity(5), bound=4)
        assert info.value.exit_code == 3


class TestCmin:
    def test_transpositions(self):
        assert {w.images for w in cmin(w_of([1, 2, 1], 3))} == {(2, 1, 3), (1, 3, 2)}

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_minimal_elements_are_parabolic_coxeter_elements(self, n):
        for w in all_elements(n):
            minimal = w in cmin(w)
            assert minimal == is_coxeter(w, support(w))


class TestHeight:
    def test_examples(self):
        assert height(w_of([1, 2], 3)) == 0
        assert height(w_of([1, 2, 1], 3)) == 1
        assert height(WeylElement.identity(4)) == 0

    @pytest.mark.parametrize("n", [3, 4])
    def test_height_zero_iff_coxeter_on_support(self, n):
        for w in all_elements(n):
            assert (height(w) == 0) == is_coxeter(w, support(w))

    def test_longest_element_of_s4(self):
        w0 = WeylElement((4, 3, 2, 1))
        min_length = min(length(v) for v in cmin(w0))
        assert height(w0) == (length(w0) - min_length) // 2


class TestGpReduce:
    def test_example(self):
        end, chain = gp_reduce(w_of([1, 2, 1], 3))
        assert end.images == (1, 3, 2)
        assert chain.generators == [1]

    @pytest.mark.parametrize("n", [3, 4, 5])
    def test_reaches_cmin_without_increasing_length(self, n):
        for w in all_elements(n):
            end, chain = gp_reduce(w)
            assert end in cmin(w)
            lengths = chain.lengths()
            assert all(a >= b for a, b in zip(lengths, lengths[1:]))
            assert chain.start == w and chain.end == end

    def test_minimal_input_is_fixed(self):
        c = w_of([2, 1, 3], 4)
        end, chain = gp_reduce(c)
        assert end == c
        assert len(chain) == 0


class TestConjugationChain:
    def test_rejects_wrong_step(self):
        w = w_of([1, 2, 1], 3)
        with pytest.raises(VerificationError):
            ConjugationChain(w, ((2, w_of([1], 3)),))

    def test_rejects_length_increase(self):
        w = w_of([2], 3)
        with pytest.raises(VerificationError):
            ConjugationChain(w, ((1, w.conjugate(1)),))


class TestCoxeterShiftPath:
    def test_all_pairs_in_s4(self):
        full = GeneratorSet.full(4)
        coxeters = [w for w in all_elements(4) if is_coxeter(w, full)]
        assert len(coxeters) == 4
        for w1, w2 in product(coxeters, repeat=2):
            chain = coxeter_shift_path(w1, w2)
            assert chain.end == w2
            assert set(chain.lengths()) == {3}

    def test_rejects_non_coxeter(self):
        with pytest.raises(InvalidInputError):
            coxeter_shift_path(w_of([1, 2, 1], 3), w_of([1, 2], 3))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_non_minimal_elements_have_a_length_two_descent(n):
    for w in all_elements(n):
        assert (w in cmin(w)) != bool(length_two_descents(w))
