"""Tests for words and the elementary moves."""

import pytest

from dlcoh.core.errors import InvalidInputError
from dlcoh.monoid import Side, Word, apply_c, apply_k, apply_r, contract, subword_positions


class TestWord:
    def test_validation(self):
        with pytest.raises(InvalidInputError):
            Word((3,), 3)
        with pytest.raises(InvalidInputError):
            Word((0,), 3)

    def test_parse(self):
        assert Word.parse("1,2,1", 3).letters == (1, 2, 1)
        assert Word.parse("[2, 1]", 3).letters == (2, 1)
        assert Word.parse("", 3).letters == ()
        with pytest.raises(InvalidInputError):
            Word.parse("1,x", 3)

    def test_properties(self):
        w = Word((1, 2, 1), 3)
        assert w.support.indices == (1, 2)
        assert not w.is_distinct
        assert w.ends_match
        assert w.is_reduced()
        assert not Word((1, 1), 2).is_reduced()
        assert str(w) == "[1,2,1]"

    def test_element(self):
        assert Word((1, 2, 1), 3).element().images == (3, 2, 1)


class TestMoves:
    def test_cyclic_shift(self):
        assert apply_c(Word((1, 2, 3), 4)).letters == (2, 3, 1)
        with pytest.raises(InvalidInputError):
            apply_c(Word((), 4))

    def test_commutation(self):
        assert apply_k(Word((1, 3, 2), 4), 1).letters == (3, 1, 2)
        with pytest.raises(InvalidInputError):
            apply_k(Word((1, 2), 3), 1)
        with pytest.raises(InvalidInputError):
            apply_k(Word((1, 3), 4), 2)

    def test_braid(self):
        assert apply_r(Word((3, 1, 2, 1), 4), 2).letters == (3, 2, 1, 2)
        with pytest.raises(InvalidInputError):
            apply_r(Word((1, 3, 1), 4), 1)

    def test_contract(self):
        w = Word((1, 2, 1), 3)
        assert contract(w, Side.LEFT).letters == (2, 1)
        assert contract(w, Side.RIGHT).letters == (1, 2)
        with pytest.raises(InvalidInputError):
            contract(Word((1, 2), 3), Side.LEFT)

    @pytest.mark.parametrize(
        "letters, n",
        [((1, 2, 1), 3), ((2, 1, 3, 2), 4), ((1, 3, 2, 1, 3), 4)],
    )
    def test_cyclic_shift_conjugates_by_first_letter(self, letters, n):
        w = Word(letters, n)
        shifted = apply_c(w).element()
        first = w.letters[0]
        assert shifted == w.element().conjugate(first)


def test_subword_positions():
    w = Word((1, 2, 1), 3)
    pairs = subword_positions(w, 2)
    assert [positions for positions, _ in pairs] == [(1, 2), (1, 3), (2, 3)]
    assert [sub.letters for _, sub in pairs] == [(1, 2), (1, 1), (2, 1)]
    assert subword_positions(w, 0) == [((), Word((), 3))]
    with pytest.raises(InvalidInputError):
        subword_positions(w, 4)
