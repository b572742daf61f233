"""Tests for sparse integer matrices and Smith normal form.

The oracle is the classical one: the k-th invariant factor is the ratio of
consecutive gcds of k x k minors.
"""

from itertools import combinations
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy import Matrix

from dlcoh.core.errors import InvalidInputError
from dlcoh.homology.complexes import build_stseq
from dlcoh.homology.matrices import IntMatrix, elementary_divisors, rank, smith_normal_form
from dlcoh.monoid.words import Word


def invariant_factors_by_minors(dense, rows, cols):
    if not rows or not cols:
        return ()
    m = Matrix(dense)
    factors = []
    previous = 1
    for k in range(1, min(rows, cols) + 1):
        d = 0
        for rs in combinations(range(rows), k):
            for cs in combinations(range(cols), k):
                d = gcd(d, int(m.extract(list(rs), list(cs)).det()))
        if d == 0:
            break
        factors.append(d // previous)
        previous = d
    return tuple(factors)


@st.composite
def int_matrices(draw, max_size=4, max_entry=6):
    rows = draw(st.integers(min_value=0, max_value=max_size))
    cols = draw(st.integers(min_value=0, max_value=max_size))
    entry = st.integers(min_value=-max_entry, max_value=max_entry)
    dense = [[draw(entry) for _ in range(cols)] for _ in range(rows)]
    return dense, rows, cols


class TestIntMatrix:
    def test_dense_round_trip(self):
        dense = [[0, 2], [-1, 0], [0, 0]]
        M = IntMatrix.from_dense(dense)
        assert M.nnz == 2
        assert M.to_dense() == dense
        assert list(M.triplets()) == [(0, 1, 2), (1, 0, -1)]

    def test_rejects_explicit_zero(self):
        with pytest.raises(InvalidInputError):
            IntMatrix(2, 2, {(0, 0): 0})
        with pytest.raises(InvalidInputError):
            IntMatrix(2, 2, {(2, 0): 1})

    def test_product(self):
        A = IntMatrix.from_dense([[1, 2], [3, 4]])
        B = IntMatrix.from_dense([[0, 1], [1, 0]])
        assert (A @ B).to_dense() == [[2, 1], [4, 3]]
        assert (A @ IntMatrix.identity(2)) == A
        with pytest.raises(InvalidInputError):
            A @ IntMatrix.identity(3)

    def test_column_sums(self):
        assert IntMatrix.from_dense([[1, 2], [3, -2]]).column_sums() == [4, 0]


class TestSmithNormalForm:
    def test_known_example(self):
        M = IntMatrix.from_dense([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
        assert smith_normal_form(M).divisors == (2, 6, 12)
        assert elementary_divisors(M) == (2, 6, 12)

    def test_zero_and_empty(self):
        assert smith_normal_form(IntMatrix(3, 2)).divisors == ()
        assert smith_normal_form(IntMatrix(0, 4)).divisors == ()
        assert elementary_divisors(IntMatrix(2, 0)) == ()

    @given(int_matrices())
    def test_divisors_match_minors(self, case):
        dense, rows, cols = case
        M = IntMatrix.from_dense(dense, cols)
        expected = invariant_factors_by_minors(dense, rows, cols)
        assert smith_normal_form(M).divisors == expected
        assert elementary_divisors(M) == expected
        assert rank(M) == len(expected)

    @given(int_matrices())
    def test_transforms_diagonalise_and_are_unimodular(self, case):
        dense, rows, cols = case
        M = IntMatrix.from_dense(dense, cols)
        form = smith_normal_form(M)
        assert form.S @ M @ form.T == form.D
        if rows:
            assert abs(Matrix(form.S.to_dense()).det()) == 1
        if cols:
            assert abs(Matrix(form.T.to_dense()).det()) == 1
        diagonal = [form.D.entries.get((i, i), 0) for i in range(min(rows, cols))]
        assert tuple(d for d in diagonal if d) == form.divisors
        off_diagonal = {key for key in form.D.entries if key[0] != key[1]}
        assert not off_diagonal

    def test_residual_after_unit_pivots(self):
        M = IntMatrix.from_dense([[1, 1, 0], [0, 2, 0], [0, 0, 4]])
        assert elementary_divisors(M) == (1, 2, 4)
        assert smith_normal_form(M).divisors == (1, 2, 4)

    def test_sparse_route_agrees_with_full_decomposition_on_boundaries(self):
        C = build_stseq(Word((1, 2), 3), 3, 2)
        for d in C.boundaries:
            assert elementary_divisors(d) == smith_normal_form(d).divisors

    def test_sparse_route_on_a_large_unit_matrix(self):
        n = 60
        entries = {(i, i): 1 for i in range(n)}
        entries.update({(i, i + 1): -1 for i in range(n - 1)})
        M = IntMatrix(n, n, entries)
        assert elementary_divisors(M) == (1,) * n


@pytest.mark.parametrize(
    "dense, expected",
    [([[1, 0], [0, 1]], (1, 1)), ([[2, 0], [0, 3]], (1, 6)), ([[0, 0], [0, 0]], ())],
)
def test_small_divisor_chains(dense, expected):
    assert smith_normal_form(IntMatrix.from_dense(dense)).divisors == expected
