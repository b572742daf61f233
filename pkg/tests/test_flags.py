"""Tests for flag cosets of GL_n(F_q)."""

import random
from collections import Counter

import pytest

from dlcoh.core.errors import BoundExceededError, InvalidInputError
from dlcoh.groups.counting import parabolic_index, parabolic_order
from dlcoh.groups.fields import FqMatrix, field_for_order
from dlcoh.groups.flags import (
    coset_projection,
    count_flag_stabilizer,
    enumerate_cosets,
    flag_of,
    random_group_element,
    random_parabolic_element,
)
from dlcoh.weyl.elements import GeneratorSet

PARABOLICS = [(3, ()), (3, (1,)), (3, (2,)), (4, (1, 3)), (4, (2,))]


@pytest.mark.parametrize("q", [2, 3, 4])
@pytest.mark.parametrize("n, indices", PARABOLICS)
def test_enumeration_matches_index(n, q, indices):
    I = GeneratorSet(indices, n)
    cosets = enumerate_cosets(n, q, I)
    assert len(cosets) == parabolic_index(n, q, I)
    assert len(set(cosets)) == len(cosets)
    assert cosets == sorted(cosets)


@pytest.mark.slow
def test_full_flags_of_f3_4():
    assert len(enumerate_cosets(4, 3, GeneratorSet.empty(4))) == 2080


def test_bound():
    with pytest.raises(BoundExceededError) as info:
        enumerate_cosets(4, 3, GeneratorSet.empty(4), bound=100)
    assert info.value.size == 2080


def test_bound_from_settings(monkeypatch):
    monkeypatch.setenv("DLCOH_COSET_BOUND", "10")
    with pytest.raises(BoundExceededError):
        enumerate_cosets(3, 2, GeneratorSet.empty(3))


@pytest.mark.parametrize("q", [2, 3, 4])
@pytest.mark.parametrize("n, indices", PARABOLICS)
def test_flag_is_a_coset_invariant(n, q, indices):
    rng = random.Random(q * 100 + n)
    field = field_for_order(q)
    I = GeneratorSet(indices, n)
    cosets = set(enumerate_cosets(n, q, I))
    for _ in range(10):
        g = random_group_element(field, n, rng)
        p = random_parabolic_element(field, I, rng)
        x = flag_of(g, I)
        assert x in cosets
        assert flag_of(g @ p, I) == x


def test_identity_flag():
    field = field_for_order(2)
    x = flag_of(FqMatrix.identity(field, 3), GeneratorSet.empty(3))
    assert x.dims == (1, 2)
    assert x.subspaces == (((1, 0, 0),), ((1, 0, 0), (0, 1, 0)))
    assert x.flag_type == (1, 1, 1)
    assert x.to_text().splitlines()[0] == "type 1,1,1 q=2"


def test_flag_of_singular_matrix():
    field = field_for_order(2)
    g = FqMatrix.from_rows(field, [[0, 1], [0, 1]])
    with pytest.raises(InvalidInputError):
        flag_of(g, GeneratorSet.empty(2))


def test_projection_fibers_are_uniform():
    n, q = 3, 3
    fine = GeneratorSet.empty(n)
    coarse = GeneratorSet((1,), n)
    images = Counter(coset_projection(x, coarse) for x in enumerate_cosets(n, q, fine))
    assert set(images) == set(enumerate_cosets(n, q, coarse))
    assert set(images.values()) == {q + 1}


def test_projection_needs_coarser_type():
    x = enumerate_cosets(3, 2, GeneratorSet((1,), 3))[0]
    with pytest.raises(InvalidInputError):
        coset_projection(x, GeneratorSet((2,), 3))


@pytest.mark.parametrize(
    "n, q, indices, expected",
    [(2, 3, (), 12), (3, 2, (), 8), (3, 2, (1,), 24), (3, 2, (1, 2), 168)],
)
def test_standard_flag_stabilizer_is_the_parabolic(n, q, indices, expected):
    I = GeneratorSet(indices, n)
    assert count_flag_stabilizer(field_for_order(q), n, I) == expected
    assert parabolic_order(n, q, I) == expected
