"""Tests for finite field arithmetic and matrices over F_q."""

from itertools import product

import pytest

from dlcoh.core.errors import InvalidInputError
from dlcoh.groups.counting import group_order
from dlcoh.groups.fields import (
    DEFAULT_MODULI,
    FqMatrix,
    build_field,
    characteristic,
    count_invertible_matrices,
    field_for_order,
)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 8, 9])
def test_field_axioms(q):
    f = field_for_order(q)
    assert f.q == q
    for a, b in product(f.elements(), repeat=2):
        assert f.add(a, b) == f.add(b, a)
        assert f.mul(a, b) == f.mul(b, a)
        assert f.sub(f.add(a, b), b) == a
    for a in f.units():
        assert f.mul(a, f.inv(a)) == 1
    for a, b, c in product(range(q), repeat=3):
        assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))


@pytest.mark.parametrize("q", sorted(DEFAULT_MODULI))
def test_multiplicative_group_is_cyclic(q):
    f = field_for_order(q)
    orders = []
    for a in f.units():
        x, k = a, 1
        while x != 1:
            x, k = f.mul(x, a), k + 1
        orders.append(k)
    assert max(orders) == q - 1


def test_large_field_uses_polynomial_arithmetic():
    f = build_field(2, 9, (1, 0, 0, 0, 0, 1, 0, 0, 0, 1))
    assert f.q == 512
    a = 0b101100111
    assert f.mul(a, f.inv(a)) == 1


def test_poly_codes():
    f = field_for_order(9)
    assert f.to_poly(5) == [1, 2]
    assert f.from_poly([1, 2]) == 5
    assert f.to_poly(0) == []


def test_invalid_fields():
    with pytest.raises(InvalidInputError):
        field_for_order(6)
    with pytest.raises(InvalidInputError):
        field_for_order(1)
    with pytest.raises(InvalidInputError):
        build_field(4)
    with pytest.raises(InvalidInputError):
        build_field(2, 2, (1, 0, 1))
    with pytest.raises(InvalidInputError):
        build_field(2, 6)


def test_characteristic():
    assert characteristic(9) == 3
    assert characteristic(16) == 2


class TestFqMatrix:
    def test_product_and_identity(self):
        f = field_for_order(3)
        g = FqMatrix.from_rows(f, [[1, 2], [0, 1]])
        assert (g @ FqMatrix.identity(f, 2)) == g
        assert (g @ g).row_lists() == [[1, 1], [0, 1]]

    def test_rref(self):
        f = field_for_order(2)
        g = FqMatrix.from_rows(f, [[1, 1, 0], [1, 1, 0], [0, 1, 1]])
        reduced, pivots = g.rref()
        assert pivots == (0, 1)
        assert reduced.row_lists() == [[1, 0, 1], [0, 1, 1]]
        assert g.rank() == 2
        assert not g.is_invertible()

    def test_rejects_bad_codes(self):
        with pytest.raises(InvalidInputError):
            FqMatrix.from_rows(field_for_order(2), [[2]])

    @pytest.mark.parametrize("q, n", [(2, 2), (3, 2), (2, 3), (4, 2)])
    def test_brute_force_group_order(self, q, n):
        assert count_invertible_matrices(field_for_order(q), n) == group_order(n, q)
