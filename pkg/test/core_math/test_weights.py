"""Tests for Weight and WeightFunction"""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from app.core_math.weights import Weight, WeightFunction, descending_order, weight_sum
from app.exceptions import RankMismatchError, ValidationError

TAG = "B(0,2)"

coords = st.tuples(st.fractions(max_denominator=8), st.fractions(max_denominator=8))


def w(*values) -> Weight:
    return Weight.of(values, TAG)


def test_weight_of_parses_strings():
    assert w("1/2", -1, Fraction(3, 4)).coords == (Fraction(1, 2), Fraction(-1), Fraction(3, 4))


def test_zero_and_unit():
    assert Weight.zero(2, TAG).is_zero()
    assert Weight.unit(1, 3, "B(0,3)").coords == (0, 1, 0)


def test_arithmetic():
    assert w(1, 2) + w("1/2", -1) == w("3/2", 1)
    assert w(1, 2) - w(1, 2) == Weight.zero(2, TAG)
    assert -w(1, "-1/2") == w(-1, "1/2")
    assert w(1, 3).scale(Fraction(1, 2)) == w("1/2", "3/2")


def test_rank_mismatch():
    """Test weights of different rank cannot be combined"""
    with pytest.raises(RankMismatchError, match="Rank mismatch"):
        w(1, 2) + Weight.of([1, 2, 3], "B(0,3)")


def test_basis_mismatch():
    """Test weights of equal rank in different bases cannot be combined"""
    with pytest.raises(RankMismatchError):
        w(1, 0) + Weight.of([1, 0], "gl(1,1)")


def test_str_and_json():
    assert str(w("1/2", -2)) == "(1/2, -2)"
    assert w("1/2", -2).to_json() == ["1/2", "-2"]


def test_coordinate_sum():
    assert w("1/2", "3/2").coordinate_sum() == 2


def test_weight_sum_and_order():
    total = weight_sum([w(1, 0), w(0, 1), w(1, 1)], 2, TAG)
    assert total == w(2, 2)
    assert descending_order([w(0, 1), w(1, -5), w(0, 2)]) == [w(1, -5), w(0, 2), w(0, 1)]


@given(coords, coords)
def test_addition_commutes(a, b):
    assert w(*a) + w(*b) == w(*b) + w(*a)


@given(coords)
def test_subtraction_inverts_addition(a):
    x = w(*a)
    assert (x + w(1, "1/2")) - w(1, "1/2") == x


class TestWeightFunction:
    def test_zero_values_are_dropped(self):
        table = WeightFunction({w(0, 0): 1, w(1, 0): 0})
        assert len(table) == 1
        assert table.get(w(1, 0)) == 0

    def test_negative_values_rejected(self):
        with pytest.raises(ValidationError, match="Negative multiplicity"):
            WeightFunction({w(0, 0): -1})

    def test_mixed_basis_rejected(self):
        with pytest.raises(RankMismatchError):
            WeightFunction({w(0, 0): 1, Weight.of([0], "B(0,1)"): 1})

    def test_addition(self):
        a = WeightFunction({w(0, 0): 1, w(1, 0): 2})
        b = WeightFunction({w(1, 0): 1, w(0, 1): 4})
        assert a + b == WeightFunction({w(0, 0): 1, w(1, 0): 3, w(0, 1): 4})

    def test_items_descending(self):
        table = WeightFunction({w(0, 0): 1, w(1, 0): 2, w(0, 1): 3})
        assert table.support() == [w(1, 0), w(0, 1), w(0, 0)]
        assert table.total() == 6

    def test_equality_and_hash(self):
        a = WeightFunction({w(0, 0): 1})
        b = WeightFunction({w(0, 0): 1, w(5, 5): 0})
        assert a == b
        assert hash(a) == hash(b)

    def test_to_json(self):
        table = WeightFunction({w("1/2", 0): 2})
        assert table.to_json() == [{"weight": ["1/2", "0"], "multiplicity": 2}]
