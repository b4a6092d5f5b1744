"""Tests for the Gamma cube"""

import pytest

from app.exceptions import GammaError, ValidationError
from app.verma_flags import gamma_parity, gamma_sets, is_in_gamma, sigma
from app.core_math.weights import Weight
from helpers import assert_weights


def test_rank_one():
    cube = gamma_sets(1)
    assert_weights(cube.gamma, [(0,), (1,)])
    assert_weights(cube.gamma0, [(0,)])
    assert_weights(cube.gamma1, [(1,)])


def test_rank_two_order_and_halves():
    cube = gamma_sets(2)
    assert [w.to_json() for w in cube.gamma] == [["0", "0"], ["1", "0"], ["0", "1"], ["1", "1"]]
    assert_weights(cube.gamma0, [(0, 0), (1, 1)])
    assert_weights(cube.gamma1, [(1, 0), (0, 1)])
    assert cube.part(0) == cube.gamma0
    assert cube.part(1) == cube.gamma1


@pytest.mark.parametrize("l", [3, 4])
def test_halves_are_equal(l):
    cube = gamma_sets(l)
    assert len(cube.gamma) == 2**l
    assert len(cube.gamma0) == len(cube.gamma1) == 2 ** (l - 1)


def test_basis_tag():
    assert gamma_sets(2).gamma[0].basis_tag == "B(0,2)"


def test_invalid_rank():
    with pytest.raises(ValidationError, match="l >= 1"):
        gamma_sets(0)


def test_parity():
    assert gamma_parity(Weight.of([1, 1, 0], "B(0,3)")) == 0
    assert gamma_parity(Weight.of([1, 1, 1], "B(0,3)")) == 1


def test_parity_rejects_non_gamma():
    with pytest.raises(GammaError):
        gamma_parity(Weight.of([2, 0], "B(0,2)"))
    assert not is_in_gamma(Weight.of(["1/2", 0], "B(0,2)"))


def test_sigma():
    assert sigma(3, 3) == Weight.of([0, 0, 1], "B(0,3)")
    assert sigma(2, 1).to_json() == ["1", "0"]
