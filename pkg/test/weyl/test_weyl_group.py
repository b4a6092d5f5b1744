"""Tests for Weyl group generation"""

import pytest
import sympy as sp

from app.exceptions import FamilyError, GroupOrderExceededError, RankMismatchError
from app.root_systems import FamilySpec, build_family
from app.weyl import generate, reflection_matrix
from app.core_math.weights import Weight


@pytest.mark.parametrize("l, order", [(1, 2), (2, 8), (3, 48)])
def test_b0n_orders(l, order):
    """|W| = 2^l l! for type C_l"""
    assert generate(build_family(FamilySpec.b0n(l))).order == order


def test_other_family_orders(gl21, b11):
    assert generate(gl21).order == 2
    assert generate(b11).order == 4


def test_identity_first(w02):
    assert w02.identity.is_identity()
    assert w02.identity.word == ()
    assert w02.identity.word_label() == "e"


def test_generators_are_reflections(b02, w02):
    swap, flip = w02.generators
    assert swap.apply(b02.weight("5/2", "1/2")) == b02.weight("1/2", "5/2")
    assert flip.apply(b02.weight(3, 7)) == b02.weight(3, -7)
    assert (swap * swap).is_identity()


def test_elements_are_distinct_and_closed(w02):
    matrices = {w.matrix for w in w02}
    assert len(matrices) == w02.order
    for a in w02:
        for b in w02:
            assert a * b in w02


def test_words_reproduce_elements(w03):
    """Each stored word multiplies out to its matrix"""
    for w in w03:
        product = w03.identity
        for index in w.word:
            product = product * w03.generators[index - 1]
        assert product == w


def test_inverse(w03):
    for w in w03:
        assert (w * w03.inverse(w)).is_identity()


def test_find(w02):
    some = w02.elements[3]
    assert w02.find(some.matrix) is some


def test_cap_exceeded(b03):
    with pytest.raises(GroupOrderExceededError, match="cap of 10") as exc_info:
        generate(b03, cap=10)
    assert exc_info.value.cap == 10


def test_cap_from_settings(monkeypatch, b03):
    monkeypatch.setenv("SUPERTYPICAL_CAP", "20")
    with pytest.raises(GroupOrderExceededError):
        generate(b03)


def test_apply_rank_mismatch(w02):
    with pytest.raises(RankMismatchError):
        w02.identity.apply(Weight.of([1], "B(0,1)"))


def test_signed_permutation_flag(w02, wgl11):
    assert w02.signed_permutation
    assert not wgl11.signed_permutation


def test_reflection_in_isotropic_root(gl11):
    with pytest.raises(FamilyError, match="isotropic"):
        reflection_matrix(gl11, gl11.weight(1, -1))


def test_reflection_matrix_is_exact(b02):
    assert reflection_matrix(b02, b02.weight(1, -1)) == sp.ImmutableMatrix([[0, 1], [1, 0]])
    assert reflection_matrix(b02, b02.weight(0, 2)) == sp.ImmutableMatrix([[1, 0], [0, -1]])


def _preserves_root_data(data, G):
    roots = set(data.delta0_plus) | {-alpha for alpha in data.delta0_plus}
    for w in G:
        assert w.matrix.T * data.form * w.matrix == data.form
        assert {w.apply(alpha) for alpha in roots} == roots


@pytest.mark.parametrize("family, group", [("b02", "w02"), ("b03", "w03"), ("b11", "wb11")])
def test_elements_preserve_form_and_even_roots(request, family, group):
    _preserves_root_data(request.getfixturevalue(family), request.getfixturevalue(group))


@pytest.mark.slow
def test_rank_four(b04, w04):
    assert w04.order == 384
    assert len({w.matrix for w in w04}) == 384
    _preserves_root_data(b04, w04)
