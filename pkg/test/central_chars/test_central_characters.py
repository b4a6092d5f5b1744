"""Tests for central characters, their weight sets and extremal weights"""

from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from app.central_chars import (
    extremal_weights,
    g0_char_of,
    g_char_of,
    verma_properties,
    weights_of_char,
)
from app.core_math.weights import Ambient
from app.exceptions import AmbientMismatchError, NotGenericError
from app.root_systems import FamilySpec, build_family
from app.verma_flags import gamma_sets
from app.weyl import dot, generate
from helpers import assert_weights

B02 = build_family(FamilySpec.b0n(2))
W02 = generate(B02, cap=100)
B03 = build_family(FamilySpec.b0n(3))
W03 = generate(B03, cap=100)

fifths = st.integers(min_value=-15, max_value=15).map(lambda k: f"{k}/5")


class TestCharacters:
    def test_g_char_rep(self, b02, w02):
        chi = g_char_of(b02, w02, b02.weight(1, 1))
        assert chi.ambient is Ambient.G
        assert chi.rep == b02.weight("5/2", "3/2")
        assert chi.weight() == b02.weight(1, 1)
        assert str(chi) == "chi~(5/2, 3/2)"

    def test_g0_char_rep(self, b02, w02):
        chi = g0_char_of(b02, w02, b02.weight("1/2", "-1/2"))
        assert chi.ambient is Ambient.G0
        assert chi.rep == b02.weight("5/2", "1/2")
        assert str(chi) == "chi(5/2, 1/2)"

    def test_characters_of_different_ambients_differ(self, b02, w02):
        lam = b02.zero()
        assert g_char_of(b02, w02, lam) != g0_char_of(b02, w02, lam)

    @settings(max_examples=25)
    @given(fifths, fifths)
    def test_constant_on_orbits(self, a, b):
        lam = B02.weight(a, b)
        chi = g_char_of(B02, W02, lam)
        chi0 = g0_char_of(B02, W02, lam)
        for w in W02:
            assert g_char_of(B02, W02, dot(B02, w, lam)) == chi
            moved = w.apply(lam + B02.rho0) - B02.rho0
            assert g0_char_of(B02, W02, moved) == chi0

    @settings(max_examples=10, deadline=None)
    @given(fifths, fifths, fifths)
    def test_support_multiset_independent_of_w(self, a, b, c):
        """{g0_char_of(w.lambda - gamma) : gamma in Gamma} does not depend on w"""
        lam = B03.weight(a, b, c)
        cube = gamma_sets(3, B03.basis_tag).gamma

        def support(mu):
            return Counter(g0_char_of(B03, W03, mu - gamma) for gamma in cube)

        expected = support(lam)
        for w in W03:
            assert support(dot(B03, w, lam)) == expected


class TestWeightsOfChar:
    def test_regular(self, b02, w02):
        weights = weights_of_char(b02, w02, g_char_of(b02, w02, b02.weight(1, 1)))
        assert len(weights) == 8
        assert b02.weight(1, 1) in weights

    def test_minus_rho(self, b02, w02):
        weights = weights_of_char(b02, w02, g_char_of(b02, w02, -b02.rho))
        assert weights == (-b02.rho,)

    def test_weakly_atypical(self, b02, w02):
        weights = weights_of_char(b02, w02, g_char_of(b02, w02, b02.weight("1/2", "-1/2")))
        assert len(weights) == 4

    def test_rejects_g0_character(self, b02, w02):
        with pytest.raises(AmbientMismatchError):
            weights_of_char(b02, w02, g0_char_of(b02, w02, b02.zero()))

    def test_rejects_atypical(self, gl11, wgl11):
        chi = g_char_of(gl11, wgl11, gl11.weight(1, -1) - gl11.rho)
        with pytest.raises(NotGenericError, match="atypical"):
            weights_of_char(gl11, wgl11, chi)


class TestExtremalWeights:
    def test_regular(self, b02, w02):
        maximal, minimal = extremal_weights(b02, w02, g_char_of(b02, w02, b02.weight(1, 1)))
        assert_weights(maximal, [(1, 1)])
        assert_weights(minimal, [(-4, -2)])

    def test_minus_rho(self, b02, w02):
        maximal, minimal = extremal_weights(b02, w02, g_char_of(b02, w02, -b02.rho))
        assert maximal == minimal == (-b02.rho,)

    def test_weakly_atypical(self, b02, w02):
        chi = g_char_of(b02, w02, b02.weight(2, 0) - b02.rho)
        maximal, _ = extremal_weights(b02, w02, chi)
        assert_weights(maximal, [("1/2", "-1/2")])

    @pytest.mark.parametrize("values", [(1, 1), ("1/3", "1/7"), (0, "-5/2")])
    def test_nonempty(self, b02, w02, values):
        maximal, minimal = extremal_weights(b02, w02, g_char_of(b02, w02, b02.weight(*values)))
        assert maximal and minimal

    def test_verma_properties(self, b02, w02):
        top = verma_properties(b02, w02, b02.weight(1, 1))
        bottom = verma_properties(b02, w02, b02.weight(-4, -2))
        middle = verma_properties(b02, w02, b02.weight(0, 2))
        assert top.projective and not top.simple
        assert bottom.simple and not bottom.projective
        assert not middle.projective and not middle.simple
        assert top.orbit_size == 8
