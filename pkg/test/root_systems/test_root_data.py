"""Tests for the family builders and the root data they produce"""

from fractions import Fraction

import pytest
import sympy as sp

from app.exceptions import FamilyError
from app.root_systems import (
    FamilySpec,
    build_family,
    form_entries,
    typicality_notions_coincide,
)
from helpers import assert_weights


class TestFamilySpec:
    def test_labels(self):
        assert FamilySpec.b0n(2).label == "B(0,2)"
        assert FamilySpec.glmn(2, 1).label == "gl(2,1)"
        assert FamilySpec.bmn(1, 1).label == "B(1,1)"

    def test_ranks(self):
        assert FamilySpec.b0n(3).rank == 3
        assert FamilySpec.glmn(2, 1).rank == 3
        assert FamilySpec.bmn(1, 2).rank == 3

    @pytest.mark.parametrize(
        "factory, args",
        [
            (FamilySpec.b0n, (0,)),
            (FamilySpec.glmn, (0, 1)),
            (FamilySpec.glmn, (1, 0)),
            (FamilySpec.bmn, (0, 2)),
        ],
    )
    def test_invalid_parameters(self, factory, args):
        with pytest.raises(FamilyError):
            factory(*args)


class TestB0n:
    def test_b02_rho_vectors(self, b02):
        assert b02.rho == b02.weight("3/2", "1/2")
        assert b02.rho1 == b02.weight("1/2", "1/2")
        assert b02.rho0 == b02.weight(2, 1)

    @pytest.mark.parametrize("l", [1, 2, 3, 4])
    def test_rho_closed_form(self, l):
        data = build_family(FamilySpec.b0n(l))
        assert data.rho.coords == tuple(Fraction(2 * (l - i) - 1, 2) for i in range(l))
        assert data.rho == data.rho0 - data.rho1

    def test_b02_roots(self, b02):
        assert_weights(b02.delta0_plus, [(1, -1), (1, 1), (2, 0), (0, 2)])
        assert_weights(b02.delta1_plus, [(1, 0), (0, 1)])
        assert_weights(b02.simple_roots, [(1, -1), (0, 1)])
        assert_weights(b02.even_simple_roots, [(1, -1), (0, 2)])

    def test_no_isotropic_roots(self, b03):
        assert b03.delta1_plus_isotropic == ()
        assert not typicality_notions_coincide(b03)

    def test_form_is_identity(self, b03):
        assert b03.form == sp.ImmutableMatrix(sp.eye(3))
        assert form_entries(b03.form) == tuple(
            tuple(Fraction(int(i == j)) for j in range(3)) for i in range(3)
        )


class TestGLmn:
    def test_gl11(self, gl11):
        assert gl11.delta0_plus == ()
        assert_weights(gl11.delta1_plus, [(1, -1)])
        assert_weights(gl11.delta1_plus_isotropic, [(1, -1)])
        assert gl11.rho == gl11.weight("-1/2", "1/2")

    def test_gl21(self, gl21):
        assert_weights(gl21.delta0_plus, [(1, -1, 0)])
        assert_weights(gl21.delta1_plus, [(1, 0, -1), (0, 1, -1)])
        assert_weights(gl21.simple_roots, [(1, -1, 0), (0, 1, -1)])
        assert typicality_notions_coincide(gl21)


class TestBmn:
    def test_b11_roots(self, b11):
        assert_weights(b11.delta0_plus, [(1, 0), (0, 2)])
        assert_weights(b11.delta1_plus, [(-1, 1), (1, 1), (0, 1)])
        assert_weights(b11.delta1_plus_isotropic, [(-1, 1), (1, 1)])
        assert_weights(b11.simple_roots, [(-1, 1), (1, 0)])

    def test_b11_rho(self, b11):
        assert b11.rho0 == b11.weight("1/2", 1)
        assert b11.rho1 == b11.weight(0, "3/2")
        assert b11.rho == b11.weight("1/2", "-1/2")

    def test_typicality_notions_differ(self, b11):
        assert not typicality_notions_coincide(b11)
