"""Tests for graded Verma flags and the restriction / induction flags"""

import pytest

from app.core_math.weights import Ambient, Weight
from app.exceptions import (
    AmbientMismatchError,
    FamilyError,
    RankMismatchError,
    ValidationError,
)
from app.verma_flags import (
    FlagEntry,
    GradedVermaFlag,
    flag_union,
    induction_flag,
    restriction_flag,
    verma_flag,
)
from helpers import FlagBuilder, assert_flag_equal


class TestGradedVermaFlag:
    def test_entries_and_multiplicity(self, b02):
        flag = (
            FlagBuilder(b02)
            .over_g0()
            .with_entry((1, 1), parity=0)
            .with_entry(("1/2", "-3/2"), parity=1, multiplicity=2)
            .build()
        )
        assert len(flag) == 3
        assert flag.multiplicity((b02.weight("1/2", "-3/2"), 1)) == 2
        assert flag.multiplicity((b02.weight("1/2", "-3/2"), 0)) == 0
        assert flag.parity_counts() == (1, 2)

    def test_items_are_sorted(self, b02):
        flag = FlagBuilder(b02).with_entry((0, 0), 1).with_entry((1, 0), 0).with_entry((0, 0), 0).build()
        assert [(str(e.weight), e.parity) for e, _ in flag.items()] == [
            ("(1, 0)", 0),
            ("(0, 0)", 0),
            ("(0, 0)", 1),
        ]

    def test_union_adds_multiplicities(self, b02):
        a = FlagBuilder(b02).with_entry((0, 0)).build()
        b = FlagBuilder(b02).with_entry((0, 0)).with_entry((1, 1), 1).build()
        union = a + b
        assert union.multiplicity((b02.zero(), 0)) == 2
        assert len(union) == 3

    def test_union_rejects_mixed_ambients(self, b02):
        with pytest.raises(AmbientMismatchError):
            GradedVermaFlag.empty(Ambient.G) + GradedVermaFlag.empty(Ambient.G0)

    def test_flip_and_parity_parts(self, b02):
        flag = FlagBuilder(b02).with_entry((0, 0), 0).with_entry((1, 0), 1).build()
        flipped = flag.flip()
        assert flipped.multiplicity((b02.zero(), 1)) == 1
        assert flipped.flip() == flag
        assert flag.shift_parity(0) == flag
        assert flag.shift_parity(1) == flipped
        assert len(flag.with_parity(1)) == 1

    def test_weights_forget_parity(self, b02):
        flag = FlagBuilder(b02).with_entry((0, 0), 0).with_entry((0, 0), 1).build()
        assert flag.weights()[b02.zero()] == 2

    def test_equality_includes_ambient(self, b02):
        assert GradedVermaFlag.single(Ambient.G, b02.zero()) != GradedVermaFlag.single(
            Ambient.G0, b02.zero()
        )

    def test_invalid_parity(self, b02):
        with pytest.raises(ValidationError, match="Parity must be 0 or 1"):
            FlagEntry(b02.zero(), 2)

    def test_negative_multiplicity(self, b02):
        with pytest.raises(ValidationError, match="Negative multiplicity"):
            GradedVermaFlag(Ambient.G, {FlagEntry(b02.zero(), 0): -1})

    def test_mixed_rank(self, b02):
        with pytest.raises(RankMismatchError):
            GradedVermaFlag.of(
                Ambient.G, [(b02.zero(), 0), (Weight.of([0, 0, 0], "B(0,3)"), 0)]
            )

    def test_flag_union_of_nothing(self):
        assert flag_union([], Ambient.G0).is_empty()

    def test_to_json(self, b02):
        flag = verma_flag(Ambient.G, b02.weight("1/2", 0), 1)
        assert flag.to_json() == [{"weight": ["1/2", "0"], "parity": 1, "multiplicity": 1}]


class TestRestrictionFlag:
    def test_b02(self, b02):
        expected = (
            FlagBuilder(b02)
            .over_g0()
            .with_entry((1, 1), 0)
            .with_entry((0, 1), 1)
            .with_entry((1, 0), 1)
            .with_entry((0, 0), 0)
            .build()
        )
        assert_flag_equal(restriction_flag(b02, b02.weight(1, 1)), expected)

    def test_b01(self, b01):
        expected = FlagBuilder(b01).over_g0().with_entry((0,), 0).with_entry((-1,), 1).build()
        assert_flag_equal(restriction_flag(b01, b01.zero()), expected)

    def test_base_parity_flips(self, b02):
        lam = b02.weight("1/2", "-1/2")
        assert restriction_flag(b02, lam, base_parity=1) == restriction_flag(b02, lam).flip()

    def test_size(self, b03):
        flag = restriction_flag(b03, b03.zero())
        assert len(flag) == 8
        assert flag.parity_counts() == (4, 4)
        assert flag.ambient is Ambient.G0

    def test_requires_b0n(self, gl11):
        with pytest.raises(FamilyError):
            restriction_flag(gl11, gl11.zero())


class TestInductionFlag:
    def test_b02(self, b02):
        flag = induction_flag(b02, b02.weight("1/2", "-1/2"))
        expected = (
            FlagBuilder(b02)
            .over_g()
            .with_entry(("1/2", "-1/2"), 0)
            .with_entry(("3/2", "-1/2"), 1)
            .with_entry(("1/2", "1/2"), 1)
            .with_entry(("3/2", "1/2"), 0)
            .build()
        )
        assert_flag_equal(flag, expected)

    def test_invalid_base_parity(self, b02):
        with pytest.raises(ValidationError):
            induction_flag(b02, b02.zero(), base_parity=2)

    def test_requires_b0n(self, b11):
        with pytest.raises(FamilyError):
            induction_flag(b11, b11.zero())
