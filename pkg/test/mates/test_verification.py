"""Tests for mate verification, the perfect-mate check and strong candidates"""

import pytest

from app.central_chars import g0_char_of, g_char_of
from app.exceptions import AmbientMismatchError, NotGenericError
from app.mates import (
    candidate_mates_strong,
    construct_mate,
    induction_overlaps,
    verify_mate,
    verify_perfect,
)
from helpers import assert_weights, shifted

WEAK_K = ["1/2", "1", "3/2", "2", "3", "7/2"]


class TestVerifyMate:
    def test_constructed_mate(self, b02, w02):
        lam = b02.weight("1/2", "-1/2")
        report = verify_mate(b02, w02, lam, g0_char_of(b02, w02, lam))
        assert_weights(report.matched_gammas, [(0, 0), (0, 1)])
        assert sorted(report.matched_parities) == [0, 1]
        assert report.is_mate
        assert report.graded_split == (lam, b02.weight("1/2", "-3/2"))
        assert report.orbit_consistent
        assert report.orbit_size == 4

    def test_wrong_character_is_not_a_mate(self, b02, w02):
        lam = b02.weight("1/2", "-1/2")
        chi = g0_char_of(b02, w02, lam - b02.weight(1, 0))
        report = verify_mate(b02, w02, lam, chi)
        assert_weights(report.matched_gammas, [(1, 0), (1, 1)])
        assert not report.is_mate
        assert report.graded_split is None

    def test_rank_three(self, b03, w03):
        lam = b03.weight("1/2", "-1/2", "-1/2")
        report = verify_mate(b03, w03, lam, g0_char_of(b03, w03, lam))
        assert_weights(report.matched_gammas, [(0, 0, 0), (0, 0, 1)])
        assert report.is_mate

    def test_rejects_g_character(self, b02, w02):
        lam = b02.weight("1/2", "-1/2")
        with pytest.raises(AmbientMismatchError):
            verify_mate(b02, w02, lam, g_char_of(b02, w02, lam))


class TestVerifyPerfect:
    def test_rank_two(self, b02, w02):
        lam = b02.weight("1/2", "-1/2")
        report = verify_perfect(b02, w02, lam, g0_char_of(b02, w02, lam), threads=1)
        assert len(report.per_w) == 8
        assert report.is_perfect
        assert report.failures == ()
        assert report.stab_inclusions == (True, True)

    def test_threads_give_same_report(self, b02, w02):
        lam = b02.weight("1/2", "-1/2")
        chi = g0_char_of(b02, w02, lam)
        serial = verify_perfect(b02, w02, lam, chi, threads=1)
        parallel = verify_perfect(b02, w02, lam, chi, threads=3)
        assert serial.per_w == parallel.per_w

    def test_threads_default_from_settings(self, b02, w02, monkeypatch):
        monkeypatch.setenv("SUPERTYPICAL_THREADS", "2")
        lam = b02.weight("1/2", "-1/2")
        assert verify_perfect(b02, w02, lam, g0_char_of(b02, w02, lam)).is_perfect

    @pytest.mark.parametrize("k", WEAK_K)
    def test_weak_grid(self, b02, w02, k):
        lam, chi = construct_mate(b02, w02, g_char_of(b02, w02, shifted(b02, k, 0)))
        assert verify_mate(b02, w02, lam, chi).is_mate
        assert verify_perfect(b02, w02, lam, chi, threads=1).is_perfect

    @pytest.mark.slow
    def test_rank_three(self, b03, w03):
        lam, chi = construct_mate(b03, w03, g_char_of(b03, w03, shifted(b03, 3, 1, 0)))
        report = verify_perfect(b03, w03, lam, chi)
        assert len(report.per_w) == 48
        assert report.is_perfect


class TestCandidateMatesStrong:
    def test_rank_two(self, b02, w02):
        chi_tilde = g_char_of(b02, w02, b02.weight(1, 1))
        candidates = candidate_mates_strong(b02, w02, chi_tilde)
        assert len(candidates) == 4
        assert g0_char_of(b02, w02, b02.weight(1, 1)) in candidates

    def test_rank_one(self, b01, w01):
        chi_tilde = g_char_of(b01, w01, b01.weight(1))
        assert len(candidate_mates_strong(b01, w01, chi_tilde)) == 2

    def test_rejects_weak(self, b02, w02):
        chi_tilde = g_char_of(b02, w02, shifted(b02, 2, 0))
        with pytest.raises(NotGenericError, match="not strongly typical"):
            candidate_mates_strong(b02, w02, chi_tilde)


class TestInductionOverlaps:
    def test_dominant_character_has_none(self, b02, w02):
        lam = b02.weight(1, 1)
        chi_tilde = g_char_of(b02, w02, lam)
        assert induction_overlaps(b02, w02, chi_tilde, g0_char_of(b02, w02, lam)) == ()

    def test_overlapping_candidate(self, b02, w02):
        chi_tilde = g_char_of(b02, w02, b02.weight(1, 1))
        overlaps = induction_overlaps(b02, w02, chi_tilde, g0_char_of(b02, w02, b02.weight(0, 1)))
        assert b02.weight(0, 1) in overlaps

    def test_rank_one_candidates_have_none(self, b01, w01):
        chi_tilde = g_char_of(b01, w01, b01.weight(1))
        for chi in candidate_mates_strong(b01, w01, chi_tilde):
            assert induction_overlaps(b01, w01, chi_tilde, chi) == ()
