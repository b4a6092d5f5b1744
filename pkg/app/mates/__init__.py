from app.mates.construction import choose_lambda, construct_mate
from app.mates.models import MateReport, PerfectMateCheck, PerfectMateReport
from app.mates.verification import (
    candidate_mates_strong,
    induction_overlaps,
    verify_mate,
    verify_perfect,
)

__all__ = [
    "MateReport",
    "PerfectMateCheck",
    "PerfectMateReport",
    "choose_lambda",
    "construct_mate",
    "verify_mate",
    "verify_perfect",
    "candidate_mates_strong",
    "induction_overlaps",
]
