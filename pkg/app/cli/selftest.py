"""Built-in oracle suite: worked examples recomputed from scratch"""

import argparse
from fractions import Fraction
from typing import Callable, List, Tuple

from pydantic import BaseModel

from app.cli.base import Command
from app.cli.session import CommandSession
from app.core_math.characters import induced_character, kostant_partition, truncated_character
from app.core_math.weights import Ambient
from app.central_chars import TypicalityKind, classify, eval_Q, eval_T, g_char_of
from app.equivalence import Direction, context_from_weight, round_trip
from app.exceptions import SupertypicalError
from app.logger import get_logger
from app.mates import construct_mate, verify_mate, verify_perfect
from app.root_systems import FamilySpec, build_family
from app.schemas import CheckOut, SelftestResponse
from app.verma_flags import (
    GradedVermaFlag,
    block_decompose,
    gamma_sets,
    induction_flag,
    restriction_flag,
)
from app.weyl import generate

logger = get_logger("selftest")

Check = Callable[[], Tuple[bool, str]]


def _b0(n: int):
    data = build_family(FamilySpec.b0n(n))
    return data, generate(data)


def _rho_vectors() -> Tuple[bool, str]:
    for l in range(1, 5):
        data, _ = _b0(l)
        expected = data.weight(*(Fraction(2 * (l - i) - 1, 2) for i in range(l)))
        if data.rho != expected or data.rho1 != data.weight(*([Fraction(1, 2)] * l)):
            return False, f"B(0,{l}): rho = {data.rho}, rho1 = {data.rho1}"
    return True, "rho = (l - i + 1/2)_i and rho1 = (1/2, ..., 1/2) for l = 1..4"


def _weyl_orders() -> Tuple[bool, str]:
    orders = [generate(build_family(FamilySpec.b0n(l))).order for l in (1, 2, 3)]
    return orders == [2, 8, 48], f"orders {orders}"


def _partitions() -> Tuple[bool, str]:
    data, _ = _b0(2)
    values = (
        kostant_partition(data, True, data.zero()),
        kostant_partition(data, True, data.weight(2, 0)),
        kostant_partition(data, True, data.weight(1, 0)),
    )
    return values == (1, 3, 0), f"P(0), P(2 sigma1), P(sigma1) = {values}"


def _classification() -> Tuple[bool, str]:
    data, _ = _b0(2)
    strong = classify(data, data.weight(1, 1))
    weak = classify(data, data.weight("1/2", "-1/2"))
    minus_rho = classify(data, -data.rho)
    ok = (
        strong.kind is TypicalityKind.STRONGLY_TYPICAL
        and eval_T(data, data.weight(1, 1)) == Fraction(15, 4)
        and weak.kind is TypicalityKind.TYPICAL_NOT_STRONG
        and weak.generic_weakly_atypical
        and minus_rho.kind is TypicalityKind.TYPICAL_NOT_STRONG
        and len(minus_rho.vanishing_odd_roots) == 2
    )
    return ok, f"kinds {strong.kind.value}, {weak.kind.value}, {minus_rho.kind.value}"


def _gl11() -> Tuple[bool, str]:
    data = build_family(FamilySpec.glmn(1, 1))
    typical = eval_Q(data, data.weight(1, 0) - data.rho)
    atypical = classify(data, data.weight(1, -1) - data.rho)
    ok = typical == 1 and atypical.kind is TypicalityKind.ATYPICAL
    return ok, f"Q(eps1 - rho) = {typical}, kind at eps1 - delta1 - rho: {atypical.kind.value}"


def _blocks() -> Tuple[bool, str]:
    data, G = _b0(2)
    weak = block_decompose(data, G, restriction_flag(data, data.weight("1/2", "-1/2")))
    strong = block_decompose(data, G, restriction_flag(data, data.weight(1, 1)))
    sizes = (sorted(len(b) for b in weak.values()), sorted(len(b) for b in strong.values()))
    return sizes == ([2, 2], [1, 1, 1, 1]), f"block sizes {sizes}"


def _character_oracle() -> Tuple[bool, str]:
    data, _ = _b0(2)
    lam = data.weight("1/2", "-1/2")
    module = truncated_character(data, GradedVermaFlag.single(Ambient.G, lam), 3)
    flag = truncated_character(data, restriction_flag(data, lam), 3)
    induced = induced_character(data, lam, 3)
    from_induction = truncated_character(data, induction_flag(data, lam), 3)
    return module == flag and induced == from_induction, "depth 3 restriction and induction identities"


def _mates(l: int, shifted: Tuple[int, ...]) -> Check:
    def check() -> Tuple[bool, str]:
        data, G = _b0(l)
        chi_tilde = g_char_of(data, G, data.weight(*shifted) - data.rho)
        lam, chi = construct_mate(data, G, chi_tilde)
        mate = verify_mate(data, G, lam, chi)
        perfect = verify_perfect(data, G, lam, chi, threads=1)
        ok = mate.is_mate and mate.orbit_consistent and perfect.is_perfect
        return ok, f"lambda = {lam}, matched {[str(g) for g in mate.matched_gammas]}"

    return check


def _round_trips() -> Tuple[bool, str]:
    data, G = _b0(2)
    results = []
    for lam in (data.weight(1, 1), data.weight("1/2", "-1/2")):
        ctx = context_from_weight(data, G, lam)
        results.append(round_trip(ctx, GradedVermaFlag.single(Ambient.G, lam), Direction.PSI_PHI).equal)
        results.append(
            round_trip(ctx, GradedVermaFlag.single(Ambient.G0, lam), Direction.PHI_PSI).equal
        )
    return all(results), f"round trips {results}"


def _gamma() -> Tuple[bool, str]:
    cube = gamma_sets(2)
    ok = [list(map(str, cube.gamma0)), list(map(str, cube.gamma1))] == [
        ["(0, 0)", "(1, 1)"],
        ["(1, 0)", "(0, 1)"],
    ]
    return ok, "Gamma0 / Gamma1 for l = 2"


CHECKS: List[Tuple[str, Check]] = [
    ("rho_vectors", _rho_vectors),
    ("weyl_orders", _weyl_orders),
    ("kostant_partition", _partitions),
    ("gamma_sets", _gamma),
    ("classify_b02", _classification),
    ("classify_gl11", _gl11),
    ("block_decompose", _blocks),
    ("character_oracle", _character_oracle),
    ("mate_b02", _mates(2, (2, 0))),
    ("mate_b03", _mates(3, (3, 1, 0))),
    ("round_trips", _round_trips),
]


def run_checks() -> SelftestResponse:
    results = []
    for name, check in CHECKS:
        try:
            passed, detail = check()
        except SupertypicalError as e:
            passed, detail = False, f"{type(e).__name__}: {e.message}"
        logger.info("Selftest check", check=name, passed=passed)
        results.append(CheckOut(name=name, passed=passed, detail=detail))
    failed = sum(1 for r in results if not r.passed)
    return SelftestResponse(passed=len(results) - failed, failed=failed, checks=results)


class SelftestCommand(Command):
    def add_arguments(self, parser: argparse.ArgumentParser) -> None:
        pass

    def execute(self, args: argparse.Namespace, session: CommandSession) -> BaseModel:
        return run_checks()

    def get_description(self) -> str:
        return "Recompute the built-in worked examples and report pass/fail"

    def exit_code(self, response: BaseModel) -> int:
        return 0 if getattr(response, "failed", 1) == 0 else 1
