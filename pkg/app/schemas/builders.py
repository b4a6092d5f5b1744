"""Conversion of domain results to response models"""

from typing import Iterable, Optional

from app.core_math.rational import format_rational
from app.core_math.weights import Weight
from app.central_chars.models import CentralCharacter, Classification, VermaProperties
from app.equivalence.functors import RoundTripReport
from app.mates.models import MateReport, PerfectMateCheck, PerfectMateReport
from app.root_systems.base import form_entries
from app.root_systems.models import SuperRootData
from app.root_systems.operations import typicality_notions_coincide
from app.schemas.models import (
    BlockOut,
    CharacterOut,
    ClassifyResponse,
    FlagEntryOut,
    PerfectCheckOut,
    PerfectResponse,
    RootsResponse,
    RoundTripOut,
    VermaOut,
    WeightOut,
)
from app.verma_flags.models import GradedVermaFlag


def weight_out(weight: Weight) -> WeightOut:
    return weight.to_json()


def weights_out(weights: Iterable[Weight]) -> list[WeightOut]:
    return [w.to_json() for w in weights]


def character_out(chi: CentralCharacter) -> CharacterOut:
    return CharacterOut(ambient=chi.ambient.value, rep=chi.rep.to_json(), shift=chi.shift.to_json())


def flag_out(flag: GradedVermaFlag) -> list[FlagEntryOut]:
    return [
        FlagEntryOut(weight=e.weight.to_json(), parity=e.parity, multiplicity=m)
        for e, m in flag.items()
    ]


def roots_response(data: SuperRootData, weyl_order: int) -> RootsResponse:
    return RootsResponse(
        family=data.spec.label,
        rank=data.rank,
        form=[[format_rational(x) for x in row] for row in form_entries(data.form)],
        delta0_plus=weights_out(data.delta0_plus),
        delta1_plus=weights_out(data.delta1_plus),
        delta1_plus_isotropic=weights_out(data.delta1_plus_isotropic),
        simple_roots=weights_out(data.simple_roots),
        even_simple_roots=weights_out(data.even_simple_roots),
        rho=data.rho.to_json(),
        rho0=data.rho0.to_json(),
        rho1=data.rho1.to_json(),
        weyl_order=weyl_order,
        typicality_notions_coincide=typicality_notions_coincide(data),
    )


def classify_response(
    data: SuperRootData,
    classification: Classification,
    chi_tilde: CentralCharacter,
    verma: Optional[VermaProperties] = None,
) -> ClassifyResponse:
    lam = classification.weight
    return ClassifyResponse(
        family=data.spec.label,
        weight=lam.to_json(),
        lambda_plus_rho=(lam + data.rho).to_json(),
        kind=classification.kind.value,
        vanishing_roots=weights_out(classification.vanishing_odd_roots),
        generic=classification.generic_weakly_atypical,
        T_value=format_rational(classification.t_value),
        Q_value=format_rational(classification.q_value),
        central_character=character_out(chi_tilde),
        verma=(
            VermaOut(projective=verma.projective, simple=verma.simple, orbit_size=verma.orbit_size)
            if verma is not None
            else None
        ),
    )


def block_out(chi: CentralCharacter, block: GradedVermaFlag) -> BlockOut:
    even, odd = block.parity_counts()
    return BlockOut(
        character=chi.key,
        rep=chi.rep.to_json(),
        multiplicity=len(block),
        parities=[0] * even + [1] * odd,
        entries=flag_out(block),
    )


def perfect_check_out(check: PerfectMateCheck) -> PerfectCheckOut:
    return PerfectCheckOut(
        word=list(check.word),
        dot_weight=check.dot_weight.to_json(),
        pair=weights_out(check.pair),
        x_size=check.x_size,
        disjoint=check.disjoint,
    )


def perfect_response(
    data: SuperRootData, report: PerfectMateReport, verbose: bool = False
) -> PerfectResponse:
    return PerfectResponse(
        family=data.spec.label,
        weight=report.lam.to_json(),
        chi=character_out(report.chi),
        is_perfect=report.is_perfect,
        checked=len(report.per_w),
        incl_rho0=report.incl_rho0,
        incl_rho0_minus_sigma_l=report.incl_rho0_minus_sigma_l,
        failures=[perfect_check_out(c) for c in report.failures],
        per_w=[perfect_check_out(c) for c in report.per_w] if verbose else None,
    )


def mate_fields(report: MateReport) -> dict:
    return {
        "matched_gammas": weights_out(report.matched_gammas),
        "matched_parities": list(report.matched_parities),
        "is_mate": report.is_mate,
        "graded_split": weights_out(report.graded_split) if report.graded_split else None,
        "orbit_consistent": report.orbit_consistent,
    }


def round_trip_out(report: RoundTripReport) -> RoundTripOut:
    return RoundTripOut(
        direction=report.direction.value,
        input=flag_out(report.input),
        forward=flag_out(report.forward),
        back=flag_out(report.back),
        equal=report.equal,
    )
