"""Exhaustive mate checks over the Gamma cube and the Weyl group"""

from concurrent.futures import ThreadPoolExecutor
from typing import Optional, Tuple

from app.core_math.weights import Ambient, Weight
from app.exceptions import AmbientMismatchError, NotGenericError
from app.logger import get_logger
from app.settings import get_settings
from app.root_systems.models import SuperRootData
from app.root_systems.operations import check_weight, lt, require_b0n
from app.weyl.actions import dot, dot_orbit, stabilizer, star
from app.weyl.group import WeylGroup
from app.central_chars.characters import g0_char_of
from app.central_chars.evaluation import classify
from app.central_chars.models import CentralCharacter, TypicalityKind
from app.verma_flags.blocks import block_decompose, block_multiplicity, block_of
from app.verma_flags.flags import restriction_flag
from app.verma_flags.gamma import gamma_parity, gamma_sets, sigma
from app.mates.models import MateReport, PerfectMateCheck, PerfectMateReport

logger = get_logger("mates")


def _matched(
    data: SuperRootData, G: WeylGroup, lam: Weight, chi: CentralCharacter
) -> Tuple[Weight, ...]:
    cube = gamma_sets(data.rank, data.basis_tag)
    return tuple(gamma for gamma in cube.gamma if g0_char_of(data, G, lam - gamma) == chi)


def _is_split(matched: Tuple[Weight, ...]) -> bool:
    return len(matched) == 2 and sorted(gamma_parity(g) for g in matched) == [0, 1]


def verify_mate(
    data: SuperRootData, G: WeylGroup, lam: Weight, chi: CentralCharacter
) -> MateReport:
    """
    Find the gamma with M(lambda - gamma) in the block of chi

    The same test is repeated for every weight of the dot orbit of lambda;
    orbit_consistent reports whether each gives two matches of opposite parity.

    Raises:
        FamilyError: If data is not of type B(0,n)
        RankMismatchError: If lambda is not in the basis of data
        AmbientMismatchError: If chi is not a g0 character
    """
    require_b0n(data, "verify_mate")
    check_weight(data, lam)
    if chi.ambient is not Ambient.G0:
        raise AmbientMismatchError(
            f"Expected a central character of g0, got one of {chi.ambient.value}"
        )

    l = data.rank
    zero, last = data.zero(), sigma(l, l, data.basis_tag)
    matched = _matched(data, G, lam, chi)
    parities = tuple(gamma_parity(g) for g in matched)
    is_mate = set(matched) == {zero, last} and sorted(parities) == [0, 1]

    orbit = dot_orbit(data, G, lam)
    orbit_consistent = all(_is_split(_matched(data, G, other, chi)) for other in orbit)

    logger.debug(
        "Mate verified",
        lam=str(lam),
        chi=str(chi),
        matched=len(matched),
        is_mate=is_mate,
        orbit_consistent=orbit_consistent,
    )
    return MateReport(
        lam=lam,
        chi=chi,
        matched_gammas=matched,
        matched_parities=parities,
        is_mate=is_mate,
        graded_split=(lam, lam - last) if is_mate else None,
        orbit_consistent=orbit_consistent,
        orbit_size=len(orbit),
    )


def _included(G: WeylGroup, fixed: Weight, target: Weight) -> bool:
    """Stab(fixed) is contained in Stab(target)"""
    return all(w.apply(target) == target for w in stabilizer(G, fixed))


def verify_perfect(
    data: SuperRootData,
    G: WeylGroup,
    lam: Weight,
    chi: CentralCharacter,
    threads: Optional[int] = None,
) -> PerfectMateReport:
    """
    Check that the chi block stays a two-member Verma flag down the dot orbit

    For every w, the pair {w.lambda - w*0, w.lambda - w*sigma_l} must avoid
    X_w, the union of the same pairs over all y with y.lambda < w.lambda.
    Also checks Stab(lambda + rho0) and Stab(lambda + rho0 - sigma_l) are
    contained in Stab(lambda + rho). Failures are reported, not raised.

    Args:
        threads: Worker threads for the per-w loop (default: settings compute.threads)
    """
    require_b0n(data, "verify_perfect")
    check_weight(data, lam)
    if threads is None:
        threads = get_settings().compute.threads

    l = data.rank
    zero, last = data.zero(), sigma(l, l, data.basis_tag)
    elements = G.elements
    dots = [dot(data, w, lam) for w in elements]
    pairs = [
        (mu - star(data, w, zero), mu - star(data, w, last)) for w, mu in zip(elements, dots)
    ]

    def check(index: int) -> PerfectMateCheck:
        mu = dots[index]
        below = set()
        for other, pair in zip(dots, pairs):
            if lt(data, other, mu):
                below.update(pair)
        return PerfectMateCheck(
            word=elements[index].word,
            dot_weight=mu,
            pair=pairs[index],
            x_size=len(below),
            disjoint=not (set(pairs[index]) & below),
        )

    indices = range(len(elements))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            per_w = tuple(pool.map(check, indices))
    else:
        per_w = tuple(check(i) for i in indices)

    shifted = lam + data.rho
    report = PerfectMateReport(
        lam=lam,
        chi=chi,
        per_w=per_w,
        incl_rho0=_included(G, lam + data.rho0, shifted),
        incl_rho0_minus_sigma_l=_included(G, lam + data.rho0 - last, shifted),
    )
    if not report.is_perfect:
        logger.info(
            "Perfect mate check failed",
            lam=str(lam),
            failures=len(report.failures),
            stab=report.stab_inclusions,
        )
    return report


def candidate_mates_strong(
    data: SuperRootData, G: WeylGroup, chi_tilde: CentralCharacter
) -> list[CentralCharacter]:
    """
    Support characters of the restriction of the dot-maximal Verma module of
    chi_tilde that occur with flag multiplicity 1 for every weight of the orbit

    Raises:
        FamilyError: If data is not of type B(0,n)
        NotGenericError: If chi_tilde is not strongly typical
    """
    require_b0n(data, "candidate_mates_strong")
    if chi_tilde.ambient is not Ambient.G:
        raise AmbientMismatchError(
            f"Expected a central character of g, got one of {chi_tilde.ambient.value}"
        )
    lam_max = chi_tilde.weight()
    if classify(data, lam_max).kind is not TypicalityKind.STRONGLY_TYPICAL:
        raise NotGenericError(
            f"{chi_tilde} is not strongly typical",
            details={"rep": chi_tilde.rep.to_json()},
        )

    support = list(block_decompose(data, G, restriction_flag(data, lam_max)))
    orbit = dot_orbit(data, G, lam_max)
    candidates = [
        chi
        for chi in support
        if all(block_multiplicity(data, G, other, chi) == 1 for other in orbit)
    ]
    logger.debug(
        "Strong candidates", chi_tilde=str(chi_tilde), support=len(support), candidates=len(candidates)
    )
    return candidates


def induction_overlaps(
    data: SuperRootData, G: WeylGroup, chi_tilde: CentralCharacter, chi: CentralCharacter
) -> Tuple[Weight, ...]:
    """
    Highest weights mu of the chi block, taken over the restriction flags of
    the whole dot orbit, for which the number of gamma with mu + gamma in
    that orbit is not exactly one

    An empty result means inducing any of these M(mu) and keeping the chi~
    block gives a single Verma module.

    Raises:
        FamilyError: If data is not of type B(0,n)
    """
    require_b0n(data, "induction_overlaps")
    orbit = set(dot_orbit(data, G, chi_tilde.weight()))
    cube = gamma_sets(data.rank, data.basis_tag)
    failing = set()
    for other in orbit:
        for entry in block_of(data, G, restriction_flag(data, other), chi):
            hits = sum(1 for gamma in cube.gamma if entry.weight + gamma in orbit)
            if hits != 1:
                failing.add(entry.weight)
    if failing:
        logger.debug(
            "Induction overlaps", chi_tilde=str(chi_tilde), chi=str(chi), count=len(failing)
        )
    return tuple(sorted(failing, key=lambda mu: mu.coords, reverse=True))
