"""Linear, dot and star actions; orbits, stabilizers, canonical representatives"""

from typing import Optional, Tuple

from app.core_math.weights import Weight, descending_order
from app.exceptions import GammaError
from app.logger import get_logger
from app.root_systems.models import SuperRootData
from app.root_systems.operations import check_weight, require_b0n
from app.weyl.group import WeylElement, WeylGroup

logger = get_logger("weyl")


def act(w: WeylElement, mu: Weight) -> Weight:
    """The linear action w(mu)"""
    return w.apply(mu)


def dot(data: SuperRootData, w: WeylElement, mu: Weight) -> Weight:
    """w.mu = w(mu + rho) - rho"""
    check_weight(data, mu)
    return w.apply(mu + data.rho) - data.rho


def _require_gamma(gamma: Weight) -> None:
    if not all(c in (0, 1) for c in gamma.coords):
        raise GammaError(
            f"{gamma} is not a 0/1 vector",
            details={"received": gamma.to_json()},
        )


def star(data: SuperRootData, w: WeylElement, gamma: Weight) -> Weight:
    """
    w*gamma = w(gamma - rho1) + rho1 on the Gamma cube of osp(1,2l)

    Raises:
        FamilyError: If data is not of type B(0,n)
        GammaError: If gamma (or, impossibly, its image) is not a 0/1 vector
    """
    require_b0n(data, "star action")
    check_weight(data, gamma, what="gamma")
    _require_gamma(gamma)
    image = w.apply(gamma - data.rho1) + data.rho1
    _require_gamma(image)
    return image


def orbit(
    G: WeylGroup,
    mu: Weight,
    shifted_by: Optional[Weight] = None,
    report_shifted: bool = False,
) -> Tuple[Weight, ...]:
    """
    The orbit {w(mu + s)} of mu + s

    With a shift s and report_shifted False the orbit is reported as
    {w(mu + s) - s}; s = rho gives the dot orbit of mu. Results are
    distinct and sorted greatest first.
    """
    start = mu if shifted_by is None else mu + shifted_by
    points = {w.apply(start) for w in G}
    if shifted_by is not None and not report_shifted:
        points = {p - shifted_by for p in points}
    return tuple(descending_order(points))


def dot_orbit(data: SuperRootData, G: WeylGroup, mu: Weight) -> Tuple[Weight, ...]:
    check_weight(data, mu)
    return orbit(G, mu, shifted_by=data.rho)


def stabilizer(G: WeylGroup, mu: Weight) -> WeylGroup:
    """The subgroup {w : w(mu) = mu}"""
    return G.subgroup(tuple(w for w in G if w.apply(mu) == mu))


def canonical_rep(G: WeylGroup, mu: Weight) -> Weight:
    """The lexicographically greatest element of the orbit of mu"""
    if G.signed_permutation:
        # signed permutations: all entries non-negative, sorted descending
        return Weight(tuple(sorted((abs(c) for c in mu.coords), reverse=True)), mu.basis_tag)
    return orbit(G, mu)[0]


def in_same_orbit(G: WeylGroup, mu: Weight, nu: Weight) -> bool:
    return canonical_rep(G, mu) == canonical_rep(G, nu)
