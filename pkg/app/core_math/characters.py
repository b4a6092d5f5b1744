"""Truncated formal characters

Verma characters are infinite; these functions return the finite part of a
character made of weights no lower than a fixed height below an anchor
weight. The anchor is shared by all entries of a flag, so that a flag and
the module it describes are truncated identically.

ch M(mu)  = e^mu / prod_{alpha in even+} (1 - e^-alpha)               (over g0)
ch M~(mu) = e^mu prod_{beta in odd+} (1 + e^-beta) / prod (1 - e^-alpha)  (over g)
"""

import itertools
import math
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Optional, Tuple, Union

from app.core_math.rational import is_integral
from app.core_math.weights import Ambient, Weight, WeightFunction, weight_sum
from app.exceptions import AmbientMismatchError, FamilyError, ValidationError
from app.logger import get_logger
from app.root_systems.models import FamilySpec, SuperRootData
from app.root_systems.operations import check_weight, height, simple_coordinates
from app.verma_flags.models import GradedVermaFlag

logger = get_logger("characters")

IntVector = Tuple[int, ...]


class _PartitionCounter:
    """Memoized partition counts over integer simple-root coordinates"""

    def __init__(self, data: SuperRootData, even_only: bool):
        rows: list[Tuple[IntVector, bool]] = []
        for alpha in data.delta0_plus:
            rows.append((self._integer_coords(data, alpha), False))
        if not even_only:
            for beta in data.delta1_plus:
                rows.append((self._integer_coords(data, beta), True))
        self._roots = tuple(rows)
        self._memo: Dict[Tuple[int, IntVector], int] = {}

    @staticmethod
    def _integer_coords(data: SuperRootData, root: Weight) -> IntVector:
        coords = simple_coordinates(data, root)
        if coords is None or not is_integral(coords) or any(c < 0 for c in coords):
            raise FamilyError(f"Root {root} is not an N-combination of the simple roots")
        return tuple(int(c) for c in coords)

    def count(self, target: IntVector) -> int:
        return self._count(0, target)

    def _count(self, index: int, remainder: IntVector) -> int:
        if not any(remainder):
            return 1
        if index == len(self._roots):
            return 0
        key = (index, remainder)
        cached = self._memo.get(key)
        if cached is not None:
            return cached

        root, used_once = self._roots[index]
        total = 0
        current = remainder
        uses = 0
        while all(c >= 0 for c in current):
            total += self._count(index + 1, current)
            uses += 1
            if used_once and uses > 1:
                break
            current = tuple(c - r for c, r in zip(current, root))
        self._memo[key] = total
        return total

    @property
    def table_size(self) -> int:
        return len(self._memo)


_COUNTERS: Dict[Tuple[FamilySpec, bool], _PartitionCounter] = {}


def _counter_for(data: SuperRootData, even_only: bool) -> _PartitionCounter:
    key = (data.spec, even_only)
    counter = _COUNTERS.get(key)
    if counter is None:
        counter = _COUNTERS.setdefault(key, _PartitionCounter(data, even_only))
    return counter


def _target(data: SuperRootData, nu: Weight) -> Optional[IntVector]:
    coords = simple_coordinates(data, nu)
    if coords is None or not is_integral(coords) or any(c < 0 for c in coords):
        return None
    return tuple(int(c) for c in coords)


def kostant_partition(data: SuperRootData, even_only: bool, nu: Weight) -> int:
    """
    Number of ways to write nu as a sum of positive roots

    With even_only the roots are the even positive roots, each usable any
    number of times. Otherwise the odd positive roots are added, each usable
    at most once.

    Raises:
        RankMismatchError: If nu is not in the basis of data
    """
    check_weight(data, nu)
    target = _target(data, nu)
    if target is None:
        return 0
    return _counter_for(data, even_only).count(target)


def _cone_below(data: SuperRootData, budget: int) -> Iterator[Tuple[Weight, IntVector]]:
    """All N-combinations of simple roots of height <= budget"""
    k = len(data.simple_roots)
    for total in range(budget + 1):
        # compositions of total into k non-negative parts
        for cuts in itertools.combinations_with_replacement(range(k), total):
            coeffs = [0] * k
            for index in cuts:
                coeffs[index] += 1
            beta = data.zero()
            for c, alpha in zip(coeffs, data.simple_roots):
                if c:
                    beta = beta + alpha.scale(c)
            yield beta, tuple(coeffs)


def _budget(depth: int, drop: Fraction) -> int:
    return math.floor(Fraction(depth) - drop)


def _single_ambient(flags: Iterable[GradedVermaFlag]) -> Tuple[Optional[Ambient], list]:
    flags = list(flags)
    ambients = {f.ambient for f in flags if not f.is_empty()}
    if len(ambients) > 1:
        raise AmbientMismatchError(
            "Cannot sum characters of flags over g and g0 in one table",
            details={"ambients": sorted(a.value for a in ambients)},
        )
    return (ambients.pop() if ambients else None), flags


def truncated_character(
    data: SuperRootData,
    flag: Union[GradedVermaFlag, Iterable[GradedVermaFlag]],
    depth: int,
    *,
    split_parity: bool = False,
    anchor: Optional[Weight] = None,
) -> Union[WeightFunction, Tuple[WeightFunction, WeightFunction]]:
    """
    Truncated character of a Verma flag

    Each entry (mu, p) contributes the Verma character of mu (over g0 or g
    according to the flag ambient) restricted to weights nu with
    height(anchor - nu) <= depth. The anchor defaults to the highest entry.

    Args:
        data: Root data of the family
        flag: A flag, or several flags over the same ambient
        depth: Truncation depth, >= 0
        split_parity: Return (parity-0 table, parity-1 table) instead of the sum
        anchor: Weight the depth is measured from

    Raises:
        ValidationError: If depth is negative
        AmbientMismatchError: If flags over g and g0 are mixed
    """
    if depth < 0:
        raise ValidationError(f"Depth must be non-negative, got {depth}")
    ambient, flags = _single_ambient([flag] if isinstance(flag, GradedVermaFlag) else flag)

    tables: list[Dict[Weight, int]] = [{}, {}]
    entries = [(e, m) for f in flags for e, m in f.items()]
    if ambient is None or not entries:
        empty = WeightFunction()
        return (empty, WeightFunction()) if split_parity else empty

    for entry, _ in entries:
        check_weight(data, entry.weight, what="flag entry")
    if anchor is None:
        base = entries[0][0].weight
        anchor = max((e.weight for e, _ in entries), key=lambda w: height(data, w - base))
    check_weight(data, anchor, what="anchor")

    counter = _counter_for(data, even_only=ambient is Ambient.G0)
    for entry, multiplicity in entries:
        budget = _budget(depth, height(data, anchor - entry.weight))
        if budget < 0:
            continue
        table = tables[entry.parity if split_parity else 0]
        for beta, coeffs in _cone_below(data, budget):
            count = counter.count(coeffs)
            if count:
                nu = entry.weight - beta
                table[nu] = table.get(nu, 0) + multiplicity * count

    logger.debug(
        "Truncated character computed",
        family=data.spec.label,
        ambient=ambient.value,
        entries=len(entries),
        depth=depth,
        memo=counter.table_size,
    )
    if split_parity:
        return WeightFunction(tables[0]), WeightFunction(tables[1])
    return WeightFunction(tables[0])


def _subset_sums(roots: Tuple[Weight, ...], data: SuperRootData) -> list[Weight]:
    sums = []
    for size in range(len(roots) + 1):
        for subset in itertools.combinations(roots, size):
            sums.append(weight_sum(subset, data.rank, data.basis_tag))
    return sums


def induced_character(data: SuperRootData, mu: Weight, depth: int) -> WeightFunction:
    """
    Truncated character of the module induced from the g0-Verma module M(mu)

    Computed as ch M(mu) * prod_{beta in odd+} (1 + e^beta)(1 + e^-beta),
    truncated below the anchor mu + sum(odd+).
    """
    if depth < 0:
        raise ValidationError(f"Depth must be non-negative, got {depth}")
    check_weight(data, mu)
    odd = data.delta1_plus
    top_shift = weight_sum(odd, data.rank, data.basis_tag)
    counter = _counter_for(data, even_only=True)

    table: Dict[Weight, int] = {}
    sums = _subset_sums(odd, data)
    for raised in sums:
        for lowered in sums:
            shift = raised - lowered
            budget = _budget(depth, height(data, top_shift - shift))
            if budget < 0:
                continue
            top = mu + shift
            for beta, coeffs in _cone_below(data, budget):
                count = counter.count(coeffs)
                if count:
                    nu = top - beta
                    table[nu] = table.get(nu, 0) + count
    return WeightFunction(table)
