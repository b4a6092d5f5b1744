"""Weights and weight-indexed tables

A Weight is an immutable vector of exact rationals in the orthogonal basis
of one root-system family, tagged with that family's basis name. Arithmetic
between weights of different rank or basis raises RankMismatchError.
"""

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

from app.core_math.rational import format_rational, parse_rational
from app.exceptions import RankMismatchError, ValidationError


class Ambient(str, Enum):
    """The algebra a module, flag or central character lives over"""

    G = "g"
    G0 = "g0"


@dataclass(frozen=True)
class Weight:
    """Exact weight vector in a family basis"""

    coords: Tuple[Fraction, ...]
    basis_tag: str

    @classmethod
    def of(cls, values: Iterable[Union[Fraction, int, str]], basis_tag: str) -> "Weight":
        """Build a weight from ints, Fractions or "p/q" strings"""
        return cls(tuple(parse_rational(v) for v in values), basis_tag)

    @classmethod
    def zero(cls, rank: int, basis_tag: str) -> "Weight":
        return cls(tuple(Fraction(0) for _ in range(rank)), basis_tag)

    @classmethod
    def unit(cls, index: int, rank: int, basis_tag: str) -> "Weight":
        """The basis vector with a 1 in position index (0-based)"""
        return cls(
            tuple(Fraction(1 if i == index else 0) for i in range(rank)),
            basis_tag,
        )

    @property
    def rank(self) -> int:
        return len(self.coords)

    def check_compatible(self, other: "Weight") -> None:
        if self.rank != other.rank or self.basis_tag != other.basis_tag:
            raise RankMismatchError(
                f"{self.basis_tag}[{self.rank}]", f"{other.basis_tag}[{other.rank}]"
            )

    def __add__(self, other: "Weight") -> "Weight":
        self.check_compatible(other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)), self.basis_tag)

    def __sub__(self, other: "Weight") -> "Weight":
        self.check_compatible(other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)), self.basis_tag)

    def __neg__(self) -> "Weight":
        return Weight(tuple(-a for a in self.coords), self.basis_tag)

    def scale(self, factor: Union[Fraction, int]) -> "Weight":
        return Weight(tuple(a * factor for a in self.coords), self.basis_tag)

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def coordinate_sum(self) -> Fraction:
        return sum(self.coords, Fraction(0))

    def to_json(self) -> list[str]:
        return [format_rational(a) for a in self.coords]

    def __str__(self) -> str:
        return "(" + ", ".join(format_rational(a) for a in self.coords) + ")"


def weight_sum(weights: Iterable[Weight], rank: int, basis_tag: str) -> Weight:
    total = Weight.zero(rank, basis_tag)
    for weight in weights:
        total = total + weight
    return total


def descending_order(weights: Iterable[Weight]) -> list[Weight]:
    """Sort weights lexicographically, greatest first (deterministic report order)"""
    return sorted(weights, key=lambda w: w.coords, reverse=True)


class WeightFunction:
    """Finite map Weight -> positive integer (a truncated character table)

    Zero values are never stored, so equality of tables is equality of
    their supports and values. Instances are immutable.
    """

    __slots__ = ("_entries", "_basis_tag")

    def __init__(self, entries: Mapping[Weight, int] | None = None):
        cleaned: Dict[Weight, int] = {}
        tag = None
        for weight, value in (entries or {}).items():
            if value < 0:
                raise ValidationError(f"Negative multiplicity {value} at {weight}")
            if tag is None:
                tag = (weight.basis_tag, weight.rank)
            elif tag != (weight.basis_tag, weight.rank):
                raise RankMismatchError(f"{tag[0]}[{tag[1]}]", f"{weight.basis_tag}[{weight.rank}]")
            if value:
                cleaned[weight] = value
        self._entries = cleaned
        self._basis_tag = tag

    def get(self, weight: Weight) -> int:
        return self._entries.get(weight, 0)

    def items(self) -> list[Tuple[Weight, int]]:
        return sorted(self._entries.items(), key=lambda kv: kv[0].coords, reverse=True)

    def support(self) -> list[Weight]:
        return [w for w, _ in self.items()]

    def total(self) -> int:
        return sum(self._entries.values())

    def __add__(self, other: "WeightFunction") -> "WeightFunction":
        merged: Dict[Weight, int] = dict(self._entries)
        for weight, value in other._entries.items():
            merged[weight] = merged.get(weight, 0) + value
        return WeightFunction(merged)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightFunction):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        return hash(frozenset(self._entries.items()))

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[Weight]:
        return iter(self.support())

    def __repr__(self) -> str:
        body = ", ".join(f"{w}: {v}" for w, v in self.items())
        return "WeightFunction({" + body + "})"

    def to_json(self) -> list[dict]:
        return [{"weight": w.to_json(), "multiplicity": v} for w, v in self.items()]

