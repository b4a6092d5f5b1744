"""Flag data models

A GradedVermaFlag is the multiset of (highest weight, parity) pairs of the
Verma factors of a module over g or g0. Flags are immutable; every
operation returns a new flag.
"""

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Tuple, Union

from app.core_math.weights import Ambient, Weight
from app.exceptions import AmbientMismatchError, RankMismatchError, ValidationError


@dataclass(frozen=True)
class GammaSet:
    """The 0/1 cube of rank l split by coordinate-sum parity"""

    l: int
    gamma: Tuple[Weight, ...]
    gamma0: Tuple[Weight, ...]
    gamma1: Tuple[Weight, ...]

    def part(self, parity: int) -> Tuple[Weight, ...]:
        return self.gamma0 if parity % 2 == 0 else self.gamma1


@dataclass(frozen=True, order=False)
class FlagEntry:
    """One Verma factor: highest weight and Z/2 parity"""

    weight: Weight
    parity: int

    def __post_init__(self) -> None:
        if self.parity not in (0, 1):
            raise ValidationError(f"Parity must be 0 or 1, got {self.parity}")

    def flipped(self) -> "FlagEntry":
        return FlagEntry(self.weight, 1 - self.parity)

    def sort_key(self) -> tuple:
        # greatest weight first, then even before odd
        return (tuple(-c for c in self.weight.coords), self.parity)


EntryLike = Union[FlagEntry, Tuple[Weight, int]]


def _as_entry(item: EntryLike) -> FlagEntry:
    if isinstance(item, FlagEntry):
        return item
    weight, parity = item
    return FlagEntry(weight, parity)


class GradedVermaFlag:
    """Finite multiset of Verma factors over one ambient algebra"""

    __slots__ = ("_ambient", "_counts")

    def __init__(self, ambient: Ambient, entries: Mapping[FlagEntry, int] | None = None):
        counts: Counter = Counter()
        shape = None
        for entry, multiplicity in (entries or {}).items():
            if multiplicity < 0:
                raise ValidationError(f"Negative multiplicity {multiplicity} for {entry.weight}")
            if multiplicity == 0:
                continue
            key = (entry.weight.basis_tag, entry.weight.rank)
            if shape is None:
                shape = key
            elif shape != key:
                raise RankMismatchError(f"{shape[0]}[{shape[1]}]", f"{key[0]}[{key[1]}]")
            counts[entry] += multiplicity
        self._ambient = Ambient(ambient)
        self._counts = counts

    @classmethod
    def of(cls, ambient: Ambient, entries: Iterable[EntryLike]) -> "GradedVermaFlag":
        """Build a flag from (weight, parity) pairs; repeats add multiplicity"""
        counts: Counter = Counter(_as_entry(item) for item in entries)
        return cls(ambient, counts)

    @classmethod
    def empty(cls, ambient: Ambient) -> "GradedVermaFlag":
        return cls(ambient)

    @classmethod
    def single(cls, ambient: Ambient, weight: Weight, parity: int = 0) -> "GradedVermaFlag":
        return cls(ambient, {FlagEntry(weight, parity): 1})

    @property
    def ambient(self) -> Ambient:
        return self._ambient

    def items(self) -> list[Tuple[FlagEntry, int]]:
        """Entries with multiplicities in deterministic order"""
        return sorted(self._counts.items(), key=lambda kv: kv[0].sort_key())

    def entries(self) -> list[FlagEntry]:
        """Entries repeated by multiplicity, deterministic order"""
        return [entry for entry, mult in self.items() for _ in range(mult)]

    def multiplicity(self, entry: EntryLike) -> int:
        return self._counts.get(_as_entry(entry), 0)

    def weights(self) -> Counter:
        """Multiset of highest weights, parity forgotten"""
        result: Counter = Counter()
        for entry, mult in self._counts.items():
            result[entry.weight] += mult
        return result

    def parity_counts(self) -> Tuple[int, int]:
        even = sum(m for e, m in self._counts.items() if e.parity == 0)
        odd = sum(m for e, m in self._counts.items() if e.parity == 1)
        return even, odd

    def is_empty(self) -> bool:
        return not self._counts

    def union(self, other: "GradedVermaFlag") -> "GradedVermaFlag":
        """Multiset union (sum of multiplicities)"""
        if other.ambient is not self.ambient:
            raise AmbientMismatchError(
                f"Cannot combine a flag over {self.ambient.value} with one over {other.ambient.value}"
            )
        merged = Counter(self._counts)
        merged.update(other._counts)
        return GradedVermaFlag(self.ambient, merged)

    def __add__(self, other: "GradedVermaFlag") -> "GradedVermaFlag":
        return self.union(other)

    def flip(self) -> "GradedVermaFlag":
        """Swap parities 0 and 1 on every entry"""
        return GradedVermaFlag(
            self.ambient, {entry.flipped(): mult for entry, mult in self._counts.items()}
        )

    def shift_parity(self, parity: int) -> "GradedVermaFlag":
        return self.flip() if parity % 2 else self

    def with_parity(self, parity: int) -> "GradedVermaFlag":
        """The sub-flag of entries of the given parity"""
        return GradedVermaFlag(
            self.ambient,
            {entry: mult for entry, mult in self._counts.items() if entry.parity == parity},
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GradedVermaFlag):
            return NotImplemented
        return self.ambient is other.ambient and self._counts == other._counts

    def __hash__(self) -> int:
        return hash((self.ambient, frozenset(self._counts.items())))

    def __len__(self) -> int:
        return sum(self._counts.values())

    def __iter__(self) -> Iterator[FlagEntry]:
        return iter(self.entries())

    def __repr__(self) -> str:
        body = ", ".join(f"({e.weight}, {e.parity})x{m}" for e, m in self.items())
        return f"GradedVermaFlag[{self.ambient.value}]{{{body}}}"

    def to_json(self) -> list[dict]:
        return [
            {"weight": e.weight.to_json(), "parity": e.parity, "multiplicity": m}
            for e, m in self.items()
        ]


def flag_union(flags: Iterable[GradedVermaFlag], ambient: Ambient) -> GradedVermaFlag:
    result = GradedVermaFlag.empty(ambient)
    for flag in flags:
        result = result.union(flag)
    return result
