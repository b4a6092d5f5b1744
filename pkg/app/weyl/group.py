"""Weyl groups as exact rational matrix groups

Elements are sympy ImmutableMatrix instances acting on weight coordinates,
generated by the reflections in the even simple roots, each with one word
over those generators as witness. Equality is by matrix only.
"""

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, Iterator, Optional, Tuple

import sympy as sp

from app.core_math.weights import Weight
from app.exceptions import FamilyError, GroupOrderExceededError, RankMismatchError
from app.logger import get_logger
from app.settings import get_settings
from app.root_systems.base import as_column, form_inner, from_column, to_sympy
from app.root_systems.models import FamilyKind, SuperRootData

logger = get_logger("weyl")

Matrix = sp.ImmutableMatrix


def identity_matrix(rank: int) -> Matrix:
    return sp.ImmutableMatrix(sp.eye(rank))


def reflection_matrix(data: SuperRootData, alpha: Weight) -> Matrix:
    """
    Matrix of s_alpha(mu) = mu - 2 (mu, alpha) / (alpha, alpha) * alpha

    Raises:
        FamilyError: If alpha is isotropic
    """
    norm = form_inner(data.form, alpha, alpha)
    if norm == 0:
        raise FamilyError(f"Cannot reflect in the isotropic vector {alpha}")
    a = as_column(alpha)
    return sp.ImmutableMatrix(sp.eye(data.rank) - 2 * a * (a.T * data.form) / to_sympy(norm))


@dataclass(frozen=True)
class WeylElement:
    """A group element: matrix plus one generator word (1-based indices)"""

    matrix: Matrix
    word: Tuple[int, ...] = field(default=(), compare=False)

    @property
    def rank(self) -> int:
        return self.matrix.rows

    def apply(self, mu: Weight) -> Weight:
        if mu.rank != self.rank:
            raise RankMismatchError(self.rank, mu.rank)
        return from_column(self.matrix * as_column(mu), mu.basis_tag)

    def compose(self, other: "WeylElement") -> "WeylElement":
        """self * other (apply other first)"""
        return WeylElement(self.matrix * other.matrix, self.word + other.word)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return self.compose(other)

    def is_identity(self) -> bool:
        return self.matrix == identity_matrix(self.rank)

    def word_label(self) -> str:
        return "e" if not self.word else "".join(f"s{i}" for i in self.word)

    def __str__(self) -> str:
        return self.word_label()


@dataclass(frozen=True)
class WeylGroup:
    """A finite matrix group with its generating reflections

    elements[0] is the identity; elements are in breadth-first order, so
    each witness word is a shortest word.
    """

    elements: Tuple[WeylElement, ...]
    generators: Tuple[WeylElement, ...]
    rank: int
    basis_tag: str
    signed_permutation: bool = False

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> WeylElement:
        return self.elements[0]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[WeylElement]:
        return iter(self.elements)

    def __contains__(self, w: object) -> bool:
        return isinstance(w, WeylElement) and w.matrix in self._index()

    def _index(self) -> Dict[Matrix, WeylElement]:
        cached = self.__dict__.get("_index_cache")
        if cached is None:
            cached = {w.matrix: w for w in self.elements}
            object.__setattr__(self, "_index_cache", cached)
        return cached

    def find(self, matrix: Matrix) -> Optional[WeylElement]:
        """The stored element (with its witness word) for a matrix"""
        return self._index().get(matrix)

    def inverse(self, w: WeylElement) -> WeylElement:
        """Inverse via the reversed word; every generator is an involution"""
        result = self.identity
        for index in reversed(w.word):
            result = result * self.generators[index - 1]
        stored = self.find(result.matrix)
        return stored if stored is not None else result

    def subgroup(self, elements: Tuple[WeylElement, ...]) -> "WeylGroup":
        """A subgroup given by its elements; the elements themselves generate it"""
        ordered = tuple(sorted(elements, key=lambda w: (not w.is_identity(),)))
        return WeylGroup(
            elements=ordered,
            generators=tuple(w for w in ordered if not w.is_identity()),
            rank=self.rank,
            basis_tag=self.basis_tag,
        )


def generate(data: SuperRootData, cap: Optional[int] = None) -> WeylGroup:
    """
    Generate the Weyl group of g0 by breadth-first closure

    Args:
        data: Root data; the generators are the reflections in data.even_simple_roots
        cap: Maximum group order (default: settings compute.weyl_cap)

    Raises:
        GroupOrderExceededError: If the group has more than cap elements
    """
    if cap is None:
        cap = get_settings().compute.weyl_cap

    generators = tuple(
        WeylElement(reflection_matrix(data, alpha), (index,))
        for index, alpha in enumerate(data.even_simple_roots, start=1)
    )
    identity = WeylElement(identity_matrix(data.rank), ())
    seen: Dict[Matrix, WeylElement] = {identity.matrix: identity}
    ordered = [identity]
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        for generator in generators:
            candidate = current * generator
            if candidate.matrix in seen:
                continue
            if len(seen) >= cap:
                logger.warning("Weyl group cap exceeded", family=data.spec.label, cap=cap)
                raise GroupOrderExceededError(cap)
            seen[candidate.matrix] = candidate
            ordered.append(candidate)
            queue.append(candidate)

    group = WeylGroup(
        elements=tuple(ordered),
        generators=generators,
        rank=data.rank,
        basis_tag=data.basis_tag,
        signed_permutation=data.family is FamilyKind.B0N,
    )
    logger.debug("Weyl group generated", family=data.spec.label, order=group.order)
    return group
