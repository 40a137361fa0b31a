"""Signed compositions, bi-partitions and reflection subgroups.

A signed composition of n is a finite sequence of nonzero integers whose
absolute values sum to n.  A bi-partition of n is a pair of ordinary
partitions with total weight n.  Sorting the positive parts and the absolute
values of the negative parts of a signed composition, each into weakly
decreasing order, yields its bi-partition shape; concatenating the two sides
of a bi-partition (negatives second, negated) gives the canonical signed
composition with that shape.

Each signed composition also selects a reflection subgroup of the degree n
hyperoctahedral group: inside every block it contributes the adjacent
transpositions, and at the start of every positive block it contributes a
sign change.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from functools import lru_cache

from .permutation import (
    FiniteGroup,
    SignedPermutation,
    adjacent_transposition,
    sign_change,
)

__all__ = [
    "SignedComposition",
    "BiPartition",
    "signed_compositions",
    "bipartitions",
    "partitions",
    "bipartition_shape",
    "canonical_composition",
    "reflection_generators",
    "reflection_subgroup",
]


@dataclass(frozen=True, repr=False)
class SignedComposition:
    """A sequence of nonzero integers; hashable and immutable.

    >>> SignedComposition((1, -2, 1)).weight
    4
    """

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(operator.index(x) for x in self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise ValueError("a signed composition needs at least one part")
        if any(p == 0 for p in parts):
            raise ValueError(f"parts must be nonzero, got {parts}")

    @property
    def weight(self) -> int:
        return sum(abs(p) for p in self.parts)

    def sort_key(self):
        """Canonical order: lexicographic, each part keyed by (magnitude, sign),
        positive before negative."""
        return tuple((abs(p), p < 0) for p in self.parts)

    def __repr__(self) -> str:
        return f"SignedComposition({list(self.parts)})"


@dataclass(frozen=True, repr=False)
class BiPartition:
    """A pair of weakly decreasing positive tuples; total weight may be 0."""

    plus: tuple[int, ...]
    minus: tuple[int, ...]

    def __post_init__(self):
        plus = tuple(operator.index(x) for x in self.plus)
        minus = tuple(operator.index(x) for x in self.minus)
        object.__setattr__(self, "plus", plus)
        object.__setattr__(self, "minus", minus)
        for side in (plus, minus):
            if any(p <= 0 for p in side):
                raise ValueError(f"partition parts must be positive, got {side}")
            if any(side[i] < side[i + 1] for i in range(len(side) - 1)):
                raise ValueError(f"partition parts must be weakly decreasing, got {side}")

    @property
    def weight(self) -> int:
        return sum(self.plus) + sum(self.minus)

    def __repr__(self) -> str:
        return f"BiPartition(plus={list(self.plus)}, minus={list(self.minus)})"


def _compositions_raw(n: int):
    if n == 0:
        yield ()
        return
    for a in range(1, n + 1):
        for rest in _compositions_raw(n - a):
            yield (a,) + rest
            yield (-a,) + rest


@lru_cache(maxsize=None)
def signed_compositions(n: int) -> tuple[SignedComposition, ...]:
    """All signed compositions of n, in canonical order.

    >>> [c.parts for c in signed_compositions(1)]
    [(1,), (-1,)]
    """
    if n < 1:
        raise ValueError(f"weight must be at least 1, got {n}")
    comps = [SignedComposition(parts) for parts in _compositions_raw(n)]
    comps.sort(key=SignedComposition.sort_key)
    return tuple(comps)


@lru_cache(maxsize=None)
def partitions(n: int, max_part: int | None = None) -> tuple[tuple[int, ...], ...]:
    """Weakly decreasing positive tuples summing to n, largest first parts first."""
    if n < 0:
        raise ValueError(f"weight must be nonnegative, got {n}")
    if n == 0:
        return ((),)
    cap = n if max_part is None else min(max_part, n)
    out = []
    for first in range(cap, 0, -1):
        for rest in partitions(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def bipartitions(n: int) -> tuple[BiPartition, ...]:
    """All bi-partitions of n, ordered by descending plus-weight, then each
    side in descending lexicographic order."""
    if n < 0:
        raise ValueError(f"weight must be nonnegative, got {n}")
    out = []
    for plus_weight in range(n, -1, -1):
        for plus in partitions(plus_weight):
            for minus in partitions(n - plus_weight):
                out.append(BiPartition(plus, minus))
    return tuple(out)


def bipartition_shape(comp: SignedComposition) -> BiPartition:
    """Sort the positive parts and the absolute negative parts into a bi-partition.

    >>> bipartition_shape(SignedComposition((1, -2, 1)))
    BiPartition(plus=[1, 1], minus=[2])
    """
    plus = tuple(sorted((p for p in comp.parts if p > 0), reverse=True))
    minus = tuple(sorted((-p for p in comp.parts if p < 0), reverse=True))
    return BiPartition(plus, minus)


def canonical_composition(mu: BiPartition) -> SignedComposition:
    """Concatenate the two sides, negating the minus side; weight must be positive.

    >>> canonical_composition(BiPartition((2, 1), (1,))).parts
    (2, 1, -1)
    """
    if mu.weight == 0:
        raise ValueError("the empty bi-partition has no signed composition")
    return SignedComposition(mu.plus + tuple(-p for p in mu.minus))


def reflection_generators(comp: SignedComposition) -> tuple[SignedPermutation, ...]:
    """The reflection set of a signed composition, sorted canonically.

    Walking the blocks left to right: every block contributes the adjacent
    transpositions strictly inside it, and every positive block contributes
    the sign change at its first position.
    """
    n = comp.weight
    gens = []
    pos = 0
    for part in comp.parts:
        size = abs(part)
        if part > 0:
            gens.append(sign_change(n, pos + 1))
        for p in range(pos + 1, pos + size):
            gens.append(adjacent_transposition(n, p))
        pos += size
    return tuple(sorted(gens))


@lru_cache(maxsize=None)
def reflection_subgroup(comp: SignedComposition) -> FiniteGroup:
    """The subgroup of the degree ``comp.weight`` hyperoctahedral group
    generated by :func:`reflection_generators`."""
    return FiniteGroup.generated_by(comp.weight, reflection_generators(comp))
