"""The hyperoctahedral worked scenario.

The degree n hyperoctahedral group is the full group of signed permutations
of degree n, order 2^n * n!.  It is generated by the adjacent transpositions
r_1, ..., r_(n-1) together with the first sign change v_1; the remaining sign
changes arise by conjugation, v_(i+1) = r_i v_i r_i.

Two soft groups over this carrier drive the end-to-end scenario: one indexed
by all signed compositions of n, assigning to each composition the reflection
subgroup of its sorted (canonical) form, and one indexed by bi-partitions,
assigning the reflection subgroup of the canonical composition.  Sorting a
composition into its bi-partition shape, with the identity on the carrier,
is then a soft morphism, and its soft kernel collapses to the single
parameter (-1, ..., -1) carrying only the identity.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .compositions import (
    BiPartition,
    SignedComposition,
    bipartition_shape,
    bipartitions,
    canonical_composition,
    reflection_subgroup,
    signed_compositions,
)
from .permutation import (
    FiniteGroup,
    SignedPermutation,
    adjacent_transposition,
    identity_hom,
    sign_change,
)
from .soft import SoftGroup, SoftHom

__all__ = [
    "hyperoctahedral_group",
    "hyperoctahedral_order",
    "symmetric_subgroup",
    "coxeter_relation_checks",
    "signed_composition_soft_group",
    "bipartition_soft_group",
    "sorting_soft_hom",
]


@lru_cache(maxsize=None)
def hyperoctahedral_group(n: int) -> FiniteGroup:
    """All signed permutations of degree n, generated by r_1..r_(n-1), v_1."""
    if n < 1:
        raise ValueError(f"degree must be at least 1, got {n}")
    gens = [adjacent_transposition(n, i) for i in range(1, n)]
    gens.append(sign_change(n, 1))
    return FiniteGroup.generated_by(n, gens)


def hyperoctahedral_order(n: int) -> int:
    """Closed form 2^n * n! for the order of the degree n group."""
    return 2**n * math.factorial(n)


@lru_cache(maxsize=None)
def symmetric_subgroup(n: int) -> FiniteGroup:
    """The copy of the symmetric group generated by adjacent transpositions."""
    return FiniteGroup.generated_by(n, [adjacent_transposition(n, i) for i in range(1, n)])


def coxeter_relation_checks(n: int) -> list[tuple[str, SignedPermutation, SignedPermutation]]:
    """All defining relations at degree n, as (label, left side, right side).

    Covers: r_i^2 = e, braid and commutation relations among the r_i,
    v_i^2 = e, the order 4 of v_1 r_1, commutation of the v_i, the
    conjugation rule r_i v_i r_i = v_(i+1), and commutation of r_i with the
    other sign changes.
    """
    e = SignedPermutation.identity(n)
    r = {i: adjacent_transposition(n, i) for i in range(1, n)}
    v = {i: sign_change(n, i) for i in range(1, n + 1)}
    out = []
    for i in r:
        out.append((f"r{i}^2 = e", r[i] * r[i], e))
    for i in r:
        if i + 1 in r:
            w = r[i] * r[i + 1]
            out.append((f"(r{i} r{i+1})^3 = e", w * w * w, e))
    for i in r:
        for j in r:
            if j > i + 1:
                w = r[i] * r[j]
                out.append((f"(r{i} r{j})^2 = e", w * w, e))
    for i in v:
        out.append((f"v{i}^2 = e", v[i] * v[i], e))
    if 1 in r:
        w = v[1] * r[1]
        out.append(("(v1 r1)^4 = e", w * w * w * w, e))
    for i in v:
        for j in v:
            if j > i:
                out.append((f"v{i} v{j} = v{j} v{i}", v[i] * v[j], v[j] * v[i]))
    for i in r:
        out.append((f"r{i} v{i} r{i} = v{i+1}", r[i] * v[i] * r[i], v[i + 1]))
    for i in r:
        for j in v:
            if j not in (i, i + 1):
                out.append((f"r{i} v{j} = v{j} r{i}", r[i] * v[j], v[j] * r[i]))
    return out


@lru_cache(maxsize=None)
def signed_composition_soft_group(n: int) -> SoftGroup:
    """Soft group over degree n indexed by all signed compositions.

    Each composition is assigned the reflection subgroup of its canonical
    (sorted) form, so two compositions with the same bi-partition shape get
    the same subgroup.
    """
    carrier = hyperoctahedral_group(n)

    def value(comp: SignedComposition):
        sorted_form = canonical_composition(bipartition_shape(comp))
        return frozenset(reflection_subgroup(sorted_form).elements)

    params = signed_compositions(n)
    return SoftGroup(carrier, params, {a: value(a) for a in params})


@lru_cache(maxsize=None)
def bipartition_soft_group(n: int) -> SoftGroup:
    """Soft group over degree n indexed by bi-partitions of n."""
    carrier = hyperoctahedral_group(n)

    def value(mu: BiPartition):
        return frozenset(reflection_subgroup(canonical_composition(mu)).elements)

    params = bipartitions(n)
    return SoftGroup(carrier, params, {mu: value(mu) for mu in params})


def sorting_soft_hom(n: int) -> SoftHom:
    """The morphism (identity carrier map, composition ↦ bi-partition shape)."""
    source = signed_composition_soft_group(n)
    target = bipartition_soft_group(n)
    return SoftHom(
        source,
        target,
        identity_hom(source.carrier),
        {a: bipartition_shape(a) for a in source.params},
    )
