"""Category-level structure of soft groups: limits and morphism analysis.

The final object, categorical products with their universal property, and
monic / epic / split-monic verdicts.  Everything claimed here is either a
proved sufficiency (both components injective implies monic, both surjective
implies epic) or is backed by an explicit machine-checkable witness; when a
construction does not apply and brute force would exceed the configured
bounds, the verdict is the honest string ``"unknown-at-scale"``.

The workhorse is :func:`enumerate_soft_homs`, a complete brute-force oracle
for the morphisms between two small soft groups.  Verdict witnesses are
ordinary :class:`~softgroups.soft.SoftHom` objects, so a separate process can
re-run the verification.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .permutation import (
    FiniteGroup,
    GroupHom,
    SignedPermutation,
    adjacent_transposition,
    count_hom_candidates,
    direct_product,
    direct_product_n,
    enumerate_group_homs,
    identity_hom,
    kernel,
    sign_change,
    subgroups,
    trivial_hom,
)
from .soft import (
    Parameter,
    SoftGroup,
    SoftHom,
    SoftValidationError,
    compose_soft_homs,
    identity_soft_hom,
    soft_product,
    soft_product_n,
)

__all__ = [
    "ScaleBoundError",
    "UNKNOWN",
    "MorphismVerdict",
    "CategoricalProduct",
    "MonoidalReport",
    "final_object",
    "unique_morphism_to_final",
    "categorical_product",
    "categorical_product_n",
    "mediating_morphism",
    "enumerate_soft_homs",
    "check_monic",
    "check_epic",
    "check_split_monic",
    "verify_cancellation_witness",
    "monoidal_sanity",
    "seeded_universe",
]

UNKNOWN = "unknown-at-scale"

DEFAULT_MAX_ORDER = 16
DEFAULT_MAX_PARAMS = 8
DEFAULT_MAX_CANDIDATES = 2_000_000


class ScaleBoundError(RuntimeError):
    """An enumeration would exceed the configured size bounds."""


@dataclass(frozen=True)
class MorphismVerdict:
    """Outcome of a categorical property check.

    ``holds`` is True, False, or :data:`UNKNOWN`.  A False verdict for monic
    or epic carries ``counterexample``, two morphisms that compose equally
    with the tested one yet differ.  A True split-monic verdict carries
    ``left_inverse``.  ``note`` explains which argument produced the verdict.
    """

    property_name: str
    holds: bool | str
    counterexample: tuple[SoftHom, SoftHom] | None = None
    left_inverse: SoftHom | None = None
    note: str = ""


@dataclass(frozen=True)
class CategoricalProduct:
    object: SoftGroup
    projections: tuple[SoftHom, ...]


@lru_cache(maxsize=None)
def final_object() -> SoftGroup:
    """One parameter, trivial carrier, trivial assignment."""
    return SoftGroup.trivial(FiniteGroup.trivial(), ("a",))


def unique_morphism_to_final(sg: SoftGroup) -> SoftHom:
    """Collapse everything onto the final object."""
    fin = final_object()
    return SoftHom(
        sg,
        fin,
        trivial_hom(sg.carrier, fin.carrier),
        {a: fin.params[0] for a in sg.params},
    )


def categorical_product(left: SoftGroup, right: SoftGroup) -> CategoricalProduct:
    """The product soft group together with its two projections."""
    return categorical_product_n((left, right))


def categorical_product_n(factors: Sequence[SoftGroup]) -> CategoricalProduct:
    """Flat product of several soft groups with all projections."""
    factors = tuple(factors)
    product = soft_product_n(factors)
    _, projections, _ = direct_product_n(tuple(sg.carrier for sg in factors))
    out = []
    for pos in range(len(factors)):
        pmap = {combo: combo[pos] for combo in product.params}
        out.append(SoftHom(product, factors[pos], projections[pos], pmap))
    return CategoricalProduct(product, tuple(out))


def mediating_morphism(g1: SoftHom, g2: SoftHom) -> SoftHom:
    """The unique morphism into the product commuting with both projections.

    ``g1`` and ``g2`` must share a source; the carrier part pairs their
    carrier maps and the parameter part pairs their parameter maps.
    """
    if g1.source != g2.source:
        raise SoftValidationError("the two morphisms must share a source")
    z = g1.source
    prod = categorical_product(g1.target, g2.target)
    dp = direct_product(g1.target.carrier, g2.target.carrier)
    mapping = {k: dp.pair(g1.f(k), g2.f(k)) for k in z.carrier.elements}
    f = GroupHom.from_mapping(z.carrier, dp.group, mapping)
    p = {b: (g1.param_image(b), g2.param_image(b)) for b in z.params}
    return SoftHom(z, prod.object, f, p)


@lru_cache(maxsize=256)
def enumerate_soft_homs(
    source: SoftGroup,
    target: SoftGroup,
    *,
    max_order: int = DEFAULT_MAX_ORDER,
    max_params: int = DEFAULT_MAX_PARAMS,
    max_candidates: int = DEFAULT_MAX_CANDIDATES,
) -> tuple[SoftHom, ...]:
    """All soft morphisms from ``source`` to ``target``, deterministically ordered.

    Enumerates every carrier homomorphism (generator images pruned by element
    order, then exhaustively validated), and for each one every parameter map
    whose diagram squares close.  Raises :class:`ScaleBoundError` when the
    source exceeds the bounds or the carrier enumeration would try more than
    ``max_candidates`` generator-image combinations.  Results are cached on
    the pair of soft groups and the bounds.
    """
    if len(source.carrier) > max_order:
        raise ScaleBoundError(
            f"source carrier order {len(source.carrier)} exceeds bound {max_order}"
        )
    if len(source.params) > max_params:
        raise ScaleBoundError(
            f"source parameter count {len(source.params)} exceeds bound {max_params}"
        )
    n_candidates = count_hom_candidates(source.carrier, target.carrier)
    if n_candidates > max_candidates:
        raise ScaleBoundError(
            f"carrier map enumeration would try {n_candidates} candidates, "
            f"bound is {max_candidates}"
        )
    by_value: dict[frozenset, list[Parameter]] = {}
    for b in target.params:
        by_value.setdefault(target.value(b), []).append(b)
    out = []
    for f in enumerate_group_homs(source.carrier, target.carrier):
        allowed = []
        for a in source.params:
            image = f.image_of(source.value(a))
            hits = by_value.get(image)
            if not hits:
                allowed = None
                break
            allowed.append(hits)
        if allowed is None:
            continue
        for combo in itertools.product(*allowed):
            out.append(SoftHom(source, target, f, dict(zip(source.params, combo))))
    return tuple(out)


def _param_injective(h: SoftHom) -> bool:
    return len(set(h.p.values())) == len(h.source.params)


def _kernel_pair_witness(h: SoftHom) -> tuple[SoftHom, SoftHom] | None:
    """Two distinct morphisms out of the completely soft object over K x K,
    K the kernel of the carrier map, that compose equally with ``h``.

    Both legs compose each block projection K x K -> K with the inclusion
    into the source carrier; their images land inside the kernel, so both
    composites with ``h`` collapse to the same morphism, while the legs
    differ whenever K is nontrivial.  Defined only when some source
    parameter is assigned exactly K.
    """
    ker = kernel(h.f)
    if len(ker) == 1:
        return None
    kset = frozenset(ker.elements)
    hit = tuple(a for a in h.source.params if h.source.value(a) == kset)
    if not hit:
        return None
    dp = direct_product(ker, ker)
    pair_source = SoftGroup.completely_soft(dp.group, [("k", a) for a in hit])
    include = GroupHom.from_mapping(
        ker, h.source.carrier, {g: g for g in ker.elements}
    )
    pmap = {("k", a): a for a in hit}
    left = SoftHom(pair_source, h.source, include.after(dp.proj_left), pmap)
    right = SoftHom(pair_source, h.source, include.after(dp.proj_right), pmap)
    return left, right


def _collapse_pair_witness(h: SoftHom) -> tuple[SoftHom, SoftHom] | None:
    """Two endomorphisms of the source that differ only by swapping a pair of
    parameters the parameter map identifies; requires the pair to share an
    assigned subgroup so the diagrams close."""
    params = h.source.params
    for x, y in itertools.combinations(params, 2):
        if h.param_image(x) == h.param_image(y) and h.source.value(x) == h.source.value(y):
            one = identity_hom(h.source.carrier)
            p1 = {a: (x if a == y else a) for a in params}
            p2 = {a: (y if a == x else a) for a in params}
            left = SoftHom(h.source, h.source, one, p1)
            right = SoftHom(h.source, h.source, one, p2)
            return left, right
    return None


def verify_cancellation_witness(
    h: SoftHom, pair: tuple[SoftHom, SoftHom], side: str = "left"
) -> bool:
    """Re-verify a counterexample pair independently of how it was found.

    ``side="left"`` checks a monic witness (h∘left = h∘right, left != right);
    ``side="right"`` checks an epic witness (left∘h = right∘h).
    """
    left, right = pair
    if left == right:
        return False
    if side == "left":
        return compose_soft_homs(h, left) == compose_soft_homs(h, right)
    if side == "right":
        return compose_soft_homs(left, h) == compose_soft_homs(right, h)
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")


def _brute_distinct_pair(
    buckets_source: Iterable[SoftGroup],
    h: SoftHom,
    *,
    side: str,
    max_order: int,
    max_params: int,
) -> tuple[tuple[SoftHom, SoftHom] | None, bool]:
    """Scan a universe for two morphisms with equal composites around ``h``.

    Returns (pair or None, covered) where ``covered`` is False when some
    universe object was skipped for scale.
    """
    covered = True
    for obj in buckets_source:
        try:
            if side == "left":
                homs = enumerate_soft_homs(
                    obj, h.source, max_order=max_order, max_params=max_params
                )
                keyed = [
                    (compose_soft_homs(h, g), g) for g in homs
                ]
            else:
                homs = enumerate_soft_homs(
                    h.target, obj, max_order=max_order, max_params=max_params
                )
                keyed = [
                    (compose_soft_homs(g, h), g) for g in homs
                ]
        except ScaleBoundError:
            covered = False
            continue
        seen: dict[SoftHom, SoftHom] = {}
        for composite, g in keyed:
            prev = seen.get(composite)
            if prev is not None and prev != g:
                return (prev, g), covered
            seen.setdefault(composite, g)
    return None, covered


def check_monic(
    h: SoftHom,
    universe: Sequence[SoftGroup] = (),
    *,
    max_order: int = DEFAULT_MAX_ORDER,
    max_params: int = DEFAULT_MAX_PARAMS,
) -> MorphismVerdict:
    """Decide left cancellation where an argument exists.

    Both components injective is a proved sufficiency.  Otherwise the two
    witness constructions are tried (kernel pair, parameter collapse), then
    brute force over ``universe``.  Every False verdict carries a verified
    counterexample; an inconclusive search returns :data:`UNKNOWN`.
    """
    f_inj = h.f.is_injective
    p_inj = _param_injective(h)
    if f_inj and p_inj:
        pair, _ = _brute_distinct_pair(
            universe, h, side="left", max_order=max_order, max_params=max_params
        )
        if pair is not None:
            raise AssertionError(
                "internal error: cancellation counterexample against an injective morphism"
            )
        return MorphismVerdict(
            "monic", True, note="carrier map and parameter map are both injective"
        )
    if not f_inj:
        pair = _kernel_pair_witness(h)
        if pair is not None and verify_cancellation_witness(h, pair, "left"):
            return MorphismVerdict(
                "monic",
                False,
                counterexample=pair,
                note="kernel pair: block projections from the completely soft "
                "object over the kernel squared",
            )
    if not p_inj:
        pair = _collapse_pair_witness(h)
        if pair is not None and verify_cancellation_witness(h, pair, "left"):
            return MorphismVerdict(
                "monic",
                False,
                counterexample=pair,
                note="parameter collapse: two endomorphisms swapping an "
                "identified parameter pair",
            )
    pair, covered = _brute_distinct_pair(
        universe, h, side="left", max_order=max_order, max_params=max_params
    )
    if pair is not None:
        return MorphismVerdict(
            "monic", False, counterexample=pair, note="found by brute force over the universe"
        )
    return MorphismVerdict(
        "monic",
        UNKNOWN,
        note="no witness construction applies and the brute-force search "
        + ("found no counterexample" if covered else "was cut off by scale bounds"),
    )


def check_epic(
    h: SoftHom,
    universe: Sequence[SoftGroup] = (),
    *,
    max_order: int = DEFAULT_MAX_ORDER,
    max_params: int = DEFAULT_MAX_PARAMS,
) -> MorphismVerdict:
    """Decide right cancellation where an argument exists.

    Both components surjective is a proved sufficiency; otherwise brute force
    over ``universe`` (always including the target itself) looks for two
    morphisms out of the target with equal composites.
    """
    f_surj = h.f.is_surjective
    p_surj = set(h.p.values()) == set(h.target.params)
    if f_surj and p_surj:
        return MorphismVerdict(
            "epic", True, note="carrier map and parameter map are both surjective"
        )
    scan = list(universe)
    if h.target not in scan:
        scan.append(h.target)
    pair, covered = _brute_distinct_pair(
        scan, h, side="right", max_order=max_order, max_params=max_params
    )
    if pair is not None:
        return MorphismVerdict(
            "epic", False, counterexample=pair, note="found by brute force over the universe"
        )
    return MorphismVerdict(
        "epic",
        UNKNOWN,
        note="brute-force search "
        + ("found no counterexample" if covered else "was cut off by scale bounds"),
    )


def check_split_monic(
    h: SoftHom,
    *,
    max_order: int = DEFAULT_MAX_ORDER,
    max_params: int = DEFAULT_MAX_PARAMS,
) -> MorphismVerdict:
    """Search for a left inverse among all morphisms target -> source.

    At this scale the enumeration is complete, so a False verdict is a
    certificate by exhaustion; the note records the search size.  A True
    verdict carries the left inverse found.
    """
    candidates = enumerate_soft_homs(
        h.target, h.source, max_order=max_order, max_params=max_params
    )
    unit = identity_soft_hom(h.source)
    for g in candidates:
        if compose_soft_homs(g, h) == unit:
            if not (h.f.is_injective and _param_injective(h)):
                raise AssertionError(
                    "internal error: split monic with a non-injective component"
                )
            return MorphismVerdict(
                "split-monic", True, left_inverse=g, note="left inverse found"
            )
    reasons = []
    if not h.f.is_injective:
        reasons.append("carrier map is not injective")
    if not _param_injective(h):
        reasons.append("parameter map is not injective")
    tail = f" ({'; '.join(reasons)})" if reasons else ""
    return MorphismVerdict(
        "split-monic",
        False,
        note=f"no left inverse among all {len(candidates)} morphisms "
        f"from target to source{tail}",
    )


@dataclass(frozen=True)
class MonoidalReport:
    """Structural isomorphisms witnessing product sanity for a triple."""

    associator: SoftHom
    swap: SoftHom
    unit: SoftHom

    @property
    def ok(self) -> bool:
        return (
            self.associator.is_isomorphism()
            and self.swap.is_isomorphism()
            and self.unit.is_isomorphism()
        )


def monoidal_sanity(s: SoftGroup, t: SoftGroup, v: SoftGroup) -> MonoidalReport:
    """Build and validate the associator, the swap, and the unit law.

    Associator: (s x t) x v -> s x (t x v); the carriers are literally equal
    because block windows concatenate flat, so the carrier map is the
    identity table and only the parameters reassociate.  Swap: s x t ->
    t x s with the block-swapping carrier isomorphism.  Unit: s x final -> s
    by projection.
    """
    left = soft_product(soft_product(s, t), v)
    right = soft_product(s, soft_product(t, v))
    ident = {g: g for g in left.carrier.elements}
    assoc_f = GroupHom.from_mapping(left.carrier, right.carrier, ident)
    assoc_p = {((x, y), z): (x, (y, z)) for ((x, y), z) in left.params}
    associator = SoftHom(left, right, assoc_f, assoc_p)

    st = soft_product(s, t)
    ts = soft_product(t, s)
    n1 = s.carrier.degree
    n2 = t.carrier.degree

    def swap_window(e: SignedPermutation) -> SignedPermutation:
        a = e.window[:n1]
        b = e.window[n1:]
        return SignedPermutation(
            tuple(x - n1 if x > 0 else x + n1 for x in b)
            + tuple(x + n2 if x > 0 else x - n2 for x in a)
        )

    swap_f = GroupHom.from_mapping(
        st.carrier, ts.carrier, {e: swap_window(e) for e in st.carrier.elements}
    )
    swap = SoftHom(st, ts, swap_f, {(x, y): (y, x) for (x, y) in st.params})

    sf = soft_product(s, final_object())
    dp = direct_product(s.carrier, final_object().carrier)
    unit = SoftHom(sf, s, dp.proj_left, {(x, a): x for (x, a) in sf.params})
    return MonoidalReport(associator=associator, swap=swap, unit=unit)


@lru_cache(maxsize=None)
def _carrier_pool() -> tuple[FiniteGroup, ...]:
    r1 = adjacent_transposition(2, 1)
    v1 = sign_change(2, 1)
    v2 = sign_change(2, 2)
    return (
        FiniteGroup.trivial(),
        FiniteGroup.generated_by(1, [sign_change(1, 1)]),
        FiniteGroup.generated_by(2, [r1]),
        FiniteGroup.generated_by(2, [v1, v2]),
        FiniteGroup.generated_by(2, [r1 * v1]),
        FiniteGroup.generated_by(2, [r1, v1]),
        FiniteGroup.generated_by(3, [adjacent_transposition(3, 1), adjacent_transposition(3, 2)]),
    )


def seeded_universe(
    seed: int = 0,
    count: int = 10,
    *,
    max_order: int = 8,
    max_params: int = 3,
) -> list[SoftGroup]:
    """A deterministic list of small soft groups for brute-force scans.

    The first entries are canonical (final object, a trivial and a completely
    soft example); the rest draw carriers from a fixed pool and subgroups
    uniformly with a seeded generator.  Same seed, same universe.
    """
    if max_order < 4 or max_params < 1:
        raise ValueError("seeded_universe needs max_order >= 4 and max_params >= 1")
    rng = random.Random(seed)
    pool = [g for g in _carrier_pool() if len(g) <= max_order]
    klein = FiniteGroup.generated_by(2, [sign_change(2, 1), sign_change(2, 2)])
    w1 = FiniteGroup.generated_by(1, [sign_change(1, 1)])
    out = [
        final_object(),
        SoftGroup.trivial(klein, ("p0", "p1") if max_params >= 2 else ("p0",)),
        SoftGroup.completely_soft(w1, ("p0",)),
    ]
    while len(out) < count:
        carrier = rng.choice(pool)
        subs = subgroups(carrier)
        k = rng.randint(1, max_params)
        params = tuple(f"p{i}" for i in range(k))
        assign = {
            a: frozenset(rng.choice(subs).elements) for a in params
        }
        candidate = SoftGroup(carrier, params, assign)
        if candidate not in out:
            out.append(candidate)
    return out
