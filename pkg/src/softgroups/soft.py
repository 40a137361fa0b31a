"""Soft groups: parameterized families of subgroups of a fixed carrier.

A soft group attaches to every element of a parameter set a subgroup of one
carrier group.  A soft morphism is a pair (f, p): a carrier homomorphism f
and a parameter map p such that, parameter by parameter, the f-image of the
assigned subgroup equals the subgroup the target assigns to the mapped
parameter.  That square is checked on construction, always, as literal set
equality; nothing in this module represents an unverified morphism.

Parameters are arbitrary hashable values (strings, signed compositions,
bi-partitions, tuples of these for products).
"""

from __future__ import annotations

from dataclasses import dataclass
from types import MappingProxyType
from typing import Callable, Hashable, Iterable, Mapping, Sequence

from .permutation import (
    FiniteGroup,
    GroupHom,
    SignedPermutation,
    direct_product_n,
    identity_hom,
    is_subgroup,
    kernel,
)

__all__ = [
    "Parameter",
    "SoftValidationError",
    "SoftGroup",
    "SoftHom",
    "is_soft_subset",
    "identity_soft_hom",
    "inclusion_soft_hom",
    "compose_soft_homs",
    "soft_product",
    "soft_product_n",
    "soft_kernel",
    "KernelReport",
    "kernel_triviality_report",
]

Parameter = Hashable


class SoftValidationError(ValueError):
    """A soft group or soft morphism failed validation.

    ``parameter`` names the first offending parameter when one exists.
    """

    def __init__(self, message: str, parameter: Parameter = None):
        super().__init__(message)
        self.parameter = parameter


def _windows(subset: Iterable[SignedPermutation]) -> list[list[int]]:
    return [list(g.window) for g in sorted(subset)]


class SoftGroup:
    """A total assignment of carrier subgroups to a finite parameter set.

    ``params`` keeps its given order (duplicates rejected); ``assign`` may be
    a mapping or a callable and is normalized to frozensets.  Every value is
    checked to be a subgroup of the carrier.  Equality ignores parameter
    order.
    """

    def __init__(
        self,
        carrier: FiniteGroup,
        params: Sequence[Parameter],
        assign: Mapping[Parameter, Iterable[SignedPermutation]]
        | Callable[[Parameter], Iterable[SignedPermutation]],
    ):
        self._carrier = carrier
        self._params = tuple(params)
        if len(set(self._params)) != len(self._params):
            raise SoftValidationError("parameters must be distinct")
        if not self._params:
            raise SoftValidationError("a soft group needs at least one parameter")
        lookup = assign.__getitem__ if isinstance(assign, Mapping) else assign
        values = {}
        for a in self._params:
            try:
                value = frozenset(lookup(a))
            except KeyError:
                raise SoftValidationError(
                    f"no subgroup assigned to parameter {a!r}", parameter=a
                ) from None
            try:
                ok = is_subgroup(value, carrier)
            except ValueError as exc:
                raise SoftValidationError(
                    f"value at parameter {a!r} lies outside the carrier: {exc}",
                    parameter=a,
                ) from None
            if not ok:
                raise SoftValidationError(
                    f"value at parameter {a!r} is not a subgroup of the carrier: "
                    f"{_windows(value)}",
                    parameter=a,
                )
            values[a] = value
        self._values = values

    @property
    def carrier(self) -> FiniteGroup:
        return self._carrier

    @property
    def params(self) -> tuple[Parameter, ...]:
        return self._params

    @property
    def assign(self) -> Mapping[Parameter, frozenset[SignedPermutation]]:
        return MappingProxyType(self._values)

    def value(self, a: Parameter) -> frozenset[SignedPermutation]:
        try:
            return self._values[a]
        except KeyError:
            raise SoftValidationError(f"unknown parameter {a!r}", parameter=a) from None

    @classmethod
    def trivial(cls, carrier: FiniteGroup, params: Sequence[Parameter]) -> "SoftGroup":
        """Every parameter gets the identity subgroup."""
        e = frozenset({carrier.identity})
        return cls(carrier, params, {a: e for a in params})

    @classmethod
    def completely_soft(cls, carrier: FiniteGroup, params: Sequence[Parameter]) -> "SoftGroup":
        """Every parameter gets the whole carrier."""
        full = frozenset(carrier.elements)
        return cls(carrier, params, {a: full for a in params})

    def is_trivial(self) -> bool:
        e = frozenset({self._carrier.identity})
        return all(v == e for v in self._values.values())

    def is_completely_soft(self) -> bool:
        full = frozenset(self._carrier.elements)
        return all(v == full for v in self._values.values())

    def restrict(self, params: Iterable[Parameter]) -> "SoftGroup":
        """The soft group on a subset of the parameters, same assignments."""
        keep = tuple(a for a in self._params if a in set(params))
        return SoftGroup(self._carrier, keep, self._values)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SoftGroup):
            return NotImplemented
        return (
            self._carrier == other._carrier
            and set(self._params) == set(other._params)
            and self._values == other._values
        )

    def __hash__(self) -> int:
        return hash(
            (self._carrier, frozenset(self._params), frozenset(self._values.items()))
        )

    def __repr__(self) -> str:
        return (
            f"SoftGroup(carrier={self._carrier!r}, params={len(self._params)})"
        )


def is_soft_subset(left: SoftGroup, right: SoftGroup) -> bool:
    """Containment: same carrier, parameters included, identical assignments
    on the shared parameters."""
    if left.carrier != right.carrier:
        return False
    right_params = set(right.params)
    return all(
        a in right_params and left.value(a) == right.value(a) for a in left.params
    )


class SoftHom:
    """A validated soft morphism (f, p).

    ``f`` is a carrier homomorphism from source carrier to target carrier and
    ``p`` maps source parameters to target parameters.  Construction checks,
    for every parameter a, that the f-image of the source subgroup at a
    equals the target subgroup at p(a), and raises naming the first failing
    parameter with both sides otherwise.  Equality is component-wise.
    """

    def __init__(
        self,
        source: SoftGroup,
        target: SoftGroup,
        f: GroupHom,
        p: Mapping[Parameter, Parameter],
    ):
        if f.domain != source.carrier or f.codomain != target.carrier:
            raise SoftValidationError(
                "the carrier map must go from the source carrier to the target carrier"
            )
        pmap = {}
        target_params = set(target.params)
        for a in source.params:
            try:
                b = p[a]
            except KeyError:
                raise SoftValidationError(
                    f"parameter map is missing {a!r}", parameter=a
                ) from None
            if b not in target_params:
                raise SoftValidationError(
                    f"parameter map sends {a!r} to {b!r}, which is not a target parameter",
                    parameter=a,
                )
            pmap[a] = b
        for a in source.params:
            image = f.image_of(source.value(a))
            expected = target.value(pmap[a])
            if image != expected:
                raise SoftValidationError(
                    f"diagram violation at parameter {a!r}: image of the assigned "
                    f"subgroup is {_windows(image)} but the target assigns "
                    f"{_windows(expected)}",
                    parameter=a,
                )
        self.source = source
        self.target = target
        self.f = f
        self._p = pmap

    @property
    def p(self) -> Mapping[Parameter, Parameter]:
        return MappingProxyType(self._p)

    def param_image(self, a: Parameter) -> Parameter:
        return self._p[a]

    def is_isomorphism(self) -> bool:
        """True when f is a group isomorphism and p is a bijection."""
        return (
            self.f.is_bijective
            and len(set(self._p.values())) == len(self.target.params) == len(self.source.params)
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, SoftHom):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.f == other.f
            and self._p == other._p
        )

    def __hash__(self) -> int:
        return hash(
            (
                self.source,
                self.target,
                self.f,
                tuple(self._p[a] for a in self.source.params),
            )
        )

    def __repr__(self) -> str:
        return f"SoftHom({self.source!r} -> {self.target!r})"


def identity_soft_hom(sg: SoftGroup) -> SoftHom:
    """The unit morphism (identity carrier map, identity parameter map)."""
    return SoftHom(sg, sg, identity_hom(sg.carrier), {a: a for a in sg.params})


def inclusion_soft_hom(sub: SoftGroup, sup: SoftGroup) -> SoftHom:
    """Inclusion of a soft subgroup: identity on carrier and parameters."""
    if not is_soft_subset(sub, sup):
        raise SoftValidationError("the first soft group is not a soft subset of the second")
    return SoftHom(sub, sup, identity_hom(sub.carrier), {a: a for a in sub.params})


def compose_soft_homs(second: SoftHom, first: SoftHom) -> SoftHom:
    """Composite second∘first; ``first`` is applied first.

    The composite is revalidated on construction; for valid inputs with
    matching middle object the validation cannot fail.
    """
    if first.target != second.source:
        raise SoftValidationError(
            "target of the first morphism must equal source of the second"
        )
    f = second.f.after(first.f)
    p = {a: second._p[first._p[a]] for a in first.source.params}
    return SoftHom(first.source, second.target, f, p)


def soft_product(left: SoftGroup, right: SoftGroup) -> SoftGroup:
    """Product soft group: product carrier, pair parameters, block products.

    The parameter set is all ordered pairs (x, y) and the subgroup at (x, y)
    is the block product of the subgroups at x and at y.
    """
    return soft_product_n((left, right))


def soft_product_n(factors: Sequence[SoftGroup]) -> SoftGroup:
    """Flat product of several soft groups; parameters are flat tuples."""
    factors = tuple(factors)
    if not factors:
        raise SoftValidationError("a soft product needs at least one factor")
    carrier, _, _ = direct_product_n(tuple(sg.carrier for sg in factors))
    offsets = [0]
    for sg in factors:
        offsets.append(offsets[-1] + sg.carrier.degree)

    params = [()]
    for sg in factors:
        params = [c + (a,) for c in params for a in sg.params]

    def block_product(combo):
        sets = [sorted(sg.value(a)) for sg, a in zip(factors, combo)]
        out = [()]
        for pos, side in enumerate(sets):
            off = offsets[pos]
            out = [
                w + tuple(x + off if x > 0 else x - off for x in g.window)
                for w in out
                for g in side
            ]
        return frozenset(SignedPermutation(w) for w in out)

    assign = {combo: block_product(combo) for combo in params}
    return SoftGroup(carrier, params, assign)


def soft_kernel(h: SoftHom) -> SoftGroup | None:
    """The soft kernel, or None when it is undefined.

    The kernel parameters are the source parameters whose assigned subgroup
    is exactly the kernel of the carrier map; the kernel soft group lives
    over that kernel group and assigns it everywhere.  When no parameter
    matches, the soft kernel is undefined.
    """
    ker = kernel(h.f)
    kset = frozenset(ker.elements)
    hit = tuple(a for a in h.source.params if h.source.value(a) == kset)
    if not hit:
        return None
    return SoftGroup(ker, hit, {a: kset for a in hit})


@dataclass(frozen=True)
class KernelReport:
    """Independent evaluations of injectivity and kernel triviality."""

    injective: bool
    kernel_trivial: bool

    @property
    def agree(self) -> bool:
        return self.injective == self.kernel_trivial


def kernel_triviality_report(h: SoftHom) -> KernelReport:
    """Evaluate both sides of the triviality criterion separately.

    Injectivity is read off the carrier map; triviality is read off the soft
    kernel.  Raises when the soft kernel is undefined.
    """
    ks = soft_kernel(h)
    if ks is None:
        raise SoftValidationError(
            "soft kernel undefined: no parameter is assigned the kernel of the carrier map"
        )
    return KernelReport(injective=h.f.is_injective, kernel_trivial=ks.is_trivial())
