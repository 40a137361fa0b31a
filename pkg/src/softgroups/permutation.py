"""Signed permutations and the finite groups they generate.

A signed permutation of degree n is a bijection w of {-n, ..., -1, 1, ..., n}
with w(-i) = -w(i).  It is stored as the window ``(w(1), ..., w(n))``; the
action on negative points follows by antisymmetry.  Composition is function
composition, ``(u * v)(i) = u(v(i))``, so the right factor acts first.

:class:`FiniteGroup` keeps an explicit, canonically sorted element list that
always equals the closure of its generators, and derives multiplication
tables, inverses and element orders lazily through the selected kernel
backend.  :class:`GroupHom` is a full element-to-element table that is
exhaustively validated on construction, never a promise.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

from . import _kernels

__all__ = [
    "DegreeMismatchError",
    "NotAHomomorphismError",
    "SignedPermutation",
    "FiniteGroup",
    "GroupHom",
    "DirectProduct",
    "adjacent_transposition",
    "sign_change",
    "compose",
    "closure",
    "is_subgroup",
    "generating_subset",
    "subgroups",
    "identity_hom",
    "trivial_hom",
    "hom_from_generator_images",
    "kernel",
    "enumerate_group_homs",
    "direct_product",
    "direct_product_n",
]


class DegreeMismatchError(ValueError):
    """Raised when combining signed permutations of different degrees."""


class NotAHomomorphismError(ValueError):
    """Raised when a candidate map fails the homomorphism equation."""


@dataclass(frozen=True, order=True, repr=False)
class SignedPermutation:
    """A signed permutation, hashable and ordered lexicographically by window."""

    window: tuple[int, ...]

    def __post_init__(self):
        win = tuple(operator.index(x) for x in self.window)
        object.__setattr__(self, "window", win)
        n = len(win)
        if n == 0:
            raise ValueError("window must be nonempty")
        if any(x == 0 or abs(x) > n for x in win) or len({abs(x) for x in win}) != n:
            raise ValueError(f"window {win} is not a signed permutation")

    @classmethod
    def identity(cls, degree: int) -> "SignedPermutation":
        return cls(tuple(range(1, degree + 1)))

    @property
    def degree(self) -> int:
        return len(self.window)

    def __call__(self, i: int) -> int:
        """Image of the point i, for i in -n..-1, 1..n."""
        if not isinstance(i, int) or i == 0 or abs(i) > self.degree:
            raise ValueError(f"point {i!r} is outside degree {self.degree}")
        return self.window[i - 1] if i > 0 else -self.window[-i - 1]

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        if not isinstance(other, SignedPermutation):
            return NotImplemented
        if other.degree != self.degree:
            raise DegreeMismatchError(
                f"cannot compose degrees {self.degree} and {other.degree}"
            )
        return SignedPermutation(_kernels.compose_windows(self.window, other.window))

    def inverse(self) -> "SignedPermutation":
        return SignedPermutation(_kernels.inverse_window(self.window))

    def order(self) -> int:
        """Smallest k >= 1 with w^k equal to the identity."""
        e = tuple(range(1, self.degree + 1))
        cur = self.window
        k = 1
        while cur != e:
            cur = _kernels.compose_windows(self.window, cur)
            k += 1
        return k

    def is_identity(self) -> bool:
        return self.window == tuple(range(1, self.degree + 1))

    def __repr__(self) -> str:
        return f"SignedPermutation({list(self.window)})"


def compose(u: SignedPermutation, v: SignedPermutation) -> SignedPermutation:
    """Composite u∘v; v acts first.  Raises DegreeMismatchError if degrees differ."""
    return u * v


def adjacent_transposition(degree: int, i: int) -> SignedPermutation:
    """The generator swapping i and i+1 and fixing every other point."""
    if not 1 <= i <= degree - 1:
        raise ValueError(f"adjacent transposition index {i} out of range for degree {degree}")
    w = list(range(1, degree + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return SignedPermutation(tuple(w))


def sign_change(degree: int, i: int) -> SignedPermutation:
    """The generator negating the point i and fixing every other point."""
    if not 1 <= i <= degree:
        raise ValueError(f"sign change index {i} out of range for degree {degree}")
    w = list(range(1, degree + 1))
    w[i - 1] = -i
    return SignedPermutation(tuple(w))


class FiniteGroup:
    """An explicit finite group of signed permutations of one degree.

    Instances are immutable.  ``elements`` is sorted lexicographically by
    window and always equals the closure of ``generators``; construction goes
    through :meth:`generated_by`, :meth:`from_elements` or :meth:`trivial`,
    all of which enforce that invariant.  Equality and hashing look at
    ``(degree, elements)`` only, so the same subgroup reached through
    different generating sets compares equal.
    """

    def __init__(self, degree, elements, generators, *, _trusted=False):
        if not _trusted:
            raise TypeError(
                "use FiniteGroup.generated_by, .from_elements or .trivial"
            )
        self._degree = degree
        self._elements = elements
        self._generators = generators

    # -- construction --------------------------------------------------

    @classmethod
    def generated_by(cls, degree: int, generators: Iterable[SignedPermutation]) -> "FiniteGroup":
        """Closure of the generators inside the signed permutations of ``degree``."""
        gens = []
        for g in generators:
            if not isinstance(g, SignedPermutation):
                raise TypeError(f"generator {g!r} is not a SignedPermutation")
            if g.degree != degree:
                raise DegreeMismatchError(
                    f"generator degree {g.degree} does not match group degree {degree}"
                )
            if g not in gens:
                gens.append(g)
        windows = _kernels.closure(degree, [g.window for g in gens])
        elements = tuple(SignedPermutation(w) for w in sorted(windows))
        return cls(degree, elements, tuple(gens), _trusted=True)

    @classmethod
    def from_elements(
        cls,
        degree: int,
        elements: Iterable[SignedPermutation],
        generators: Sequence[SignedPermutation] | None = None,
    ) -> "FiniteGroup":
        """Group on an explicit element set, verified against its generators.

        When ``generators`` is omitted a small generating subset is extracted
        greedily.  Raises ValueError if the elements are not exactly the
        closure of the generators.
        """
        elems = tuple(sorted(set(elements)))
        if not elems:
            raise ValueError("a group needs at least the identity element")
        for g in elems:
            if g.degree != degree:
                raise DegreeMismatchError(
                    f"element degree {g.degree} does not match group degree {degree}"
                )
        if generators is None:
            gens = generating_subset(degree, elems)
        else:
            gens = tuple(dict.fromkeys(generators))
            for g in gens:
                if g not in set(elems):
                    raise ValueError(f"generator {g!r} is not among the elements")
        closed = sorted(_kernels.closure(degree, [g.window for g in gens]))
        if closed != [g.window for g in elems]:
            raise ValueError("elements are not the closure of the generators")
        return cls(degree, elems, gens, _trusted=True)

    @classmethod
    def trivial(cls, degree: int = 1) -> "FiniteGroup":
        return cls.generated_by(degree, [])

    # -- basic queries -------------------------------------------------

    @property
    def degree(self) -> int:
        return self._degree

    @property
    def elements(self) -> tuple[SignedPermutation, ...]:
        return self._elements

    @property
    def generators(self) -> tuple[SignedPermutation, ...]:
        return self._generators

    @cached_property
    def identity(self) -> SignedPermutation:
        return SignedPermutation.identity(self._degree)

    def __len__(self) -> int:
        return len(self._elements)

    def __iter__(self) -> Iterator[SignedPermutation]:
        return iter(self._elements)

    def __contains__(self, g) -> bool:
        return isinstance(g, SignedPermutation) and g in self._index

    def index(self, g: SignedPermutation) -> int:
        try:
            return self._index[g]
        except KeyError:
            raise ValueError(f"{g!r} is not an element of this group") from None

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteGroup):
            return NotImplemented
        return self._degree == other._degree and self._elements == other._elements

    def __hash__(self) -> int:
        return hash((self._degree, self._elements))

    def __repr__(self) -> str:
        return f"FiniteGroup(degree={self._degree}, order={len(self._elements)})"

    # -- lazily derived data ------------------------------------------

    @cached_property
    def _index(self) -> dict[SignedPermutation, int]:
        return {g: i for i, g in enumerate(self._elements)}

    @cached_property
    def windows_array(self) -> np.ndarray:
        return np.array([g.window for g in self._elements], dtype=np.int16)

    @cached_property
    def table(self) -> np.ndarray:
        """Multiplication table t[i, j] = index(elements[i] * elements[j])."""
        return _kernels.multiplication_table(self.windows_array)

    @cached_property
    def inverse_positions(self) -> np.ndarray:
        return _kernels.inverse_indices(self.windows_array)

    @cached_property
    def identity_index(self) -> int:
        return self.index(self.identity)

    @cached_property
    def element_orders(self) -> np.ndarray:
        table = self.table
        e = self.identity_index
        out = np.empty(len(self), dtype=np.int64)
        for i in range(len(self)):
            k = 1
            cur = i
            while cur != e:
                cur = int(table[i, cur])
                k += 1
            out[i] = k
        return out

    @cached_property
    def generator_indices(self) -> tuple[int, ...]:
        """Positions of the distinct non-identity generators, in generator order."""
        out = []
        for g in self._generators:
            i = self.index(g)
            if i != self.identity_index and i not in out:
                out.append(i)
        return tuple(out)

    @cached_property
    def spanning_tree(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        """(bfs_order, parent, parent_gen): each non-root element is
        generator ``parent_gen`` left-multiplied onto ``parent``."""
        m = len(self)
        table = self.table
        order = [self.identity_index]
        parent = np.full(m, -1, dtype=np.int32)
        pgen = np.full(m, -1, dtype=np.int32)
        seen = np.zeros(m, dtype=bool)
        seen[self.identity_index] = True
        head = 0
        while head < len(order):
            cur = order[head]
            head += 1
            for j, gi in enumerate(self.generator_indices):
                nxt = int(table[gi, cur])
                if not seen[nxt]:
                    seen[nxt] = True
                    parent[nxt] = cur
                    pgen[nxt] = j
                    order.append(nxt)
        if len(order) != m:
            raise AssertionError("generators do not span the group")
        return np.array(order, dtype=np.int32), parent, pgen

    def inverse(self, g: SignedPermutation) -> SignedPermutation:
        return self._elements[int(self.inverse_positions[self.index(g)])]

    def element_order(self, g: SignedPermutation) -> int:
        return int(self.element_orders[self.index(g)])


def closure(degree: int, generators: Iterable[SignedPermutation]) -> FiniteGroup:
    """The subgroup generated by ``generators`` inside degree ``degree``."""
    return FiniteGroup.generated_by(degree, generators)


def is_subgroup(candidate: Iterable[SignedPermutation], ambient: FiniteGroup) -> bool:
    """Exhaustive subgroup test: identity, inverses and all pairwise products.

    Raises ValueError if a candidate element lies outside the ambient group.
    """
    cand = frozenset(candidate)
    for g in cand:
        if g not in ambient:
            raise ValueError(f"{g!r} is not an element of the ambient group")
    if ambient.identity not in cand:
        return False
    for g in cand:
        if g.inverse() not in cand:
            return False
    for g in cand:
        for h in cand:
            if g * h not in cand:
                return False
    return True


def generating_subset(degree: int, elements: Sequence[SignedPermutation]) -> tuple[SignedPermutation, ...]:
    """Greedy small generating subset of a set already closed under the ops."""
    gens: list[SignedPermutation] = []
    have = {tuple(range(1, degree + 1))}
    for g in sorted(elements):
        if g.window not in have:
            gens.append(g)
            have = set(_kernels.closure(degree, [x.window for x in gens]))
    return tuple(gens)


@lru_cache(maxsize=None)
def subgroups(group: FiniteGroup, max_group_order: int = 16) -> tuple[FiniteGroup, ...]:
    """All subgroups, by closing every generating subset of bounded size.

    Any group of order m is generated by at most log2(m) elements, so subsets
    up to that size are exhaustive.  Quadratic-ish in practice; refuses
    groups larger than ``max_group_order``.
    """
    m = len(group)
    if m > max_group_order:
        raise ValueError(f"subgroup enumeration capped at order {max_group_order}, got {m}")
    bound = max(1, math.ceil(math.log2(m))) if m > 1 else 0
    seen = {frozenset({group.identity})}
    out = [FiniteGroup.from_elements(group.degree, [group.identity])]
    for size in range(1, bound + 1):
        for combo in combinations(group.elements, size):
            windows = _kernels.closure(group.degree, [g.window for g in combo])
            elems = frozenset(SignedPermutation(w) for w in windows)
            if elems not in seen:
                seen.add(elems)
                out.append(FiniteGroup.from_elements(group.degree, elems, combo))
    out.sort(key=lambda h: (len(h), tuple(g.window for g in h.elements)))
    return tuple(out)


class GroupHom:
    """A verified homomorphism between explicit finite groups.

    Stored as a full index table aligned with ``domain.elements``.  Every
    constructor path validates the homomorphism equation on all element
    pairs except where the table was already produced by the exhaustively
    checked enumeration kernel.
    """

    def __init__(self, domain: FiniteGroup, codomain: FiniteGroup, mapping, *, _checked=False):
        self.domain = domain
        self.codomain = codomain
        arr = np.ascontiguousarray(mapping, dtype=np.int32)
        if arr.shape != (len(domain),):
            raise ValueError("mapping table length does not match the domain order")
        if int(arr.min()) < 0 or int(arr.max()) >= len(codomain):
            raise ValueError("mapping table contains positions outside the codomain")
        self._mapping = arr
        self._mapping.setflags(write=False)
        if not _checked:
            bad = _kernels.hom_violation(arr, domain.table, codomain.table)
            if bad is not None:
                i, j = bad
                u, v = domain.elements[i], domain.elements[j]
                raise NotAHomomorphismError(
                    f"map({u!r}) * map({v!r}) != map({u!r} * {v!r})"
                )

    @classmethod
    def from_mapping(
        cls,
        domain: FiniteGroup,
        codomain: FiniteGroup,
        mapping: Mapping[SignedPermutation, SignedPermutation],
    ) -> "GroupHom":
        """Build from a total element-to-element mapping and validate it."""
        arr = np.empty(len(domain), dtype=np.int32)
        for i, g in enumerate(domain.elements):
            try:
                img = mapping[g]
            except KeyError:
                raise ValueError(f"mapping is missing the element {g!r}") from None
            arr[i] = codomain.index(img)
        return cls(domain, codomain, arr)

    def __call__(self, g: SignedPermutation) -> SignedPermutation:
        return self.codomain.elements[int(self._mapping[self.domain.index(g)])]

    @property
    def table(self) -> np.ndarray:
        return self._mapping

    def as_pairs(self) -> Iterator[tuple[SignedPermutation, SignedPermutation]]:
        for i, g in enumerate(self.domain.elements):
            yield g, self.codomain.elements[int(self._mapping[i])]

    def image_of(self, subset: Iterable[SignedPermutation]) -> frozenset[SignedPermutation]:
        return frozenset(self(g) for g in subset)

    @cached_property
    def kernel_elements(self) -> frozenset[SignedPermutation]:
        e = self.codomain.identity_index
        return frozenset(
            self.domain.elements[i] for i in np.nonzero(self._mapping == e)[0]
        )

    @cached_property
    def image_elements(self) -> frozenset[SignedPermutation]:
        return frozenset(
            self.codomain.elements[int(i)] for i in np.unique(self._mapping)
        )

    @property
    def is_injective(self) -> bool:
        return len(self.image_elements) == len(self.domain)

    @property
    def is_surjective(self) -> bool:
        return len(self.image_elements) == len(self.codomain)

    @property
    def is_bijective(self) -> bool:
        return self.is_injective and self.is_surjective

    def after(self, other: "GroupHom") -> "GroupHom":
        """Composite self∘other; ``other`` is applied first."""
        if other.codomain != self.domain:
            raise ValueError("codomain of the first map must equal domain of the second")
        return GroupHom(
            other.domain, self.codomain, self._mapping[other._mapping], _checked=True
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupHom):
            return NotImplemented
        return (
            self.domain == other.domain
            and self.codomain == other.codomain
            and np.array_equal(self._mapping, other._mapping)
        )

    def __hash__(self) -> int:
        return hash((self.domain, self.codomain, self._mapping.tobytes()))

    def __repr__(self) -> str:
        return f"GroupHom({self.domain!r} -> {self.codomain!r})"


def identity_hom(group: FiniteGroup) -> GroupHom:
    return GroupHom(group, group, np.arange(len(group), dtype=np.int32), _checked=True)


def trivial_hom(domain: FiniteGroup, codomain: FiniteGroup) -> GroupHom:
    mapping = np.full(len(domain), codomain.identity_index, dtype=np.int32)
    return GroupHom(domain, codomain, mapping, _checked=True)


def hom_from_generator_images(
    domain: FiniteGroup,
    codomain: FiniteGroup,
    images: Mapping[SignedPermutation, SignedPermutation],
) -> GroupHom:
    """Extend generator images along a spanning tree, then validate everywhere.

    Raises NotAHomomorphismError when the images are inconsistent with the
    group relations, ValueError when a generator image is missing.
    """
    img_idx = {}
    for g in domain.generators:
        gi = domain.index(g)
        if gi == domain.identity_index:
            continue
        try:
            img = images[g]
        except KeyError:
            raise ValueError(f"no image given for generator {g!r}") from None
        img_idx[gi] = codomain.index(img)
    bfs_order, parent, pgen = domain.spanning_tree
    gen_images = [img_idx[gi] for gi in domain.generator_indices]
    mapping = np.empty(len(domain), dtype=np.int32)
    mapping[domain.identity_index] = codomain.identity_index
    ctable = codomain.table
    for t in range(1, len(bfs_order)):
        i = int(bfs_order[t])
        mapping[i] = ctable[gen_images[int(pgen[i])], mapping[int(parent[i])]]
    return GroupHom(domain, codomain, mapping)


def kernel(h: GroupHom) -> FiniteGroup:
    """The kernel of a homomorphism, as an explicit group."""
    return FiniteGroup.from_elements(h.domain.degree, h.kernel_elements)


def _hom_candidates(domain: FiniteGroup, codomain: FiniteGroup) -> list[np.ndarray]:
    """Per-generator codomain positions whose order divides the generator order."""
    dom_orders = domain.element_orders
    cod_orders = codomain.element_orders
    cands = []
    for gi in domain.generator_indices:
        og = int(dom_orders[gi])
        cands.append(
            np.array(
                [c for c in range(len(codomain)) if og % int(cod_orders[c]) == 0],
                dtype=np.int32,
            )
        )
    return cands


def count_hom_candidates(domain: FiniteGroup, codomain: FiniteGroup) -> int:
    """Number of generator-image combinations the enumeration would try."""
    total = 1
    for c in _hom_candidates(domain, codomain):
        total *= len(c)
    return total


@lru_cache(maxsize=None)
def enumerate_group_homs(domain: FiniteGroup, codomain: FiniteGroup) -> tuple[GroupHom, ...]:
    """Every homomorphism from ``domain`` to ``codomain``.

    Candidate generator images are pruned by element-order divisibility,
    extended along a spanning tree and verified on all pairs by the kernel
    backend.  The result is sorted by table bytes, so it does not depend on
    the generating set.  Cached per group pair.
    """
    bfs_order, parent, pgen = domain.spanning_tree
    tables = _kernels.enumerate_hom_tables(
        domain.table,
        codomain.table,
        bfs_order,
        parent,
        pgen,
        _hom_candidates(domain, codomain),
        domain.identity_index,
        codomain.identity_index,
    )
    homs = [GroupHom(domain, codomain, t, _checked=True) for t in tables]
    homs.sort(key=lambda h: h.table.tobytes())
    return tuple(homs)


def _shift_window(window: tuple[int, ...], offset: int) -> tuple[int, ...]:
    return tuple(x + offset if x > 0 else x - offset for x in window)


def _unshift_window(window: tuple[int, ...], offset: int) -> tuple[int, ...]:
    return tuple(x - offset if x > 0 else x + offset for x in window)


@dataclass(frozen=True)
class DirectProduct:
    """A direct product with its projections and block embeddings.

    The product carrier consists of degree n1+n2 signed permutations whose
    window is the left factor's window followed by the right factor's window
    shifted up by n1.
    """

    group: FiniteGroup
    left: FiniteGroup
    right: FiniteGroup
    proj_left: GroupHom
    proj_right: GroupHom
    embed_left: GroupHom
    embed_right: GroupHom

    def pair(self, g: SignedPermutation, k: SignedPermutation) -> SignedPermutation:
        return SignedPermutation(
            g.window + _shift_window(k.window, self.left.degree)
        )

    def split(self, e: SignedPermutation) -> tuple[SignedPermutation, SignedPermutation]:
        n1 = self.left.degree
        return (
            SignedPermutation(e.window[:n1]),
            SignedPermutation(_unshift_window(e.window[n1:], n1)),
        )


@lru_cache(maxsize=None)
def direct_product_n(groups: tuple[FiniteGroup, ...]):
    """Flat direct product of several groups.

    Returns ``(group, projections, embeddings)``.  Element windows are the
    factor windows concatenated block by block, so iterated binary products
    and the flat product have identical element sets.
    """
    if not groups:
        raise ValueError("direct product needs at least one factor")
    offsets = [0]
    for g in groups:
        offsets.append(offsets[-1] + g.degree)
    degree = offsets[-1]

    def flat(parts):
        w: tuple[int, ...] = ()
        for part, off in zip(parts, offsets):
            w = w + _shift_window(part.window, off)
        return w

    combos = [()]
    for g in groups:
        combos = [c + (x,) for c in combos for x in g.elements]
    elements = tuple(sorted(SignedPermutation(flat(c)) for c in combos))

    generators = []
    identities = [g.identity for g in groups]
    for pos, g in enumerate(groups):
        for gen in g.generators:
            parts = list(identities)
            parts[pos] = gen
            generators.append(SignedPermutation(flat(parts)))
    product = FiniteGroup.from_elements(degree, elements, tuple(dict.fromkeys(generators)))

    projections = []
    embeddings = []
    for pos, g in enumerate(groups):
        lo, hi = offsets[pos], offsets[pos + 1]
        proj_map = np.empty(len(product), dtype=np.int32)
        for i, e in enumerate(product.elements):
            proj_map[i] = g.index(SignedPermutation(_unshift_window(e.window[lo:hi], lo)))
        projections.append(GroupHom(product, g, proj_map))
        emb_map = np.empty(len(g), dtype=np.int32)
        for i, x in enumerate(g.elements):
            parts = list(identities)
            parts[pos] = x
            emb_map[i] = product.index(SignedPermutation(flat(parts)))
        embeddings.append(GroupHom(g, product, emb_map))
    return product, tuple(projections), tuple(embeddings)


def direct_product(left: FiniteGroup, right: FiniteGroup) -> DirectProduct:
    """Binary direct product with projections and embeddings."""
    group, projections, embeddings = direct_product_n((left, right))
    return DirectProduct(
        group=group,
        left=left,
        right=right,
        proj_left=projections[0],
        proj_right=projections[1],
        embed_left=embeddings[0],
        embed_right=embeddings[1],
    )
