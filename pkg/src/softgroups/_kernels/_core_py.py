"""Pure-Python backend for the hot kernels.

The compiled backend in ``_core_c.pyx`` implements the same functions with
identical results (element order, tie-breaking, error text); the parity suite
in tests/test_kernels.py compares the two directly.  Windows are tuples of
signed integers ``(w(1), ..., w(n))``; tables are small numpy integer arrays.
"""

from __future__ import annotations

import itertools

import numpy as np

# Above this degree the packed positional code for a window no longer fits in
# int64 and the table builders fall back to a dict keyed by row bytes.
MAX_CODE_DEGREE = 13


def compose_windows(u, v):
    """Window of the composite u∘v, i.e. i ↦ u(v(i))."""
    return tuple(u[j - 1] if j > 0 else -u[-j - 1] for j in v)


def inverse_window(w):
    """Window of the inverse signed permutation."""
    out = [0] * len(w)
    for i, j in enumerate(w, start=1):
        if j > 0:
            out[j - 1] = i
        else:
            out[-j - 1] = -i
    return tuple(out)


def closure(degree, generators):
    """Breadth-first orbit of the identity under left multiplication.

    Returns windows in first-seen order; callers sort canonically.  In a
    finite ambient set positive words already contain all inverses, so no
    separate inverse pass is needed.
    """
    identity = tuple(range(1, degree + 1))
    found = {identity}
    out = [identity]
    gens = [tuple(g) for g in generators]
    head = 0
    while head < len(out):
        w = out[head]
        head += 1
        for g in gens:
            x = compose_windows(g, w)
            if x not in found:
                found.add(x)
                out.append(x)
    return out


def _codes(windows):
    m, n = windows.shape
    base = 2 * n + 1
    weights = base ** np.arange(n, dtype=np.int64)
    return (windows.astype(np.int64) + n) @ weights


def _table_dict_fallback(windows):
    win = [tuple(int(x) for x in row) for row in windows]
    index = {w: i for i, w in enumerate(win)}
    m = len(win)
    table = np.empty((m, m), dtype=np.int32)
    for i, u in enumerate(win):
        for j, v in enumerate(win):
            k = index.get(compose_windows(u, v))
            if k is None:
                raise ValueError(f"composition of elements {i} and {j} leaves the set")
            table[i, j] = k
    return table


def multiplication_table(windows):
    """Index table t[i, j] = position of element_i ∘ element_j.

    Raises ValueError naming the first offending pair (row-major) when the
    set is not closed under composition.
    """
    windows = np.ascontiguousarray(windows, dtype=np.int16)
    m, n = windows.shape
    if n > MAX_CODE_DEGREE:
        return _table_dict_fallback(windows)
    codes = _codes(windows)
    order = np.argsort(codes, kind="stable")
    sorted_codes = codes[order]
    base = 2 * n + 1
    weights = base ** np.arange(n, dtype=np.int64)
    # act[i, j + n] = w_i(j) for j in -n..n, so one fancy index composes a
    # fixed left factor with every element at once.
    act = np.empty((m, 2 * n + 1), dtype=np.int16)
    act[:, n + 1:] = windows
    act[:, n] = 0
    act[:, :n] = -windows[:, ::-1]
    shifted = windows.astype(np.intp) + n
    table = np.empty((m, m), dtype=np.int32)
    for i in range(m):
        res = act[i][shifted]
        rcodes = (res.astype(np.int64) + n) @ weights
        pos = np.searchsorted(sorted_codes, rcodes)
        clipped = np.minimum(pos, m - 1)
        bad = (pos >= m) | (sorted_codes[clipped] != rcodes)
        if bad.any():
            j = int(np.argmax(bad))
            raise ValueError(f"composition of elements {i} and {j} leaves the set")
        table[i] = order[pos]
    return table


def inverse_indices(windows):
    """Position of each element's inverse; ValueError if one is missing."""
    win = [tuple(int(x) for x in row) for row in windows]
    index = {w: i for i, w in enumerate(win)}
    out = np.empty(len(win), dtype=np.int32)
    for i, w in enumerate(win):
        j = index.get(inverse_window(w))
        if j is None:
            raise ValueError(f"inverse of element {i} missing from the set")
        out[i] = j
    return out


def hom_violation(mapping, dom_table, cod_table):
    """First pair (i, j), row-major, with map(i)·map(j) != map(i·j), or None."""
    mapping = np.asarray(mapping, dtype=np.int32)
    dom_table = np.asarray(dom_table)
    cod_table = np.asarray(cod_table)
    lhs = cod_table[mapping[:, None], mapping[None, :]]
    rhs = mapping[dom_table]
    neq = lhs != rhs
    if not neq.any():
        return None
    flat = int(np.argmax(neq))
    m = mapping.shape[0]
    return (flat // m, flat % m)


def enumerate_hom_tables(dom_table, cod_table, bfs_order, parent, parent_gen,
                         candidate_images, dom_identity, cod_identity):
    """All full homomorphism tables extending any choice of generator images.

    ``bfs_order``/``parent``/``parent_gen`` describe a spanning tree of the
    domain rooted at the identity, each non-root element being generator
    ``parent_gen`` left-multiplied onto ``parent``.  ``candidate_images``
    lists, per generator, the codomain positions to try.  Candidates are
    visited in odometer order (last generator varies fastest) and every
    surviving table has been checked on all element pairs.
    """
    dom_table = np.asarray(dom_table)
    cod_table = np.asarray(cod_table)
    m = dom_table.shape[0]
    bfs = [int(x) for x in bfs_order][1:]
    par = [int(parent[i]) for i in bfs]
    pgen = [int(parent_gen[i]) for i in bfs]
    cands = [[int(x) for x in c] for c in candidate_images]
    mapping = np.empty(m, dtype=np.int32)
    results = []
    for imgs in itertools.product(*cands):
        mapping[dom_identity] = cod_identity
        for i, p, g in zip(bfs, par, pgen):
            mapping[i] = cod_table[imgs[g], mapping[p]]
        lhs = cod_table[mapping[:, None], mapping[None, :]]
        if np.array_equal(lhs, mapping[dom_table]):
            results.append(mapping.copy())
    return results
