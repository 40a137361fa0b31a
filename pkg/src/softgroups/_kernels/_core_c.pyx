# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: initializedcheck=False
# cython: cdivision=True
"""Compiled backend for the hot kernels.

Mirrors ``_core_py`` function by function; results, iteration order and error
text must stay identical (enforced by tests/test_kernels.py).
"""

import numpy as np

MAX_CODE_DEGREE = 13


def compose_windows(u, v):
    """Window of the composite u∘v, i.e. i ↦ u(v(i))."""
    cdef Py_ssize_t n = len(v)
    cdef list out = [0] * n
    cdef Py_ssize_t t
    cdef long j
    for t in range(n):
        j = v[t]
        out[t] = u[j - 1] if j > 0 else -u[-j - 1]
    return tuple(out)


def inverse_window(w):
    """Window of the inverse signed permutation."""
    cdef Py_ssize_t n = len(w)
    cdef list out = [0] * n
    cdef Py_ssize_t i
    cdef long j
    for i in range(n):
        j = w[i]
        if j > 0:
            out[j - 1] = i + 1
        else:
            out[-j - 1] = -(i + 1)
    return tuple(out)


def closure(degree, generators):
    """Breadth-first orbit of the identity under left multiplication."""
    cdef tuple identity = tuple(range(1, degree + 1))
    cdef set found = {identity}
    cdef list out = [identity]
    cdef list gens = [tuple(g) for g in generators]
    cdef Py_ssize_t head = 0
    cdef tuple w, x, g
    while head < len(out):
        w = out[head]
        head += 1
        for g in gens:
            x = compose_windows(g, w)
            if x not in found:
                found.add(x)
                out.append(x)
    return out


cdef inline Py_ssize_t _bisect(const long long[:] sorted_codes, long long target) noexcept nogil:
    cdef Py_ssize_t lo = 0, hi = sorted_codes.shape[0], mid
    while lo < hi:
        mid = (lo + hi) // 2
        if sorted_codes[mid] < target:
            lo = mid + 1
        else:
            hi = mid
    return lo


def _table_dict_fallback(windows):
    win = [tuple(int(x) for x in row) for row in windows]
    index = {w: i for i, w in enumerate(win)}
    cdef Py_ssize_t m = len(win)
    table = np.empty((m, m), dtype=np.int32)
    cdef int[:, :] tv = table
    cdef Py_ssize_t i, j
    for i in range(m):
        for j in range(m):
            k = index.get(compose_windows(win[i], win[j]))
            if k is None:
                raise ValueError(f"composition of elements {i} and {j} leaves the set")
            tv[i, j] = k
    return table


def multiplication_table(windows):
    """Index table t[i, j] = position of element_i ∘ element_j."""
    windows = np.ascontiguousarray(windows, dtype=np.int16)
    cdef Py_ssize_t m = windows.shape[0], n = windows.shape[1]
    if n > MAX_CODE_DEGREE:
        return _table_dict_fallback(windows)
    cdef const short[:, :] win = windows
    cdef long long base = 2 * n + 1
    codes = np.empty(m, dtype=np.int64)
    cdef long long[:] cv = codes
    cdef Py_ssize_t i, j, t, pos
    cdef long long c, wgt
    cdef long jj, val
    for i in range(m):
        c = 0
        wgt = 1
        for t in range(n):
            c += (win[i, t] + n) * wgt
            wgt *= base
        cv[i] = c
    order = np.argsort(codes, kind="stable").astype(np.int64)
    sorted_codes = codes[order]
    cdef const long long[:] sc = sorted_codes
    cdef const long long[:] ov = order
    table = np.empty((m, m), dtype=np.int32)
    cdef int[:, :] tv = table
    for i in range(m):
        for j in range(m):
            c = 0
            wgt = 1
            for t in range(n):
                jj = win[j, t]
                val = win[i, jj - 1] if jj > 0 else -win[i, -jj - 1]
                c += (val + n) * wgt
                wgt *= base
            pos = _bisect(sc, c)
            if pos >= m or sc[pos] != c:
                raise ValueError(f"composition of elements {i} and {j} leaves the set")
            tv[i, j] = <int> ov[pos]
    return table


def inverse_indices(windows):
    """Position of each element's inverse; ValueError if one is missing."""
    win = [tuple(int(x) for x in row) for row in windows]
    index = {w: i for i, w in enumerate(win)}
    cdef Py_ssize_t m = len(win)
    out = np.empty(m, dtype=np.int32)
    cdef int[:] ov = out
    cdef Py_ssize_t i
    for i in range(m):
        j = index.get(inverse_window(win[i]))
        if j is None:
            raise ValueError(f"inverse of element {i} missing from the set")
        ov[i] = j
    return out


def hom_violation(mapping, dom_table, cod_table):
    """First pair (i, j), row-major, with map(i)·map(j) != map(i·j), or None."""
    mapping = np.ascontiguousarray(mapping, dtype=np.int32)
    dom_table = np.ascontiguousarray(dom_table, dtype=np.int32)
    cod_table = np.ascontiguousarray(cod_table, dtype=np.int32)
    cdef const int[:] mp = mapping
    cdef const int[:, :] dt = dom_table
    cdef const int[:, :] ct = cod_table
    cdef Py_ssize_t m = mp.shape[0], a, b
    for a in range(m):
        for b in range(m):
            if ct[mp[a], mp[b]] != mp[dt[a, b]]:
                return (a, b)
    return None


def enumerate_hom_tables(dom_table, cod_table, bfs_order, parent, parent_gen,
                         candidate_images, dom_identity, cod_identity):
    """All full homomorphism tables extending any choice of generator images.

    Same contract as the pure version: odometer order over the candidate
    lists, every returned table verified on all element pairs.
    """
    dom_table = np.ascontiguousarray(dom_table, dtype=np.int32)
    cod_table = np.ascontiguousarray(cod_table, dtype=np.int32)
    cdef const int[:, :] dt = dom_table
    cdef const int[:, :] ct = cod_table
    cdef Py_ssize_t m = dt.shape[0]

    bfs_arr = np.ascontiguousarray(bfs_order, dtype=np.int32)
    par_arr = np.ascontiguousarray(parent, dtype=np.int32)
    pgen_arr = np.ascontiguousarray(parent_gen, dtype=np.int32)
    cdef const int[:] bfs = bfs_arr
    cdef const int[:] par = par_arr
    cdef const int[:] pgen = pgen_arr

    cands = [np.ascontiguousarray(c, dtype=np.int32) for c in candidate_images]
    cdef Py_ssize_t k = len(cands)
    sizes_arr = np.array([c.shape[0] for c in cands], dtype=np.int64) if k else np.zeros(0, dtype=np.int64)
    cdef const long long[:] sizes = sizes_arr
    flat_off = np.zeros(k + 1, dtype=np.int64)
    if k:
        flat_off[1:] = np.cumsum(sizes_arr)
    flat_arr = np.concatenate(cands).astype(np.int32) if k else np.zeros(0, dtype=np.int32)
    cdef const int[:] flat = flat_arr
    cdef const long long[:] off = flat_off

    idx_arr = np.zeros(max(k, 1), dtype=np.int64)
    cdef long long[:] idx = idx_arr
    imgs_arr = np.zeros(max(k, 1), dtype=np.int32)
    cdef int[:] imgs = imgs_arr
    mapping = np.empty(m, dtype=np.int32)
    cdef int[:] mv = mapping

    cdef Py_ssize_t di = dom_identity, ci = cod_identity
    cdef Py_ssize_t t, i, a, b, g
    cdef Py_ssize_t posn
    cdef bint ok, more
    cdef list results = []

    for t in range(k):
        if sizes[t] == 0:
            return results
        imgs[t] = flat[off[t]]

    more = True
    while more:
        mv[di] = ci
        for t in range(1, m):
            i = bfs[t]
            mv[i] = ct[imgs[pgen[i]], mv[par[i]]]
        ok = True
        for a in range(m):
            for b in range(m):
                if ct[mv[a], mv[b]] != mv[dt[a, b]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            results.append(mapping.copy())
        # advance odometer, last position fastest (itertools.product order)
        if k == 0:
            break
        posn = k - 1
        while posn >= 0:
            idx[posn] += 1
            if idx[posn] < sizes[posn]:
                imgs[posn] = flat[off[posn] + idx[posn]]
                break
            idx[posn] = 0
            imgs[posn] = flat[off[posn]]
            posn -= 1
        if posn < 0:
            more = False
    return results
