"""Compare the pure Python kernels against the compiled extension.

Feeds identical raw arrays to ``softgroups._kernels._core_py`` and
``softgroups._kernels._core_c`` (both stay importable side by side),
verifies the outputs agree, and prints a timing table.

Usage::

    python3 benchmarks/bench_backends.py
"""

import time

import numpy as np

from softgroups import adjacent_transposition, hyperoctahedral_group, sign_change
from softgroups._kernels import _core_py

try:
    from softgroups._kernels import _core_c
except ImportError:
    _core_c = None


def timed(fn, *args, repeats=3):
    best = float("inf")
    result = None
    for _ in range(repeats):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def hom_enum_inputs(dom, cod):
    bfs, parent, pgen = dom.spanning_tree
    cands = []
    for g in dom.generator_indices:
        og = int(dom.element_orders[g])
        cands.append(
            [j for j in range(len(cod)) if og % int(cod.element_orders[j]) == 0]
        )
    return (
        dom.table,
        cod.table,
        bfs,
        parent,
        pgen,
        cands,
        dom.identity_index,
        cod.identity_index,
    )


def main():
    if _core_c is None:
        print("compiled backend not built; nothing to compare")
        return

    w4 = hyperoctahedral_group(4)
    w3 = hyperoctahedral_group(3)
    w2 = hyperoctahedral_group(2)

    gens5 = [g.window for g in
             [adjacent_transposition(5, i) for i in range(1, 5)] + [sign_change(5, 1)]]
    rows = []

    t_py, r_py = timed(_core_py.closure, 5, gens5)
    t_cy, r_cy = timed(_core_c.closure, 5, gens5)
    assert [tuple(w) for w in r_py] == [tuple(w) for w in r_cy]
    rows.append(("closure of W_5 (3840 elements)", t_py, t_cy))

    t_py, r_py = timed(_core_py.multiplication_table, w4.windows_array)
    t_cy, r_cy = timed(_core_c.multiplication_table, w4.windows_array)
    assert np.array_equal(np.asarray(r_py), np.asarray(r_cy))
    rows.append(("multiplication table of W_4 (384 x 384)", t_py, t_cy))

    args = hom_enum_inputs(w2, w3)
    t_py, r_py = timed(_core_py.enumerate_hom_tables, *args)
    t_cy, r_cy = timed(_core_c.enumerate_hom_tables, *args)
    assert len(r_py) == len(r_cy)
    for a, b in zip(r_py, r_cy):
        assert np.array_equal(np.asarray(a), np.asarray(b))
    rows.append((f"hom tables W_2 -> W_3 ({len(r_py)} found)", t_py, t_cy))

    args = hom_enum_inputs(w3, w3)
    t_py, r_py = timed(_core_py.enumerate_hom_tables, *args, repeats=1)
    t_cy, r_cy = timed(_core_c.enumerate_hom_tables, *args, repeats=1)
    assert len(r_py) == len(r_cy)
    for a, b in zip(r_py, r_cy):
        assert np.array_equal(np.asarray(a), np.asarray(b))
    rows.append((f"hom tables W_3 -> W_3 ({len(r_py)} found)", t_py, t_cy))

    width = max(len(r[0]) for r in rows)
    print(f"{'benchmark':<{width}}  {'python':>10}  {'cython':>10}  {'speedup':>8}")
    for label, t_py, t_cy in rows:
        speedup = t_py / t_cy if t_cy > 0 else float("inf")
        print(f"{label:<{width}}  {t_py:>9.4f}s  {t_cy:>9.4f}s  {speedup:>7.1f}x")
    print("all outputs identical across backends")


if __name__ == "__main__":
    main()
