"""Compare the compiled and pure-Python kernels on representative inputs.

    python benchmarks/bench_kernels.py [--repeat N] [--json]

Each kernel is timed on both backends with identical inputs, and the
outputs are compared before any timing is reported.
"""
from __future__ import annotations

import argparse
import json
import timeit

import numpy as np

from catena import kernels
from catena.galois import subgroup_lattice, symmetric
from catena.lattice import divisor_lattice
from catena.rings import ring_gf, ring_product, ring_zmod


def _cases() -> list[tuple[str, str, tuple]]:
    S = ring_product([ring_gf(2, deg=3), ring_zmod(8)])  # 64 elements
    tables = np.stack([S.add, S.mul]).astype(np.int32)
    seed = np.zeros(S.order, dtype=np.uint8)
    seed[[S.zero, S.one, 9]] = 1
    L = subgroup_lattice(symmetric(4)).lattice  # 30 elements
    D = divisor_lattice(720)  # 30 elements, distributive
    big = divisor_lattice(2**4 * 3**2 * 5 * 7)  # 60 elements
    atoms = range(2, 11)  # bottom 0, top 1, nine atoms in between
    m9 = np.array([(1 << 11) - 1, 0b10] + [0b10 | 1 << a for a in atoms], dtype=np.uint32)
    return [
        ("closure", "subring of a 64-element ring", (tables, seed)),
        ("join_meet", "divisors of 5040", (big.leq.astype(np.uint8),)),
        ("distributive", "divisors of 720", (D.join_table, D.meet_table, np.arange(len(D)))),
        ("left_modular_elements", "subgroups of S4", (L.join_table, L.meet_table, L.leq.astype(np.uint8))),
        ("atom_children", "bottom, nine atoms, top", (m9,)),
    ]


def _same(a, b) -> bool:
    if isinstance(a, (tuple, list)):
        return all(_same(x, y) for x, y in zip(a, b))
    return bool(np.array_equal(np.asarray(a), np.asarray(b)))


def run(repeat: int) -> list[dict]:
    backends = kernels.backends()
    rows = []
    for fn, what, args in _cases():
        results = {name: getattr(mod, fn)(*args) for name, mod in backends.items()}
        ref = results["python"]
        if not all(_same(ref, r) for r in results.values()):
            raise AssertionError(f"{fn}: backends disagree")
        row = {"kernel": fn, "input": what}
        for name, mod in backends.items():
            f = getattr(mod, fn)
            t = timeit.Timer(lambda: f(*args))
            number, _ = t.autorange()
            row[name] = min(t.repeat(repeat, number)) / number
        if "cython" in row:
            row["speedup"] = row["python"] / row["cython"]
        rows.append(row)
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    rows = run(args.repeat)
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    print(f"{'kernel':24} {'python':>12} {'cython':>12} {'speedup':>9}  input")
    for r in rows:
        cy = f"{r['cython'] * 1e6:10.1f}us" if "cython" in r else "         n/a"
        sp = f"{r['speedup']:8.1f}x" if "speedup" in r else "      n/a"
        print(f"{r['kernel']:24} {r['python'] * 1e6:10.1f}us {cy} {sp}  {r['input']}")


if __name__ == "__main__":
    main()
