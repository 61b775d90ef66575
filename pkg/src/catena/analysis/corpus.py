"""Deterministic corpus of finite ring extensions.

The small corpus is every ring of order <= ``max_order`` produced by the
constructor grammar below, paired with every one of its subrings as base.
Rings are deduplicated by isomorphism invariants plus an exact table check,
so each isomorphism type appears once. Named instances add a few larger
extensions on top.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from catena import polyfp
from catena.rings.constructors import (
    free_module,
    quotient_with_map,
    ring_gf,
    ring_idealization,
    ring_poly_quotient,
    ring_product,
    ring_zmod,
)
from catena.rings.extension import RingExtension, enumerate_ideals, enumerate_subrings
from catena.rings.ring import FiniteCommRing, Subring
from catena.rings.spec import build_extension

SMALL_ORDER = 16


@dataclass(frozen=True)
class CorpusItem:
    name: str
    ext: RingExtension


def _monic_moduli(base: FiniteCommRing, deg: int) -> Iterator[list[int]]:
    for low in itertools.product(range(base.order), repeat=deg):
        yield list(low) + [base.one]


def _indecomposable(max_order: int) -> list[FiniteCommRing]:
    out: list[FiniteCommRing] = []
    for n in range(2, max_order + 1):
        out.append(ring_zmod(n))
    for q in range(2, max_order + 1):
        for p in range(2, q + 1):
            if polyfp.is_prime(p) and q % p == 0:
                k = 1
                while p**k < q:
                    k += 1
                if p**k == q and k > 1:
                    out.append(ring_gf(p, deg=k))
    # polynomial quotients over small residue rings
    for base in [ring_zmod(n) for n in range(2, max_order + 1)] + [ring_gf(2, deg=2)]:
        deg = 2
        while base.order**deg <= max_order:
            for f in _monic_moduli(base, deg):
                out.append(ring_poly_quotient(base, f))
            deg += 1
    for R in [ring_zmod(n) for n in range(2, max_order + 1)] + [ring_gf(2, deg=2)]:
        rank = 1
        while R.order ** (rank + 1) <= max_order:
            out.append(ring_idealization(R, free_module(R, rank)))
            rank += 1
    # proper quotients by every nonzero ideal
    for R in list(out):
        if R.order >= 4:
            for I in enumerate_ideals(R.whole):
                if 1 < I.order < R.order:
                    out.append(quotient_with_map(R, I)[0])
    return out


def _invariant(R: FiniteCommRing) -> tuple:
    mul_zero = (R.mul == R.zero).sum(axis=1)
    add_orders = []
    for a in range(R.order):
        x, k = a, 1
        while x != R.zero:
            x = int(R.add[x, a])
            k += 1
        add_orders.append(k)
    idem = sum(1 for e in range(R.order) if R.mul[e, e] == e)
    nil = int(R.nilpotent.sum())
    squares = len(set(R.mul.diagonal().tolist()))
    return (R.order, idem, nil, squares, tuple(sorted(add_orders)), tuple(sorted(mul_zero.tolist())))


def _isomorphic(A: FiniteCommRing, B: FiniteCommRing) -> bool:
    """Exact isomorphism test by extending a map from a small generating set."""
    if A.order != B.order:
        return False
    # generators of A: greedily pick elements until the closure is everything
    gens: list[int] = []
    mask = 0
    for x in range(A.order):
        if not mask >> x & 1:
            gens.append(x)
            mask = A.closure_mask(mask | (1 << x) | (1 << A.one))
        if mask == (1 << A.order) - 1:
            break
    words = _words(A, gens)
    for images in itertools.product(range(B.order), repeat=len(gens)):
        phi = _extend(A, B, gens, images, words)
        if phi is not None:
            return True
    return False


def _words(A: FiniteCommRing, gens: list[int]) -> list[tuple]:
    """A derivation of every element of A from 1 and the generators: list of (x, op, a, b)."""
    seen = {A.one: ("one",)}
    for i, g in enumerate(gens):
        seen.setdefault(g, ("gen", i))
    order = list(seen)
    frontier = list(seen)
    while frontier:
        new = []
        for a in list(order):
            for b in frontier:
                for op, table in (("add", A.add), ("mul", A.mul)):
                    c = int(table[a, b])
                    if c not in seen:
                        seen[c] = (op, a, b)
                        order.append(c)
                        new.append(c)
        frontier = new
    return [(x,) + seen[x] for x in order]


def _extend(A, B, gens, images, words):
    phi: dict[int, int] = {}
    for x, kind, *args in words:
        if kind == "one":
            v = B.one
        elif kind == "gen":
            v = images[args[0]]
        elif kind == "add":
            v = int(B.add[phi[args[0]], phi[args[1]]])
        else:
            v = int(B.mul[phi[args[0]], phi[args[1]]])
        if x in phi and phi[x] != v:
            return None
        phi[x] = v
    if len(set(phi.values())) != A.order:
        return None
    m = np.array([phi[i] for i in range(A.order)])
    if not (np.array_equal(m[A.add], B.add[np.ix_(m, m)]) and np.array_equal(m[A.mul], B.mul[np.ix_(m, m)])):
        return None
    return m


def _dedupe(rings: list[FiniteCommRing]) -> list[FiniteCommRing]:
    buckets: dict[tuple, list[FiniteCommRing]] = {}
    out = []
    for R in rings:
        key = _invariant(R)
        bucket = buckets.setdefault(key, [])
        if any(_isomorphic(R, B) for B in bucket):
            continue
        bucket.append(R)
        out.append(R)
    return out


@lru_cache(maxsize=4)
def small_rings(max_order: int = SMALL_ORDER) -> tuple[FiniteCommRing, ...]:
    """One ring per isomorphism type reachable by the grammar, order <= max_order."""
    base = _dedupe(_indecomposable(max_order))
    rings = list(base)
    # products of two or more factors (non-decreasing in the factor list order)
    def grow(prefix: list[int], size: int) -> None:
        start = prefix[-1] if prefix else 0
        for i in range(start, len(base)):
            s = size * base[i].order
            if s > max_order:
                continue
            new = prefix + [i]
            if len(new) >= 2:
                rings.append(ring_product([base[j] for j in new]))
            grow(new, s)

    grow([], 1)
    return tuple(_dedupe(rings))


def small_corpus(max_order: int = SMALL_ORDER) -> list[CorpusItem]:
    """Every subring R of every small ring S, as the extension R <= S."""
    items = []
    for S in small_rings(max_order):
        subrings, _ = enumerate_subrings(Subring(S, (1 << S.one) | (1 << S.zero)))
        for k, T in enumerate(subrings):
            items.append(CorpusItem(f"{S.name} over T{k}", RingExtension.from_subring(T)))
    return items


NAMED_SPECS: dict[str, dict] = {
    "F2 <= F2 x F4": {"S": {"construct": "product", "factors": [{"construct": "gf", "p": 2}, {"construct": "gf", "p": 2, "deg": 2}]}},
    "F2 <= F2^2": {"S": {"construct": "product", "factors": [{"construct": "gf", "p": 2}] * 2}},
    "F2 <= F2^3": {"S": {"construct": "product", "factors": [{"construct": "gf", "p": 2}] * 3}},
    "F2 <= F4 x F4": {"S": {"construct": "product", "factors": [{"construct": "gf", "p": 2, "deg": 2}] * 2}},
    "F2 <= F4 x F8": {"S": {"construct": "product", "factors": [{"construct": "gf", "p": 2, "deg": 2}, {"construct": "gf", "p": 2, "deg": 3}]}},
    "F2 <= F64": {"S": {"construct": "gf", "p": 2, "deg": 6}},
    "F3 <= F3^3": {"S": {"construct": "product", "factors": [{"construct": "gf", "p": 3}] * 3}},
    "F2 <= F2(+)F2^2 x F4": {
        "S": {
            "construct": "product",
            "factors": [
                {"construct": "idealization", "ring": {"construct": "gf", "p": 2}, "module": {"construct": "free", "rank": 2}},
                {"construct": "gf", "p": 2, "deg": 2},
            ]
        }
    },
    "Z/4 <= Z/4[x]/(x^2+x+1)": {"S": {"construct": "poly_quotient", "base": {"construct": "zmod", "n": 4}, "modulus": [1, 1, 1]}},
    "F4 <= F4[y]/(y^3)": {"S": {"construct": "poly_quotient", "base": {"construct": "gf", "p": 2, "deg": 2}, "modulus": [0, 0, 0, 1]}, "R": {"generators": [2]}},
}


def named_corpus() -> list[CorpusItem]:
    return [CorpusItem(name, build_extension(spec)) for name, spec in NAMED_SPECS.items()]


def corpus(max_order: int = SMALL_ORDER) -> list[CorpusItem]:
    return small_corpus(max_order) + named_corpus()
