"""Named small groups and the bundled catalog of all groups of order <= 24.

Constructors build groups from permutations (small symmetric-group
actions) or from abstract multiplication tables via the regular action.
The bundled catalog (``data/groups.json``) is produced by
``scripts/gen_groups.py`` and holds one group per isomorphism type.
"""
from __future__ import annotations

import itertools
import json
from functools import lru_cache
from importlib import resources
from typing import Callable, Sequence

import numpy as np

from catena.galois.group import FiniteGroup, _generating_set

# -- permutation constructors -----------------------------------------------------


def cyclic(n: int) -> FiniteGroup:
    if n == 1:
        return FiniteGroup(1, [[1]], "C1")
    return FiniteGroup(n, [[(i + 1) % n + 1 for i in range(n)]], f"C{n}")


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n (n >= 3); D2 is the Klein four-group."""
    if n == 2:
        return FiniteGroup(4, [[2, 1, 4, 3], [3, 4, 1, 2]], "D2")
    rot = [(i + 1) % n + 1 for i in range(n)]
    ref = [(-i) % n + 1 for i in range(n)]
    return FiniteGroup(n, [rot, ref], f"D{n}")


def symmetric(n: int) -> FiniteGroup:
    if n == 1:
        return FiniteGroup(1, [[1]], "S1")
    cycle = [(i + 1) % n + 1 for i in range(n)]
    swap = [2, 1] + list(range(3, n + 1))
    return FiniteGroup(n, [cycle, swap], f"S{n}")


def alternating(n: int) -> FiniteGroup:
    if n < 3:
        return FiniteGroup(max(n, 1), [list(range(1, max(n, 1) + 1))], f"A{n}")
    gens = []
    for k in range(3, n + 1):
        p = list(range(1, n + 1))
        p[0], p[1], p[k - 1] = 2, k, 1  # the 3-cycle (1 2 k)
        gens.append(p)
    return FiniteGroup(n, gens, f"A{n}")


def direct_product(*groups: FiniteGroup, name: str | None = None) -> FiniteGroup:
    """Action on the disjoint union of the factors' points."""
    total = sum(G.points for G in groups)
    gens = []
    offset = 0
    for G in groups:
        for g in G.generators:
            p = list(range(1, total + 1))
            for i, x in enumerate(g):
                p[offset + i] = offset + x + 1
            gens.append(p)
        offset += G.points
    if not gens:
        gens = [list(range(1, total + 1))]
    return FiniteGroup(total, gens, name or " x ".join(G.name for G in groups))


# -- table constructors -----------------------------------------------------------


def _table(n: int, op: Callable[[int, int], int]) -> np.ndarray:
    return np.array([[op(a, b) for b in range(n)] for a in range(n)], dtype=np.int32)


def semidirect_cyclic(m: int, n: int, r: int, name: str | None = None) -> FiniteGroup:
    """<x, y | x^m, y^n, y x y^-1 = x^r>, elements x^a y^b indexed a + m b."""
    if pow(r, n, m) != 1 % m:
        raise ValueError("r must have multiplicative order dividing n modulo m")

    def op(u: int, v: int) -> int:
        a, b = u % m, u // m
        c, d = v % m, v // m
        return (a + c * pow(r, b, m)) % m + m * ((b + d) % n)

    return FiniteGroup.from_table(_table(m * n, op), name or f"C{m}:C{n}")


def dicyclic(n: int, name: str | None = None) -> FiniteGroup:
    """Order 4n: <a, x | a^(2n), x^2 = a^n, x a x^-1 = a^-1>; elements a^k x^e indexed k + 2n e."""
    m = 2 * n

    def op(u: int, v: int) -> int:
        k, e = u % m, u // m
        l, f = v % m, v // m
        if e == 0:
            return (k + l) % m + m * f
        if f == 0:
            return (k - l) % m + m
        return (k - l + n) % m

    return FiniteGroup.from_table(_table(2 * m, op), name or f"Dic{n}")


def matrix_group(p: int, gens: Sequence[Sequence[Sequence[int]]], name: str) -> FiniteGroup:
    """Group generated by invertible matrices over F_p."""
    gens = [np.array(g, dtype=np.int64) % p for g in gens]
    k = gens[0].shape[0]
    ident = np.eye(k, dtype=np.int64)
    key = lambda A: tuple(A.ravel().tolist())  # noqa: E731
    seen = {key(ident): ident}
    frontier = [ident]
    while frontier:
        new = []
        for A in frontier:
            for g in gens:
                B = (A @ g) % p
                if key(B) not in seen:
                    seen[key(B)] = B
                    new.append(B)
        frontier = new
    keys = [key(ident)] + sorted(k_ for k_ in seen if k_ != key(ident))
    pos = {k_: i for i, k_ in enumerate(keys)}
    mats = [seen[k_] for k_ in keys]
    n = len(mats)
    table = np.array([[pos[key((mats[a] @ mats[b]) % p)] for b in range(n)] for a in range(n)], dtype=np.int32)
    return FiniteGroup.from_table(table, name)


def special_linear_2_3() -> FiniteGroup:
    return matrix_group(3, [[[1, 1], [0, 1]], [[0, 1], [2, 0]]], "SL(2,3)")


def cyclic_extension_table(N: FiniteGroup, phi: Sequence[int], n0: int, p: int) -> np.ndarray | None:
    """Table of G = <N, g> with g^p = n0 and g y g^-1 = phi(y), or None if that is not a group.

    Elements (x, i) = x g^i are indexed x + |N| i.
    """
    n = N.order
    mul = N.mul
    phi = np.asarray(phi)
    powers = [np.arange(n)]
    for _ in range(p - 1):
        powers.append(phi[powers[-1]])
    size = n * p
    table = np.empty((size, size), dtype=np.int32)
    for i in range(p):
        twisted = powers[i]
        for j in range(p):
            wrap = n0 if i + j >= p else 0
            block = mul[mul[:, twisted][:, :], wrap]  # x * phi^i(y) * wrap
            table[i * n:(i + 1) * n, j * n:(j + 1) * n] = block + n * ((i + j) % p)
    return table if _is_group_table(table) else None


def _is_group_table(t: np.ndarray) -> bool:
    n = t.shape[0]
    idx = np.arange(n)
    if not (np.array_equal(t[0], idx) and np.array_equal(t[:, 0], idx)):
        return False
    if not all(len(set(row.tolist())) == n for row in t):
        return False
    return all(np.array_equal(t[t[a]], t[a][t]) for a in range(n))


# -- isomorphism --------------------------------------------------------------------


def group_invariant(G: FiniteGroup) -> tuple:
    """Multiset of (element order, centralizer size, is a square) plus the center size."""
    mul = G.mul
    squares = set(np.diagonal(mul).tolist())
    data = []
    for a in range(G.order):
        cent = int((mul[a] == mul[:, a]).sum())
        data.append((G.element_orders[a], cent, a in squares))
    return (G.order, bin(G.center).count("1"), tuple(sorted(data)))


def _words(G: FiniteGroup, gens: list[int]) -> list[tuple[int, int, int]]:
    """Every element as (x, a, g) meaning x = a * gens[g], found breadth-first from 0."""
    seen = {0}
    out = []
    frontier = [0]
    while frontier:
        new = []
        for a in frontier:
            for k, g in enumerate(gens):
                x = int(G.mul[a, g])
                if x not in seen:
                    seen.add(x)
                    out.append((x, a, k))
                    new.append(x)
        frontier = new
    return out


def homomorphisms_from_generators(A: FiniteGroup, B: FiniteGroup, injective: bool = True):
    """Yield index maps A -> B that are homomorphisms, determined by generator images."""
    gens = _generating_set(A.mul)
    words = _words(A, gens)
    options = [[b for b in range(B.order) if B.element_orders[b] == A.element_orders[g]] for g in gens]
    for images in itertools.product(*options):
        phi = np.zeros(A.order, dtype=np.int64)
        for x, a, k in words:
            phi[x] = B.mul[phi[a], images[k]]
        if injective and len(set(phi.tolist())) != A.order:
            continue
        if np.array_equal(phi[A.mul], B.mul[np.ix_(phi, phi)]):
            yield phi


def is_isomorphic_group(A: FiniteGroup, B: FiniteGroup) -> bool:
    if A.order != B.order or group_invariant(A) != group_invariant(B):
        return False
    return next(homomorphisms_from_generators(A, B), None) is not None


def automorphisms(G: FiniteGroup) -> list[np.ndarray]:
    return list(homomorphisms_from_generators(G, G))


# -- bundled catalog ------------------------------------------------------------------


@lru_cache(maxsize=1)
def _catalog_data() -> list[dict]:
    text = resources.files("catena").joinpath("data/groups.json").read_text()
    return json.loads(text)["groups"]


def catalog(max_order: int = 24) -> list[FiniteGroup]:
    """One group per isomorphism type of order <= max_order (bundled up to 24)."""
    return [FiniteGroup.from_json(d) for d in _catalog_data() if d["order"] <= max_order]


def named(name: str) -> FiniteGroup:
    for d in _catalog_data():
        if d["name"] == name:
            return FiniteGroup.from_json(d)
    raise KeyError(name)
