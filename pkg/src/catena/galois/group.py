"""Finite permutation groups, their subgroup lattices and supersolvability."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from catena import kernels
from catena._env import env_int
from catena.errors import ParseError, SizeLimitExceeded
from catena.galois.field import big_omega
from catena.lattice import (
    SUPERSOLVABLE_CAP,
    FiniteLattice,
    build_lattice,
    dual,
    is_graded,
    is_left_modular_lattice,
    is_supersolvable,
    length,
)
from catena.rings.ring import bits, mask_of, mask_to_member, member_to_mask

DEFAULT_GROUP_CAP = env_int("CATENA_GROUP_CAP", 48)
GROUP_CHECKS = (
    "supersolvable_iff_graded",
    "supersolvable_iff_lattice_supersolvable",
    "lattice_supersolvable_iff_graded_and_left_modular",
    "dual_same_gradedness",
    "abelian_length_is_prime_exponent_sum",
)


class FiniteGroup:
    """Group generated by permutations of ``points`` points.

    Generators are given 1-indexed (image of point i at position i-1). The
    elements are stored as 0-indexed tuples sorted lexicographically, so the
    identity is element 0. Products compose right to left: (ab)(i) = a(b(i)).
    """

    def __init__(
        self,
        points: int,
        generators: Sequence[Sequence[int]],
        name: str | None = None,
        cap: int | None = None,
    ):
        cap = DEFAULT_GROUP_CAP if cap is None else cap
        gens = []
        for g in generators:
            if sorted(g) != list(range(1, points + 1)):
                raise ParseError(f"{list(g)} is not a permutation of 1..{points}")
            gens.append(tuple(x - 1 for x in g))
        self.points = points
        self.generators = tuple(gens)
        self.name = name or "G"
        ident = tuple(range(points))
        seen = {ident}
        frontier = [ident]
        while frontier:
            new = []
            for a in frontier:
                for g in gens:
                    c = tuple(a[g[i]] for i in range(points))
                    if c not in seen:
                        seen.add(c)
                        new.append(c)
                        if len(seen) > cap:
                            raise SizeLimitExceeded(f"group order exceeds the cap of {cap}")
            frontier = new
        self.elements: tuple[tuple[int, ...], ...] = tuple(sorted(seen))
        self.index = {p: i for i, p in enumerate(self.elements)}
        n = len(self.elements)
        P = np.array(self.elements, dtype=np.int64).reshape(n, points)
        mul = np.empty((n, n), dtype=np.int32)
        for i in range(n):
            comp = P[i][P]  # row j: a_i(a_j(.))
            for j in range(n):
                mul[i, j] = self.index[tuple(comp[j].tolist())]
        self.mul = mul
        self.inv = np.argmax(mul == 0, axis=1).astype(np.int32)
        self.mul.setflags(write=False)
        self.inv.setflags(write=False)

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def identity(self) -> int:
        return 0

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        out = []
        for a in range(self.order):
            x, k = a, 1
            while x != 0:
                x = int(self.mul[x, a])
                k += 1
            out.append(k)
        return tuple(out)

    @property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    @cached_property
    def conj(self) -> np.ndarray:
        """conj[g, h] = g h g^-1."""
        return self.mul[self.mul, self.inv[:, None]]

    @property
    def whole(self) -> int:
        return (1 << self.order) - 1

    def generated(self, mask: int) -> int:
        """Mask of the subgroup generated by a set of elements."""
        member = mask_to_member(mask | 1, self.order)
        return member_to_mask(kernels.closure(self.mul[None], member))

    def is_normal(self, mask: int) -> bool:
        H = np.array(bits(mask))
        member = mask_to_member(mask, self.order)
        return bool(member[self.conj[:, H]].all())

    @cached_property
    def center(self) -> int:
        return mask_of(a for a in range(self.order) if np.array_equal(self.mul[a], self.mul[:, a]))

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "points": self.points,
            "generators": [[x + 1 for x in g] for g in self.generators],
        }

    @classmethod
    def from_json(cls, data: dict, cap: int | None = None) -> FiniteGroup:
        try:
            return cls(int(data["points"]), data["generators"], data.get("name"), cap)
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad group spec: {exc}") from exc

    @classmethod
    def from_table(cls, mul: np.ndarray, name: str | None = None, cap: int | None = None) -> FiniteGroup:
        """Regular representation of an abstract group with identity 0."""
        mul = np.asarray(mul)
        n = mul.shape[0]
        gens = _generating_set(mul)
        perms = [[int(mul[g, x]) + 1 for x in range(n)] for g in gens] or [list(range(1, n + 1))]
        return cls(n, perms, name, cap)


def _generating_set(mul: np.ndarray) -> list[int]:
    """Greedy small generating set: repeatedly add the element of largest order outside the span."""
    n = mul.shape[0]
    orders = []
    for a in range(n):
        x, k = a, 1
        while x != 0:
            x = int(mul[x, a])
            k += 1
        orders.append(k)
    gens: list[int] = []
    mask = 1
    full = (1 << n) - 1
    while mask != full:
        cand = max((a for a in range(n) if not mask >> a & 1), key=lambda a: (orders[a], -a))
        gens.append(cand)
        member = mask_to_member(mask | (1 << cand), n)
        mask = member_to_mask(kernels.closure(np.ascontiguousarray(mul[None], dtype=np.int32), member))
    return gens


# -- subgroups ------------------------------------------------------------------


@dataclass
class SubgroupLattice:
    group: FiniteGroup
    masks: list[int]  # subgroup element masks, named H0, H1, ... in this order
    lattice: FiniteLattice

    def name(self, mask: int) -> str:
        return f"H{self.masks.index(mask)}"

    def orders(self) -> list[int]:
        return [bin(m).count("1") for m in self.masks]


def subgroups(G: FiniteGroup, cap: int | None = None) -> tuple[list[int], list[tuple[int, int]]]:
    """All subgroup masks, sorted by (order, element list), with the cover pairs."""
    cap = DEFAULT_GROUP_CAP if cap is None else cap
    if G.order > cap:
        raise SizeLimitExceeded(f"group order {G.order} exceeds the cap of {cap}")
    found = {1}
    covers = set()
    stack = [1]
    while stack:
        H = stack.pop()
        cands = {G.generated(H | (1 << g)) for g in range(G.order) if not H >> g & 1}
        for u in cands:
            if not any(v != u and v & u == v for v in cands):
                covers.add((H, u))
                if u not in found:
                    found.add(u)
                    stack.append(u)
    masks = sorted(found, key=lambda m: (bin(m).count("1"), bits(m)))
    return masks, sorted(covers, key=lambda c: (masks.index(c[0]), masks.index(c[1])))


def subgroup_lattice(G: FiniteGroup, cap: int | None = None) -> SubgroupLattice:
    masks, covers = subgroups(G, cap)
    pos = {m: i for i, m in enumerate(masks)}
    names = [f"H{i}" for i in range(len(masks))]
    L = build_lattice(names, [(names[pos[a]], names[pos[b]]) for a, b in covers])
    return SubgroupLattice(G, masks, L)


def normal_subgroups(G: FiniteGroup) -> list[int]:
    masks, _ = subgroups(G)
    return [m for m in masks if G.is_normal(m)]


def is_supersolvable_group(G: FiniteGroup, cap: int | None = None) -> bool:
    """Search for a chain of subgroups normal in G, descending to 1 with cyclic factors."""
    masks, _ = subgroups(G, cap)
    normal = [m for m in masks if G.is_normal(m)]
    memo: dict[int, bool] = {}

    def cyclic_over(N: int, H: int) -> bool:
        return any(G.generated(N | (1 << h)) == H for h in bits(H & ~N))

    def descend(H: int) -> bool:
        if H == 1:
            return True
        if H not in memo:
            memo[H] = any(
                N != H and N & H == N and cyclic_over(N, H) and descend(N) for N in normal
            )
        return memo[H]

    return descend(G.whole)


def element_order_counts(G: FiniteGroup) -> tuple[tuple[int, int], ...]:
    counts: dict[int, int] = {}
    for k in G.element_orders:
        counts[k] = counts.get(k, 0) + 1
    return tuple(sorted(counts.items()))


@dataclass
class GroupLatticeReport:
    name: str
    order: int
    subgroups: int
    supersolvable_group: bool
    graded: bool
    length: int
    supersolvable_lattice: bool | None  # None when the lattice is over the size cap
    left_modular: bool
    checks: dict[str, bool]

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def check_group_lattice(G: FiniteGroup, lattice_cap: int = SUPERSOLVABLE_CAP) -> GroupLatticeReport:
    """Supersolvable group vs graded subgroup lattice vs supersolvable lattice.

    The intermediate-field lattice of a Galois extension with group G is the
    dual of the subgroup lattice, and duality preserves all three properties.
    """
    SL = subgroup_lattice(G)
    L = SL.lattice
    ss_group = is_supersolvable_group(G)
    graded = bool(is_graded(L))
    ss_lattice = is_supersolvable(L, lattice_cap) if len(L) <= lattice_cap else None
    left_mod = is_left_modular_lattice(L)
    ln = length(L).max_maximal
    checks = {"supersolvable_iff_graded": ss_group == graded}
    if ss_lattice is not None:
        checks["supersolvable_iff_lattice_supersolvable"] = ss_group == ss_lattice
        checks["lattice_supersolvable_iff_graded_and_left_modular"] = ss_lattice == (graded and left_mod)
    D = dual(L)
    checks["dual_same_gradedness"] = bool(is_graded(D)) == graded
    if G.is_abelian:
        checks["abelian_length_is_prime_exponent_sum"] = graded and ln == big_omega(G.order)
    return GroupLatticeReport(G.name, G.order, len(L), ss_group, graded, ln, ss_lattice, left_mod, checks)
