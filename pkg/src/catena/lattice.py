"""Finite lattices given by their Hasse diagrams, and the order-theoretic
predicates used on intermediate-ring and subgroup lattices.

Elements are opaque hashable labels; they keep their input order, and every
set-valued result is returned sorted by input index.
"""
from __future__ import annotations

import itertools
import json
import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Hashable, Iterable, Iterator, Sequence

import networkx as nx
import numpy as np

from catena import kernels
from catena.errors import (
    CycleDetected,
    NotALattice,
    NotComparable,
    RedundantCover,
    SizeLimitExceeded,
)

SUPERSOLVABLE_CAP = 64


@dataclass(frozen=True)
class Chain:
    elements: tuple

    @property
    def length(self) -> int:
        return len(self.elements) - 1


@dataclass(frozen=True)
class GradedResult:
    graded: bool
    rank: dict | None = None

    def __bool__(self) -> bool:
        return self.graded


@dataclass(frozen=True)
class Length:
    min_maximal: int
    max_maximal: int

    @property
    def graded(self) -> bool:
        return self.min_maximal == self.max_maximal


class FiniteLattice:
    """Validated finite lattice.

    Construction computes the reflexive-transitive closure of the cover
    relation and the join/meet tables, rejecting cyclic, redundant or
    non-lattice input. Instances are immutable afterwards.
    """

    def __init__(self, elements: Iterable[Hashable], covers: Iterable[tuple]):
        self.elements: tuple = tuple(elements)
        if not self.elements:
            raise NotALattice("a lattice needs at least one element")
        self.index = {e: i for i, e in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise NotALattice("element labels are not distinct")
        pairs = set()
        for lo, hi in covers:
            if lo not in self.index or hi not in self.index:
                raise NotALattice(f"cover ({lo!r}, {hi!r}) names an unknown element")
            pairs.add((self.index[lo], self.index[hi]))
        self._cover_idx: tuple[tuple[int, int], ...] = tuple(sorted(pairs))
        n = len(self.elements)
        self.upper: list[list[int]] = [[] for _ in range(n)]
        self.lower: list[list[int]] = [[] for _ in range(n)]
        for a, b in self._cover_idx:
            self.upper[a].append(b)
            self.lower[b].append(a)
        self.topo = self._toposort()
        self.leq = self._closure()
        self._check_irredundant()
        join, meet, bad = kernels.join_meet(self.leq)
        if bad >= 0:
            a, b = divmod(bad, n)
            raise NotALattice(
                f"{self.elements[a]!r} and {self.elements[b]!r} lack a unique join or meet"
            )
        self.join_table = np.ascontiguousarray(join, dtype=np.int32)
        self.meet_table = np.ascontiguousarray(meet, dtype=np.int32)
        self.bottom_idx = int(self.topo[0])
        self.top_idx = int(self.topo[-1])
        for arr in (self.leq, self.join_table, self.meet_table):
            arr.setflags(write=False)

    # -- construction helpers -------------------------------------------------

    @classmethod
    def from_leq(cls, elements: Sequence[Hashable], leq: np.ndarray) -> FiniteLattice:
        """Build from a full (reflexive) order matrix instead of covers."""
        leq = np.asarray(leq, dtype=bool)
        lt = leq & ~np.eye(len(elements), dtype=bool)
        between = (lt.astype(np.int32) @ lt.astype(np.int32)) > 0
        cov = lt & ~between
        els = list(elements)
        return cls(els, [(els[a], els[b]) for a, b in zip(*np.nonzero(cov))])

    @classmethod
    def from_relation(cls, elements: Sequence[Hashable], le) -> FiniteLattice:
        """Build from a predicate ``le(a, b)`` meaning a <= b."""
        els = list(elements)
        leq = np.array([[bool(le(a, b)) for b in els] for a in els], dtype=bool)
        return cls.from_leq(els, leq)

    def _toposort(self) -> list[int]:
        n = len(self.elements)
        indeg = [len(self.lower[i]) for i in range(n)]
        queue = deque(i for i in range(n) if indeg[i] == 0)
        order = []
        while queue:
            i = queue.popleft()
            order.append(i)
            for j in self.upper[i]:
                indeg[j] -= 1
                if indeg[j] == 0:
                    queue.append(j)
        if len(order) != n:
            raise CycleDetected("cover relation contains a cycle")
        return order

    def _closure(self) -> np.ndarray:
        n = len(self.elements)
        leq = np.eye(n, dtype=bool)
        for i in reversed(self.topo):
            for j in self.upper[i]:
                leq[i] |= leq[j]
        return leq

    def _check_irredundant(self) -> None:
        for a, b in self._cover_idx:
            mid = self.leq[a] & self.leq[:, b]
            mid[a] = mid[b] = False
            if mid.any():
                c = int(np.flatnonzero(mid)[0])
                raise RedundantCover(
                    f"cover ({self.elements[a]!r}, {self.elements[b]!r}) passes through "
                    f"{self.elements[c]!r}"
                )

    # -- basic accessors ------------------------------------------------------

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator:
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.index

    def __repr__(self) -> str:
        return f"FiniteLattice(n={len(self)}, covers={len(self._cover_idx)})"

    @property
    def bottom(self):
        return self.elements[self.bottom_idx]

    @property
    def top(self):
        return self.elements[self.top_idx]

    @property
    def covers(self) -> list[tuple]:
        return [(self.elements[a], self.elements[b]) for a, b in self._cover_idx]

    def le(self, a, b) -> bool:
        return bool(self.leq[self.index[a], self.index[b]])

    def join(self, a, b):
        return self.elements[self.join_table[self.index[a], self.index[b]]]

    def meet(self, a, b):
        return self.elements[self.meet_table[self.index[a], self.index[b]]]

    def upper_covers(self, a) -> list:
        return [self.elements[j] for j in sorted(self.upper[self.index[a]])]

    def lower_covers(self, a) -> list:
        return [self.elements[j] for j in sorted(self.lower[self.index[a]])]

    def is_cover(self, a, b) -> bool:
        return self.index[b] in self.upper[self.index[a]]

    def _labels(self, idx: Iterable[int]) -> list:
        return [self.elements[i] for i in sorted(idx)]

    def _pair(self, a, b) -> tuple[int, int]:
        ia, ib = self.index[a], self.index[b]
        if not self.leq[ia, ib]:
            raise NotComparable(f"{a!r} is not below {b!r}")
        return ia, ib

    @cached_property
    def height(self) -> list[int]:
        """Longest cover path from the bottom to each element."""
        h = [0] * len(self)
        for i in self.topo:
            for j in self.upper[i]:
                h[j] = max(h[j], h[i] + 1)
        return h

    @cached_property
    def graph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(range(len(self)))
        g.add_edges_from(self._cover_idx)
        return g


def build_lattice(elements: Iterable[Hashable], covers: Iterable[tuple]) -> FiniteLattice:
    return FiniteLattice(elements, covers)


# -- gradedness and lengths ---------------------------------------------------


def is_graded(L: FiniteLattice) -> GradedResult:
    """Decide gradedness by propagating ranks upward along covers."""
    rank: list[int | None] = [None] * len(L)
    rank[L.bottom_idx] = 0
    for i in L.topo:
        for j in L.upper[i]:
            r = rank[i] + 1
            if rank[j] is None:
                rank[j] = r
            elif rank[j] != r:
                return GradedResult(False)
    return GradedResult(True, {L.elements[i]: rank[i] for i in range(len(L))})


def _path_lengths(L: FiniteLattice, ia: int, ib: int) -> tuple[list[int], list[int]]:
    """Shortest and longest cover-path lengths from ``ia`` to every element of [ia, ib]."""
    inside = L.leq[ia] & L.leq[:, ib]
    big = len(L) + 1
    lo = [big] * len(L)
    hi = [-1] * len(L)
    lo[ia] = hi[ia] = 0
    for i in L.topo:
        if not inside[i] or hi[i] < 0:
            continue
        for j in L.upper[i]:
            if inside[j]:
                lo[j] = min(lo[j], lo[i] + 1)
                hi[j] = max(hi[j], hi[i] + 1)
    return lo, hi


def length(L: FiniteLattice, a=None, b=None) -> Length:
    a = L.bottom if a is None else a
    b = L.top if b is None else b
    ia, ib = L._pair(a, b)
    lo, hi = _path_lengths(L, ia, ib)
    return Length(lo[ib], hi[ib])


def chain_lengths(L: FiniteLattice, a=None, b=None) -> set[int]:
    """Set of lengths of all maximal chains of [a, b]."""
    a = L.bottom if a is None else a
    b = L.top if b is None else b
    ia, ib = L._pair(a, b)
    inside = L.leq[ia] & L.leq[:, ib]
    sets: list[set[int]] = [set() for _ in range(len(L))]
    sets[ia] = {0}
    for i in L.topo:
        if not inside[i] or not sets[i]:
            continue
        for j in L.upper[i]:
            if inside[j]:
                sets[j] |= {s + 1 for s in sets[i]}
    return sets[ib]


def maximal_chains(L: FiniteLattice, a=None, b=None) -> Iterator[Chain]:
    """Enumerate every maximal chain of [a, b] (exponential; oracle use)."""
    a = L.bottom if a is None else a
    b = L.top if b is None else b
    ia, ib = L._pair(a, b)
    inside = L.leq[ia] & L.leq[:, ib]

    def walk(path: list[int]) -> Iterator[list[int]]:
        last = path[-1]
        if last == ib:
            yield path
            return
        for j in sorted(L.upper[last]):
            if inside[j]:
                yield from walk(path + [j])

    for p in walk([ia]):
        yield Chain(tuple(L.elements[i] for i in p))


def is_graded_bruteforce(L: FiniteLattice) -> bool:
    """Oracle: every interval has all maximal chains of one length."""
    for ia in range(len(L)):
        for ib in np.flatnonzero(L.leq[ia]):
            lens = {c.length for c in maximal_chains(L, L.elements[ia], L.elements[ib])}
            if len(lens) > 1:
                return False
    return True


def interval(L: FiniteLattice, a, b) -> FiniteLattice:
    ia, ib = L._pair(a, b)
    inside = L.leq[ia] & L.leq[:, ib]
    keep = [i for i in range(len(L)) if inside[i]]
    covers = [(L.elements[x], L.elements[y]) for x, y in L._cover_idx if inside[x] and inside[y]]
    return FiniteLattice([L.elements[i] for i in keep], covers)


# -- distributivity, atoms, Loewy series -------------------------------------


def is_distributive(L: FiniteLattice) -> bool:
    return kernels.distributive(L.join_table, L.meet_table, np.arange(len(L)))


def is_distributive_bruteforce(L: FiniteLattice) -> bool:
    """Oracle: check both distributive laws over all triples by label."""
    for x, y, z in itertools.product(L.elements, repeat=3):
        if L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z)):
            return False
        if L.join(x, L.meet(y, z)) != L.meet(L.join(x, y), L.join(x, z)):
            return False
    return True


def atoms(L: FiniteLattice, a=None, b=None) -> list:
    a = L.bottom if a is None else a
    b = L.top if b is None else b
    ia, ib = L._pair(a, b)
    return L._labels(j for j in L.upper[ia] if L.leq[j, ib])


def socle(L: FiniteLattice, a=None, b=None):
    """Join of the atoms of [a, b]; ``a`` itself when the interval is trivial."""
    a = L.bottom if a is None else a
    out = a
    for x in atoms(L, a, b):
        out = L.join(out, x)
    return out


def loewy_series(L: FiniteLattice) -> list:
    series = [L.bottom]
    while series[-1] != L.top:
        series.append(socle(L, series[-1], L.top))
    return series


def is_p_extension(L: FiniteLattice) -> bool:
    series = loewy_series(L)
    covered = np.zeros(len(L), dtype=bool)
    for lo, hi in zip(series, series[1:]):
        covered |= L.leq[L.index[lo]] & L.leq[:, L.index[hi]]
    if len(series) == 1:
        covered[L.bottom_idx] = True
    return bool(covered.all())


# -- left modularity and supersolvability -----------------------------------


def left_modular_elements(L: FiniteLattice) -> list:
    flags = kernels.left_modular_elements(L.join_table, L.meet_table, L.leq)
    return L._labels(np.flatnonzero(flags))


def is_left_modular_element(L: FiniteLattice, x) -> bool:
    ix = L.index[x]
    ys, zs = np.nonzero(L.leq)
    lhs = L.meet_table[L.join_table[ys, ix], zs]
    rhs = L.join_table[ys, L.meet_table[ix, zs]]
    return bool(np.array_equal(lhs, rhs))


def is_left_modular_lattice(L: FiniteLattice) -> bool:
    """Is there a maximal chain made only of left modular elements?"""
    good = set(L.index[x] for x in left_modular_elements(L))
    seen = {L.bottom_idx}
    stack = [L.bottom_idx]
    while stack:
        i = stack.pop()
        if i == L.top_idx:
            return True
        for j in L.upper[i]:
            if j in good and j not in seen:
                seen.add(j)
                stack.append(j)
    return False


def _generated_mask(L: FiniteLattice, idx: Iterable[int]) -> np.ndarray:
    member = np.zeros(len(L), dtype=np.uint8)
    member[list(idx)] = 1
    return kernels.closure(np.stack([L.join_table, L.meet_table]), member)


def sublattice_generated(L: FiniteLattice, subset: Iterable) -> FiniteLattice:
    idx = [L.index[x] for x in subset]
    if not idx:
        raise ValueError("subset must be nonempty")
    keep = np.flatnonzero(_generated_mask(L, idx))
    return FiniteLattice.from_leq([L.elements[i] for i in keep], L.leq[np.ix_(keep, keep)])


def _maximal_chain_indices(L: FiniteLattice) -> list[tuple[int, ...]]:
    out = []

    def walk(path: list[int]) -> None:
        if path[-1] == L.top_idx:
            out.append(tuple(path))
            return
        for j in sorted(L.upper[path[-1]]):
            walk(path + [j])

    walk([L.bottom_idx])
    return out


def is_supersolvable(L: FiniteLattice, cap: int = SUPERSOLVABLE_CAP) -> bool:
    """Literal check: some maximal chain generates a distributive sublattice
    together with every other chain.

    Only maximal chains are tried as the second chain: every chain lies in a
    maximal one, and sublattices of distributive lattices are distributive.
    """
    if len(L) > cap:
        raise SizeLimitExceeded(f"lattice has {len(L)} elements, cap is {cap}")
    chains = _maximal_chain_indices(L)
    verdict: dict[bytes, bool] = {}
    stack = np.stack([L.join_table, L.meet_table])
    for c in chains:
        ok = True
        for other in chains:
            member = np.zeros(len(L), dtype=np.uint8)
            member[list(c)] = 1
            member[list(other)] = 1
            gen = kernels.closure(stack, member)
            key = gen.tobytes()
            if key not in verdict:
                verdict[key] = kernels.distributive(L.join_table, L.meet_table, np.flatnonzero(gen))
            if not verdict[key]:
                ok = False
                break
        if ok:
            return True
    return False


# -- constructions ------------------------------------------------------------


def product_lattice(*lattices: FiniteLattice) -> FiniteLattice:
    """Componentwise product; elements are tuples of factor labels."""
    elements = list(itertools.product(*(L.elements for L in lattices)))
    covers = []
    for e in elements:
        for k, L in enumerate(lattices):
            for up in L.upper_covers(e[k]):
                covers.append((e, e[:k] + (up,) + e[k + 1:]))
    return FiniteLattice(elements, covers)


def dual(L: FiniteLattice) -> FiniteLattice:
    return FiniteLattice(L.elements, [(b, a) for a, b in L.covers])


def is_2_catenarian(L: FiniteLattice) -> bool:
    for t in range(len(L)):
        for u in L.lower[t]:
            for v in L.upper[t]:
                _, hi = _path_lengths(L, u, v)
                if hi[v] != 2:
                    return False
    return True


def is_isomorphic(L1: FiniteLattice, L2: FiniteLattice) -> bool:
    if len(L1) != len(L2) or len(L1._cover_idx) != len(L2._cover_idx):
        return False
    return nx.is_isomorphic(L1.graph, L2.graph)


# -- named lattices -----------------------------------------------------------


def chain_lattice(n: int) -> FiniteLattice:
    """Chain 0 < 1 < ... < n (length n)."""
    return FiniteLattice(range(n + 1), [(i, i + 1) for i in range(n)])


def diamond() -> FiniteLattice:
    """M3, labelled like the five-element field lattice k < k1, k2, k3 < L."""
    return FiniteLattice(
        ["k", "k1", "k2", "k3", "L"],
        [("k", "k1"), ("k", "k2"), ("k", "k3"), ("k1", "L"), ("k2", "L"), ("k3", "L")],
    )


def pentagon() -> FiniteLattice:
    """N5: 0 < a < b < 1 on the long side, 0 < c < 1 on the short side."""
    return FiniteLattice(
        ["0", "a", "b", "c", "1"],
        [("0", "a"), ("a", "b"), ("b", "1"), ("0", "c"), ("c", "1")],
    )


def divisor_lattice(n: int) -> FiniteLattice:
    divs = [d for d in range(1, n + 1) if n % d == 0]
    return FiniteLattice.from_relation(divs, lambda a, b: b % a == 0)


# -- serialization ------------------------------------------------------------


def to_json(L: FiniteLattice) -> dict[str, Any]:
    return {
        "elements": [str(e) for e in L.elements],
        "covers": [[str(a), str(b)] for a, b in L.covers],
    }


def from_json(data: dict[str, Any] | str) -> FiniteLattice:
    if isinstance(data, str):
        data = json.loads(data)
    return FiniteLattice(data["elements"], [tuple(c) for c in data["covers"]])


def _quote(x) -> str:
    return '"' + str(x).replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(L: FiniteLattice, name: str = "lattice", edge_attrs: dict | None = None) -> str:
    """Hasse diagram in DOT; nodes carry their level above the bottom (bottom = 0).

    ``edge_attrs`` maps a cover pair (lo, hi) to a dict of DOT attributes.
    """
    edge_attrs = edge_attrs or {}
    h = L.height
    lines = [f"digraph {name} {{", "  rankdir=BT;"]
    for i, e in enumerate(L.elements):
        lines.append(f"  {_quote(e)} [level={h[i]}];")
    for lvl in sorted(set(h)):
        members = " ".join(_quote(L.elements[i]) + ";" for i in range(len(L)) if h[i] == lvl)
        lines.append(f"  {{ rank=same; {members} }}")
    for a, b in L.covers:
        attrs = edge_attrs.get((a, b))
        suffix = ""
        if attrs:
            suffix = " [" + ", ".join(f"{k}={_quote(v)}" for k, v in attrs.items()) + "]"
        lines.append(f"  {_quote(a)} -> {_quote(b)}{suffix};")
    lines.append("}")
    return "\n".join(lines) + "\n"


_QSTR = r'"((?:[^"\\]|\\.)*)"'
_NODE_RE = re.compile(r"^\s*" + _QSTR + r"\s*\[level=")
_EDGE_RE = re.compile(r"^\s*" + _QSTR + r"\s*->\s*" + _QSTR)


def _unquote(s: str) -> str:
    return re.sub(r"\\(.)", r"\1", s)


def parse_dot(text: str) -> FiniteLattice:
    """Rebuild a lattice from DOT written by :func:`to_dot` (labels become strings)."""
    nodes, edges = [], []
    for line in text.splitlines():
        m = _EDGE_RE.match(line)
        if m:
            edges.append((_unquote(m.group(1)), _unquote(m.group(2))))
            continue
        m = _NODE_RE.match(line)
        if m:
            nodes.append(_unquote(m.group(1)))
    return FiniteLattice(nodes, edges)
