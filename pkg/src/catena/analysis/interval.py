"""The lattice [R, S] of intermediate subrings with typed cover edges."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from catena.analysis.minimal import Classification, MinimalType, classify_minimal
from catena.lattice import FiniteLattice, build_lattice, maximal_chains
from catena.rings.extension import RingExtension, enumerate_subrings
from catena.rings.ring import Ideal, Subring


@dataclass
class ExtensionLattice:
    """[R, S] with subrings named T0, T1, ... in (order, element list) order.

    ``lattice`` has the names as elements; ``edges`` maps each cover pair of
    names to its classification.
    """

    ext: RingExtension
    subrings: list[Subring]
    lattice: FiniteLattice
    edges: dict[tuple[str, str], Classification]
    names: dict[Subring, str] = field(repr=False)

    def __len__(self) -> int:
        return len(self.subrings)

    def __iter__(self) -> Iterator[Subring]:
        return iter(self.subrings)

    def name(self, T: Subring) -> str:
        return self.names[T]

    def subring(self, name: str) -> Subring:
        return self.subrings[self.lattice.index[name]]

    @property
    def bottom(self) -> Subring:
        return self.subrings[0]

    @property
    def top(self) -> Subring:
        return self.subrings[-1]

    @property
    def edge_types(self) -> dict[tuple[str, str], MinimalType]:
        return {e: c.type for e, c in self.edges.items()}

    @property
    def crucial(self) -> dict[tuple[str, str], Ideal]:
        return {e: c.crucial for e, c in self.edges.items()}

    def edge(self, T: Subring, V: Subring) -> Classification:
        return self.edges[self.names[T], self.names[V]]

    def upper_covers(self, T: Subring) -> list[Subring]:
        return [self.subring(n) for n in self.lattice.upper_covers(self.names[T])]

    def maximal_chains(self, a: Subring | None = None, b: Subring | None = None) -> Iterator[list[Subring]]:
        a = self.bottom if a is None else a
        b = self.top if b is None else b
        for ch in maximal_chains(self.lattice, self.names[a], self.names[b]):
            yield [self.subring(n) for n in ch.elements]

    def first_chain(self) -> list[Subring]:
        return next(self.maximal_chains())

    def reachable(self, allowed: set[MinimalType], start: Subring | None = None) -> list[Subring]:
        """Subrings reachable from ``start`` (default R) by cover edges of the allowed types."""
        start = self.bottom if start is None else start
        seen = {self.names[start]}
        stack = [self.names[start]]
        while stack:
            a = stack.pop()
            for b in self.lattice.upper_covers(a):
                if b not in seen and self.edges[a, b].type in allowed:
                    seen.add(b)
                    stack.append(b)
        return [T for T in self.subrings if self.names[T] in seen]


def enumerate_interval(ext: RingExtension | Subring, cap: int | None = None) -> ExtensionLattice:
    """All subrings between R and S, their covers, and the type of every cover."""
    if isinstance(ext, Subring):
        ext = RingExtension.from_subring(ext)
    subrings, covers = enumerate_subrings(ext.base, cap)
    names = {T: f"T{i}" for i, T in enumerate(subrings)}
    pairs = [(names[a], names[b]) for a, b in covers]
    lattice = build_lattice([names[T] for T in subrings], pairs)
    edges = {(names[a], names[b]): classify_minimal(a, b, check=False) for a, b in covers}
    return ExtensionLattice(ext, subrings, lattice, edges, names)
