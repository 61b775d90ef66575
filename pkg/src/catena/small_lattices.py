"""Every lattice with at most a given number of elements, up to isomorphism.

Removing an atom from a finite lattice with at least three elements leaves a
lattice, so every lattice on n + 1 elements is a lattice on n elements with
one atom added. An atom can be added below any up-set F of the nonzero
elements in which two members meet either inside F or at the bottom.

Duplicates are avoided by canonical augmentation: a child is kept only when
the new atom maximizes an isomorphism invariant among its atoms. When it is
the sole maximizer and the parent has no automorphisms, the child cannot
arise twice and is accepted directly; otherwise isomorphism classes are
told apart by nauty certificates.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterator

import numpy as np
import pynauty

from catena import kernels
from catena.lattice import FiniteLattice

Up = tuple[int, ...]  # up[x]: bitmask of the elements above x, x included; 0 is the bottom, 1 the top


def _graph(up: Up) -> pynauty.Graph:
    k = len(up)
    adj = {x: [y for y in range(k) if y != x and up[x] >> y & 1] for x in range(k)}
    return pynauty.Graph(k, directed=True, adjacency_dict=adj)


def _rigid(up: Up) -> bool:
    return not pynauty.autgrp(_graph(up))[0]


def _add_atom(up: Up, F: int) -> Up:
    a = len(up)
    return (up[0] | 1 << a,) + up[1:] + (F | 1 << a,)


@lru_cache(maxsize=None)
def lattices_of_size(n: int) -> tuple[Up, ...]:
    """One up-set encoding per isomorphism type of lattice on n elements."""
    if n < 1:
        return ()
    if n == 1:
        return ((1,),)
    if n == 2:
        return ((0b11, 0b10),)
    out: list[Up] = []
    seen: set[bytes] = set()
    for up in lattices_of_size(n - 1):
        fs, unique = kernels.atom_children(up)
        rigid: bool | None = None
        for F, alone in zip(fs, unique):
            child = _add_atom(up, F)
            if alone:
                if rigid is None:
                    rigid = _rigid(up)
                if rigid:
                    out.append(child)
                    continue
            cert = pynauty.certificate(_graph(child))
            if cert not in seen:
                seen.add(cert)
                out.append(child)
    return tuple(out)


def to_lattice(up: Up) -> FiniteLattice:
    """Elements are "0" (bottom), "1" (top) and "x2", "x3", ... in order of addition."""
    k = len(up)
    labels = ["0", "1", *(f"x{i}" for i in range(2, k))][:k]
    leq = np.array([[up[x] >> y & 1 for y in range(k)] for x in range(k)], dtype=bool)
    return FiniteLattice.from_leq(labels, leq)


def all_lattices(max_size: int) -> Iterator[FiniteLattice]:
    """All lattices with 1..max_size elements, one per isomorphism type, smallest first."""
    for n in range(1, max_size + 1):
        for up in lattices_of_size(n):
            yield to_lattice(up)
