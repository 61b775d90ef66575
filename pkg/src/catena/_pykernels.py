"""Pure-Python implementations of the hot kernels.

Each function mirrors the compiled version in ``_ckernels.pyx`` exactly,
including argument dtypes and return values, so the two are interchangeable.
"""
from __future__ import annotations

import numpy as np


def closure(tables: np.ndarray, member: np.ndarray) -> np.ndarray:
    """Close ``member`` under every binary operation in ``tables``.

    ``tables`` has shape (k, n, n); operations need not be commutative.
    Returns a fresh uint8 membership vector.
    """
    ops = [t.tolist() for t in tables]
    out = member.astype(np.uint8).tolist()
    elems = [i for i, m in enumerate(out) if m]
    i = 0
    while i < len(elems):
        x = elems[i]
        # pair x with every element found so far, itself included
        for j in range(i + 1):
            y = elems[j]
            for op in ops:
                for z in (op[x][y], op[y][x]):
                    if not out[z]:
                        out[z] = 1
                        elems.append(z)
        i += 1
    return np.array(out, dtype=np.uint8)


def join_meet(leq: np.ndarray) -> tuple[np.ndarray, np.ndarray, int]:
    """Least upper and greatest lower bound tables of a finite order.

    Returns ``(join, meet, bad)``; ``bad`` is -1 when every pair has both
    bounds, otherwise ``a * n + b`` for the first offending pair.
    """
    leq = leq.astype(bool)
    n = leq.shape[0]
    down = leq.sum(axis=0)  # size of each principal down-set
    up = leq.sum(axis=1)
    join = np.full((n, n), -1, dtype=np.int32)
    meet = np.full((n, n), -1, dtype=np.int32)
    for a in range(n):
        for b in range(a, n):
            ub = leq[a] & leq[b]
            if ub.any():
                cand = np.flatnonzero(ub)
                u = cand[np.argmin(down[cand])]
                if leq[u, cand].all():
                    join[a, b] = join[b, a] = u
            lb = leq[:, a] & leq[:, b]
            if lb.any():
                cand = np.flatnonzero(lb)
                v = cand[np.argmin(up[cand])]
                if leq[cand, v].all():
                    meet[a, b] = meet[b, a] = v
            if join[a, b] < 0 or meet[a, b] < 0:
                return join, meet, a * n + b
    return join, meet, -1


def distributive(join: np.ndarray, meet: np.ndarray, idx: np.ndarray) -> bool:
    """Check a ^ (b v c) == (a ^ b) v (a ^ c) for all a, b, c in ``idx``."""
    idx = np.asarray(idx, dtype=np.intp)
    J = join[np.ix_(idx, idx)]
    for a in idx:
        lhs = meet[a][J]
        ma = meet[a, idx]
        rhs = join[np.ix_(ma, ma)]
        if not np.array_equal(lhs, rhs):
            return False
    return True


def left_modular_elements(join: np.ndarray, meet: np.ndarray, leq: np.ndarray) -> np.ndarray:
    """Flag each x with (y v x) ^ z == y v (x ^ z) for all y <= z."""
    n = join.shape[0]
    ys, zs = np.nonzero(leq)
    out = np.zeros(n, dtype=np.uint8)
    for x in range(n):
        lhs = meet[join[ys, x], zs]
        rhs = join[ys, meet[x, zs]]
        out[x] = bool(np.array_equal(lhs, rhs))
    return out


def atom_children(up: np.ndarray) -> tuple[list[int], list[bool]]:
    """Ways to add a new atom below a lattice given by up-set bitmasks.

    ``up[x]`` is the bitmask of elements above x (x included), element 0 is
    the bottom. A new atom a is placed below every element of an up-set F of
    the nonzero elements, which gives a lattice iff x, y in F implies
    x meet y in F or x meet y = 0. Only the F for which a maximizes the
    invariant (size of the up-set, sum of down-set sizes over it) among the
    atoms of the result are returned, each with a flag telling whether the
    maximum is attained by a alone.
    """
    k = len(up)
    if not 2 <= k <= 31:
        raise ValueError("atom_children needs between 2 and 31 elements")
    up = [int(v) for v in up]
    down = [sum(1 << y for y in range(k) if up[y] >> x & 1) for x in range(k)]
    dsz = [bin(d).count("1") for d in down]
    span = [up[x] | down[x] for x in range(k)]
    atoms = [x for x in range(1, k) if down[x] == 1 | 1 << x]
    meet = [[0] * k for _ in range(k)]
    for x in range(k):
        for y in range(x, k):
            c = down[x] & down[y]
            meet[x][y] = meet[y][x] = next(z for z in range(k) if c >> z & 1 and down[z] & c == c)

    out: list[int] = []
    unique: list[bool] = []

    def visit(start: int, F: int, blocked: int) -> None:
        for x in range(start, k):
            if blocked >> x & 1:
                continue
            G = F | up[x]
            members = [y for y in range(k) if G >> y & 1]
            closed = all(
                meet[y][z] == 0 or G >> meet[y][z] & 1 for i, y in enumerate(members) for z in members[i + 1:]
            )
            if closed:
                inv_a = (len(members) + 1, 2 + sum(dsz[y] + 1 for y in members))
                others = [
                    (bin(up[u]).count("1"), sum(dsz[y] + (G >> y & 1) for y in range(k) if up[u] >> y & 1))
                    for u in atoms
                    if not G >> u & 1
                ]
                if all(o <= inv_a for o in others):
                    out.append(G)
                    unique.append(inv_a not in others)
            visit(x + 1, G, blocked | span[x])

    visit(1, 0, 0)
    return out, unique
