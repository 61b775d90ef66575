"""Brute-force reference implementations used to derive expected values.

Everything here works from first definitions with plain loops over subsets
or element triples, sharing no code with the library beyond its input
tables. They are slow and only meant for small instances.
"""
from __future__ import annotations

import itertools

import numpy as np


# -- orders and lattices -------------------------------------------------------------


def order_matrix(elements, covers) -> dict:
    """Reflexive-transitive closure of the cover relation as a dict of sets."""
    up = {e: set() for e in elements}
    for a, b in covers:
        up[a].add(b)
    above = {}
    for e in elements:
        seen, stack = {e}, [e]
        while stack:
            x = stack.pop()
            for y in up[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        above[e] = seen
    return above


def maximal_chain_lengths(elements, covers, lo, hi) -> set[int]:
    up = {e: [] for e in elements}
    for a, b in covers:
        up[a].append(b)
    above = order_matrix(elements, covers)
    out = set()

    def walk(x, k):
        if x == hi:
            out.add(k)
            return
        for y in up[x]:
            if hi in above[y]:
                walk(y, k + 1)

    walk(lo, 0)
    return out


def graded(elements, covers) -> bool:
    """Every interval has maximal chains of a single length."""
    above = order_matrix(elements, covers)
    return all(
        len(maximal_chain_lengths(elements, covers, a, b)) == 1 for a in elements for b in above[a]
    )


def join_meet(elements, covers):
    above = order_matrix(elements, covers)
    le = lambda a, b: b in above[a]  # noqa: E731

    def join(a, b):
        ubs = [c for c in elements if le(a, c) and le(b, c)]
        return next(c for c in ubs if all(le(c, d) for d in ubs))

    def meet(a, b):
        lbs = [c for c in elements if le(c, a) and le(c, b)]
        return next(c for c in lbs if all(le(d, c) for d in lbs))

    return le, join, meet


def distributive(elements, covers) -> bool:
    _, join, meet = join_meet(elements, covers)
    return all(
        meet(a, join(b, c)) == join(meet(a, b), meet(a, c))
        for a in elements
        for b in elements
        for c in elements
    )


def left_modular_elements(elements, covers) -> list:
    le, join, meet = join_meet(elements, covers)
    return [
        x
        for x in elements
        if all(meet(join(y, x), z) == join(y, meet(x, z)) for y in elements for z in elements if le(y, z))
    ]


def chains(elements, covers) -> list[tuple]:
    le, _, _ = join_meet(elements, covers)
    out = []
    for k in range(1, len(elements) + 1):
        for sub in itertools.combinations(elements, k):
            if all(le(a, b) or le(b, a) for a, b in itertools.combinations(sub, 2)):
                out.append(sub)
    return out


def supersolvable(elements, covers) -> bool:
    """Some maximal chain generates a distributive sublattice with every chain."""
    le, join, meet = join_meet(elements, covers)
    all_chains = chains(elements, covers)
    bottom = next(e for e in elements if all(le(e, f) for f in elements))
    top = next(e for e in elements if all(le(f, e) for f in elements))
    above = order_matrix(elements, covers)
    maximal = [c for c in all_chains if _is_saturated(c, covers, bottom, top, above)]

    def generated(subset):
        cur = set(subset)
        while True:
            new = {join(a, b) for a in cur for b in cur} | {meet(a, b) for a in cur for b in cur}
            if new <= cur:
                return cur
            cur |= new

    def dist(sub):
        return all(meet(a, join(b, c)) == join(meet(a, b), meet(a, c)) for a in sub for b in sub for c in sub)

    return any(all(dist(generated(set(c) | set(d))) for d in all_chains) for c in maximal)


def _is_saturated(c, covers, bottom, top, above) -> bool:
    if bottom not in c or top not in c:
        return False
    cover_set = set(covers)
    ordered = sorted(c, key=lambda e: len(above[e]), reverse=True)
    return all((a, b) in cover_set for a, b in zip(ordered, ordered[1:]))


# -- rings -----------------------------------------------------------------------------


def subsets_closed(S, base: set[int]):
    """All subrings of S containing ``base`` (subsets closed under + and * with 0, 1)."""
    n = S.order
    rest = [x for x in range(n) if x not in base]
    out = []
    for k in range(len(rest) + 1):
        for extra in itertools.combinations(rest, k):
            T = set(base) | set(extra) | {S.zero, S.one}
            if len(T) != len(base | set(extra)):
                continue
            if all(int(S.add[a, b]) in T and int(S.mul[a, b]) in T for a in T for b in T):
                out.append(frozenset(T))
    return sorted(set(out), key=lambda t: (len(t), sorted(t)))


def ideals(S, T: set[int]) -> list[frozenset]:
    """Ideals of the subring T (as element sets), by subset search."""
    els = sorted(T)
    out = []
    for k in range(1, len(els) + 1):
        for sub in itertools.combinations(els, k):
            I = set(sub)
            if S.zero not in I:
                continue
            if all(int(S.add[a, b]) in I for a in I for b in I) and all(
                int(S.neg[a]) in I for a in I
            ) and all(int(S.mul[t, a]) in I for t in T for a in I):
                out.append(frozenset(I))
    return out


def maximal_ideals(S, T: set[int]) -> list[frozenset]:
    proper = [I for I in ideals(S, T) if len(I) < len(T)]
    return sorted((I for I in proper if not any(I < J for J in proper)), key=sorted)


def conductor(S, T: set[int], V: set[int]) -> frozenset:
    return frozenset(x for x in V if all(int(S.mul[x, v]) in T for v in V))


def t_closure(S, R: set[int]) -> frozenset:
    """Fixpoint: add b whenever b^2 - rb and b^3 - rb^2 lie in the current ring for some r in it."""
    cur = set(R)
    sub = lambda a, b: int(S.add[a, S.neg[b]])  # noqa: E731
    mul = lambda a, b: int(S.mul[a, b])  # noqa: E731
    while True:
        new = set()
        for b in range(S.order):
            if b in cur:
                continue
            b2 = mul(b, b)
            b3 = mul(b2, b)
            if any(sub(b2, mul(r, b)) in cur and sub(b3, mul(r, b2)) in cur for r in cur):
                new.add(b)
        if not new:
            return frozenset(cur)
        # close under ring operations
        cur |= new
        while True:
            more = {int(S.add[a, b]) for a in cur for b in cur} | {mul(a, b) for a in cur for b in cur}
            if more <= cur:
                break
            cur |= more


def quotient_order(T: set[int], I: set[int]) -> int:
    return len(T) // len(I)


# -- groups -------------------------------------------------------------------------------


def subgroups(mul: np.ndarray) -> list[frozenset]:
    n = mul.shape[0]
    out = []
    for k in range(n):
        for sub in itertools.combinations(range(1, n), k):
            H = {0, *sub}
            if all(int(mul[a, b]) in H for a in H for b in H):
                out.append(frozenset(H))
    return out


def ring_isomorphic(A, B) -> bool:
    """Search all bijections fixing 0 and 1 (tiny rings only)."""
    if A.order != B.order:
        return False
    rest_a = [x for x in range(A.order) if x not in (A.zero, A.one)]
    rest_b = [x for x in range(B.order) if x not in (B.zero, B.one)]
    for perm in itertools.permutations(rest_b):
        f = {A.zero: B.zero, A.one: B.one, **dict(zip(rest_a, perm))}
        if all(
            f[int(A.add[a, b])] == int(B.add[f[a], f[b]]) and f[int(A.mul[a, b])] == int(B.mul[f[a], f[b]])
            for a in range(A.order)
            for b in range(A.order)
        ):
            return True
    return False


def _additive_span(S, xs: set[int]) -> set[int]:
    cur = {S.zero} | set(xs)
    while True:
        more = {int(S.add[a, b]) for a in cur for b in cur}
        if more <= cur:
            return cur
        cur |= more


def _is_power(n: int, base: int, k: int) -> bool:
    return base**k == n


def classify(S, T: set[int], V: set[int]) -> str | None:
    """Type of a minimal extension T < V from the residue-field definitions."""
    M = conductor(S, T, V)
    if M not in maximal_ideals(S, T):
        return None
    q = len(T) // len(M)
    maxV = maximal_ideals(S, V)
    over = [N for N in maxV if M <= N]
    if M in maxV:
        r = len(V) // len(M)
        deg = next((k for k in range(2, 64) if q**k == r), None)
        if deg is not None and all(deg % d for d in range(2, deg)):
            return "inert"
        return None
    if len(over) == 2 and all(len(V) // len(N) == q for N in over):
        return "decomposed"
    if len(over) == 1:
        N = over[0]
        sq = _additive_span(S, {int(S.mul[a, b]) for a in N for b in N})
        if sq <= M and len(V) // len(M) == q * q and len(V) // len(N) == q:
            return "ramified"
    return None


def _generated_group(mul: np.ndarray, gens: set[int]) -> frozenset:
    cur = {0} | set(gens)
    while True:
        more = {int(mul[a, b]) for a in cur for b in cur}
        if more <= cur:
            return frozenset(cur)
        cur |= more


def supersolvable_group(mul: np.ndarray) -> bool:
    """A chain 1 = N0 < ... < Nk = G of normal subgroups with each Ni+1/Ni cyclic."""
    n = mul.shape[0]
    inv = [next(b for b in range(n) if mul[a, b] == 0) for a in range(n)]
    subs = subgroups(mul)
    normal = [H for H in subs if all(int(mul[mul[g, h], inv[g]]) in H for g in range(n) for h in H)]
    G = frozenset(range(n))

    def descend(H: frozenset) -> bool:
        if len(H) == 1:
            return True
        return any(
            N < H and any(_generated_group(mul, set(N) | {h}) == H for h in H - N) and descend(N) for N in normal
        )

    return descend(G)
