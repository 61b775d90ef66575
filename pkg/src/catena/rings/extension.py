"""Ring extensions R -> S of finite rings and their intermediate subrings.

All ideal-theoretic answers about R are expressed on the image of R inside
S (``ext.base``), so they can be compared directly with subrings of S.
"""
from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from catena.errors import NotAnEmbedding, NotAnIdeal, NotMaximal, TooLarge
from catena.rings.constructors import (
    FiniteModule,
    corner_ring,
    quotient_with_map,
    restrict_scalars,
    ring_idealization,
    ring_product,
)
from catena.rings.ring import (
    DEFAULT_CAP,
    FiniteCommRing,
    Ideal,
    ResidueField,
    Subring,
    conductor,
    field_degree,
    ideal_generated,
    is_ideal,
    mask_of,
    residue_field,
)


class RingExtension:
    """An injective unital ring map ``embed`` from R into S."""

    def __init__(self, R: FiniteCommRing, S: FiniteCommRing, embed: Sequence[int], *, verify: bool = True):
        embed = np.asarray(embed, dtype=np.int32)
        if verify:
            _check_embedding(R, S, embed)
        self.R = R
        self.S = S
        self.embed = embed
        self.embed.setflags(write=False)
        self.base = Subring(S, mask_of(embed))

    def __repr__(self) -> str:
        return f"RingExtension({self.R.name} -> {self.S.name}, |R|={self.R.order}, |S|={self.S.order})"

    @classmethod
    def from_subring(cls, T: Subring) -> RingExtension:
        R, elems = T.as_ring()
        return cls(R, T.ring, elems, verify=False)

    @classmethod
    def identity(cls, R: FiniteCommRing) -> RingExtension:
        return cls(R, R, np.arange(R.order), verify=False)

    @property
    def top(self) -> Subring:
        return self.S.whole

    @property
    def is_proper(self) -> bool:
        return self.R.order < self.S.order

    def image_ideal(self, M: Ideal) -> Ideal:
        """Map an ideal of R (or of the image) to the corresponding ideal of the image."""
        if M.ring.ring is self.S:
            if M.mask & self.base.mask != M.mask:
                raise NotAnIdeal("ideal does not lie in the image of R")
            return Ideal(self.base, M.mask)
        if M.ring.ring is self.R:
            return Ideal(self.base, mask_of(self.embed[list(M.elements)]))
        raise NotAnIdeal("ideal belongs to an unrelated ring")


def _check_embedding(R: FiniteCommRing, S: FiniteCommRing, embed: np.ndarray) -> None:
    if embed.shape != (R.order,) or embed.min() < 0 or embed.max() >= S.order:
        raise NotAnEmbedding("embedding must map every element of R into S")
    if len(set(embed.tolist())) != R.order:
        raise NotAnEmbedding("embedding is not injective")
    if embed[R.zero] != S.zero or embed[R.one] != S.one:
        raise NotAnEmbedding("embedding does not preserve 0 and 1")
    if not np.array_equal(embed[R.add], S.add[np.ix_(embed, embed)]):
        raise NotAnEmbedding("embedding does not preserve addition")
    if not np.array_equal(embed[R.mul], S.mul[np.ix_(embed, embed)]):
        raise NotAnEmbedding("embedding does not preserve multiplication")


def _as_subring(x: FiniteCommRing | Subring) -> Subring:
    return x.whole if isinstance(x, FiniteCommRing) else x


# -- subalgebras --------------------------------------------------------------


def subalgebra_generated(ext: RingExtension | Subring, subset: Iterable[int]) -> Subring:
    """Smallest subring containing the image of R (or the given subring) and ``subset``."""
    base = ext.base if isinstance(ext, RingExtension) else ext
    S = base.ring
    seed = base.mask | mask_of(subset) | mask_of([S.zero, S.one])
    return Subring(S, S.closure_mask(seed))


def enumerate_subrings(base: Subring, cap: int | None = None) -> tuple[list[Subring], list[tuple[Subring, Subring]]]:
    """All subrings T with base <= T <= S and the cover relation between them.

    Breadth-first: each subring T is extended by one element s at a time and
    closed. The covers of T are the minimal subrings among the closures of
    T + {s}, since every over-ring of T contains one of them. Results are
    sorted by (order, element list) and cached on the ambient ring.
    """
    S = base.ring
    cap = DEFAULT_CAP if cap is None else cap
    if S.order > cap:
        raise TooLarge(f"ring of order {S.order} exceeds the cap of {cap}")
    cache = S.__dict__.setdefault("_subring_cache", {})
    if base.mask in cache:
        return cache[base.mask]
    start = Subring(S, S.closure_mask(base.mask | mask_of([S.zero, S.one])))
    found: dict[int, Subring] = {start.mask: start}
    cover_masks: list[tuple[int, int]] = []
    queue = [start]
    full = S.whole.mask
    while queue:
        T = queue.pop()
        cands = set()
        rest = full & ~T.mask
        for s in range(S.order):
            if rest >> s & 1:
                cands.add(S.closure_mask(T.mask | (1 << s)))
        minimal = [u for u in cands if not any(v != u and v & u == v for v in cands)]
        for u in minimal:
            cover_masks.append((T.mask, u))
            if u not in found:
                found[u] = Subring(S, u)
                queue.append(found[u])
    subrings = sorted(found.values(), key=lambda t: (t.order, t.elements))
    covers = sorted(
        {(found[a], found[b]) for a, b in cover_masks},
        key=lambda c: (c[0].order, c[0].elements, c[1].order, c[1].elements),
    )
    cache[base.mask] = (subrings, covers)
    return subrings, covers


# -- spectra, localization, support -------------------------------------------


def maximal_ideals(R: FiniteCommRing | Subring) -> list[Ideal]:
    return list(_as_subring(R).maximal_ideals)


def spec(R: FiniteCommRing | Subring) -> list[Ideal]:
    """Prime ideals; in a finite commutative ring these are the maximal ones."""
    return maximal_ideals(R)


def _base_maximal(ext: RingExtension, M: Ideal) -> Ideal:
    M = ext.image_ideal(M)
    if M not in ext.base.maximal_ideals:
        raise NotMaximal("ideal is not maximal in R")
    return M


def localize_at(ext: RingExtension, M: Ideal) -> RingExtension:
    """R_M -> S_M, realized as R e -> S e for the local idempotent e of R at M."""
    M = _base_maximal(ext, M)
    e = ext.base.local_idempotent(M)
    SM, s_elems = corner_ring(ext.S, e)
    r_mask = ext.base.scale(e)
    pos = {x: i for i, x in enumerate(s_elems)}
    r_sub = [x for x in s_elems if r_mask >> x & 1]
    RM, _ = Subring(SM, mask_of(pos[x] for x in r_sub)).as_ring()
    RM.labels = [ext.S.labels[x] for x in r_sub]
    out = RingExtension(RM, SM, [pos[x] for x in r_sub], verify=False)
    out.ambient_indices = s_elems  # index in S of each element of S_M
    return out


def msupp(base: Subring, A: Subring, B: Subring) -> list[Ideal]:
    """Maximal ideals M of ``base`` where A_M != B_M (for base <= A <= B)."""
    out = []
    for M in base.maximal_ideals:
        e = base.local_idempotent(M)
        if A.scale(e) != B.scale(e):
            out.append(M)
    return out


def support(ext: RingExtension) -> list[Ideal]:
    """Supp(S/R) as maximal ideals of the image of R."""
    return msupp(ext.base, ext.base, ext.top)


def residue_extension(ext: RingExtension, Q: Ideal) -> tuple[ResidueField, ResidueField, int]:
    """Residue fields at P = Q n R and at Q, with the degree of the field extension."""
    if Q.ring != ext.top or Q not in ext.top.maximal_ideals:
        raise NotMaximal("Q must be a maximal ideal of S")
    P = Ideal(ext.base, Q.mask & ext.base.mask)
    kP, kQ = residue_field(P), residue_field(Q)
    return kP, kQ, field_degree(kP.order, kQ.order)


def contract(Q: Ideal, T: Subring) -> Ideal:
    """Q n T as an ideal of T."""
    return Ideal(T, Q.mask & T.mask)


def quotient_extension(ext: RingExtension, J: Ideal | Iterable[int]) -> RingExtension:
    """R/I -> S/J with I = J n R; the result carries ``projection`` (S -> S/J)."""
    S = ext.S
    mask = J.mask if isinstance(J, Ideal) else mask_of(J)
    if not is_ideal(S.whole, mask):
        raise NotAnIdeal("J is not an ideal of S")
    SJ, proj = quotient_with_map(S, Ideal(S.whole, mask))
    preimage = [r for r in range(ext.R.order) if mask >> int(ext.embed[r]) & 1]
    RI, rproj = quotient_with_map(ext.R, preimage)
    embed = np.zeros(RI.order, dtype=np.int32)
    for r in range(ext.R.order):
        embed[rproj[r]] = proj[ext.embed[r]]
    out = RingExtension(RI, SJ, embed)
    out.projection = proj
    return out


def project_subring(ext_q: RingExtension, T: Subring) -> Subring:
    """Image of a subring of S in S/J for a quotient extension."""
    return Subring(ext_q.S, mask_of(ext_q.projection[list(T.elements)]))


def enumerate_ideals(T: Subring, within: int | None = None) -> list[Ideal]:
    """All ideals of T contained in the subset ``within`` (default: all of T)."""
    S = T.ring
    within = T.mask if within is None else within
    zero = ideal_generated(T, [])
    found = {zero.mask: zero}
    queue = [zero]
    while queue:
        I = queue.pop()
        for x in range(S.order):
            if within >> x & 1 and not I.mask >> x & 1:
                J = ideal_generated(T, list(I.elements) + [x])
                if J.mask & within == J.mask and J.mask not in found:
                    found[J.mask] = J
                    queue.append(J)
    return sorted(found.values(), key=lambda i: (i.order, i.elements))


def shared_ideals(ext: RingExtension) -> list[Ideal]:
    """Ideals of S contained in R; they all lie inside the conductor (R : S)."""
    C = conductor(ext.base)
    return enumerate_ideals(ext.top, C.mask)


# -- transfer constructions ---------------------------------------------------


def idealize_extension(ext: RingExtension, M: FiniteModule) -> RingExtension:
    """R(+)M -> S(+)M for an S-module M (viewed as an R-module through the embedding)."""
    RM = ring_idealization(ext.R, restrict_scalars(M, ext.R, ext.embed))
    SM = ring_idealization(ext.S, M)
    m = M.order
    embed = (ext.embed[:, None] * m + np.arange(m)[None, :]).ravel()
    return RingExtension(RM, SM, embed)


def product_extension(exts: Sequence[RingExtension]) -> RingExtension:
    """prod R_i -> prod S_i, componentwise."""
    R = ring_product([e.R for e in exts])
    S = ring_product([e.S for e in exts])
    embed = np.zeros(1, dtype=np.int64)
    for e in exts:
        embed = (embed[:, None] * e.S.order + e.embed[None, :]).ravel()
    return RingExtension(R, S, embed)
