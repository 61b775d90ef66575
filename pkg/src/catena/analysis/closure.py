"""t-closure, seminormalization and the related extension properties.

Each property is computed from its ring-theoretic definition and again from
the edge types of the enumerated lattice; disagreement raises
:class:`InconsistentCharacterization`.
"""
from __future__ import annotations

import numpy as np

from catena.analysis.interval import ExtensionLattice, enumerate_interval
from catena.analysis.minimal import MinimalType
from catena.errors import InconsistentCharacterization
from catena.rings.extension import RingExtension
from catena.rings.ring import Subring

NON_INERT = {MinimalType.DECOMPOSED, MinimalType.RAMIFIED}


def _lattice(x: RingExtension | ExtensionLattice | Subring) -> ExtensionLattice:
    return x if isinstance(x, ExtensionLattice) else enumerate_interval(x)


def _base(x: RingExtension | ExtensionLattice | Subring) -> Subring:
    if isinstance(x, ExtensionLattice):
        return x.bottom
    if isinstance(x, RingExtension):
        return x.base
    return x


def t_candidates(T: Subring) -> int:
    """Mask of b in S with b^2 - rb and b^3 - rb^2 in T for some r in T."""
    S = T.ring
    b = np.arange(S.order)
    r = np.array(T.elements)[:, None]
    b2 = S.mul[b, b]
    d1 = S.add[b2[None, :], S.neg[S.mul[r, b[None, :]]]]
    d2 = S.add[S.mul[b2, b][None, :], S.neg[S.mul[r, b2[None, :]]]]
    ok = (T.member[d1] & T.member[d2]).any(axis=0)
    return int(sum(1 << int(i) for i in np.flatnonzero(ok)))


def t_closure(x: RingExtension | ExtensionLattice | Subring) -> Subring:
    """Smallest t-closed subring of S containing R, by fixpoint iteration."""
    T = _base(x)
    S = T.ring
    while True:
        grown = S.closure_mask(T.mask | t_candidates(T))
        if grown == T.mask:
            return T
        T = Subring(S, grown)


def _greatest(EL: ExtensionLattice, members: list[Subring], what: str) -> Subring:
    top = max(members, key=lambda T: T.order)
    if any(not T <= top for T in members):
        raise InconsistentCharacterization(f"{what}: reachable subrings have no greatest element")
    return top


def t_closure_chainwise(x: RingExtension | ExtensionLattice) -> Subring:
    """Greatest subring reachable from R through decomposed and ramified covers only."""
    EL = _lattice(x)
    return _greatest(EL, EL.reachable(NON_INERT), "t-closure")


def seminormalization_chainwise(x: RingExtension | ExtensionLattice) -> Subring:
    """Greatest subring reachable from R through ramified covers only."""
    EL = _lattice(x)
    return _greatest(EL, EL.reachable({MinimalType.RAMIFIED}), "seminormalization")


def is_infra_integral_direct(ext: RingExtension) -> bool:
    """Every residue field of S equals the residue field of R below it."""
    for Q in ext.top.maximal_ideals:
        P_index = ext.base.order // (Q.mask & ext.base.mask).bit_count()
        if Q.index != P_index:
            return False
    return True


def is_t_closed_direct(ext: RingExtension) -> bool:
    """No b outside R satisfies the t-closedness relations over R."""
    return t_candidates(ext.base) & ~ext.base.mask == 0


def is_infra_integral(x: RingExtension | ExtensionLattice) -> bool:
    EL = _lattice(x)
    direct = is_infra_integral_direct(EL.ext)
    chain = all(EL.edge(a, b).type in NON_INERT for a, b in zip(*_steps(EL.first_chain())))
    if direct != chain:
        raise InconsistentCharacterization("infra-integrality: residue fields and cover types disagree")
    return direct


def is_t_closed(x: RingExtension | ExtensionLattice) -> bool:
    EL = _lattice(x)
    direct = is_t_closed_direct(EL.ext)
    chain = all(EL.edge(a, b).type is MinimalType.INERT for a, b in zip(*_steps(EL.first_chain())))
    if direct != chain:
        raise InconsistentCharacterization("t-closedness: definition and cover types disagree")
    return direct


def is_subintegral_chainwise(x: RingExtension | ExtensionLattice) -> bool:
    """Every cover in [R, S] is ramified (so every maximal chain is)."""
    EL = _lattice(x)
    return all(c.type is MinimalType.RAMIFIED for c in EL.edges.values())


def _steps(chain: list[Subring]) -> tuple[list[Subring], list[Subring]]:
    return chain[:-1], chain[1:]
