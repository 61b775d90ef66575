"""Classification of minimal ring extensions T < V between finite rings."""
from __future__ import annotations

import enum
from dataclasses import dataclass

from catena.errors import NotConductorMaximal, NotMinimal
from catena.rings.ring import Ideal, Subring, conductor, ideal_product
from catena.rings.ring import _log_exact
from catena.polyfp import is_prime


class MinimalType(str, enum.Enum):
    """The three kinds of integral minimal extension; finite rings admit no other kind."""

    INERT = "inert"
    DECOMPOSED = "decomposed"
    RAMIFIED = "ramified"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Classification:
    type: MinimalType
    crucial: Ideal  # the conductor (T : V), a maximal ideal of T
    over: tuple[Ideal, ...]  # maximal ideals of V containing it


def is_minimal_pair(T: Subring, V: Subring) -> bool:
    """True iff T < V with nothing strictly in between."""
    if not T < V:
        return False
    S = T.ring
    rest = V.mask & ~T.mask
    x = 0
    while rest:
        if rest & 1 and S.closure_mask(T.mask | (1 << x)) != V.mask:
            return False
        rest >>= 1
        x += 1
    return True


def classify_minimal(T: Subring, V: Subring, *, check: bool = True) -> Classification:
    """Type and crucial ideal of a cover T < V.

    ``check=False`` skips the minimality test, for covers that come out of an
    enumeration already.
    """
    if check and not is_minimal_pair(T, V):
        raise NotMinimal("the pair is not a minimal extension")
    C = conductor(T, V)
    M = Ideal(T, C.mask)
    if M not in T.maximal_ideals:
        raise NotConductorMaximal("conductor of a minimal extension must be maximal in the smaller ring")
    q = M.index  # |T/M|
    over = tuple(Q for Q in V.maximal_ideals if Q.mask & M.mask == M.mask)
    size_v = V.order // M.order  # |V/M|

    if len(over) == 1 and over[0].mask == M.mask:
        k = _log_exact(size_v, q)
        if k is not None and is_prime(k):
            return Classification(MinimalType.INERT, M, over)
    elif len(over) == 2:
        Q1, Q2 = over
        if Q1.mask & Q2.mask == M.mask and Q1.index == q and Q2.index == q:
            return Classification(MinimalType.DECOMPOSED, M, over)
    elif len(over) == 1:
        (Q,) = over
        if ideal_product(Q, Q).mask & M.mask == ideal_product(Q, Q).mask and size_v == q * q and Q.index == q:
            return Classification(MinimalType.RAMIFIED, M, over)
    raise NotConductorMaximal("minimal extension fits none of the three types")
