"""Pointwise minimal extensions: R < R[t] is minimal for every t outside R."""
from __future__ import annotations

from dataclasses import dataclass

from catena.analysis.closure import seminormalization_chainwise, t_closure
from catena.analysis.interval import ExtensionLattice, enumerate_interval
from catena.analysis.minimal import is_minimal_pair
from catena.rings.extension import RingExtension
from catena.rings.ring import Ideal, Subring, conductor, ideal_product

NON_CATENARIAN_CASE = 4


@dataclass
class PointwiseReport:
    pointwise_minimal: bool
    case: int | None = None  # 1..4, None when not pointwise minimal
    conditions_hold: bool = True  # the extra structure promised for that case
    non_catenarian_expected: bool = False


def _adjoin(R: Subring, t: int) -> Subring:
    S = R.ring
    return Subring(S, S.closure_mask(R.mask | (1 << t)))


def _power_in(S, x: int, k: int, target_mask: int) -> bool:
    return bool(target_mask >> S.power(x, k) & 1)


def is_pointwise_minimal(x: RingExtension | ExtensionLattice) -> PointwiseReport:
    EL = x if isinstance(x, ExtensionLattice) else enumerate_interval(x)
    R, S = EL.bottom, EL.top
    ring = S.ring
    if R == S:
        return PointwiseReport(False)
    for t in S.elements:
        if t not in R and not is_minimal_pair(R, _adjoin(R, t)):
            return PointwiseReport(False)

    M = conductor(R)  # as an ideal of S, contained in R
    q = R.order // M.order  # |k| with k = R/M
    p = next(d for d in range(2, q + 1) if q % d == 0)
    tR = t_closure(EL)
    plusR = seminormalization_chainwise(EL)
    over = [N for N in S.maximal_ideals if N.mask & M.mask == M.mask]

    def squares_in_M(N: Ideal) -> bool:
        sq = ideal_product(N, N)
        return sq.mask & M.mask == sq.mask

    if plusR == R and tR == S:
        n = len(over)
        cond = S.order // M.order == q**n and all(N.index == q for N in over) and (q == 2 or n == 2)
        return PointwiseReport(True, 1, cond)
    if plusR == S:
        cond = len(over) == 1 and squares_in_M(over[0])
        return PointwiseReport(True, 2, cond)
    if tR == R:
        residue = S.order // M.order
        field = len(over) == 1 and over[0].mask == M.mask
        minimal_field = is_minimal_pair(R, S)
        frobenius = all(_power_in(ring, y, p, R.mask) for y in S.elements)
        return PointwiseReport(True, 3, field and residue > q and (minimal_field or frobenius))
    if plusR == tR:
        frobenius = all(_power_in(ring, y, p, R.mask) for y in S.elements)
        cond = len(over) == 1 and squares_in_M(over[0]) and frobenius
        return PointwiseReport(True, NON_CATENARIAN_CASE, cond, non_catenarian_expected=True)
    return PointwiseReport(True, None, False)
