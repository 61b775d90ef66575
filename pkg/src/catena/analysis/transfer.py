"""How [R, S] behaves under quotients by shared ideals, idealization and products."""
from __future__ import annotations

from dataclasses import dataclass, field

from catena.analysis.interval import ExtensionLattice, enumerate_interval
from catena.lattice import is_graded, is_isomorphic, length, product_lattice
from catena.rings.constructors import FiniteModule, free_module
from catena.rings.extension import (
    RingExtension,
    idealize_extension,
    product_extension,
    project_subring,
    quotient_extension,
)
from catena.rings.ring import Ideal


@dataclass
class TransferReport:
    kind: str
    graded: tuple[bool, ...]
    lengths: tuple[tuple[int, int], ...]
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def _summary(EL: ExtensionLattice) -> tuple[bool, tuple[int, int]]:
    ln = length(EL.lattice)
    return bool(is_graded(EL.lattice)), (ln.min_maximal, ln.max_maximal)


def check_quotient_transfer(ext: RingExtension, J: Ideal) -> TransferReport:
    """[R, S] against [R/J, S/J] for an ideal J of S contained in R.

    T -> T/J must be a bijection of intervals that preserves covers.
    """
    EL = enumerate_interval(ext)
    q = quotient_extension(ext, J)
    ELq = enumerate_interval(q)
    images = [project_subring(q, T) for T in EL.subrings]
    covers = {(ELq.name(images[EL.lattice.index[a]]), ELq.name(images[EL.lattice.index[b]])) for a, b in EL.lattice.covers}
    g0, l0 = _summary(EL)
    g1, l1 = _summary(ELq)
    checks = {
        "projection_bijective": len(set(images)) == len(EL) == len(ELq),
        "projection_preserves_covers": covers == set(ELq.lattice.covers),
        "same_gradedness": g0 == g1,
        "same_length": l0 == l1,
    }
    return TransferReport("quotient", (g0, g1), (l0, l1), checks)


def check_idealization_transfer(ext: RingExtension, M: FiniteModule | None = None) -> TransferReport:
    """[R, S] against [R(+)M, S(+)M]; M defaults to S as a module over itself."""
    M = free_module(ext.S, 1) if M is None else M
    EL = enumerate_interval(ext)
    ELi = enumerate_interval(idealize_extension(ext, M))
    g0, l0 = _summary(EL)
    g1, l1 = _summary(ELi)
    checks = {
        "isomorphic_intervals": is_isomorphic(EL.lattice, ELi.lattice),
        "same_gradedness": g0 == g1,
        "same_length": l0 == l1,
    }
    return TransferReport("idealization", (g0, g1), (l0, l1), checks)


def check_product_transfer(exts: list[RingExtension]) -> TransferReport:
    """[prod R_i, prod S_i] against the product of the [R_i, S_i]."""
    parts = [enumerate_interval(e) for e in exts]
    ELp = enumerate_interval(product_extension(exts))
    expected = product_lattice(*(P.lattice for P in parts))
    sums = [_summary(P) for P in parts]
    gp, lp = _summary(ELp)
    checks = {
        "isomorphic_to_product_lattice": is_isomorphic(ELp.lattice, expected),
        "graded_iff_factors_graded": gp == all(g for g, _ in sums),
        "max_length_additive": lp[1] == sum(l[1] for _, l in sums),
        "min_length_additive": lp[0] == sum(l[0] for _, l in sums),
    }
    return TransferReport("product", tuple(g for g, _ in sums) + (gp,), tuple(l for _, l in sums) + (lp,), checks)
