"""Finite field towers F_p <= F_{p^n} and the lattice of minimal polynomials of x.

F_{p^n} is F_p[x]/(f) for the lexicographically least monic irreducible f,
and x is the class of the indeterminate. For each intermediate field
K = F_{p^d} (d | n) the minimal polynomial of x over K is

    f_K(X) = prod_{i < n/d} (X - x^(p^(d i))),

computed in F_{p^n}[X]. Field elements are tuples of n coefficients over
F_p (lowest degree first); polynomials over F_{p^n} are lists of elements,
lowest degree first.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from catena import polyfp
from catena.errors import TooLarge
from catena.lattice import FiniteLattice, divisor_lattice, is_graded, length

MAX_FIELD_ORDER = 2**16
TOWER_CHECKS = (
    "degree_times_subfield_degree_is_n",
    "polynomials_distinct",
    "order_reversing",
    "covers_match_maximal_divisors",
    "graded_same_as_field_lattice",
    "all_chains_length_big_omega",
)

Elem = tuple[int, ...]


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def big_omega(n: int) -> int:
    """Number of prime factors of n counted with multiplicity."""
    k, p = 0, 2
    while n > 1:
        while n % p == 0:
            n //= p
            k += 1
        p += 1
    return k


@dataclass
class FieldTower:
    p: int
    n: int
    modulus: list[int]
    minimal_polys: dict[int, list[Elem]] = field(default_factory=dict)  # d -> f_{F_{p^d}}

    # -- arithmetic in F_{p^n} ------------------------------------------------

    def elem(self, poly: list[int]) -> Elem:
        r = polyfp.mod(poly, self.modulus, self.p)
        return tuple(r + [0] * (self.n - len(r)))

    def mul(self, a: Elem, b: Elem) -> Elem:
        return self.elem(polyfp.mul(polyfp.trim(list(a)), polyfp.trim(list(b)), self.p))

    def add(self, a: Elem, b: Elem) -> Elem:
        return tuple((u + v) % self.p for u, v in zip(a, b))

    def neg(self, a: Elem) -> Elem:
        return tuple((-u) % self.p for u in a)

    def power(self, a: Elem, e: int) -> Elem:
        return self.elem(polyfp.powmod(polyfp.trim(list(a)), e, self.modulus, self.p))

    @property
    def zero(self) -> Elem:
        return (0,) * self.n

    @property
    def one(self) -> Elem:
        return self.elem([1])

    @property
    def x(self) -> Elem:
        return self.elem([0, 1])

    def in_subfield(self, a: Elem, d: int) -> bool:
        """a lies in F_{p^d} iff a^(p^d) = a."""
        return self.power(a, self.p**d) == a

    # -- polynomials over F_{p^n} -------------------------------------------------

    def poly_mul(self, f: list[Elem], g: list[Elem]) -> list[Elem]:
        out = [self.zero] * (len(f) + len(g) - 1)
        for i, a in enumerate(f):
            for j, b in enumerate(g):
                out[i + j] = self.add(out[i + j], self.mul(a, b))
        return out

    def poly_divides(self, g: list[Elem], f: list[Elem]) -> bool:
        """Monic g divides f."""
        r = list(f)
        while len(r) >= len(g):
            c = r[-1]
            shift = len(r) - len(g)
            for i, b in enumerate(g):
                r[shift + i] = self.add(r[shift + i], self.neg(self.mul(c, b)))
            r.pop()
            while r and r[-1] == self.zero:
                r.pop()
        return not r

    @cached_property
    def subfield_degrees(self) -> list[int]:
        return divisors(self.n)


def field_tower(p: int, n: int) -> FieldTower:
    polyfp.require_prime(p)
    if n < 1:
        raise ValueError("tower degree must be positive")
    if p**n > MAX_FIELD_ORDER:
        raise TooLarge(f"F_{p}^{n} has more than {MAX_FIELD_ORDER} elements")
    modulus = [0, 1] if n == 1 else polyfp.lex_least_irreducible(p, n)
    tower = FieldTower(p, n, modulus)
    for d in divisors(n):
        tower.minimal_polys[d] = minimal_poly(tower, d)
    return tower


def minimal_poly(tower: FieldTower, d: int) -> list[Elem]:
    """Minimal polynomial of x over F_{p^d}, as a monic polynomial over F_{p^n}."""
    if tower.n % d:
        raise ValueError(f"{d} does not divide {tower.n}")
    if d in tower.minimal_polys:
        return tower.minimal_polys[d]
    f = [tower.one]
    for i in range(tower.n // d):
        root = tower.power(tower.x, tower.p ** (d * i))
        f = tower.poly_mul(f, [tower.neg(root), tower.one])
    if not all(tower.in_subfield(c, d) for c in f):
        raise ArithmeticError("conjugate product has coefficients outside the subfield")
    return f


def poly_to_json(tower: FieldTower, f: list[Elem]) -> list:
    """Coefficients as F_p integers when they lie in F_p, else as coefficient vectors in x."""
    out = []
    for c in f:
        if all(v == 0 for v in c[1:]):
            out.append(c[0])
        else:
            out.append(list(c))
    return out


def d_lattice(tower: FieldTower) -> FiniteLattice:
    """The minimal polynomials f_K ordered by divisibility, labelled f_d for K = F_{p^d}."""
    ds = tower.subfield_degrees
    polys = {f"f_{d}": tower.minimal_polys[d] for d in ds}
    return FiniteLattice.from_relation(list(polys), lambda a, b: tower.poly_divides(polys[a], polys[b]))


@dataclass
class DLatticeReport:
    p: int
    n: int
    size: int
    length: int
    expected_length: int
    checks: dict[str, bool]

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def check_d_lattice(tower: FieldTower) -> DLatticeReport:
    ds = tower.subfield_degrees
    f = tower.minimal_polys
    D = d_lattice(tower)
    K = divisor_lattice(tower.n)  # intermediate fields F_{p^d}, d | n, by inclusion
    checks: dict[str, bool] = {}
    checks["degree_times_subfield_degree_is_n"] = all((len(f[d]) - 1) * d == tower.n for d in ds)
    checks["polynomials_distinct"] = len({tuple(f[d]) for d in ds}) == len(ds)
    checks["order_reversing"] = all(
        (b % a == 0) == tower.poly_divides(f[b], f[a]) for a in ds for b in ds
    )
    cover_k = {(a, b) for a, b in K.covers}
    cover_d = {(int(lo[2:]), int(hi[2:])) for lo, hi in D.covers}  # lo | hi maximally
    checks["covers_match_maximal_divisors"] = cover_k == {(b, a) for a, b in cover_d}
    gD, gK = bool(is_graded(D)), bool(is_graded(K))
    checks["graded_same_as_field_lattice"] = gD == gK
    lD = length(D)
    checks["all_chains_length_big_omega"] = lD.min_maximal == lD.max_maximal == big_omega(tower.n)
    return DLatticeReport(tower.p, tower.n, len(D), lD.max_maximal, big_omega(tower.n), checks)
