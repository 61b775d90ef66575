"""Structured ring constructors with a canonical element order.

Every constructor fixes its element enumeration from the recipe alone, so
the same recipe always yields bit-identical tables:

* ``zmod(n)``: residues 0..n-1.
* ``poly_quotient(base, f)``: coefficient vectors (c0, c1, ...) with index
  ``c0 + c1*|base| + ...``.
* ``product(factors)``: tuples in lexicographic order, first factor most
  significant.
* ``quotient(base, gens)``: cosets ordered by their least base index.
* ``idealization(R, M)``: pairs (r, m) with index ``r*|M| + m``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from catena import polyfp
from catena.errors import NotAModule, NotAnIdeal, NotIrreducible, TooLarge
from catena.rings.ring import (
    DEFAULT_CAP,
    FiniteCommRing,
    Ideal,
    Subring,
    _standalone,
    ideal_generated,
)

_VARS = "xyzuvw"


def _check_cap(order: int, cap: int | None) -> None:
    cap = DEFAULT_CAP if cap is None else cap
    if order > cap:
        raise TooLarge(f"ring of order {order} exceeds the cap of {cap}")


def ring_zmod(n: int, cap: int | None = None) -> FiniteCommRing:
    if n < 2:
        raise ValueError("Z/n needs n >= 2")
    _check_cap(n, cap)
    a = np.arange(n)
    return FiniteCommRing(
        np.add.outer(a, a) % n,
        np.multiply.outer(a, a) % n,
        0,
        1 % n,
        {"construct": "zmod", "n": n},
        cap=cap,
    )


def _var_for(base: FiniteCommRing) -> str:
    depth = 0
    r = base.recipe
    while True:
        kind = r.get("construct")
        if kind == "gf" and r.get("deg", 1) > 1:
            depth += 1
        elif kind == "poly_quotient":
            depth += 1
            r = r["base"]
            continue
        break
    return _VARS[min(depth, len(_VARS) - 1)]


def _poly_label(coeffs: list[int], base: FiniteCommRing, var: str) -> str:
    terms = []
    for k, c in enumerate(coeffs):
        if c == base.zero:
            continue
        cl = base.labels[c]
        if k and "+" in cl:
            cl = f"({cl})"
        if k == 0:
            terms.append(cl)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            terms.append(mono if c == base.one else f"{cl}{mono}")
    return "+".join(terms) if terms else base.labels[base.zero]


def ring_poly_quotient(
    base: FiniteCommRing, modulus: list[int], cap: int | None = None, *, var: str | None = None
) -> FiniteCommRing:
    """base[x]/(f) for monic f given by base-element indices, lowest degree first."""
    f = list(modulus)
    deg = len(f) - 1
    if deg < 1 or f[-1] != base.one:
        raise ValueError("modulus must be monic of degree >= 1")
    b = base.order
    n = b**deg
    _check_cap(n, cap)
    var = var or _var_for(base)
    add_b, mul_b, neg_b = base.add, base.mul, base.neg
    coeffs = [list(c) for c in itertools.product(range(b), repeat=deg)]
    coeffs = [c[::-1] for c in coeffs]  # index = c0 + c1*b + ...
    coeffs.sort(key=lambda c: sum(ci * b**k for k, ci in enumerate(c)))
    weights = np.array([b**k for k in range(deg)])
    C = np.array(coeffs, dtype=np.int64)  # n x deg

    add = (add_b[C[:, None, :], C[None, :, :]] * weights).sum(axis=2)
    # schoolbook product then reduce x^k for k >= deg using x^deg = -(f0 + ... )
    prod = np.full((n, n, 2 * deg - 1), base.zero, dtype=np.int64)
    for i in range(deg):
        for j in range(deg):
            term = mul_b[C[:, None, i], C[None, :, j]]
            prod[:, :, i + j] = add_b[prod[:, :, i + j], term]
    for k in range(2 * deg - 2, deg - 1, -1):
        lead = prod[:, :, k].copy()
        prod[:, :, k] = base.zero
        for t in range(deg):
            # subtract lead * f_t from coefficient k - deg + t
            prod[:, :, k - deg + t] = add_b[prod[:, :, k - deg + t], neg_b[mul_b[lead, f[t]]]]
    mul = (prod[:, :, :deg] * weights).sum(axis=2)
    text = _poly_label(f, base, var)
    recipe = {"construct": "poly_quotient", "base": base.recipe, "modulus": f, "var": var, "modulus_text": text}
    labels = [_poly_label(c, base, var) for c in coeffs]
    zero = int(sum(base.zero * w for w in weights))
    one = base.one + zero - base.zero
    return FiniteCommRing(add, mul, zero, one, recipe, labels, cap=cap)


def ring_gf(p: int, modulus: list[int] | None = None, deg: int | None = None, cap: int | None = None) -> FiniteCommRing:
    """F_p[x]/(f) for a monic irreducible f (default: the lexicographically least)."""
    polyfp.require_prime(p)
    if modulus is None:
        deg = 1 if deg is None else deg
        modulus = [0, 1] if deg == 1 else polyfp.lex_least_irreducible(p, deg)
    modulus = [c % p for c in modulus]
    if not polyfp.is_irreducible(modulus, p) or modulus[-1] != 1:
        raise NotIrreducible(f"{modulus} is not monic irreducible over F_{p}")
    deg = len(modulus) - 1
    _check_cap(p**deg, cap)
    ring = ring_poly_quotient(ring_zmod(p), modulus, cap, var="x")
    ring.recipe = {"construct": "gf", "p": p, "deg": deg, "modulus": modulus}
    if deg == 1:
        ring.labels = [str(i) for i in range(p)]
    return ring


def quotient_with_map(base: FiniteCommRing, ideal: Ideal | list[int], cap: int | None = None):
    """base / I together with the projection array base index -> quotient index."""
    if isinstance(ideal, Ideal):
        if ideal.ring.ring is not base or ideal.ring.mask != base.whole.mask:
            raise NotAnIdeal("ideal must belong to the base ring itself")
        I = ideal
        gens = list(ideal.elements)
    else:
        gens = list(ideal)
        I = ideal_generated(base.whole, gens)
    members = np.array(I.elements)
    # representative of each coset = least index in it
    cosets = base.add[:, members].min(axis=1)
    reps = sorted(set(cosets.tolist()))
    pos = {r: i for i, r in enumerate(reps)}
    proj = np.array([pos[int(c)] for c in cosets], dtype=np.int32)
    ridx = np.array(reps)
    add = proj[base.add[np.ix_(ridx, ridx)]]
    mul = proj[base.mul[np.ix_(ridx, ridx)]]
    recipe = {"construct": "quotient", "base": base.recipe, "generators": sorted(int(g) for g in gens)}
    labels = ["[" + base.labels[r] + "]" for r in reps]
    ring = FiniteCommRing(add, mul, int(proj[base.zero]), int(proj[base.one]), recipe, labels, cap=cap, verify=len(reps) > 1)
    return ring, proj


def ring_quotient(base: FiniteCommRing, ideal_gens: list[int], cap: int | None = None) -> FiniteCommRing:
    return quotient_with_map(base, ideal_gens, cap)[0]


def ring_product(factors: list[FiniteCommRing], cap: int | None = None) -> FiniteCommRing:
    if not factors:
        raise ValueError("product needs at least one factor")
    sizes = [f.order for f in factors]
    n = int(np.prod(sizes))
    _check_cap(n, cap)
    tuples = np.array(list(itertools.product(*(range(s) for s in sizes))), dtype=np.int64)
    strides = np.array([int(np.prod(sizes[k + 1:])) for k in range(len(sizes))])
    add = np.zeros((n, n), dtype=np.int64)
    mul = np.zeros((n, n), dtype=np.int64)
    for k, f in enumerate(factors):
        col = tuples[:, k]
        add += f.add[col[:, None], col[None, :]] * strides[k]
        mul += f.mul[col[:, None], col[None, :]] * strides[k]
    zero = int(sum(f.zero * s for f, s in zip(factors, strides)))
    one = int(sum(f.one * s for f, s in zip(factors, strides)))
    labels = ["(" + ",".join(factors[k].labels[t[k]] for k in range(len(factors))) + ")" for t in tuples]
    recipe = {"construct": "product", "factors": [f.recipe for f in factors]}
    return FiniteCommRing(add, mul, zero, one, recipe, labels, cap=cap)


# -- modules and idealization -------------------------------------------------


@dataclass
class FiniteModule:
    """A finite module over ``ring`` given by its addition and scalar-action tables."""

    ring: FiniteCommRing
    add: np.ndarray
    act: np.ndarray  # act[r, m] = r * m
    zero: int = 0
    recipe: dict = field(default_factory=lambda: {"construct": "table"})
    labels: list[str] | None = None

    def __post_init__(self):
        self.add = np.asarray(self.add, dtype=np.int32)
        self.act = np.asarray(self.act, dtype=np.int32)
        self.order = self.add.shape[0]
        if self.labels is None:
            self.labels = [str(i) for i in range(self.order)]
        check_module(self)


def check_module(M: FiniteModule) -> None:
    R = M.ring
    m = M.order
    add, act = M.add, M.act
    if add.shape != (m, m) or act.shape != (R.order, m):
        raise NotAModule("table shapes do not match")
    if add.min() < 0 or add.max() >= m or act.min() < 0 or act.max() >= m:
        raise NotAModule("table entry out of range")
    idx = np.arange(m)
    if not np.array_equal(add, add.T) or not np.array_equal(add[M.zero], idx):
        raise NotAModule("addition is not commutative with identity")
    if not (add == M.zero).any(axis=1).all():
        raise NotAModule("missing additive inverses")
    for a in range(m):
        if not np.array_equal(add[add[a]], add[a][add]):
            raise NotAModule("addition is not associative")
    if not np.array_equal(act[R.one], idx):
        raise NotAModule("1 does not act as the identity")
    # r(m + n) == rm + rn
    for r in range(R.order):
        if not np.array_equal(act[r][add], add[np.ix_(act[r], act[r])]):
            raise NotAModule("action does not distribute over module addition")
    # (r + s)m == rm + sm and (rs)m == r(sm)
    if not np.array_equal(act[R.add], add[act[:, None, :], act[None, :, :]]):
        raise NotAModule("action does not distribute over ring addition")
    if not np.array_equal(act[R.mul], act[np.arange(R.order)[:, None, None], act[None, :, :]]):
        raise NotAModule("action is not associative")


def free_module(R: FiniteCommRing, rank: int) -> FiniteModule:
    """R^rank with tuple order, first coordinate most significant (rank 0 is the zero module)."""
    tuples = np.array(list(itertools.product(range(R.order), repeat=rank)), dtype=np.int64).reshape(-1, rank)
    m = len(tuples)
    strides = np.array([R.order ** (rank - 1 - k) for k in range(rank)], dtype=np.int64)
    add = np.zeros((m, m), dtype=np.int64)
    act = np.zeros((R.order, m), dtype=np.int64)
    for k in range(rank):
        col = tuples[:, k]
        add += R.add[col[:, None], col[None, :]] * strides[k]
        act += R.mul[np.arange(R.order)[:, None], col[None, :]] * strides[k]
    zero = int(sum(R.zero * s for s in strides))
    labels = ["(" + ",".join(R.labels[t] for t in row) + ")" for row in tuples]
    return FiniteModule(R, add, act, zero, {"construct": "free", "rank": rank}, labels)


def restrict_scalars(M: FiniteModule, R: FiniteCommRing, embed) -> FiniteModule:
    """View an S-module as an R-module through an embedding R -> S."""
    embed = np.asarray(embed)
    return FiniteModule(R, M.add, M.act[embed], M.zero, dict(M.recipe), list(M.labels))


def ring_idealization(R: FiniteCommRing, M: FiniteModule, cap: int | None = None) -> FiniteCommRing:
    """R(+)M with (r, m)(s, n) = (rs, rn + sm)."""
    if M.ring is not R:
        raise NotAModule("module must be over the given ring")
    m = M.order
    n = R.order * m
    _check_cap(n, cap)
    r = np.repeat(np.arange(R.order), m)
    x = np.tile(np.arange(m), R.order)
    add = R.add[r[:, None], r[None, :]] * m + M.add[x[:, None], x[None, :]]
    cross = M.add[M.act[r[:, None], x[None, :]], M.act[r[None, :], x[:, None]]]
    mul = R.mul[r[:, None], r[None, :]] * m + cross
    labels = [f"({R.labels[a]},{M.labels[b]})" for a, b in zip(r, x)]
    recipe = {"construct": "idealization", "ring": R.recipe, "module": M.recipe}
    return FiniteCommRing(add, mul, R.zero * m + M.zero, R.one * m + M.zero, recipe, labels, cap=cap)


def idealization_embedding(R: FiniteCommRing, M: FiniteModule) -> np.ndarray:
    """Index map r -> (r, 0) of R into R(+)M."""
    return np.arange(R.order) * M.order + M.zero


# -- rings carved out of other rings -----------------------------------------


def ring_from_subring(T: Subring) -> tuple[FiniteCommRing, list[int]]:
    return T.as_ring()


def corner_ring(S: FiniteCommRing, e: int) -> tuple[FiniteCommRing, list[int]]:
    """The ring Se with unit e (e idempotent); returns it with ambient indices."""
    if S.mul[e, e] != e:
        raise ValueError("corner rings need an idempotent")
    elems = sorted(set(S.mul[:, e].tolist()))
    return _standalone(S, elems, e, {"construct": "corner", "ambient": S.recipe})


def ring_from_tables(add, mul, zero: int = 0, one: int = 1, cap: int | None = None) -> FiniteCommRing:
    return FiniteCommRing(add, mul, zero, one, {"construct": "table"}, cap=cap)
