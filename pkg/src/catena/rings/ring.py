"""Table-backed finite commutative rings, their subrings and ideals.

Elements of a ring of order n are the indices 0..n-1. Subsets (subrings,
ideals) are stored as Python int bitmasks over those indices, which makes
inclusion, intersection and hashing cheap.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from catena import kernels
from catena._env import env_int
from catena.errors import NotAnIdeal, NotARing, NotMaximal, TooLarge

DEFAULT_CAP = env_int("CATENA_CAP", 256)


# -- bitmask helpers ----------------------------------------------------------


def bits(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def mask_of(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << int(i)
    return m


def mask_to_member(mask: int, n: int) -> np.ndarray:
    raw = np.frombuffer(mask.to_bytes((n + 7) // 8 or 1, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:n].copy()


def member_to_mask(member: np.ndarray) -> int:
    return int.from_bytes(np.packbits(member.astype(np.uint8), bitorder="little").tobytes(), "little")


def _prime_factor(q: int) -> int:
    p = 2
    while q % p:
        p += 1
    return p


def _log_exact(value: int, base: int) -> int | None:
    """k with base**k == value, or None."""
    if base < 2:
        return None
    k, acc = 0, 1
    while acc < value:
        acc *= base
        k += 1
    return k if acc == value else None


def check_axioms(add: np.ndarray, mul: np.ndarray, zero: int, one: int) -> None:
    """Exhaustive commutative-ring axiom check; raises :class:`NotARing`."""
    n = add.shape[0]
    if add.shape != (n, n) or mul.shape != (n, n):
        raise NotARing("operation tables must be square and of equal size")
    if add.min() < 0 or add.max() >= n or mul.min() < 0 or mul.max() >= n:
        raise NotARing("table entry out of range")
    if n > 1 and zero == one:
        raise NotARing("0 == 1")
    idx = np.arange(n)
    if not (np.array_equal(add, add.T) and np.array_equal(mul, mul.T)):
        raise NotARing("operations are not commutative")
    if not (np.array_equal(add[zero], idx) and np.array_equal(mul[one], idx)):
        raise NotARing("0 or 1 is not neutral")
    if not (add == zero).any(axis=1).all():
        raise NotARing("some element has no additive inverse")
    for a in range(n):
        if not np.array_equal(add[add[a]], add[a][add]):
            raise NotARing(f"addition is not associative at {a}")
        if not np.array_equal(mul[mul[a]], mul[a][mul]):
            raise NotARing(f"multiplication is not associative at {a}")
        # a(b + c) == ab + ac
        if not np.array_equal(mul[a][add], add[np.ix_(mul[a], mul[a])]):
            raise NotARing(f"distributivity fails at {a}")


class FiniteCommRing:
    """Finite commutative unital ring given by exact operation tables.

    ``recipe`` is the JSON-able construction that produced the ring; it is
    kept for reports. ``labels`` are human-readable element names.
    """

    def __init__(
        self,
        add,
        mul,
        zero: int,
        one: int,
        recipe: dict | None = None,
        labels: Sequence[str] | None = None,
        *,
        verify: bool = True,
        cap: int | None = None,
    ):
        add = np.ascontiguousarray(add, dtype=np.int32)
        mul = np.ascontiguousarray(mul, dtype=np.int32)
        n = add.shape[0]
        cap = DEFAULT_CAP if cap is None else cap
        if n > cap:
            raise TooLarge(f"ring of order {n} exceeds the cap of {cap}")
        if verify:
            check_axioms(add, mul, zero, one)
        self.order = n
        self.add = add
        self.mul = mul
        self.zero = int(zero)
        self.one = int(one)
        self.recipe = recipe or {"construct": "table"}
        self.labels = list(labels) if labels is not None else [str(i) for i in range(n)]
        self.neg = np.argmax(add == self.zero, axis=1).astype(np.int32)
        self.tables = np.ascontiguousarray(np.stack([add, mul]))
        for arr in (self.add, self.mul, self.neg, self.tables):
            arr.setflags(write=False)

    def __repr__(self) -> str:
        return f"FiniteCommRing(order={self.order}, {self.name})"

    def __len__(self) -> int:
        return self.order

    @property
    def name(self) -> str:
        return recipe_name(self.recipe)

    def sub(self, a: int, b: int) -> int:
        return int(self.add[a, self.neg[b]])

    def power(self, a: int, k: int) -> int:
        out = self.one
        for _ in range(k):
            out = int(self.mul[out, a])
        return out

    @cached_property
    def nilpotent(self) -> np.ndarray:
        """Boolean flag per element: some power vanishes."""
        x = np.arange(self.order, dtype=np.int32)
        acc = x.copy()
        for _ in range(max(1, self.order.bit_length())):
            acc = self.mul[acc, acc]
        return acc == self.zero

    @cached_property
    def whole(self) -> Subring:
        return Subring(self, (1 << self.order) - 1)

    def closure_mask(self, seed_mask: int, ops: str = "ring") -> int:
        """Close a subset under + and * (``ops='ring'``) or + only (``'additive'``)."""
        tables = self.tables if ops == "ring" else self.tables[:1]
        member = mask_to_member(seed_mask, self.order)
        return member_to_mask(kernels.closure(tables, member))


def recipe_name(recipe: dict) -> str:
    kind = recipe.get("construct")
    if kind == "zmod":
        return f"Z/{recipe['n']}"
    if kind == "gf":
        return f"F{recipe['p'] ** recipe.get('deg', 1)}"
    if kind == "poly_quotient":
        return f"{recipe_name(recipe['base'])}[{recipe.get('var', 'x')}]/({recipe.get('modulus_text', '...')})"
    if kind == "product":
        return " x ".join(recipe_name(f) for f in recipe["factors"])
    if kind == "quotient":
        return f"{recipe_name(recipe['base'])}/I"
    if kind == "idealization":
        return f"{recipe_name(recipe['ring'])}(+)M"
    if kind == "subring":
        return f"subring of {recipe_name(recipe['ambient'])}"
    if kind == "corner":
        return f"{recipe_name(recipe['ambient'])}e"
    return kind or "ring"


class Subring:
    """A subset of a ring closed under +, * and containing 1.

    Subrings of the same ambient ring compare by their element sets; the
    ambient ring is compared by identity.
    """

    def __init__(self, ring: FiniteCommRing, mask: int):
        self.ring = ring
        self.mask = mask

    def __eq__(self, other) -> bool:
        return isinstance(other, Subring) and other.ring is self.ring and other.mask == self.mask

    def __hash__(self) -> int:
        return hash((id(self.ring), self.mask))

    def __le__(self, other: Subring) -> bool:
        return self.mask & other.mask == self.mask

    def __lt__(self, other: Subring) -> bool:
        return self.mask != other.mask and self <= other

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> x & 1)

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"Subring(order={self.order}, {{{','.join(map(str, self.elements))}}})"

    def __str__(self) -> str:
        return "{" + ",".join(self.ring.labels[i] for i in self.elements) + "}"

    @cached_property
    def elements(self) -> tuple[int, ...]:
        return tuple(bits(self.mask))

    @property
    def order(self) -> int:
        return len(self.elements)

    @cached_property
    def member(self) -> np.ndarray:
        m = mask_to_member(self.mask, self.ring.order)
        m.setflags(write=False)
        return m

    def is_valid(self) -> bool:
        S = self.ring
        idx = np.array(self.elements)
        if self.ring.one not in self or self.ring.zero not in self:
            return False
        return bool(self.member[S.add[np.ix_(idx, idx)]].all() and self.member[S.mul[np.ix_(idx, idx)]].all())

    # -- ideal theory (finite rings: every prime is maximal) -------------------

    @cached_property
    def idempotents(self) -> tuple[int, ...]:
        mul = self.ring.mul
        return tuple(e for e in self.elements if mul[e, e] == e)

    @cached_property
    def primitive_idempotents(self) -> tuple[int, ...]:
        mul = self.ring.mul
        z = self.ring.zero
        nonzero = [e for e in self.idempotents if e != z]
        return tuple(
            e for e in nonzero if not any(f != e and mul[f, e] == f for f in nonzero)
        )

    @cached_property
    def maximal_ideals(self) -> tuple[Ideal, ...]:
        """One maximal ideal per local factor: {x : x*e nilpotent}."""
        S = self.ring
        idx = np.array(self.elements)
        out = []
        for e in self.primitive_idempotents:
            nil = S.nilpotent[S.mul[idx, e]]
            out.append(Ideal(self, mask_of(idx[nil])))
        return tuple(out)

    @property
    def is_local(self) -> bool:
        return len(self.primitive_idempotents) == 1

    def local_idempotent(self, M: Ideal) -> int:
        """The primitive idempotent of this ring lying outside the maximal ideal M."""
        for e in self.primitive_idempotents:
            if e not in M:
                return e
        raise NotAnIdeal("ideal contains every primitive idempotent, so it is not proper")

    def scale(self, e: int) -> int:
        """Mask of {x*e : x in self} (localization at the factor of e)."""
        mul = self.ring.mul
        return mask_of(int(mul[x, e]) for x in self.elements)

    def as_ring(self) -> tuple[FiniteCommRing, list[int]]:
        """Reindex as a standalone ring; returns it with the ambient index of each element."""
        return _standalone(self.ring, list(self.elements), self.ring.one, {"construct": "subring", "ambient": self.ring.recipe})


def _standalone(S: FiniteCommRing, elems: list[int], one: int, recipe: dict):
    pos = {x: i for i, x in enumerate(elems)}
    idx = np.array(elems)
    add = np.vectorize(pos.__getitem__, otypes=[np.int32])(S.add[np.ix_(idx, idx)])
    mul = np.vectorize(pos.__getitem__, otypes=[np.int32])(S.mul[np.ix_(idx, idx)])
    ring = FiniteCommRing(
        add, mul, pos[S.zero], pos[one], recipe, [S.labels[x] for x in elems], verify=False, cap=S.order
    )
    return ring, elems


@dataclass(frozen=True, eq=False)
class Ideal:
    """Ideal of the (sub)ring ``ring``; elements are ambient indices."""

    ring: Subring
    mask: int

    def __eq__(self, other) -> bool:
        return isinstance(other, Ideal) and self.ring.ring is other.ring.ring and self.mask == other.mask

    def __hash__(self) -> int:
        return hash((id(self.ring.ring), self.mask))

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> x & 1)

    def __le__(self, other: Ideal) -> bool:
        return self.mask & other.mask == self.mask

    def __lt__(self, other: Ideal) -> bool:
        return self.mask != other.mask and self <= other

    def __repr__(self) -> str:
        return f"Ideal(order={self.order}, {{{','.join(map(str, self.elements))}}})"

    def __str__(self) -> str:
        return "{" + ",".join(self.ring.ring.labels[i] for i in self.elements) + "}"

    @cached_property
    def elements(self) -> tuple[int, ...]:
        return tuple(bits(self.mask))

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def index(self) -> int:
        """|ring / ideal|."""
        return self.ring.order // self.order

    def within(self, T: Subring) -> Ideal:
        """The same subset viewed as an ideal of T (checked)."""
        return make_ideal(T, self.mask)

    def is_maximal(self) -> bool:
        return self in self.ring.maximal_ideals


def is_ideal(T: Subring, mask: int) -> bool:
    if mask & T.mask != mask:
        return False
    S = T.ring
    I = np.array(bits(mask))
    if I.size == 0:
        return False
    member = mask_to_member(mask, S.order)
    tidx = np.array(T.elements)
    return bool(member[S.add[np.ix_(I, I)]].all() and member[S.mul[np.ix_(tidx, I)]].all())


def make_ideal(T: Subring, mask_or_elements) -> Ideal:
    mask = mask_or_elements if isinstance(mask_or_elements, int) else mask_of(mask_or_elements)
    if not is_ideal(T, mask):
        raise NotAnIdeal("subset is not an ideal of the given ring")
    return Ideal(T, mask)


def ideal_generated(T: Subring, gens: Iterable[int]) -> Ideal:
    """Additive span of T * gens (the zero ideal for no generators)."""
    S = T.ring
    gens = list(gens)
    if any(g not in T for g in gens):
        raise NotAnIdeal("generators must lie in the ring")
    seed = mask_of([S.zero])
    if gens:
        tidx = np.array(T.elements)
        seed |= mask_of(S.mul[np.ix_(tidx, np.array(gens))].ravel())
    return Ideal(T, S.closure_mask(seed, ops="additive"))


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    S = I.ring.ring
    prods = S.mul[np.ix_(np.array(I.elements), np.array(J.elements))].ravel()
    return Ideal(I.ring, S.closure_mask(mask_of(prods) | mask_of([S.zero]), ops="additive"))


def nilradical(T: Subring) -> Ideal:
    idx = np.array(T.elements)
    return Ideal(T, mask_of(idx[T.ring.nilpotent[idx]]))


def conductor(T: Subring, V: Subring | None = None) -> Ideal:
    """(T : V) = {x in V : xV in T}, an ideal of V contained in T.

    With one argument this is (T : S) for the ambient ring S.
    """
    V = T.ring.whole if V is None else V
    S = T.ring
    vidx = np.array(V.elements)
    prods = S.mul[np.ix_(vidx, vidx)]
    rows = T.member[prods].all(axis=1)
    return Ideal(V, mask_of(vidx[rows]))


@dataclass(frozen=True)
class ResidueField:
    """A finite residue field, identified up to isomorphism by (p, degree)."""

    p: int
    degree: int

    @property
    def order(self) -> int:
        return self.p**self.degree


def residue_field(M: Ideal) -> ResidueField:
    if not M.is_maximal():
        raise NotMaximal("residue fields need a maximal ideal")
    q = M.index
    p = _prime_factor(q)
    return ResidueField(p, _log_exact(q, p))


def field_degree(small: int, big: int) -> int | None:
    """[F_big : F_small] when F_small embeds in F_big, else None."""
    return _log_exact(big, small)
