"""Dense univariate polynomials over a prime field F_p.

Polynomials are lists of ints, lowest degree first, with no trailing zeros
(the zero polynomial is ``[]``).
"""
from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

from catena.errors import NotPrime


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def require_prime(p: int) -> None:
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")


def trim(f: list[int]) -> list[int]:
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def add(f, g, p):
    n = max(len(f), len(g))
    return trim([((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)) % p for i in range(n)])


def sub(f, g, p):
    return add(f, [(-c) % p for c in g], p)


def mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return trim(out)


def divmod_(f, g, p):
    g = trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    inv = pow(g[-1], p - 2, p)
    r = trim(f)
    q = [0] * max(len(r) - len(g) + 1, 0)
    while len(r) >= len(g):
        c = r[-1] * inv % p
        shift = len(r) - len(g)
        q[shift] = c
        for i, b in enumerate(g):
            r[shift + i] = (r[shift + i] - c * b) % p
        r = trim(r)
    return trim(q), r


def mod(f, g, p):
    return divmod_(f, g, p)[1]


def gcd(f, g, p):
    f, g = trim(f), trim(g)
    while g:
        f, g = g, mod(f, g, p)
    if f:
        inv = pow(f[-1], p - 2, p)
        f = [c * inv % p for c in f]
    return f


def powmod(base, e: int, f, p):
    result = [1]
    base = mod(base, f, p)
    while e:
        if e & 1:
            result = mod(mul(result, base, p), f, p)
        base = mod(mul(base, base, p), f, p)
        e >>= 1
    return result


def is_irreducible(f, p: int) -> bool:
    """Ben-Or test: f of degree n is irreducible iff gcd(f, x^(p^i) - x) = 1 for i <= n/2."""
    f = trim(f)
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    if f[0] == 0:
        return False
    x = [0, 1]
    h = x
    for _ in range(n // 2):
        h = powmod(h, p, f, p)
        if len(gcd(f, sub(h, x, p), p)) > 1:
            return False
    return True


def monic_from_code(code: int, n: int, p: int) -> list[int]:
    """Monic degree-n polynomial whose lower coefficients are the base-p digits of ``code``."""
    coeffs = []
    for _ in range(n):
        code, c = divmod(code, p)
        coeffs.append(c)
    return coeffs + [1]


def lex_least_irreducible_search(p: int, n: int) -> list[int]:
    """Smallest monic irreducible of degree n, comparing coefficients from x^(n-1) down."""
    require_prime(p)
    for code in range(p**n):
        f = monic_from_code(code, n, p)
        if is_irreducible(f, p):
            return f
    raise AssertionError("every degree has an irreducible polynomial")


@lru_cache(maxsize=1)
def _table() -> dict[str, list[int]]:
    text = resources.files("catena").joinpath("data/irreducible.json").read_text()
    return json.loads(text)["polynomials"]


def lex_least_irreducible(p: int, n: int) -> list[int]:
    """Table lookup for p^n <= 2^16, computed on the fly beyond it."""
    require_prime(p)
    hit = _table().get(f"{p},{n}")
    if hit is not None:
        return list(hit)
    return lex_least_irreducible_search(p, n)
