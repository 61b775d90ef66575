from __future__ import annotations

import pytest
from hypothesis import strategies as st

from catena import kernels
from catena.lattice import FiniteLattice
from catena.rings import build_extension

GF2 = {"construct": "gf", "p": 2}
GF4 = {"construct": "gf", "p": 2, "deg": 2}
DUAL = {"construct": "poly_quotient", "base": {"construct": "zmod", "n": 2}, "modulus": [0, 0, 1]}


def product(*factors: dict) -> dict:
    return {"construct": "product", "factors": list(factors)}


def ext(S: dict, gens: list[int] | None = None):
    spec = {"S": S}
    if gens:
        spec["R"] = {"generators": gens}
    return build_extension(spec)


@pytest.fixture(params=sorted(kernels.backends()))
def backend(request, monkeypatch):
    """Run the test once per available kernel backend."""
    monkeypatch.setattr(kernels, "_impl", kernels.backends()[request.param])
    return request.param


@st.composite
def lattices(draw, max_ground: int = 5, max_sets: int = 8) -> FiniteLattice:
    """Random lattice as an intersection-closed family of subsets plus the ground set.

    Every finite lattice arises this way, so the strategy is complete in principle.
    """
    k = draw(st.integers(1, max_ground))
    full = (1 << k) - 1
    seeds = draw(st.lists(st.integers(0, full), max_size=max_sets))
    family = {full}
    for s in seeds:
        family |= {s & f for f in family} | {s}
    els = sorted(family, key=lambda m: (bin(m).count("1"), m))
    return FiniteLattice.from_relation(els, lambda a, b: a & b == a)


@pytest.fixture(scope="session")
def corpus_intervals():
    """(name, ExtensionLattice) for every corpus extension, computed once."""
    from catena.analysis import corpus, enumerate_interval

    return [(item.name, enumerate_interval(item.ext)) for item in corpus()]
