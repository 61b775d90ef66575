from __future__ import annotations

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import lattices
from catena import kernels
from catena.lattice import FiniteLattice, divisor_lattice, is_distributive, left_modular_elements, pentagon
from catena.rings import ring_gf, ring_product, ring_zmod


def test_backend_selection():
    assert kernels.BACKEND in kernels.backends()
    assert "python" in kernels.backends()


def test_closure_generates_whole_field(backend):
    F = ring_gf(2, deg=3)
    seed = np.zeros(F.order, dtype=np.uint8)
    seed[[F.zero, F.one, 2]] = 1
    out = kernels.closure(np.stack([F.add, F.mul]), seed)
    assert out.all()


def test_closure_of_prime_ring(backend):
    R = ring_product([ring_zmod(2), ring_gf(2, deg=2)])
    seed = np.zeros(R.order, dtype=np.uint8)
    seed[[R.zero, R.one]] = 1
    assert int(kernels.closure(np.stack([R.add, R.mul]), seed).sum()) == 2


def test_lattice_kernels(backend):
    assert is_distributive(divisor_lattice(60))
    assert not is_distributive(pentagon())
    assert sorted(left_modular_elements(pentagon())) == ["0", "1", "a", "b"]


def _leq(L: FiniteLattice) -> np.ndarray:
    return L.leq.astype(np.uint8)


@settings(max_examples=80, deadline=None)
@given(lattices(max_ground=5, max_sets=10))
def test_backends_agree_on_lattices(L):
    impls = list(kernels.backends().values())
    ref = impls[0]
    j0, m0, _ = ref.join_meet(_leq(L))
    for impl in impls[1:]:
        j, m, _ = impl.join_meet(_leq(L))
        assert np.array_equal(j, j0) and np.array_equal(m, m0)
        idx = np.arange(len(L))
        assert impl.distributive(j0, m0, idx) == ref.distributive(j0, m0, idx)
        assert np.array_equal(impl.left_modular_elements(j0, m0, _leq(L)), ref.left_modular_elements(j0, m0, _leq(L)))


@settings(max_examples=80, deadline=None)
@given(st.sampled_from([(2, 1), (2, 2), (2, 3), (3, 2), (5, 1)]), st.sets(st.integers(0, 24), max_size=3))
def test_backends_agree_on_closure(field, extra):
    p, d = field
    F = ring_product([ring_gf(p, deg=d), ring_zmod(4)])
    seed = np.zeros(F.order, dtype=np.uint8)
    seed[[F.zero, F.one, *(x % F.order for x in extra)]] = 1
    tables = np.stack([F.add, F.mul]).astype(np.int32)
    outs = [impl.closure(tables, seed) for impl in kernels.backends().values()]
    assert all(np.array_equal(o, outs[0]) for o in outs)
