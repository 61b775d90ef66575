from __future__ import annotations

import pytest

import oracles
from catena.errors import ParseError, SizeLimitExceeded
from catena.galois import (
    FiniteGroup,
    big_omega,
    catalog,
    check_d_lattice,
    check_group_lattice,
    cyclic,
    d_lattice,
    dihedral,
    direct_product,
    field_tower,
    is_supersolvable_group,
    minimal_poly,
    named,
    normal_subgroups,
    poly_to_json,
    subgroup_lattice,
    symmetric,
)
from catena.lattice import divisor_lattice, dual, is_graded, is_isomorphic, is_supersolvable, length

SMALL_GROUPS = [G for G in catalog() if G.order <= 12]


# -- groups -------------------------------------------------------------------------------------


def test_catalog_is_complete():
    # number of groups of each order 1..24 up to isomorphism
    counts = [1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15]
    got = [sum(1 for G in catalog() if G.order == n) for n in range(1, 25)]
    assert got == counts and len(catalog()) == 74


def test_permutation_input():
    S4 = FiniteGroup(4, [[2, 1, 3, 4], [2, 3, 4, 1]])
    assert S4.order == 24
    with pytest.raises(ParseError):
        FiniteGroup(3, [[1, 1, 2]])


def test_cyclic_12_subgroups():
    SL = subgroup_lattice(cyclic(12))
    assert len(SL.lattice) == 6 and is_isomorphic(SL.lattice, divisor_lattice(12))
    assert length(SL.lattice).max_maximal == 3


def test_s3_subgroups():
    SL = subgroup_lattice(symmetric(3))
    assert len(SL.lattice) == 6 and is_graded(SL.lattice).graded
    assert sorted(SL.orders()) == [1, 2, 2, 2, 3, 6]


def test_trivial_group():
    assert len(subgroup_lattice(cyclic(1)).lattice) == 1


def test_supersolvable_examples():
    assert is_supersolvable_group(symmetric(3))
    assert not is_supersolvable_group(symmetric(4))
    assert is_supersolvable_group(direct_product(cyclic(2), cyclic(6)))


def test_s4_and_d4():
    s4 = check_group_lattice(symmetric(4))
    assert (s4.supersolvable_group, s4.graded) == (False, False) and s4.ok
    assert not is_supersolvable(subgroup_lattice(symmetric(4)).lattice)
    d4 = check_group_lattice(dihedral(4))
    assert (d4.supersolvable_group, d4.graded) == (True, True) and d4.ok
    assert named("D4").order == 8


def test_z12_length_is_exponent_sum():
    rep = check_group_lattice(cyclic(12))
    assert rep.supersolvable_group and rep.graded and rep.length == 3 == big_omega(12)


def test_group_cap():
    with pytest.raises(SizeLimitExceeded):
        subgroup_lattice(symmetric(4), cap=12)


@pytest.mark.parametrize("G", SMALL_GROUPS, ids=[G.name for G in SMALL_GROUPS])
def test_subgroups_and_supersolvability_match_brute_force(G):
    SL = subgroup_lattice(G)
    got = {frozenset(i for i in range(G.order) if m >> i & 1) for m in SL.masks}
    assert got == set(oracles.subgroups(G.mul))
    assert is_supersolvable_group(G) == oracles.supersolvable_group(G.mul)


def test_normal_subgroups_of_s3():
    assert sorted(bin(m).count("1") for m in normal_subgroups(symmetric(3))) == [1, 3, 6]


def test_catalog_reports_pass():
    for G in catalog():
        rep = check_group_lattice(G)
        assert rep.ok, (G.name, rep.checks)
        assert rep.supersolvable_group == rep.graded


# -- field towers ---------------------------------------------------------------------------------------


def test_minimal_poly_of_generator_is_modulus():
    T = field_tower(2, 2)
    assert poly_to_json(T, minimal_poly(T, 1)) == T.modulus == [1, 1, 1]


def test_minimal_poly_over_whole_field_is_linear():
    T = field_tower(2, 4)
    f = minimal_poly(T, 4)
    assert len(f) == 2 and f[1] == T.one and T.add(f[0], T.x) == T.zero


def test_minimal_poly_over_f4_in_f16():
    T = field_tower(2, 4)
    f = minimal_poly(T, 2)
    assert len(f) == 3 and all(T.in_subfield(c, 2) for c in f)


@pytest.mark.parametrize("p, n", [(2, 4), (2, 6), (2, 12), (3, 4), (5, 3), (7, 2)])
def test_d_lattice_reverses_divisor_lattice(p, n):
    T = field_tower(p, n)
    rep = check_d_lattice(T)
    assert rep.ok and rep.length == big_omega(n)
    assert is_isomorphic(d_lattice(T), dual(divisor_lattice(n)))


def test_d_lattice_sizes():
    assert len(d_lattice(field_tower(2, 12))) == 6
    assert len(d_lattice(field_tower(2, 7))) == 2  # prime degree: a two-element chain
    assert length(d_lattice(field_tower(2, 6))).max_maximal == 2  # n = pq
