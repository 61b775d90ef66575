"""Group and field-side lattices: subgroup lattices and finite-field towers."""
from __future__ import annotations

from catena.galois.catalog import (
    alternating,
    catalog,
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    is_isomorphic_group,
    named,
    semidirect_cyclic,
    special_linear_2_3,
    symmetric,
)
from catena.galois.field import (
    FieldTower,
    big_omega,
    check_d_lattice,
    d_lattice,
    field_tower,
    minimal_poly,
    poly_to_json,
)
from catena.galois.group import (
    FiniteGroup,
    SubgroupLattice,
    check_group_lattice,
    is_supersolvable_group,
    normal_subgroups,
    subgroup_lattice,
)

__all__ = [
    "FieldTower",
    "FiniteGroup",
    "SubgroupLattice",
    "alternating",
    "big_omega",
    "catalog",
    "check_d_lattice",
    "check_group_lattice",
    "cyclic",
    "d_lattice",
    "dicyclic",
    "dihedral",
    "direct_product",
    "field_tower",
    "is_isomorphic_group",
    "is_supersolvable_group",
    "minimal_poly",
    "named",
    "normal_subgroups",
    "poly_to_json",
    "semidirect_cyclic",
    "special_linear_2_3",
    "subgroup_lattice",
    "symmetric",
]
