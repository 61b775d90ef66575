"""Finite commutative rings, their extensions and intermediate subrings."""
from __future__ import annotations

from catena.rings.constructors import (
    FiniteModule,
    corner_ring,
    free_module,
    idealization_embedding,
    quotient_with_map,
    restrict_scalars,
    ring_from_subring,
    ring_from_tables,
    ring_gf,
    ring_idealization,
    ring_poly_quotient,
    ring_product,
    ring_quotient,
    ring_zmod,
)
from catena.rings.extension import (
    RingExtension,
    contract,
    enumerate_ideals,
    enumerate_subrings,
    idealize_extension,
    localize_at,
    maximal_ideals,
    msupp,
    product_extension,
    project_subring,
    quotient_extension,
    residue_extension,
    shared_ideals,
    spec,
    subalgebra_generated,
    support,
)
from catena.rings.ring import (
    DEFAULT_CAP,
    FiniteCommRing,
    Ideal,
    ResidueField,
    Subring,
    conductor,
    ideal_generated,
    ideal_product,
    is_ideal,
    make_ideal,
    nilradical,
    residue_field,
)
from catena.rings.spec import build_extension, build_ring, extension_spec

__all__ = [
    "DEFAULT_CAP",
    "FiniteCommRing",
    "FiniteModule",
    "Ideal",
    "ResidueField",
    "RingExtension",
    "Subring",
    "build_extension",
    "build_ring",
    "conductor",
    "contract",
    "corner_ring",
    "enumerate_ideals",
    "enumerate_subrings",
    "extension_spec",
    "free_module",
    "ideal_generated",
    "ideal_product",
    "idealization_embedding",
    "idealize_extension",
    "is_ideal",
    "localize_at",
    "make_ideal",
    "maximal_ideals",
    "msupp",
    "nilradical",
    "product_extension",
    "project_subring",
    "quotient_extension",
    "quotient_with_map",
    "residue_extension",
    "residue_field",
    "restrict_scalars",
    "ring_from_subring",
    "ring_from_tables",
    "ring_gf",
    "ring_idealization",
    "ring_poly_quotient",
    "ring_product",
    "ring_quotient",
    "ring_zmod",
    "shared_ideals",
    "spec",
    "subalgebra_generated",
    "support",
]
