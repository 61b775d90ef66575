"""JSON recipes for rings and extensions.

Ring recipes::

    {"construct": "zmod", "n": 4}
    {"construct": "gf", "p": 2, "deg": 2}            # or "modulus": [1, 1, 1]
    {"construct": "poly_quotient", "base": {...}, "modulus": [0, 0, 1]}
    {"construct": "quotient", "base": {...}, "generators": [2]}
    {"construct": "product", "factors": [{...}, {...}]}
    {"construct": "idealization", "ring": {...}, "module": {"construct": "free", "rank": 2}}
    {"construct": "table", "add": [[...]], "mul": [[...]], "zero": 0, "one": 1}

An extension spec is ``{"S": <ring>, "R": {"generators": [...]}}``: R is the
subring of S generated by the listed element indices (the prime subring when
the list is empty or "R" is omitted). A bare ring recipe means the extension
of its prime subring.
"""
from __future__ import annotations

from typing import Any

from catena.errors import CatenaError, SpecError
from catena.rings.constructors import (
    free_module,
    ring_from_tables,
    ring_gf,
    ring_idealization,
    ring_poly_quotient,
    ring_product,
    ring_quotient,
    ring_zmod,
)
from catena.rings.extension import RingExtension, subalgebra_generated
from catena.rings.ring import FiniteCommRing, Subring, mask_of


def _need(recipe: dict, key: str):
    if key not in recipe:
        raise SpecError(f"recipe {recipe.get('construct')!r} needs the field {key!r}")
    return recipe[key]


def build_ring(recipe: dict[str, Any], cap: int | None = None) -> FiniteCommRing:
    if not isinstance(recipe, dict):
        raise SpecError("a ring recipe must be a JSON object")
    kind = recipe.get("construct")
    try:
        if kind == "zmod":
            return ring_zmod(int(_need(recipe, "n")), cap)
        if kind == "gf":
            return ring_gf(int(_need(recipe, "p")), recipe.get("modulus"), recipe.get("deg"), cap)
        if kind == "poly_quotient":
            base = build_ring(_need(recipe, "base"), cap)
            return ring_poly_quotient(base, list(_need(recipe, "modulus")), cap, var=recipe.get("var"))
        if kind == "quotient":
            base = build_ring(_need(recipe, "base"), cap)
            return ring_quotient(base, list(_need(recipe, "generators")), cap)
        if kind == "product":
            return ring_product([build_ring(f, cap) for f in _need(recipe, "factors")], cap)
        if kind == "idealization":
            R = build_ring(_need(recipe, "ring"), cap)
            module = _need(recipe, "module")
            if module.get("construct") != "free":
                raise SpecError("only free modules can be described in a recipe")
            return ring_idealization(R, free_module(R, int(_need(module, "rank"))), cap)
        if kind == "table":
            return ring_from_tables(
                _need(recipe, "add"), _need(recipe, "mul"), int(recipe.get("zero", 0)), int(recipe.get("one", 1)), cap
            )
    except CatenaError:
        raise
    except (TypeError, ValueError, IndexError) as exc:
        raise SpecError(f"bad {kind!r} recipe: {exc}") from exc
    raise SpecError(f"unknown ring construct {kind!r}")


def build_extension(spec: dict[str, Any], cap: int | None = None) -> RingExtension:
    if not isinstance(spec, dict):
        raise SpecError("an extension spec must be a JSON object")
    if "S" not in spec:
        spec = {"S": spec}
    S = build_ring(spec["S"], cap)
    gens = (spec.get("R") or {}).get("generators", [])
    if any(not isinstance(g, int) or not 0 <= g < S.order for g in gens):
        raise SpecError("generators must be element indices of S")
    base = subalgebra_generated(Subring(S, mask_of([S.zero, S.one])), gens)
    return RingExtension.from_subring(base)


def extension_spec(ext: RingExtension) -> dict[str, Any]:
    """A spec that rebuilds ``ext`` (R given by all of its elements as generators)."""
    return {"S": ext.S.recipe, "R": {"generators": list(ext.base.elements)}}
