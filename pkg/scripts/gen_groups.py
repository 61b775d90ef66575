"""Regenerate src/catena/data/groups.json: one group per isomorphism type of
order <= 24.

Every group of order <= 24 is solvable, so it has a normal subgroup N of
prime index p and is generated by N and one element g with g^p in N. The
search therefore builds all groups of order n from the groups of order n/p
by trying every automorphism phi of N (conjugation by g) and every n0 in N
(the value of g^p). Isomorphic results are merged; each class is then named
by matching it against explicit constructions (which also supply small
permutation representations).
"""
import json
from pathlib import Path

from catena.galois.catalog import (
    alternating,
    automorphisms,
    cyclic,
    cyclic_extension_table,
    dicyclic,
    dihedral,
    direct_product,
    is_isomorphic_group,
    matrix_group,
    semidirect_cyclic,
    special_linear_2_3,
    symmetric,
)
from catena.galois.group import FiniteGroup

LIMIT = 24
# number of groups of each order 1..24 (a standard table), used as a sanity check
KNOWN_COUNTS = [1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15]


def named_constructions() -> list[FiniteGroup]:
    C = cyclic
    out = [C(n) for n in range(1, LIMIT + 1)]
    out += [
        direct_product(C(2), C(2)),
        direct_product(C(2), C(4)),
        direct_product(C(2), C(2), C(2)),
        direct_product(C(3), C(3)),
        direct_product(C(2), C(6)),
        direct_product(C(4), C(4)),
        direct_product(C(2), C(8)),
        direct_product(C(2), C(2), C(4)),
        direct_product(C(2), C(2), C(2), C(2)),
        direct_product(C(3), C(6)),
        direct_product(C(2), C(10)),
        direct_product(C(2), C(12)),
        direct_product(C(2), C(2), C(6)),
        symmetric(3),
        symmetric(4),
        alternating(4),
        special_linear_2_3(),
    ]
    out += [dihedral(n) for n in range(4, 13)]
    out += [
        dicyclic(2, "Q8"),
        dicyclic(3),
        dicyclic(4, "Q16"),
        dicyclic(5),
        dicyclic(6),
        semidirect_cyclic(8, 2, 3, "SD16"),
        semidirect_cyclic(8, 2, 5, "M16"),
        semidirect_cyclic(4, 4, 3, "C4:C4"),
        semidirect_cyclic(5, 4, 2, "F20"),
        semidirect_cyclic(7, 3, 2, "C7:C3"),
        semidirect_cyclic(3, 8, 2, "C3:C8"),
        matrix_group(5, [[[0, 1], [1, 0]], [[1, 0], [0, 4]], [[2, 0], [0, 2]]], "C4oD4"),
        direct_product(C(2), dihedral(4)),
        direct_product(C(2), dicyclic(2, "Q8")),
        direct_product(C(3), symmetric(3)),
        direct_product(C(3), dihedral(4)),
        direct_product(C(3), dicyclic(2, "Q8")),
        direct_product(C(4), symmetric(3)),
        direct_product(C(2), alternating(4)),
        direct_product(C(2), dicyclic(3)),
        direct_product(C(2), C(2), symmetric(3)),
    ]
    return out


def extension_search() -> dict[int, list[FiniteGroup]]:
    by_order: dict[int, list[FiniteGroup]] = {1: [cyclic(1)]}
    for n in range(2, LIMIT + 1):
        found: list[FiniteGroup] = []
        for p in sorted({q for q in range(2, n + 1) if n % q == 0 and all(q % r for r in range(2, q))}):
            for N in by_order[n // p]:
                auts = automorphisms(N)
                for phi in auts:
                    for n0 in range(N.order):
                        if phi[n0] != n0:
                            continue
                        table = cyclic_extension_table(N, phi, n0, p)
                        if table is None:
                            continue
                        G = FiniteGroup.from_table(table, cap=LIMIT)
                        if not any(is_isomorphic_group(G, H) for H in found):
                            found.append(G)
        by_order[n] = found
        print(f"order {n}: {len(found)} groups")
    return by_order


def main() -> None:
    by_order = extension_search()
    counts = [len(by_order[n]) for n in range(1, LIMIT + 1)]
    assert counts == KNOWN_COUNTS, counts
    names = named_constructions()
    leftovers = {16: "C2^2:C4", 18: "C3^2:C2", 24: "C3:D4"}
    groups = []
    for n in range(1, LIMIT + 1):
        for G in by_order[n]:
            match = next((H for H in names if is_isomorphic_group(G, H)), None)
            if match is None:
                name = leftovers.pop(n)
                rep = FiniteGroup(G.points, [[x + 1 for x in g] for g in G.generators], name)
            else:
                rep = match
            d = rep.to_json()
            d["order"] = n
            groups.append(d)
    assert not leftovers, leftovers
    seen = [g["name"] for g in groups]
    assert len(set(seen)) == len(seen), seen
    groups.sort(key=lambda d: (d["order"], d["name"]))
    out = Path(__file__).resolve().parents[1] / "src/catena/data/groups.json"
    doc = {"description": "one permutation group per isomorphism type, order <= 24", "groups": groups}
    out.write_text(json.dumps(doc, indent=1) + "\n")
    print(f"wrote {len(groups)} groups to {out}")


if __name__ == "__main__":
    main()
