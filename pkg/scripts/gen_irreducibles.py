"""Regenerate src/catena/data/irreducible.json (lexicographically least
monic irreducible polynomial for every p^n <= 2^16, n >= 2)."""
import json
from pathlib import Path

from catena.polyfp import is_prime, lex_least_irreducible_search

LIMIT = 2**16


def main() -> None:
    table = {}
    for p in range(2, 257):
        if not is_prime(p):
            continue
        n = 2
        while p**n <= LIMIT:
            table[f"{p},{n}"] = lex_least_irreducible_search(p, n)
            n += 1
    out = Path(__file__).resolve().parents[1] / "src/catena/data/irreducible.json"
    doc = {"description": "monic irreducible over F_p, coefficients lowest degree first",
           "limit": LIMIT, "polynomials": table}
    out.write_text(json.dumps(doc, indent=0, sort_keys=True) + "\n")
    print(f"wrote {len(table)} polynomials to {out}")


if __name__ == "__main__":
    main()
