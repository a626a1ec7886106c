"""Regenerate known_knots.json.

Values come from the reduced-Burau route and must match the hand-derived
polynomials below before anything is written.
"""

import json
from pathlib import Path

from gaussknot.alexander import alexander_reduced, alexander_thm2
from gaussknot.braid import parse_braid
from gaussknot.ring import LaurentPoly
from gaussknot.rt import universal_invariant

t = LaurentPoly.t()
KNOTS = {
    "unknot": ("1", 2, LaurentPoly.const(1)),
    "trefoil": ("1 1 1", 2, t ** -1 - 1 + t),
    "trefoil-b3": ("1 2 1 2", 3, t ** -1 - 1 + t),
    "figure-eight": ("1 -2 1 -2", 3, -(t ** -1) + 3 - t),
}

out = {}
for name, (word, n, hand) in KNOTS.items():
    beta = parse_braid(word, n)
    red = alexander_reduced(beta).poly
    assert red == hand, (name, red, hand)
    assert alexander_thm2(beta).poly == red, name
    out[name] = {
        "braid": word,
        "strands": n,
        "alexander": red.to_json(),
        "invariant_order8": universal_invariant(beta, 8).series.to_json(),
    }

path = Path(__file__).with_name("known_knots.json")
path.write_text(json.dumps(out, indent=2) + "\n")
print(f"wrote {path}")
