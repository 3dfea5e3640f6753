"""Square respecting readings of a restricted square strict tableau.

Arrow squares (a, a+1 / a+2, a+3 and friends) constrain the order in which
cells may be read.  Every reading that respects them gives the same element
of Lam's algebra; a reading that breaks a square need not.
"""

import json
from itertools import islice
from pathlib import Path

from ribbon_llt.quotient import canonical_form_lam
from ribbon_llt.rsst import Rsst, arrows, is_square_respecting, reading_words, sqread, validate_rsst

rows = json.loads((Path(__file__).parent / "data" / "arrow_tableau.json").read_text())["rows"]
t = Rsst.from_rows(rows)
print("valid RSST:", validate_rsst(t))

m = t.mapping
for tail, head, kind in arrows(t):
    print(f"  arrow {kind}: {m[tail]} -> {m[head]}")

w = sqread(t)
print("\nsqread:", " ".join(map(str, w)))
form = canonical_form_lam(w, 3)

same = all(canonical_form_lam(v, 3) == form for v in islice(reading_words(t), 200))
print("first 200 square respecting readings agree:", same)

# read the 5,6 and 3,4 block before 10,11: breaks a square
bad = tuple(int(s) for s in "15 12 10 13 11 20 18 19 26 5 6 3 4 1 16 17 25 32 34 36 31 33".split())
print("broken reading respects squares:", is_square_respecting(t, bad))
