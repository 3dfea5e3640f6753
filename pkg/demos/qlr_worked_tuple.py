"""The q-Littlewood-Richardson coefficient of the tuple (2/1, 33/11, 33/21) at (4,3,1).

We compute it twice: once by summing q^invi over nonzero restricted square
strict tableaux, once by expanding the LLT polynomial into Schur functions.
"""

import json
from pathlib import Path

from ribbon_llt.llt import SkewTuple, qlr_coefficients, qlr_oracle, tuple_descent_data
from ribbon_llt.rsst import enumerate_rsst, rsst_statistics, sqread

data = json.loads((Path(__file__).parent / "data" / "worked_tuple.json").read_text())
beta = SkewTuple.from_outer_inner([d["outer"] for d in data], [d["inner"] for d in data])
lam = (4, 3, 1)

c, des, desi_ = tuple_descent_data(beta)
print("content vector  ", " ".join(map(str, c)))
print("Des_3 pairs     ", sorted(des))
print("Desi_3 multiset ", sorted(desi_.elements()))

print("\nnonzero RSST of shape", lam)
for t in enumerate_rsst(lam, contents=c, desi=desi_, nonzero=True):
    rows = [[v for v in r if v is not None] for r in t.rows()]
    print(f"  rows {rows}  sqread {''.join(map(str, sqread(t)))}  invi {rsst_statistics(t)[1]}")

print("\nby tableaux:", qlr_coefficients(beta, lam)[lam])
print("by Schur expansion:", qlr_oracle(beta)[lam])
