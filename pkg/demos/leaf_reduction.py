"""J_(3,3) with row flags (6,6), reduced in Lam's algebra.

The noncommutative flagged Schur function has many monomials, but modulo the
relations of Lam's algebra (k = 3) it collapses to five classes, each with
coefficient one.  Each class is named by a word in it.
"""

from ribbon_llt.golden import LEAF_WORDS
from ribbon_llt.ncsf import FlagSpec, flagged_schur, flagged_schur_lam, reduce_sum_lam

spec = FlagSpec.flagged((3, 3), (6, 6))
free = flagged_schur(spec)
print("monomials in the free algebra:", len(free))

reduced = flagged_schur_lam(spec, 3)
print("classes after reduction:", len(reduced))
print("matches the sum of the leaf words:", reduced == reduce_sum_lam(LEAF_WORDS, 3))
for w in LEAF_WORDS:
    print("  ", "".join(map(str, w)))
