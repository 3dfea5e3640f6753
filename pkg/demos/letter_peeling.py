"""Check the letter-peeling identity in the rot-le quotient on small cases.

Peeling x off the front of an augmented flag should equal multiplying by x
on the left.  Multiplying on the right gives a different element, which the
checker catches.
"""

from ribbon_llt.conjecture import admissible_instances, check_letter_peeling, peeling_sides
from ribbon_llt.ncsf import FlagSpec, flagged_schur
from ribbon_llt.quotient import AlgebraElement, RelationSystem, equal_in_quotient

for t, top in ((0, 6), (1, 7)):
    insts = list(admissible_instances(t, top))
    ok = sum(check_letter_peeling(*i) for i in insts)
    print(f"t = {t}: {ok}/{len(insts)} instances hold")

m, n, x, y, a = 2, (5,), 3, (6,), 1
lhs, rhs = peeling_sides(m, n, x, y, a)
rot = RelationSystem("rot_le", 3)
print(f"\n(m, n, x, y, a) = {(m, n, x, y, a)}: {len(lhs)} and {len(rhs)} terms, equal in free algebra: {lhs == rhs}")
print("equal in rot-le:", equal_in_quotient(lhs, rhs, rot))

m, x, a = 2, 3, 1
lhs, _ = peeling_sides(m, (), x, (), a)
wrong = flagged_schur(FlagSpec.flagged((a, a), (m, m))) * AlgebraElement.from_word((x,))
print("right multiplication equals the left side:", equal_in_quotient(lhs, wrong, rot))
