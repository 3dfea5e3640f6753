"""Spin and inversion LLT polynomials differ by a single power of q.

For each k-tileable skew shape mu/nu we compute the spin-generating LLT
polynomial from ribbon tableaux and the inversion version from the k-quotient
tuple, then report the exponent e with inversion(q -> q^-2) = q^e * spin.
"""

from ribbon_llt.llt import spin_inv_exponent, tileable_pairs

for k in (2, 3):
    pairs = tileable_pairs(6, k)
    print(f"k = {k}: {len(pairs)} skew shapes")
    for mu, nu in pairs[:8]:
        print(f"  {mu}/{nu}: exponent {spin_inv_exponent(mu, nu, k)}")
