"""
Schur expansions of the block-number level sets
===============================================

For each k, the descent-set generating function of the 321-avoiders with k
blocks expands positively in Schur functions.  Only two-row shapes appear, and
the coefficient of s_(n-m, m) counts tableaux of that shape with last descent
n - k.
"""
from catalan_blocks import Permutation, Shape, is_schur_positive, q_of, restricted_character_image
from catalan_blocks.verify import bl_level_sets, ldes_level_sets

n = 7

###############################################################################
# Expansions for n = 7
# --------------------

for k, level in bl_level_sets(n).items():
    cert = is_schur_positive(q_of(level, n))
    terms = " + ".join(f"{c} s{shape}" for shape, c in cert.expansion.coeffs.items())
    print(f"k={k}  |Bl|={len(level):3d}  positive={bool(cert)}  {terms}")

###############################################################################
# Agreement with a restricted character
# -------------------------------------
# For k < n the same vector is the restriction of the irreducible character of
# shape (n-1, n-k) down to S_n.

for k in range(1, n):
    same = q_of(bl_level_sets(n)[k]) == restricted_character_image(Shape((n - 1, n - k)), n)
    print(f"k={k}: equals restricted character image: {same}")

###############################################################################
# A single coefficient
# --------------------

cert = is_schur_positive(q_of(ldes_level_sets(7)[4]))
print("coefficient of s(5,2) for ldes(inverse) = 4:", cert.expansion[(5, 2)])

###############################################################################
# A set that is not Schur-positive
# --------------------------------

print(is_schur_positive(q_of([Permutation.parse("213")])).expansion)
