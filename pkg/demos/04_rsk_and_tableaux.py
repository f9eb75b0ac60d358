"""
RSK, descents and two-row tableaux
==================================

Row insertion sends a permutation to a pair of tableaux whose descent sets are
those of the inverse and of the permutation itself; 321-avoiders are exactly
the permutations whose insertion tableau has at most two rows.
"""
from itertools import permutations

from catalan_blocks import Permutation, SkewShape, rotate_180, rsk, rsk_inverse, syt_enumerate
from catalan_blocks.perm_core import avoids, des_set, inverse
from catalan_blocks.tableaux import tab_des, tab_first_descent, tab_ldes

###############################################################################
# One insertion
# -------------

p = Permutation.parse("41263785")
P, Q = rsk(p)
print("P =", P, "   Des(P) =", tab_des(P), "  Des(p^-1) =", des_set(inverse(p)))
print("Q =", Q, "   Des(Q) =", tab_des(Q), "  Des(p)    =", des_set(p))
print("back:", rsk_inverse(P, Q))

###############################################################################
# Height and 321-avoidance over S_6
# ---------------------------------

agree = all((rsk(Permutation(w))[0].height < 3) == avoids(Permutation(w), Permutation.parse("321"))
            for w in permutations(range(1, 7)))
print("height < 3 <=> 321-avoiding on S_6:", agree)

###############################################################################
# A skew shape and its rotation
# -----------------------------

s = SkewShape.parse("(6,4)/(5,2)")
r = rotate_180(s, 7)
print(s, "->", r)
for t in syt_enumerate(s):
    print("  ", t)
for t in syt_enumerate(SkewShape.parse("(5,2)")):
    if tab_first_descent(t) == 3:
        print("first descent 3:", t)
    if tab_ldes(t) == 4:
        print("last descent 4: ", t)
