"""
Walking through the bijection
=============================

The map ``f_map`` sends a 321-avoiding permutation with k blocks to one whose
inverse has its last descent at n - k, and it keeps the positions of the
left-to-right maxima.  Here we follow it level by level on one permutation.
"""
from catalan_blocks import Permutation, block_number, f_inverse, f_map, inverse, ldes, ltr_set
from catalan_blocks.bijection import format_trace, trace

###############################################################################
# The starting permutation
# ------------------------

p = Permutation.parse("31254786")
print("p          =", p)
print("blocks     =", block_number(p))
print("Ltr(p)     =", ltr_set(p))

###############################################################################
# The trace
# ---------
# Going down, each level strips the largest letter (case A/B) or first swaps it
# with its predecessor (case C).  Going back up, the letter is put back and the
# values are relabelled through the listed cycle.

print(format_trace(trace(p)))

###############################################################################
# The image and what it keeps
# ---------------------------

s = f_map(p)
print("f(p)             =", s)
print("ldes(f(p)^-1)    =", ldes(inverse(s)), "= n - bl(p) =", p.n - block_number(p))
print("Ltr(f(p))        =", ltr_set(s))
print("f_inverse(f(p))  =", f_inverse(s))
