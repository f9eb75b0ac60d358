"""
Counting 321-avoiders by block number
=====================================

The number of 321-avoiding permutations of [n] with k blocks is the ballot
number C(n, k), which is also the number of 321-avoiders whose inverse has last
descent n - k and the number of standard tableaux of shape (n-1, n-k).
"""
from collections import Counter

from catalan_blocks import Permutation, Shape, ballot, block_number, enumerate_avoiders, inverse, ldes
from catalan_blocks.catalan import catalan_table
from catalan_blocks.tableaux import syt_count

S321 = Permutation.parse("321")

###############################################################################
# The ballot triangle
# -------------------

print(catalan_table(8).to_tsv())

###############################################################################
# Four ways to count
# ------------------

print("n  k  by-bl  by-ldes  SYT  ballot")
for n in range(1, 9):
    perms = list(enumerate_avoiders(n, S321))
    by_bl = Counter(block_number(p) for p in perms)
    by_ldes = Counter(n - ldes(inverse(p)) for p in perms)
    for k in range(1, n + 1):
        print(f"{n}  {k}  {by_bl[k]:5d}  {by_ldes[k]:7d}  {syt_count(Shape((n - 1, n - k))):3d}  {ballot(n, k):6d}")

###############################################################################
# Hilbert-series form
# -------------------
# The polynomial sum q^(n - bl) agrees with sum q^ldes over the same set.

from catalan_blocks.verify import hilbert_polynomials

for n in range(1, 9):
    a, b = hilbert_polynomials(n)
    print(n, a, "==", b, a == b)
