"""Vanishing of single cohomology slices.

At p = 7 the (13, 12) slice of C(4) is killed by the ranks on both sides.
At p = 5 the K(3) bound for H^(9,8) C(3) stays zero under truncation by v2^k
exactly while k <= 25.
"""
from chromverify.cohomology import MORAVA_K, CoefficientProfile, cohomology, morava_vanishing_bound
from chromverify.degrees import minimal_vq_exponent
from chromverify.exterior import ComplexParams

sl = cohomology(ComplexParams(7, 4), MORAVA_K, 13, 12)
print(f"p=7 n=4 (13,12): slice {sl.slice_dim}, rank in {sl.rank_in}, rank out {sl.rank_out}, H = {sl.dim}")

p53 = ComplexParams(5, 3)
print("p=5 n=3 K(3) bound at (9,8):", morava_vanishing_bound(p53, MORAVA_K, 9, 8))
for k in (1, 10, 25, 26, 27):
    bound = morava_vanishing_bound(p53, CoefficientProfile.truncated((1, k)), 9, 8)
    print(f"  truncated by v2^{k:<2} -> bound {bound}")
print("minimal invariant exponent of v2 at p=5:", minimal_vq_exponent(5, 3))
