"""
Where the twist and the type-O object have the same slope
=========================================================

At s = 1/2 with t^2 = 1/4 - (2l + C_X)/H^2 both L (x) I_Z and O_T - O_X
have degree zero, so their slopes agree. The Hodge lemma then limits which
(rank, c1) pairs can destabilize.
"""

from fractions import Fraction

from reider import (
    SearchWindow,
    SurfaceLattice,
    bridgeland_degree,
    ch_of_twist,
    ch_of_type_O,
    scaled_rank,
    slope_compare,
    standard_point,
    verify_lemma_hodge,
)

lat = SurfaceLattice([[25]], ample=[1])
l, c_x = 1, Fraction(0)
pt = standard_point(lat, l, c_x)
print("t^2 =", pt.t_sq)

twist, typo = ch_of_twist(lat, l), ch_of_type_O(l, lat)
for name, ch in [("twist", twist), ("type O", typo)]:
    print(name, "rank/t", scaled_rank(ch, pt), "degree", bridgeland_degree(ch, pt))
print(slope_compare(twist, typo, pt))

# exhaustive check of the lemma on a window
rep = verify_lemma_hodge(lat, c_x, l, SearchWindow.box(4, 10, lat.rank))
print("candidates", len(rep.candidates), "violations", len(rep.violations))

# a rank-two example with H^2 = 9
lat = SurfaceLattice([[1, 0], [0, -1]], ample=[3, 0])
rep = verify_lemma_hodge(lat, 0, 0, SearchWindow.box(3, 6, 2))
for c in rep.candidates:
    print(c.r, c.a, c.a_dot_h, c.a_sq)
print("passed:", rep.passed)
