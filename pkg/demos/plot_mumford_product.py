"""
Intersecting curves through a singular point
=============================================

Classes on a normal surface are written on the minimal resolution by their
proper-transform coordinates. The product corrects them by exceptional
curves so they meet every exceptional curve in zero.
"""

from fractions import Fraction

from reider import SurfaceLattice, denominator_bound, mumford_product, mumford_pullback

# An A1 node: a curve C through the node, resolved by a (-2)-curve E with C.E = 1
a1 = SurfaceLattice([[0, 1], [1, -2]], exceptional_blocks=[[1]], ample=[2, 1])

pb = mumford_pullback([1, 0], a1)
print("pullback of C:", *pb.coords)          # 1 1/2
print("C.C =", mumford_product([1, 0], [1, 0], a1))

# Products only have denominators dividing |det| of the exceptional blocks
print("denominator bound:", denominator_bound(a1))

# The cone over a plane cubic: E^2 = -3, and a ruling picks up a third
cone = SurfaceLattice([[0, 1], [1, -3]], exceptional_blocks=[[1]], ample=[3, 1])
print("ruling squared:", mumford_product([1, 0], [1, 0], cone))

# bilinear in both arguments
half = [Fraction(1, 2), 0]
print("(C/2).(C/2) =", mumford_product(half, half, a1))
