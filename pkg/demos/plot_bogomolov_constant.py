"""
How large the Bogomolov constant gets
=====================================

The estimate is driven by h^0 of the first direct image and by the
exceptional configuration. Rational double points contribute nothing, cones
over plane curves grow like d^3.
"""

from reider import cone_profile, cx_continuous, cx_integer
from reider.bogomolov import ade_profile

# cone over the plane cubic
p = cone_profile(3)
print("continuous:", cx_continuous(p).value)      # 19/4
est = cx_integer(p, r_cap=2)
print("integer:", est.value, est.method.value, "witness", est.witness)

# the integer search never exceeds the continuous envelope
for d in range(3, 9):
    p = cone_profile(d)
    c, i = cx_continuous(p).value, cx_integer(p, 2).value
    print(f"d={d:2d}  continuous {str(c):>8}  integer {str(i):>8}  c/d^3 {float(c) / d**3:.3f}")

# ADE configurations give zero both ways
for kind, n in [("A", 4), ("D", 5), ("E", 8)]:
    p = ade_profile(kind, n)
    print(kind + str(n), cx_continuous(p).value, cx_integer(p, 2).value)
