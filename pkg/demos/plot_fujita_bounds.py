"""
Powers of an ample bundle that are globally generated
=====================================================

m(C_X, l) minimizes over splittings l = l1 + l2; the power a = ceil(m')
is then fed back through the vanishing hypotheses.
"""

from fractions import Fraction

from reider import check_general_vanishing, compare_m_forms, fujita_power, m, m_prime

for c_x in [0, Fraction(1, 2), 1, Fraction(19, 4)]:
    row = [fujita_power(c_x, l).a for l in range(6)]
    print(f"C_X={str(c_x):>5}  a for l=0..5: {row}")

print("m'(1,0) =", m_prime(1, 0), "while m(1,0) =", m(1, 0))

# the special case: H^2 = 4 is not strictly above 4 C_X
for c in check_general_vanishing(4, 2, 1, 0).failed_conditions:
    print("fails:", c.name, c.lhs, c.relation, c.rhs)

# the shorter three-term expression overshoots sometimes
for d in compare_m_forms([0], 12):
    print(f"l={d.l}: m={d.m} closed form={d.closed}")

# m(0, l) stays close to 4l/3
print(max(abs(m(0, l) - Fraction(4 * l, 3)) for l in range(301)))
