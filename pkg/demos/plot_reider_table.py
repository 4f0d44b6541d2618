"""
Numerical Reider divisors
=========================

If the adjoint bundle fails to separate a scheme, some divisor D has
D^2 < 1 and 0 < D.H <= D^2 + C_X + l'. On a smooth surface the pairs are
integers; a singular surface allows denominators up to the lattice bound.
"""

from fractions import Fraction

from reider import reider_table


def show(pairs):
    return " ".join(f"({x}, {y})" for x, y in pairs)


t = reider_table(0, 2, 0, h_sq=10)
print("l' =", t.l_prime, "pairs:", show(t.pairs))

# half-integral pairs on a surface with A1 points
t = reider_table(0, 1, 0, h_sq=17, denom=2)
print(len(t.pairs), "pairs, e.g.", show(t.pairs[:4]))

# with the cone constant the table is still finite
t = reider_table(Fraction(19, 4), 1, 0, h_sq=64, denom=3)
print(len(t.pairs), "pairs, hypothesis", t.hypothesis_ok)
