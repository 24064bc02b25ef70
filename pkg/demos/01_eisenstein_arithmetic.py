"""
A tour of exact arithmetic in Z[w]
==================================

w is a primitive cube root of unity (w² + w + 1 = 0); the other root is
v = w² = -1 - w.  Everything below is exact integer arithmetic.
"""

from cubesum import BETA, UNITS, V, W, EisensteinInt, KElement

# the two roots multiply to 1 and sum to -1
print("w * v =", W * V)
print("w + v =", W + V)
print("w³    =", W**3)

# the six units, each of norm 1
print("units:", ", ".join(str(z) for z in UNITS))

# beta = w - v = 1 + 2w is the ramified element: beta² = -3
print("beta  =", BETA, "   beta² =", BETA**2, "   beta⁴ =", BETA**4)

# norms are non-negative integers, and multiplicative
x, y = EisensteinInt(3, 2), EisensteinInt(-2, 3)
print(f"N({x}) = {x.norm()},  N({y}) = {y.norm()},  N(product) = {(x*y).norm()}")

# the cube (1 - 2v)³ = 19w + v shows up in the 18w story later
print("(3+2*w)³ =", EisensteinInt(3, 2) ** 3)

# Euclidean division: the remainder norm is at most a third of the divisor's
l, m = EisensteinInt(5, 0), EisensteinInt(1, 3)
q, r = divmod(l, m)
print(f"{l} = ({q})·({m}) + {r}   with 3·N(r) = {3*r.norm()} <= N(m) = {m.norm()}")

# extended gcd gives Bezout coefficients
from cubesum import gcd_ext

g, a, b = gcd_ext(EisensteinInt(7, 0), EisensteinInt(1, 3))
print(f"gcd(7, 1+3w) = {g} = ({a})·7 + ({b})·(1+3w)")

# the fraction field Q(w): exact rationals with Eisenstein numerators
half = KElement(EisensteinInt(2, -3), 2)
print("((2-3w)/2)³ + ((-3-6w)/2)³ =", half**3 + KElement(EisensteinInt(-3, -6), 2) ** 3)
