"""Convex regions and the half-integer verifier.

Instead of checking (A+A)_q membership exponent by exponent, one can
describe A as the lattice points of a convex region C and verify a single
geometric condition: no half-integer point of C may fold outside the target
set.  The check is sufficient (never wrongly accepts) and runs over the
doubled grid only.
"""

from fractions import Fraction

from squarecodes.bounds import footprint_bound
from squarecodes.expsets import square_support
from squarecodes.families import (
    ConvexRegion,
    RationalHalfspace,
    algorithm1_verify,
    algorithm1_violation,
    check_square_designed,
    hyperbolic_set,
    region_lattice_points,
    wrm_even_witness,
)

q, d = 11, 6
B = hyperbolic_set(q, 2, d)

# --- the half-hyperbolic region: a product constraint ------------------------

C = ConvexRegion(2, (), None, product_bound=d)
print(f"product region (q - 2x)(q - 2y) >= {d}:")
print(f"  lattice points: {len(region_lattice_points(C, q))}")
print(f"  half-integer verification: {algorithm1_verify(C, B)}")

# --- the tilted staircase as a halfspace region ------------------------------

weights, bound = wrm_even_witness(q, d, "b1")
print(f"\nstaircase region: {weights[0]}*x + {weights[1]}*y <= {bound}")
W = ConvexRegion(2, (RationalHalfspace(weights, bound),), (0, q - 1))
A = region_lattice_points(W, q)
print(f"  lattice points: {len(A)}")
print(f"  half-integer verification: {algorithm1_verify(W, B)}")
print(f"  direct containment agrees: {check_square_designed(A, B)}")
print(f"  square fb = {footprint_bound(square_support(A))}")

# --- a region that fails, and its witness ------------------------------------

big = ConvexRegion(2, (RationalHalfspace((1, 1), Fraction(3 * (q - 1), 2)),), (0, q - 1))
t = algorithm1_violation(big, B)
print(f"\noversized region x + y <= {Fraction(3 * (q - 1), 2)}:")
print(f"  violation at doubled point {t}")
Abig = region_lattice_points(big, q)
print(f"  (and indeed: containment check says {check_square_designed(Abig, B)})")

# the verifier is one-sided: a failed region check does not always mean the
# lattice points misbehave, but an accepted one is always safe
