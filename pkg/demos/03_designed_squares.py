"""Codes whose Schur square has a designed minimum distance.

For secret sharing and multiparty computation one wants C_A of high
dimension while d(C_A^(2)) stays at least some d.  Since the square of a
monomial code is the code of the folded sum (A+A)_q, it suffices to keep
that sum inside the hyperbolic set Hyp_q(d) — the largest set whose
footprint bound is >= d.  Two constructions compete: the half-hyperbolic
set, and tilted weighted-degree staircases.
"""

from squarecodes.bounds import (
    best_wrm_square_design,
    footprint_bound,
    halfhyp_dimension_formula,
    params_report,
)
from squarecodes.expsets import square_support
from squarecodes.families import (
    check_square_designed,
    half_hyperbolic_set,
    hyperbolic_set,
    square_design_violation,
    wrm_even_optimal_set,
)

q, d = 11, 6
B = hyperbolic_set(q, 2, d)
print(f"target: Hyp_{q}({d}) with {len(B)} exponents, fb = {footprint_bound(B)}")

# the hyperbolic code itself is NOT square-designed...
v = square_design_violation(B, B)
print(f"Hyp's own square escapes at {v}: squares need smaller sets")

# --- half-hyperbolic: halve every coordinate ---------------------------------

H = half_hyperbolic_set(q, 2, d)
print(f"\nhalf-hyperbolic: k = {len(H)} (closed form {halfhyp_dimension_formula(q, d)})")
print(f"square inside Hyp({d})? {check_square_designed(H, B)}")
print(f"code distance d = {footprint_bound(H)} exactly (lower set)")

# --- the tilted staircase does better ----------------------------------------

W = wrm_even_optimal_set(q, d, "b1")
print(f"\ntilted staircase: k = {len(W)}, d = {footprint_bound(W)}")
print(f"square inside Hyp({d})? {check_square_designed(W, B)}")
print(f"square fb = {footprint_bound(square_support(W))}")

# --- one call does the whole comparison --------------------------------------

best = best_wrm_square_design(q, d)
rep = params_report(best, effort="certify")
print(f"\nbest staircase at (q={q}, d={d}): [{rep.n}, {rep.k}, {rep.d_exact}]")
print(f"vs half-hyperbolic dimension {halfhyp_dimension_formula(q, d)}")
print(f"staircase wins by {rep.k - halfhyp_dimension_formula(q, d)} dimensions")
