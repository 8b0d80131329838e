"""Monomial evaluation codes from scratch.

A code C_A is built from a finite field F_q and a set A of exponent vectors:
evaluate every monomial X^a (a in A) at all q^m points of F_q^m and take the
row span.  This script builds a few small codes and finds their exact
minimum distances by projective enumeration.
"""

from squarecodes import evalcode
from squarecodes.expsets import MonomialSet, reduce_set, square_support
from squarecodes.gf import field

# --- a Reed-Solomon code, the m = 1 case -----------------------------------

F = field(7)
A = MonomialSet(7, 1, [(0,), (1,), (2,)])  # polynomials of degree <= 2
G = evalcode.generator_matrix(A)
print(f"RS over F_7, degree <= 2: n = {G.n}, k = {G.k}")
print("generator matrix:")
print(G.rows)
d = evalcode.min_distance_exhaustive(G)
print(f"exact minimum distance: {d}  (q - s = 7 - 2 = 5)")

# --- two variables ----------------------------------------------------------

A2 = MonomialSet(3, 2, [(0, 0), (1, 0), (0, 1), (1, 1)])
G2 = evalcode.generator_matrix(A2)
d2 = evalcode.min_distance_exhaustive(G2)
print(f"\nbilinear code over F_3: [{G2.n}, {G2.k}, {d2}]")

# --- exponents fold: x^q = x pointwise --------------------------------------

# (6,1) and (2,9) both reduce to (2,1) over F_5, so this "3-dimensional"
# set only spans a 2-dimensional code
A3 = MonomialSet(5, 2, [(6, 1), (2, 9), (2, 1)])
print(f"\nunreduced exponents {A3.exponents}")
print(f"reduce to {reduce_set(A3).exponents}")
print(f"rank of the evaluation matrix: {evalcode.rank(evalcode.generator_matrix(A3))}")

# --- the Schur square -------------------------------------------------------

# componentwise products of codewords span the code of the folded sum A + A
A4 = MonomialSet(5, 1, [(0,), (1,), (2,)])
G4 = evalcode.generator_matrix(A4)
sq = evalcode.schur_square_matrix(G4)
target = evalcode.generator_matrix(square_support(A4))
print(f"\nSchur square of RS(5, k=3): rank {sq.k}")
print(f"same row space as C_(A+A)? {evalcode.row_space_equal(sq, target)}")
print(f"square support: {square_support(A4).exponents}")
