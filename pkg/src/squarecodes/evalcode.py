"""Generator matrices, Schur squares, and exact minimum-distance oracles.

A monomial set A over (q, m) spans the evaluation code
    C_A = { (f(P))_{P in F_q^m} : f in span{X^a : a in A} },
with one matrix row per exponent vector (in the set's lexicographic order)
and one column per grid point (in enumerate_points order).  All bulk work
happens on numpy arrays of element indices, combined through the dense field
tables — there is no floating point anywhere in this module.

Two exact distance routes are provided and kept deliberately distinct:

* ``min_distance_exhaustive`` walks every projective message class
  (first nonzero coordinate fixed to 1), in deterministic blocks.
* ``exact_min_distance`` uses the same walk when it fits the budget and
  otherwise enumerates the dual code and converts its exact weight
  distribution through the MacWilliams identity (integer arithmetic only).
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from itertools import product

import numpy as np

from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    EmptySet,
    MismatchedFields,
    SupportOutsideA,
)
from .expsets import ExpVec, MonomialSet
from .gf import FieldSpec, enumerate_points, field

DEFAULT_CLASS_BUDGET = 10**7
BUDGET_ENV_VAR = "SQUARECODES_BUDGET"
GENMAT_BUDGET = 1 << 26  # cap on matrix entries materialized at once
_BLOCK_ROWS = 1 << 16  # codewords per numpy block in exhaustive walks


def resolve_budget(budget: int | None = None) -> int:
    """Explicit argument beats the SQUARECODES_BUDGET env var beats 10**7."""
    if budget is not None:
        return budget
    env = os.environ.get(BUDGET_ENV_VAR)
    if env:
        return int(env)
    return DEFAULT_CLASS_BUDGET


@dataclass
class GeneratorMatrix:
    """Rows of evaluated monomials; ``rows[i, j]`` is an element index."""

    field: FieldSpec
    m: int
    rows: np.ndarray
    exponents: tuple[ExpVec, ...] | None = None

    @property
    def k(self) -> int:
        return self.rows.shape[0]

    @property
    def n(self) -> int:
        return self.rows.shape[1]

    def _check_compatible(self, other: "GeneratorMatrix") -> None:
        if self.field != other.field:
            raise MismatchedFields(
                f"codes live over GF({self.field.q}) and GF({other.field.q})"
            )
        if self.n != other.n:
            raise DimensionMismatch(f"code lengths differ: {self.n} vs {other.n}")


def generator_matrix(A: MonomialSet, budget: int | None = None) -> GeneratorMatrix:
    """Evaluate every monomial of A over the full grid.

    Unreduced exponents are fine: evaluation applies x^q = x pointwise, which
    is exactly what makes reduce_set row-space preserving (and testable).
    """
    F = field(A.q)
    n = F.q ** A.m
    if n * max(len(A), 1) > GENMAT_BUDGET:
        raise BudgetExceeded(
            f"materializing {len(A)} rows of length {n} exceeds {GENMAT_BUDGET} entries"
        )
    tab = F.tables()
    # column j of the grid: index of the point's j-th coordinate
    axis = [
        (np.arange(n, dtype=np.int64) // F.q ** (A.m - 1 - j)) % F.q for j in range(A.m)
    ]
    rows = np.empty((len(A), n), dtype=tab.mul.dtype)
    for r, vec in enumerate(A):
        row = np.ones(n, dtype=tab.mul.dtype)
        for j, e in enumerate(vec):
            if e:
                row = tab.mul[row, F.power_column(e)[axis[j]]]
        rows[r] = row
    return GeneratorMatrix(F, A.m, rows, exponents=A.exponents)


# ---------------------------------------------------------------------------
# row reduction
# ---------------------------------------------------------------------------

def rref(rows: np.ndarray, F: FieldSpec) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over F; returns (nonzero rows, pivot columns)."""
    tab = F.tables()
    R = np.array(rows, dtype=tab.mul.dtype, copy=True)
    if R.ndim != 2:
        raise DimensionMismatch("expected a 2-d matrix")
    k, n = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == k:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            R[[r, i]] = R[[i, r]]
        R[r] = tab.mul[tab.inv[R[r, c]], R[r]]
        col = R[:, c].copy()
        col[r] = 0
        mask = col != 0
        if mask.any():
            R[mask] = tab.add[R[mask], tab.mul[tab.neg[col[mask]][:, None], R[r][None, :]]]
        pivots.append(c)
        r += 1
    return R[:r], pivots


def rank(G: GeneratorMatrix) -> int:
    return rref(G.rows, G.field)[0].shape[0]


def row_space_equal(G1: GeneratorMatrix, G2: GeneratorMatrix) -> bool:
    """Exact row-space equality via canonical reduced echelon forms."""
    G1._check_compatible(G2)
    R1, _ = rref(G1.rows, G1.field)
    R2, _ = rref(G2.rows, G2.field)
    return R1.shape == R2.shape and bool(np.array_equal(R1, R2))


def dual_matrix(G: GeneratorMatrix) -> GeneratorMatrix:
    """A generator matrix of the dual code (standard construction from rref)."""
    F = G.field
    tab = F.tables()
    R, pivots = rref(G.rows, F)
    n = G.n
    free = [c for c in range(n) if c not in set(pivots)]
    H = np.zeros((len(free), n), dtype=tab.mul.dtype)
    for t, fcol in enumerate(free):
        H[t, fcol] = 1
        for i, pcol in enumerate(pivots):
            H[t, pcol] = tab.neg[R[i, fcol]]
    return GeneratorMatrix(F, G.m, H)


def schur_square_matrix(G: GeneratorMatrix, budget: int | None = None) -> GeneratorMatrix:
    """Basis of the span of all componentwise products of row pairs."""
    k = G.k
    if k == 0:
        raise EmptySet("square of a zero code")
    pairs = k * (k + 1) // 2
    if pairs * G.n > GENMAT_BUDGET:
        raise BudgetExceeded(
            f"{pairs} product rows of length {G.n} exceed {GENMAT_BUDGET} entries"
        )
    tab = G.field.tables()
    ii, jj = np.triu_indices(k)
    P = tab.mul[G.rows[ii], G.rows[jj]]
    R, _ = rref(P, G.field)
    return GeneratorMatrix(G.field, G.m, R)


# ---------------------------------------------------------------------------
# exhaustive oracles
# ---------------------------------------------------------------------------

def _span_blocks(rows: np.ndarray, F: FieldSpec, n: int):
    """Yield the span of ``rows`` as arrays of at most ~_BLOCK_ROWS codewords.

    Deterministic: coefficient tuples are enumerated in lexicographic order,
    leading rows slowest, so concatenating all blocks always gives the same
    sequence regardless of block size.
    """
    tab = F.tables()
    q = F.q
    k = rows.shape[0]
    tail = 0
    while tail < k and q ** (tail + 1) <= _BLOCK_ROWS:
        tail += 1
    S = np.zeros((1, n), dtype=tab.mul.dtype)
    for row in rows[k - tail:][::-1]:
        parts = [S] + [tab.add[S, tab.mul[c, row][None, :]] for c in range(1, q)]
        S = np.concatenate(parts, axis=0)
    if k == tail:
        yield S
        return
    for combo in product(range(q), repeat=k - tail):
        v = np.zeros(n, dtype=tab.mul.dtype)
        for c, row in zip(combo, rows[: k - tail]):
            if c:
                v = tab.add[v, tab.mul[c, row]]
        yield tab.add[v[None, :], S]


def _projective_weight_counts(G: GeneratorMatrix) -> np.ndarray:
    """Weight histogram over one representative per projective message class."""
    tab = G.field.tables()
    counts = np.zeros(G.n + 1, dtype=np.int64)
    for i in range(G.k):
        head = G.rows[i]
        for block in _span_blocks(G.rows[i + 1:], G.field, G.n):
            w = np.count_nonzero(tab.add[head[None, :], block], axis=1)
            counts += np.bincount(w, minlength=G.n + 1)
    return counts


def _check_class_budget(q: int, k: int, budget: int | None) -> int:
    classes = (q**k - 1) // (q - 1)
    cap = resolve_budget(budget)
    if classes > cap:
        raise BudgetExceeded(
            f"(q^k - 1)/(q - 1) = {classes} message classes exceed the budget {cap}"
        )
    return classes


def min_distance_exhaustive(G: GeneratorMatrix, budget: int | None = None) -> int:
    """Minimum weight over all nonzero codewords, by projective enumeration.

    Scalar multiples share a weight, so only messages whose first nonzero
    coordinate is 1 are expanded: (q^k - 1)/(q - 1) classes, checked against
    the budget before any allocation.
    """
    if G.k == 0:
        raise EmptySet("the zero code has no minimum distance")
    _check_class_budget(G.field.q, G.k, budget)
    counts = _projective_weight_counts(G)
    nz = np.nonzero(counts[1:])[0]
    if nz.size == 0:
        raise EmptySet("all codewords are zero (zero generator matrix)")
    return int(nz[0]) + 1


def weight_distribution_exhaustive(
    G: GeneratorMatrix, budget: int | None = None
) -> list[int]:
    """Exact weight distribution [A_0, ..., A_n] of the code spanned by G.

    Row-reduces first so each codeword corresponds to exactly one message of
    the basis; each projective class then stands for q-1 codewords.
    """
    F = G.field
    basis, _ = rref(G.rows, F)
    B = GeneratorMatrix(F, G.m, basis)
    dist = [0] * (G.n + 1)
    dist[0] = 1
    if B.k == 0:
        return dist
    _check_class_budget(F.q, B.k, budget)
    counts = _projective_weight_counts(B)
    for w in range(G.n + 1):
        dist[w] += int(counts[w]) * (F.q - 1)
    return dist


def macwilliams_transform(dist: list[int], n: int, q: int) -> list[int]:
    """Weight distribution of the dual code, exactly (Krawtchouk sums).

    ``dist`` must be the full distribution of a code C of size sum(dist);
    the result is the distribution of the dual, integer-exact (the division
    by |C| is asserted to be exact).
    """
    size = sum(dist)
    out = []
    for j in range(n + 1):
        total = 0
        for w, aw in enumerate(dist):
            if aw == 0:
                continue
            kraw = 0
            for s in range(min(j, w) + 1):
                term = (q - 1) ** (j - s) * math.comb(w, s) * math.comb(n - w, j - s)
                kraw += -term if s & 1 else term
            total += aw * kraw
        assert total % size == 0, "MacWilliams sum not divisible by |C|"
        out.append(total // size)
    return out


def exact_min_distance(G: GeneratorMatrix, budget: int | None = None) -> int:
    """Exact minimum distance by whichever exhaustive route fits the budget.

    Direct projective enumeration when (q^k - 1)/(q - 1) is within budget;
    otherwise the dual code is enumerated and the distribution pushed back
    through the MacWilliams identity.  Raises BudgetExceeded when neither
    side fits.
    """
    F = G.field
    basis, _ = rref(G.rows, F)
    k = basis.shape[0]
    if k == 0:
        raise EmptySet("the zero code has no minimum distance")
    q = F.q
    cap = resolve_budget(budget)
    if (q**k - 1) // (q - 1) <= cap:
        return min_distance_exhaustive(GeneratorMatrix(F, G.m, basis), budget=cap)
    kd = G.n - k
    if (q**kd - 1) // (q - 1) <= cap:
        H = dual_matrix(G)
        dual_dist = weight_distribution_exhaustive(H, budget=cap)
        primal = macwilliams_transform(dual_dist, G.n, q)
        for w in range(1, G.n + 1):
            if primal[w]:
                return w
        raise AssertionError("nonzero code with empty weight distribution")  # pragma: no cover
    raise BudgetExceeded(
        f"neither k = {k} nor n - k = {kd} fits the class budget {cap}"
    )


# ---------------------------------------------------------------------------
# witness evaluation
# ---------------------------------------------------------------------------

def evaluate_poly(poly: dict[ExpVec, int], q: int, m: int) -> np.ndarray:
    """Evaluate a sparse polynomial (exponent -> coefficient index) on the grid."""
    F = field(q)
    tab = F.tables()
    n = q**m
    acc = np.zeros(n, dtype=tab.mul.dtype)
    support = sorted(exp for exp, c in poly.items() if c)
    if not support:
        return acc
    rows = generator_matrix(MonomialSet(q, m, support)).rows
    for i, exp in enumerate(support):
        acc = tab.add[acc, tab.mul[poly[exp], rows[i]]]
    return acc


def weight_of_witness(poly, A: MonomialSet) -> int:
    """Hamming weight of the codeword of C_A given by the polynomial ``poly``.

    Accepts a sparse dict {exponent vector: coefficient index} or any witness
    object exposing to_polynomial().  Every monomial with a nonzero
    coefficient must lie in A — that is what makes the evaluation a codeword
    of C_A — otherwise SupportOutsideA names the offending exponent.
    """
    if hasattr(poly, "to_polynomial"):
        poly = poly.to_polynomial()
    support = [exp for exp, c in poly.items() if c]
    if not support:
        raise EmptySet("the zero polynomial is not a distance witness")
    for exp in sorted(support):
        if exp not in A:
            raise SupportOutsideA(f"witness monomial {exp} lies outside the support set")
    values = evaluate_poly(poly, A.q, A.m)
    return int(np.count_nonzero(values))
