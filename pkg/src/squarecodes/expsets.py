"""Monomial exponent sets and the folding rule x^q = x.

A code in this package is described by a finite set A of exponent vectors:
the evaluation code spanned by the monomials X^a, a in A, over the full grid
F_q^m.  Because every field element satisfies x^q = x, an exponent i > 0 can
be folded to ((i-1) mod (q-1)) + 1 without changing the monomial as a
function; 0 stays 0 (x^0 and x^(q-1) differ at x = 0).  Sets therefore carry
an explicit ``reduced`` flag: reduced means every coordinate already lies in
[0, q-1].

Minkowski sums come up because the componentwise (Schur) product of two
codewords multiplies monomials, i.e. adds exponents:
``square_support(A) = reduce(A + A)`` is the support of the square code.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .errors import EmptySet, MismatchedAmbient, NotReduced, RangeError

ExpVec = tuple[int, ...]

MAX_VARS = 8


def reduce_exponent(i: int, q: int) -> int:
    """Fold one exponent by x^q = x: 0 -> 0, otherwise into [1, q-1]."""
    if i < 0:
        raise RangeError(f"exponents must be nonnegative, got {i}")
    if i == 0:
        return 0
    return (i - 1) % (q - 1) + 1


@dataclass(frozen=True)
class MonomialSet:
    """An ambient (q, m) plus a finite set of exponent vectors.

    Vectors are stored sorted lexicographically and deduplicated; the
    ``reduced`` flag records whether every coordinate is in [0, q-1].
    """

    q: int
    m: int
    exponents: tuple[ExpVec, ...]
    reduced: bool = dc_field(init=False)

    def __init__(self, q: int, m: int, exponents):
        if q < 2:
            raise RangeError(f"ambient order must be >= 2, got {q}")
        if not 1 <= m <= MAX_VARS:
            raise RangeError(f"number of variables must be in [1, {MAX_VARS}], got {m}")
        seen = set()
        for v in exponents:
            t = tuple(int(c) for c in v)
            if len(t) != m:
                raise RangeError(f"exponent vector {t} has length {len(t)}, expected {m}")
            if any(c < 0 for c in t):
                raise RangeError(f"exponent vector {t} has a negative coordinate")
            seen.add(t)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "exponents", tuple(sorted(seen)))
        object.__setattr__(self, "reduced", all(c <= q - 1 for v in seen for c in v))
        object.__setattr__(self, "_index", frozenset(seen))

    def __len__(self) -> int:
        return len(self.exponents)

    def __iter__(self):
        return iter(self.exponents)

    def __contains__(self, v) -> bool:
        return tuple(v) in self._index

    def same_ambient(self, other: "MonomialSet") -> None:
        if (self.q, self.m) != (other.q, other.m):
            raise MismatchedAmbient(
                f"ambients differ: (q={self.q}, m={self.m}) vs (q={other.q}, m={other.m})"
            )

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {"q": self.q, "m": self.m, "exponents": [list(v) for v in self.exponents]}

    @classmethod
    def from_json(cls, obj: dict) -> "MonomialSet":
        return cls(int(obj["q"]), int(obj["m"]), obj["exponents"])


def reduce_set(A: MonomialSet) -> MonomialSet:
    """Fold every exponent vector; duplicates collapse, so |result| <= |A|."""
    if A.reduced:
        return A
    return MonomialSet(A.q, A.m, (tuple(reduce_exponent(c, A.q) for c in v) for v in A))


def minkowski_sum(A: MonomialSet, B: MonomialSet) -> MonomialSet:
    """All pairwise sums a + b.  Output is NOT folded back into [0, q-1]."""
    A.same_ambient(B)
    sums = {tuple(x + y for x, y in zip(a, b)) for a in A for b in B}
    return MonomialSet(A.q, A.m, sums)


def square_support(A: MonomialSet) -> MonomialSet:
    """Support of the componentwise-product square: reduce(A + A).

    Requires a reduced input — squaring an unreduced set silently conflates
    distinct functions, so it is refused.
    """
    if not A.reduced:
        raise NotReduced("square_support needs exponents in [0, q-1]; call reduce_set first")
    if len(A) == 0:
        raise EmptySet("square of an empty support")
    return reduce_set(minkowski_sum(A, A))


def is_lower_set(A: MonomialSet) -> bool:
    """True iff A is downward closed: with a, it contains every b <= a.

    Checking single-coordinate decrements suffices (induction on the sum).
    """
    for a in A:
        for j, c in enumerate(a):
            if c and a[:j] + (c - 1,) + a[j + 1:] not in A:
                return False
    return True


def dilate(A: MonomialSet, factor: int) -> MonomialSet:
    """The set {factor * a : a in A} (unreduced; used for doubling)."""
    if factor < 0:
        raise RangeError("dilation factor must be nonnegative")
    return MonomialSet(A.q, A.m, (tuple(factor * c for c in v) for v in A))
