"""Signs of index tuples, injections, and perfect matchings.

Everything here works on plain tuples of positive integers and returns
Python ints in {-1, 0, +1}; the matrix layer coerces those into whatever
scalar domain needs them.
"""
from __future__ import annotations

from typing import Iterator, NamedTuple, Sequence

from .matrix import Matrix
from .scalars import Domain


def _check_tuple(values: Sequence[int]) -> tuple:
    vals = tuple(values)
    for v in vals:
        if isinstance(v, bool) or not isinstance(v, int) or v < 1:
            raise ValueError(f"index tuples hold positive integers, got {v!r}")
    return vals


def tuple_sign(values: Sequence[int]) -> int:
    """Sign of an index tuple: 0 if any entry repeats, else -1 to the number
    of inversions. Empty and singleton tuples have sign +1.

    The quadratic pair scan is deliberate: every tuple seen here is short,
    and the scan spots repeats and inversions in one pass.
    """
    vals = _check_tuple(values)
    inversions = 0
    for i in range(len(vals)):
        vi = vals[i]
        for j in range(i + 1, len(vals)):
            if vi > vals[j]:
                inversions += 1
            elif vi == vals[j]:
                return 0
    return -1 if inversions % 2 else 1


def validate_permutation(values: Sequence[int]) -> tuple:
    """Check that values is a rearrangement of 1..n and return it."""
    vals = _check_tuple(values)
    if sorted(vals) != list(range(1, len(vals) + 1)):
        raise ValueError(f"not a permutation of 1..{len(vals)}: {vals}")
    return vals


def validate_injection(values: Sequence[int], ambient: int) -> tuple:
    """Check that values are distinct and inside 1..ambient, return them."""
    vals = _check_tuple(values)
    if len(set(vals)) != len(vals):
        raise ValueError(f"injection values must be distinct: {vals}")
    if any(v > ambient for v in vals):
        raise ValueError(f"injection values must lie in 1..{ambient}: {vals}")
    if len(vals) > ambient:
        raise ValueError(f"cannot inject {len(vals)} indices into 1..{ambient}")
    return vals


def injection_sign(values: Sequence[int], ambient: int) -> int:
    """Sign of an injection a -> values[a-1] of 1..k into 1..ambient:
    (-1) to the sum of displacements values[a-1] - a, times the tuple sign
    of the image. Never zero, since the image entries are distinct.
    """
    vals = validate_injection(values, ambient)
    displacement = sum(vals) - (len(vals) * (len(vals) + 1)) // 2
    base = -1 if displacement % 2 else 1
    return base * tuple_sign(vals)


def permutation_matrix(values: Sequence[int], domain: Domain) -> Matrix:
    """Matrix with a one in row i, column values[i-1], zero elsewhere."""
    vals = validate_permutation(values)
    z, o = domain.zero, domain.one
    n = len(vals)
    return Matrix(domain, [[o if j == vals[i] else z for j in range(1, n + 1)] for i in range(n)])


def pair_sign_matrix(values: Sequence[int], domain: Domain) -> Matrix:
    """Skew matrix of pairwise tuple signs: entry (i,j) is the sign of the
    pair (values[i-1], values[j-1])."""
    vals = _check_tuple(values)
    if len(vals) < 2:
        raise ValueError("pair sign matrix needs at least two entries")
    coerce = domain.coerce
    return Matrix(
        domain,
        [[coerce(tuple_sign((a, b))) for b in vals] for a in vals],
    )


class Matching(NamedTuple):
    """A perfect matching of 1..2m in canonical form with its sign.

    Pairs are ordered within themselves and by first element, so the
    flattened pair sequence is a permutation of 1..2m; `sign` is that
    permutation's sign.
    """

    pairs: tuple
    sign: int


def enumerate_matchings(m: int) -> Iterator[Matching]:
    """All perfect matchings of {1..2m} in lexicographic order of the
    flattened pair sequence; there are (2m-1)!! of them.

    The smallest free index is paired with each larger free index in turn.
    Choosing the j-th remaining candidate costs j-1 transpositions to pull
    it next to the smallest element, so the sign picks up (-1)**(j-1); the
    recursion tracks that incrementally instead of recounting inversions.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")

    def gen(free: tuple, sign: int):
        if not free:
            yield (), sign
            return
        first = free[0]
        for pos in range(1, len(free)):
            partner_sign = sign if pos % 2 == 1 else -sign
            rest = free[1:pos] + free[pos + 1:]
            for pairs, total in gen(rest, partner_sign):
                yield ((first, free[pos]),) + pairs, total

    for pairs, sign in gen(tuple(range(1, 2 * m + 1)), 1):
        yield Matching(pairs, sign)


def matching_sum_sign(values: Sequence[int]) -> int:
    """Tuple sign recomputed through the matching expansion: the sum over
    perfect matchings of the matching sign times the product of pairwise
    signs. Independent of tuple_sign on purpose; tests play them against
    each other."""
    vals = _check_tuple(values)
    if len(vals) % 2:
        raise ValueError("matching expansion needs an even-length tuple")
    total = 0
    for pairs, sign in enumerate_matchings(len(vals) // 2):
        prod = sign
        for p, q in pairs:
            prod *= tuple_sign((vals[p - 1], vals[q - 1]))
            if prod == 0:
                break
        total += prod
    return total
