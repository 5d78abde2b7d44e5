"""Index tuples, weighted multinomial coefficients, and expansion terms.

An index tuple I = (i_1, ..., i_r) is an ordered tuple of nonnegative
integers with two derived quantities:

* size(I)   = i_1 + ... + i_r
* weight(I) = 1*i_1 + 2*i_2 + ... + r*i_r

Weight-n tuples with r = n encode the partitions of n by part multiplicities
(i_j = multiplicity of part j).

The weighted multinomial coefficient

    c(I) = weight(I) * (size(I) - 1)! / (i_1! ... i_r!)

is always a positive integer when size(I) > 0 and satisfies the same
Pascal-style recursion as ordinary multinomial coefficients,
c(I) = sum over k with i_k > 0 of c(I - E_k).  Unlike the ordinary
multinomial, trailing zero entries change the value (they change the weight
positions), so tuples are never normalized here.

Each tuple also indexes one term of the multinomial expansion of the t-th
power of log(1+x)/x: the unsigned term is

    falling_multinomial(t, I) / prod_j (j+1)^(i_j)

and sums (with global sign (-1)^n over weight-n tuples) to the coefficient
of x^n.  The sign is applied at summation sites, not here.
"""

from __future__ import annotations

import math
from typing import Iterator

from gmpy2 import mpq

from .exact_arith import (
    HypothesisError,
    Valuation,
    falling_multinomial,
    multinomial,
    nu_int,
    require_prime,
)

__all__ = [
    "IndexTuple",
    "size",
    "weight",
    "unit_tuple",
    "c_coeff",
    "c_recursion_holds",
    "valuation_inequality_holds",
    "enumerate_weighted",
    "term_value",
    "term_valuation",
    "format_index_tuple",
    "parse_index_tuple",
]

IndexTuple = tuple[int, ...]


def _validated(entries) -> IndexTuple:
    out = tuple(int(i) for i in entries)
    if not out:
        raise ValueError("index tuple must have at least one position")
    if any(i < 0 for i in out):
        raise ValueError(f"entries must be nonnegative, got {out}")
    return out


def size(entries) -> int:
    """Sum of the entries."""
    return sum(_validated(entries))


def weight(entries) -> int:
    """Position-weighted sum: 1*i_1 + 2*i_2 + ... + r*i_r."""
    return sum(j * i for j, i in enumerate(_validated(entries), start=1))


def unit_tuple(k: int, r: int | None = None) -> IndexTuple:
    """E_k: the r-tuple whose only nonzero entry is a 1 in position k."""
    if r is None:
        r = k
    if not 1 <= k <= r:
        raise ValueError(f"need 1 <= k <= r, got k={k}, r={r}")
    return (0,) * (k - 1) + (1,) + (0,) * (r - k)


def c_coeff(entries) -> int:
    """The weighted multinomial coefficient c(I); requires size(I) > 0.

    >>> [c_coeff(unit_tuple(k)) for k in range(1, 6)]
    [1, 2, 3, 4, 5]
    >>> c_coeff((1, 1))
    3
    """
    I = _validated(entries)
    s = sum(I)
    if s == 0:
        raise ValueError("c is undefined for the zero tuple: (size - 1)! needs size > 0")
    num = weight(I) * math.factorial(s - 1)
    den = math.prod(math.factorial(i) for i in I)
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"c({I}) is not an integer; this should be impossible")
    return q


def c_recursion_holds(entries) -> bool:
    """Check c(I) = sum of c(I - E_k) over positions k with i_k > 0.

    Requires size(I) >= 2 so that every I - E_k still has positive size.
    """
    I = _validated(entries)
    if sum(I) < 2:
        raise ValueError(f"recursion needs size >= 2, got {sum(I)}")
    total = 0
    for k, i in enumerate(I):
        if i > 0:
            total += c_coeff(I[:k] + (i - 1,) + I[k + 1:])
    return c_coeff(I) == total


def valuation_inequality_holds(entries, p: int) -> bool:
    """Check nu_p(size) <= nu_p(weight) + nu_p(multinomial(I)).

    Holds for every tuple and prime; the boolean return lets sweep drivers
    count violations instead of aborting.
    """
    require_prime(p)
    I = _validated(entries)
    lhs = nu_int(sum(I), p)
    rhs = nu_int(weight(I), p) + nu_int(multinomial(I), p)
    return lhs <= rhs


def enumerate_weighted(n: int) -> Iterator[IndexTuple]:
    """Yield every n-tuple (i_1, ..., i_n) with weight exactly n.

    These are the partitions of n as part-multiplicity vectors, produced in
    reverse lexicographic order of the underlying partitions (largest parts
    first); the count is the partition number of n.  Consumers must not rely
    on the order.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    counts = [0] * n

    def rec(remaining: int, max_part: int):
        if remaining == 0:
            yield tuple(counts)
            return
        for part in range(min(remaining, max_part), 0, -1):
            for mult in range(remaining // part, 0, -1):
                counts[part - 1] = mult
                yield from rec(remaining - mult * part, part - 1)
                counts[part - 1] = 0

    yield from rec(n, n)


def term_value(t: int, entries) -> mpq:
    """The unsigned expansion term falling_multinomial(t, I) / prod (j+1)^(i_j).

    >>> term_value(5, (1,))
    mpq(5,2)
    """
    I = tuple(int(i) for i in entries)
    if any(i < 0 for i in I):
        raise ValueError(f"entries must be nonnegative, got {I}")
    den = 1
    for pos, i in enumerate(I, start=1):
        if i:
            den *= (pos + 1) ** i
    return mpq(falling_multinomial(t, I), den)


def term_valuation(t: int, entries, p: int) -> Valuation:
    """Closed-form p-adic valuation of the expansion term for I:

        nu_p(t) + nu_p(multinomial(I)) - nu_p(size) - sum_j i_j * nu_p(j+1)

    Valid under the hypothesis 0 < size(I) <= p^(nu_p(t)); out-of-range
    queries are refused rather than extrapolated.  Always agrees with
    nu_rat(term_value(t, I), p) in range.
    """
    require_prime(p)
    I = _validated(entries)
    s = sum(I)
    if s == 0:
        raise HypothesisError("term valuation needs size(I) > 0")
    if t != 0 and s > p ** nu_int(t, p).value:
        raise HypothesisError(
            f"size {s} exceeds p^nu_p(t) = {p ** nu_int(t, p).value}; hypothesis violated"
        )
    base = nu_int(t, p) + nu_int(multinomial(I), p) - nu_int(s, p)
    shift = sum(i * nu_int(pos + 1, p).value for pos, i in enumerate(I, start=1) if i)
    return base - shift


def format_index_tuple(entries) -> str:
    """Serialize as a bracketed comma-separated list, e.g. '[3,0,2]'."""
    return "[" + ",".join(str(int(i)) for i in entries) + "]"


def parse_index_tuple(text: str) -> IndexTuple:
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ValueError(f"not an index tuple: {text!r}")
    return _validated(int(part) for part in body[1:-1].split(","))
