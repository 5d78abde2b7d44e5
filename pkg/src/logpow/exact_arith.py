"""Exact big-integer/big-rational arithmetic and p-adic valuations.

Rationals are GMP-backed ``gmpy2.mpq`` values: always stored reduced, with a
positive denominator, and with exact arithmetic (no rounding anywhere).  This
module adds the p-adic valuation as a dedicated integer-or-infinity type, and
the factorial quotients everything else is built from.
"""

from __future__ import annotations

import math
import re

import gmpy2
from gmpy2 import mpq, mpz

__all__ = [
    "Rational",
    "Valuation",
    "INFINITY",
    "HypothesisError",
    "require_prime",
    "nu_int",
    "nu_rat",
    "multinomial",
    "falling_multinomial",
    "parse_rational",
    "to_rational",
]

#: The coefficient field used throughout the package.
Rational = mpq

# Primes are validated by deterministic trial division; anything at or above
# this limit is rejected rather than accepted probabilistically.
PRIME_LIMIT = 10**6

_RATIONAL_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


class HypothesisError(ValueError):
    """A query lies outside the hypothesis range of the result it concerns."""


class Valuation:
    """The p-exponent of a rational: an integer, or infinity for zero.

    The infinite valuation belongs to the zero rational and nothing else.  It
    compares greater than every integer and absorbs addition:

    >>> Valuation(3) < INFINITY
    True
    >>> str(INFINITY + 5)
    'inf'
    >>> Valuation(2) - Valuation(5) == -3
    True
    """

    __slots__ = ("_value",)

    def __init__(self, value: int | None):
        if value is not None:
            value = int(value)
        self._value = value

    @property
    def is_infinite(self) -> bool:
        return self._value is None

    @property
    def value(self) -> int:
        """The finite exponent; raises for the infinite valuation."""
        if self._value is None:
            raise ValueError("the infinite valuation has no integer value")
        return self._value

    @staticmethod
    def _coerce(other):
        if isinstance(other, Valuation):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return Valuation(other)
        return None

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._value == o._value

    def __lt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self._value is None:
            return False
        if o._value is None:
            return True
        return self._value < o._value

    def __le__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self == o or self < o

    def __gt__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o < self

    def __ge__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o <= self

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self._value is None or o._value is None:
            return INFINITY
        return Valuation(self._value + o._value)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o._value is None:
            raise ValueError("cannot subtract an infinite valuation")
        if self._value is None:
            return INFINITY
        return Valuation(self._value - o._value)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __hash__(self):
        return hash(self._value)

    def __str__(self):
        return "inf" if self._value is None else str(self._value)

    def __repr__(self):
        return f"Valuation({self._value!r})"


#: The valuation of zero; the single representation of "exactly zero" here.
INFINITY = Valuation(None)


def require_prime(p: int) -> None:
    """Reject p unless it is a prime below ``PRIME_LIMIT``.

    Deterministic trial division only; larger candidates are refused instead
    of being accepted by a probabilistic test.
    """
    if not isinstance(p, int) or isinstance(p, bool):
        raise ValueError(f"prime expected, got {p!r}")
    if p >= PRIME_LIMIT:
        raise ValueError(f"p={p} is at or above the supported prime limit {PRIME_LIMIT}")
    if p < 2:
        raise ValueError(f"p={p} is not prime")
    if p % 2 == 0:
        if p != 2:
            raise ValueError(f"p={p} is not prime")
        return
    d = 3
    while d * d <= p:
        if p % d == 0:
            raise ValueError(f"p={p} is not prime")
        d += 2


def nu_int(n, p: int) -> Valuation:
    """Largest e with p^e dividing n; infinite for n = 0.  Sign is ignored.

    >>> nu_int(9, 3).value
    2
    >>> nu_int(-12, 2).value
    2
    >>> nu_int(0, 5).is_infinite
    True
    """
    require_prime(p)
    n = mpz(n)
    if n == 0:
        return INFINITY
    _, e = gmpy2.remove(abs(n), mpz(p))
    return Valuation(e)


def nu_rat(q, p: int) -> Valuation:
    """p-adic valuation of a rational: nu(numerator) - nu(denominator)."""
    require_prime(p)
    q = mpq(q)
    if q == 0:
        return INFINITY
    _, en = gmpy2.remove(abs(q.numerator), mpz(p))
    _, ed = gmpy2.remove(q.denominator, mpz(p))
    return Valuation(en - ed)


def _checked_entries(entries) -> tuple[int, ...]:
    out = tuple(int(i) for i in entries)
    if any(i < 0 for i in out):
        raise ValueError(f"entries must be nonnegative, got {out}")
    return out


def multinomial(entries) -> int:
    """(i_1 + ... + i_r)! / (i_1! ... i_r!) for nonnegative entries.

    >>> multinomial((2, 1))
    3
    >>> multinomial((3, 3))
    20
    """
    entries = _checked_entries(entries)
    num = math.factorial(sum(entries))
    den = math.prod(math.factorial(i) for i in entries)
    return num // den


def falling_multinomial(t: int, entries) -> int:
    """t(t-1)...(t+1-s) / (i_1! ... i_r!) with s = sum of entries.

    Valid for any integer t, including negative; the result is always an
    integer (a product of binomial coefficients).  Empty product for s = 0.

    >>> falling_multinomial(9, (1,))
    9
    >>> falling_multinomial(-2, (2,))
    3
    """
    t = int(t)
    entries = _checked_entries(entries)
    s = sum(entries)
    num = 1
    for k in range(s):
        num *= t - k
    den = math.prod(math.factorial(i) for i in entries)
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"non-integral falling multinomial for t={t}, entries={entries}")
    return q


def parse_rational(text: str) -> mpq:
    """Parse 'a/b' (or a bare integer) exactly; floats are rejected."""
    if not isinstance(text, str) or not _RATIONAL_RE.match(text.strip()):
        raise ValueError(f"not an exact rational: {text!r}")
    body = text.strip()
    if "/" in body:
        num, den = body.split("/")
        if int(den) == 0:
            raise ValueError(f"zero denominator: {text!r}")
        return mpq(int(num), int(den))
    return mpq(int(body))


def to_rational(x) -> mpq:
    """Exact conversion to the coefficient field; never accepts floats."""
    if isinstance(x, mpq):
        return x
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, float):
        raise ValueError(f"refusing inexact float {x!r}; pass 'a/b' or a Fraction")
    return mpq(x)
