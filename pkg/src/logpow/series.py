"""Dense truncated formal power series over exact rationals.

A :class:`TruncSeries` stores the coefficients c_0..c_N of a series truncated
at a fixed order N.  Truncation is part of the value, never a silent side
effect: every ring operation takes inputs of order N and produces output of
order N, computing modulo x^(N+1).

The series this package cares about all live here:

* ``log_series(N)`` -- log(1+x)/x, with c_i = (-1)^i / (i+1);
* its reciprocal x/log(1+x), via :meth:`TruncSeries.reciprocal`;
* arbitrary integer powers of either, via ``**``;
* y/(e^y - 1), used by :func:`bernoulli`.

Multiplication clears denominators first and convolves over the integers,
reducing once per output coefficient; on series whose coefficients have
thousands of digits this is an order of magnitude faster than accumulating
rational products term by term, and the result is identical.
"""

from __future__ import annotations

import json
import math

import gmpy2
from gmpy2 import mpq, mpz

from .exact_arith import Valuation, nu_rat, require_prime, to_rational

__all__ = [
    "TruncSeries",
    "log_series",
    "mul",
    "reciprocal",
    "int_pow",
    "scale_variable",
    "bernoulli",
    "coeff_valuation",
]


def _common_denominator(coeffs):
    den = mpz(1)
    for c in coeffs:
        den = gmpy2.lcm(den, c.denominator)
    ints = [c.numerator * (den // c.denominator) for c in coeffs]
    return ints, den


class TruncSeries:
    """A power series truncated at an explicit order, with exact coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs):
        cs = tuple(to_rational(c) for c in coeffs)
        if not cs:
            raise ValueError("a truncated series needs at least the constant coefficient")
        self._coeffs = cs

    @classmethod
    def one(cls, order: int) -> "TruncSeries":
        """The constant series 1 at the given order."""
        if order < 0:
            raise ValueError(f"order must be nonnegative, got {order}")
        return cls((mpq(1),) + (mpq(0),) * order)

    @property
    def order(self) -> int:
        """Highest retained exponent N."""
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def __getitem__(self, n: int) -> mpq:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient index {n} outside 0..{self.order}")
        return self._coeffs[n]

    def __len__(self) -> int:
        return len(self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        shown = ", ".join(str(c) for c in self._coeffs[:8])
        tail = ", ..." if self.order >= 8 else ""
        return f"TruncSeries([{shown}{tail}], order={self.order})"

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        if other.order != self.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")
        n = self.order
        fi, fden = _common_denominator(self._coeffs)
        gi, gden = _common_denominator(other._coeffs)
        acc = [mpz(0)] * (n + 1)
        for i, a in enumerate(fi):
            if a:
                for j in range(n + 1 - i):
                    b = gi[j]
                    if b:
                        acc[i + j] += a * b
        den = fden * gden
        return TruncSeries(mpq(v, den) for v in acc)

    def reciprocal(self) -> "TruncSeries":
        """Multiplicative inverse modulo x^(N+1), by the triangular recurrence.

        Requires a unit series (nonzero constant term).
        """
        a = self._coeffs
        if a[0] == 0:
            raise ValueError("series is not a unit: constant term is zero")
        inv0 = 1 / a[0]
        b = [inv0]
        for n in range(1, len(a)):
            s = mpq(0)
            for k in range(1, n + 1):
                ak = a[k]
                if ak:
                    s += ak * b[n - k]
            b.append(-inv0 * s)
        return TruncSeries(b)

    def __pow__(self, t):
        """Integer power, truncated at this series' order.

        t = 0 gives the constant series 1; negative t is the positive power
        of the reciprocal (so it requires a unit); positive powers use binary
        exponentiation.
        """
        if not isinstance(t, int) or isinstance(t, bool):
            return NotImplemented
        if t == 0:
            return TruncSeries.one(self.order)
        if t < 0:
            return self.reciprocal() ** (-t)
        result = None
        base = self
        e = t
        while True:
            if e & 1:
                result = base if result is None else result * base
            e >>= 1
            if not e:
                return result
            base = base * base

    def scale_variable(self, factor) -> "TruncSeries":
        """Substitute x -> factor*x, i.e. c_i -> factor^i * c_i."""
        lam = to_rational(factor)
        out = []
        power = mpq(1)
        for c in self._coeffs:
            out.append(c * power)
            power *= lam
        return TruncSeries(out)

    def to_strings(self) -> list[str]:
        """Coefficients as exact 'a/b' strings, lowest degree first."""
        return [str(c) for c in self._coeffs]

    def to_json(self) -> str:
        """The canonical serialization: a JSON array of rational strings."""
        return json.dumps(self.to_strings())


def log_series(order: int) -> TruncSeries:
    """The series of log(1+x)/x through the given order: c_i = (-1)^i/(i+1).

    >>> log_series(2).to_strings()
    ['1', '-1/2', '1/3']
    """
    if order < 0:
        raise ValueError(f"order must be nonnegative, got {order}")
    return TruncSeries(mpq(-1 if i & 1 else 1, i + 1) for i in range(order + 1))


def mul(f: TruncSeries, g: TruncSeries) -> TruncSeries:
    """Cauchy product truncated to the common order."""
    return f * g


def reciprocal(f: TruncSeries) -> TruncSeries:
    return f.reciprocal()


def int_pow(f: TruncSeries, t: int) -> TruncSeries:
    return f**t


def scale_variable(f: TruncSeries, factor) -> TruncSeries:
    return f.scale_variable(factor)


def bernoulli(n: int) -> mpq:
    """The n-th Bernoulli number, from the series of y/(e^y - 1).

    Computed as n! times coefficient n of the reciprocal of
    sum_k y^k/(k+1)!, which is (e^y - 1)/y.  Convention: bernoulli(1) = -1/2.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    exp_ratio = TruncSeries(mpq(1, math.factorial(k + 1)) for k in range(n + 1))
    return exp_ratio.reciprocal()[n] * math.factorial(n)


def coeff_valuation(t: int, n: int, p: int) -> Valuation:
    """p-adic valuation of the coefficient of x^n in the t-th power of
    log(1+x)/x."""
    require_prime(p)
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if t == 0 and n > 0:
        raise ValueError("t = 0 is only supported for n = 0")
    return nu_rat((log_series(n) ** t)[n], p)
