"""Closed-form side of the dimension computations.

Two families of numbers drive everything here:

* shuffle_dim(m, k): the dimension of the shuffle-invariant k-cochains on an
  m-dimensional space, obtained by Moebius inversion over the divisors of k.
  For the m-dimensional fat point with coefficients in the residue field this
  is exactly the space of Harrison k-cochains, which is what the brute-force
  engine in harrison.py recomputes from scratch.

* cone_tdim(i, d): the dimension of the i-th cotangent module of the cone
  over the rational normal curve of degree d, read off as the t^i coefficient
  of a generating series assembled from the shuffle dimensions.

All series arithmetic is exact over Q and truncated at a fixed order. The
generating series is evaluated two orders past what the caller asked for, so
truncation artifacts cannot reach a reported coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .qlinalg import as_fraction


class IntegralityError(ArithmeticError):
    """A quantity that must be a nonnegative integer came out otherwise.

    This cannot happen for valid inputs; it fires only on an internal bug,
    so nothing catches it.
    """


def moebius(n: int) -> int:
    """Moebius function: (-1)^(#prime factors) on squarefree n, else 0."""
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ValueError("moebius is defined for integers n >= 1")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1 if p == 2 else 2
    if n > 1:
        result = -result
    return result


def _divisors(k: int) -> list:
    return [q for q in range(1, k + 1) if k % q == 0]


def shuffle_dim(m: int, k: int) -> int:
    """Dimension of the shuffle-invariant k-cochains on an m-dim space.

    Computed by the Moebius-inverted closed form
        (1/k) * sum over divisors q of k of (-1)^(k + k/q) mu(q) m^(k/q).
    The sum is always a nonnegative integer; anything else is a hard error.
    """
    if m < 1:
        raise ValueError("need m >= 1")
    if k < 1:
        raise ValueError("need k >= 1")
    total = Fraction(0)
    for q in _divisors(k):
        e = k + k // q
        total += (-1) ** e * moebius(q) * Fraction(m) ** (k // q)
    total /= k
    if total.denominator != 1:
        raise IntegralityError("shuffle_dim(%d, %d) is not an integer: %s" % (m, k, total))
    val = int(total)
    if val < 0:
        raise IntegralityError("shuffle_dim(%d, %d) is negative: %d" % (m, k, val))
    return val


class TruncatedSeries:
    """Power series over Q truncated at t^order, with exact arithmetic.

    coeffs[j] is the coefficient of t^j; len(coeffs) == order + 1. Binary
    operations truncate to the smaller order of the two operands.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, order: int | None = None) -> None:
        data = [as_fraction(x) for x in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be nonnegative")
            if len(data) > order + 1:
                raise ValueError("more coefficients than the order allows")
            data += [Fraction(0)] * (order + 1 - len(data))
        if not data:
            raise ValueError("a series needs at least the constant coefficient")
        self.coeffs = data

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, j: int) -> Fraction:
        if not (0 <= j <= self.order):
            raise ValueError("coefficient %d beyond truncation order %d" % (j, self.order))
        return self.coeffs[j]

    def truncate(self, new_order: int) -> "TruncatedSeries":
        if new_order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs[: new_order + 1])

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries([self.coeffs[j] + other.coeffs[j] for j in range(n + 1)])

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = min(self.order, other.order)
        return TruncatedSeries([self.coeffs[j] - other.coeffs[j] for j in range(n + 1)])

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = as_fraction(other)
            return TruncatedSeries([c * x for x in self.coeffs])
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        for i, x in enumerate(self.coeffs[: n + 1]):
            if x:
                for j in range(n + 1 - i):
                    y = other.coeffs[j]
                    if y:
                        out[i + j] += x * y
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def divide(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Divide by a series with invertible (nonzero) constant term."""
        if other.coeffs[0] == 0:
            raise ValueError("division needs a nonzero constant term in the divisor")
        n = min(self.order, other.order)
        inv0 = 1 / other.coeffs[0]
        out = []
        for j in range(n + 1):
            s = self.coeffs[j]
            for t in range(j):
                s -= out[t] * other.coeffs[j - t]
            out.append(s * inv0)
        return TruncatedSeries(out)

    @classmethod
    def geometric_alternating(cls, order: int) -> "TruncatedSeries":
        """1/(1+t) as the truncated series 1 - t + t^2 - ..."""
        return cls([(-1) ** j for j in range(order + 1)])

    def __eq__(self, other) -> bool:
        return isinstance(other, TruncatedSeries) and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        terms = []
        for j, x in enumerate(self.coeffs):
            if x:
                terms.append("%s*t^%d" % (x, j))
        body = " + ".join(terms) if terms else "0"
        return "TruncatedSeries(%s + O(t^%d))" % (body, self.order + 1)


def shuffle_dim_series(d: int, order: int) -> TruncatedSeries:
    """Generating series of shuffle dimensions: sum_k shuffle_dim(d-1, k) t^k."""
    if d < 3:
        raise ValueError("need d >= 3")
    if order < 1:
        raise ValueError("need order >= 1")
    return TruncatedSeries([0] + [shuffle_dim(d - 1, k) for k in range(1, order + 1)])


def poincare_series(d: int, order: int) -> TruncatedSeries:
    """Cotangent dimension series of the degree-d cone, through t^order.

    Assembled as (Q + 2t + 2) * ((d-1)t - t^2) / (1+t)^2 - 2t/(1+t) with Q the
    shuffle dimension series; 1/(1+t) enters as the truncated alternating
    geometric series. The result must have nonnegative integer coefficients
    in every positive degree and zero constant term; violations are internal
    bugs and raise IntegralityError.
    """
    if d < 3:
        raise ValueError("need d >= 3")
    if order < 1:
        raise ValueError("need order >= 1")
    n = order + 2  # guard digits: work two orders past the request
    q = shuffle_dim_series(d, n)
    affine = q + TruncatedSeries([2, 2], order=n)  # Q + 2t + 2
    bracket = TruncatedSeries([0, d - 1, -1], order=n)  # (d-1)t - t^2
    inv = TruncatedSeries.geometric_alternating(n)
    series = affine * bracket * inv * inv - TruncatedSeries([0, 2], order=n) * inv
    if series.coeff(0) != 0:
        raise IntegralityError("cotangent series of d=%d has nonzero constant term" % d)
    for j in range(1, n + 1):
        x = series.coeff(j)
        if x.denominator != 1 or x < 0:
            raise IntegralityError(
                "cotangent series coefficient t^%d for d=%d is %s, expected a nonnegative integer"
                % (j, d, x)
            )
    return series.truncate(order)


@lru_cache(maxsize=None)
def cone_tdim(i: int, d: int) -> int:
    """dim T^i of the cone over the rational normal curve of degree d."""
    if i < 1:
        raise ValueError("need i >= 1")
    if d < 3:
        raise ValueError("need d >= 3")
    return int(poincare_series(d, i).coeff(i))


def fatpoint_tdim(m: int, i: int) -> int:
    """dim T^i of the m-dimensional fat point: m*shuffle_dim(m, i+1) - shuffle_dim(m, i)."""
    if m < 1:
        raise ValueError("need m >= 1")
    if i < 1:
        raise ValueError("need i >= 1")
    val = m * shuffle_dim(m, i + 1) - shuffle_dim(m, i)
    if val < 0:
        raise IntegralityError("fat point dimension came out negative: m=%d i=%d" % (m, i))
    return val


@dataclass(frozen=True)
class DimensionTable:
    """Cotangent dimensions of one cone: values[i] == cone_tdim(i, d)."""

    d: int
    values: dict

    def __post_init__(self):
        for i, v in self.values.items():
            if not isinstance(v, int) or v < 0:
                raise IntegralityError("table entry T^%s = %r is not a nonnegative integer" % (i, v))


def dimension_table(d: int, imax: int = 6) -> DimensionTable:
    if imax < 1:
        raise ValueError("need imax >= 1")
    return DimensionTable(d=d, values={i: cone_tdim(i, d) for i in range(1, imax + 1)})
