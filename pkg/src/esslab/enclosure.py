"""Rational enclosures of the irrational quantities that appear in interval bounds.

Nothing here touches floating point. ``n ** (p/q)`` is bracketed with integer
q-th roots, and ``a + b*sqrt(r)`` is compared with rationals by sign-aware
squaring.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

DEFAULT_BITS = 80
TARGET_WIDTH = Fraction(1, 2**64)


def iroot(a: int, k: int) -> int:
    """``floor(a ** (1/k))`` for integers ``a >= 0``, ``k >= 1``."""
    if a < 0 or k < 1:
        raise ValueError("iroot needs a >= 0 and k >= 1")
    if a < 2 or k == 1:
        return a
    x = 1 << -(-a.bit_length() // k)  # >= true root
    while True:
        y = ((k - 1) * x + a // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x**k > a:
        x -= 1
    while (x + 1) ** k <= a:
        x += 1
    return x


@dataclass(frozen=True)
class Enclosure:
    """Closed rational interval ``[lo, hi]`` known to contain a real number."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise ValueError(f"empty enclosure [{self.lo}, {self.hi}]")

    @classmethod
    def exact(cls, value) -> "Enclosure":
        v = Fraction(value)
        return cls(v, v)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __add__(self, other) -> "Enclosure":
        o = _enc(other)
        return Enclosure(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __neg__(self) -> "Enclosure":
        return Enclosure(-self.hi, -self.lo)

    def __sub__(self, other) -> "Enclosure":
        return self + (-_enc(other))

    def __rsub__(self, other) -> "Enclosure":
        return _enc(other) + (-self)

    def __mul__(self, other) -> "Enclosure":
        o = _enc(other)
        prods = [self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi]
        return Enclosure(min(prods), max(prods))

    __rmul__ = __mul__

    def reciprocal(self) -> "Enclosure":
        if self.lo <= 0 <= self.hi:
            raise ZeroDivisionError("enclosure contains zero")
        return Enclosure(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other) -> "Enclosure":
        return self * _enc(other).reciprocal()

    def __rtruediv__(self, other) -> "Enclosure":
        return _enc(other) * self.reciprocal()

    def certainly_lt(self, other) -> bool:
        return self.hi < _enc(other).lo

    def certainly_le(self, other) -> bool:
        return self.hi <= _enc(other).lo

    def certainly_gt(self, other) -> bool:
        return self.lo > _enc(other).hi

    def certainly_ge(self, other) -> bool:
        return self.lo >= _enc(other).hi

    def __float__(self) -> float:
        return float(self.mid)


def _enc(x) -> Enclosure:
    return x if isinstance(x, Enclosure) else Enclosure.exact(x)


def power(base: int, exponent, bits: int = DEFAULT_BITS) -> Enclosure:
    """Enclosure of ``base ** exponent`` for integer ``base >= 1`` and rational exponent.

    Width is at most ``2**-bits`` for non-negative exponents (relative to 1
    for negative ones, which are handled through the reciprocal).
    """
    if base < 1:
        raise ValueError("base must be a positive integer")
    e = Fraction(exponent)
    if e < 0:
        return power(base, -e, bits).reciprocal()
    p, q = e.numerator, e.denominator
    if q == 1:
        return Enclosure.exact(Fraction(base) ** p)
    scaled = base**p << (q * bits)
    r = iroot(scaled, q)
    if r**q == scaled:
        return Enclosure.exact(Fraction(r, 1 << bits))
    return Enclosure(Fraction(r, 1 << bits), Fraction(r + 1, 1 << bits))


def power_lt(base1: int, exp1, base2: int, exp2) -> bool:
    """Exact test of ``base1 ** exp1 < base2 ** exp2`` for positive integer bases, rational exponents.

    Clearing a common denominator ``q`` turns it into an integer-power comparison.
    """
    e1, e2 = Fraction(exp1), Fraction(exp2)
    q = e1.denominator * e2.denominator
    a, b = int(e1 * q), int(e2 * q)
    # base1**(a/q) < base2**(b/q)  <=>  base1**a < base2**b  (q > 0)
    lhs = Fraction(base1) ** a
    rhs = Fraction(base2) ** b
    return lhs < rhs


@dataclass(frozen=True)
class QuadraticSurd:
    """The real number ``a + b * sqrt(r)`` with rational ``a, b`` and ``r >= 0``."""

    a: Fraction
    b: Fraction
    r: Fraction

    def __post_init__(self) -> None:
        if self.r < 0:
            raise ValueError("negative radicand")

    def _sign_of_diff(self, x: Fraction) -> int:
        """Sign of ``self - x``."""
        # self - x = (a - x) + b*sqrt(r); compare u = a - x against w = -b*sqrt(r)
        u = Fraction(self.a) - Fraction(x)
        if self.b == 0 or self.r == 0:
            return (u > 0) - (u < 0)
        bsq = self.b * self.b * self.r  # (b*sqrt(r))^2
        if self.b > 0:
            # u + |b| sqrt(r): positive unless u negative with u^2 >= bsq
            if u >= 0:
                return 1
            return (bsq > u * u) - (bsq < u * u)
        # u - |b| sqrt(r)
        if u <= 0:
            return -1 if (u < 0 or bsq > 0) else 0
        return (u * u > bsq) - (u * u < bsq)

    def __gt__(self, x) -> bool:
        return self._sign_of_diff(x) > 0

    def __lt__(self, x) -> bool:
        return self._sign_of_diff(x) < 0

    def __ge__(self, x) -> bool:
        return self._sign_of_diff(x) >= 0

    def __le__(self, x) -> bool:
        return self._sign_of_diff(x) <= 0

    def __eq__(self, x) -> bool:
        if isinstance(x, QuadraticSurd):
            return (self.a, self.b, self.r) == (x.a, x.b, x.r)
        return self._sign_of_diff(x) == 0

    __hash__ = object.__hash__

    def enclosure(self, bits: int = DEFAULT_BITS) -> Enclosure:
        num, den = self.r.numerator, self.r.denominator
        # sqrt(num/den) = sqrt(num*den)/den
        s = iroot(num * den << (2 * bits), 2)
        if s * s == num * den << (2 * bits):
            root = Enclosure.exact(Fraction(s, den << bits))
        else:
            root = Enclosure(Fraction(s, den << bits), Fraction(s + 1, den << bits))
        return self.a + root * self.b

    def __float__(self) -> float:
        return float(self.enclosure().mid)

    def is_rational(self) -> bool:
        return self.b == 0 or _is_square(self.r)


def _is_square(r: Fraction) -> bool:
    r = Fraction(r)
    for part in (r.numerator, r.denominator):
        s = iroot(part, 2)
        if s * s != part:
            return False
    return True


def approx(value) -> float:
    """Decimal approximation for reports only."""
    if isinstance(value, (Enclosure, QuadraticSurd)):
        return float(value)
    return float(Fraction(value))
