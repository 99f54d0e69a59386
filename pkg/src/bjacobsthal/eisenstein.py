"""Exact arithmetic in the Eisenstein rationals Q(w), w a primitive cube root of unity.

Elements are stored as ``(a + b*w) / d`` with integers ``a, b, d``, ``d > 0`` and
``gcd(a, b, d) == 1``, so two equal field elements always have equal slots.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from numbers import Rational

__all__ = ["EisensteinRational", "OMEGA", "OMEGA1", "OMEGA2", "omega_pow", "eis_mul", "eis_inv"]


def _as_fraction(value) -> Fraction:
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


class EisensteinRational:
    """An element ``re + om*w`` of Q(w) with ``w**2 == -w - 1``."""

    __slots__ = ("_a", "_b", "_d")

    def __init__(self, re=0, om=0):
        re = _as_fraction(re)
        om = _as_fraction(om)
        d = re.denominator * om.denominator // gcd(re.denominator, om.denominator)
        self._set(re.numerator * (d // re.denominator), om.numerator * (d // om.denominator), d)

    def _set(self, a: int, b: int, d: int) -> None:
        g = gcd(gcd(a, b), d)
        if d < 0:
            g = -g
        if g != 1:
            a //= g
            b //= g
            d //= g
        self._a = a
        self._b = b
        self._d = d

    @classmethod
    def _raw(cls, a: int, b: int, d: int) -> EisensteinRational:
        obj = cls.__new__(cls)
        obj._set(a, b, d)
        return obj

    @classmethod
    def coerce(cls, value) -> EisensteinRational:
        if isinstance(value, EisensteinRational):
            return value
        if isinstance(value, int):
            return cls._raw(value, 0, 1)
        return cls(value, 0)

    # -- accessors ---------------------------------------------------------

    @property
    def re(self) -> Fraction:
        return Fraction(self._a, self._d)

    @property
    def om(self) -> Fraction:
        return Fraction(self._b, self._d)

    def is_rational(self) -> bool:
        return self._b == 0

    def to_rational(self) -> int | Fraction:
        """Return the value as an ``int`` or ``Fraction``; raises if the w-part is nonzero."""
        if self._b:
            raise ValueError(f"{self!r} has a nonzero w-part")
        if self._d == 1:
            return self._a
        return Fraction(self._a, self._d)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, EisensteinRational):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = EisensteinRational.coerce(other)
        d1, d2 = self._d, other._d
        if d1 == d2:
            return EisensteinRational._raw(self._a + other._a, self._b + other._b, d1)
        return EisensteinRational._raw(self._a * d2 + other._a * d1, self._b * d2 + other._b * d1, d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return EisensteinRational._raw(-self._a, -self._b, self._d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if not isinstance(other, (EisensteinRational, int, Fraction)):
            return NotImplemented
        return self + (-EisensteinRational.coerce(other))

    def __rsub__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return EisensteinRational.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return EisensteinRational._raw(self._a * other, self._b * other, self._d)
        if not isinstance(other, EisensteinRational):
            if not isinstance(other, Fraction):
                return NotImplemented
            other = EisensteinRational.coerce(other)
        a1, b1, a2, b2 = self._a, self._b, other._a, other._b
        bb = b1 * b2
        return EisensteinRational._raw(a1 * a2 - bb, a1 * b2 + b1 * a2 - bb, self._d * other._d)

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        """Field norm ``u * conj(u) = (a**2 - a*b + b**2) / d**2``."""
        a, b = self._a, self._b
        return Fraction(a * a - a * b + b * b, self._d * self._d)

    def conjugate(self) -> EisensteinRational:
        """Galois conjugate, the substitution w -> w**2 = -1 - w."""
        return EisensteinRational._raw(self._a - self._b, -self._b, self._d)

    def inverse(self) -> EisensteinRational:
        a, b, d = self._a, self._b, self._d
        n = a * a - a * b + b * b
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(w)")
        # (a + b w)^-1 = d * conj / norm(a + b w)
        return EisensteinRational._raw(d * (a - b), -d * b, n)

    def __truediv__(self, other):
        if not isinstance(other, (EisensteinRational, int, Fraction)):
            return NotImplemented
        return self * EisensteinRational.coerce(other).inverse()

    def __rtruediv__(self, other):
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return EisensteinRational.coerce(other) * self.inverse()

    def __pow__(self, n: int) -> EisensteinRational:
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = ONE
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison / hashing ----------------------------------------------

    def __bool__(self) -> bool:
        return self._a != 0 or self._b != 0

    def __eq__(self, other):
        if isinstance(other, EisensteinRational):
            return self._a == other._a and self._b == other._b and self._d == other._d
        if isinstance(other, (int, Fraction)):
            return self._b == 0 and Fraction(self._a, self._d) == other
        return NotImplemented

    def __hash__(self):
        if self._b == 0:
            return hash(Fraction(self._a, self._d))
        return hash((self._a, self._b, self._d))

    def __repr__(self):
        return f"EisensteinRational({str(self.re)!r}, {str(self.om)!r})"

    def __str__(self):
        if self._b == 0:
            return str(self.re)
        if self._a == 0:
            return f"{self.om}*w"
        om = self.om
        sign = "-" if om < 0 else "+"
        return f"({self.re} {sign} {abs(om)}*w)"

    # -- JSON --------------------------------------------------------------

    def to_json(self) -> list[str]:
        return [_frac_str(self.re), _frac_str(self.om)]

    @classmethod
    def from_json(cls, data) -> EisensteinRational:
        re, om = data
        return cls(Fraction(re), Fraction(om))


def _frac_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


ONE = EisensteinRational._raw(1, 0, 1)
ZERO = EisensteinRational._raw(0, 0, 1)
OMEGA = EisensteinRational._raw(0, 1, 1)
OMEGA1 = OMEGA
OMEGA2 = EisensteinRational._raw(-1, -1, 1)

_POWERS = {1: (ONE, OMEGA1, OMEGA2), 2: (ONE, OMEGA2, OMEGA1)}


def eis_mul(u: EisensteinRational, v: EisensteinRational) -> EisensteinRational:
    return u * v


def eis_inv(u: EisensteinRational) -> EisensteinRational:
    return u.inverse()


def omega_pow(n: int, root: int = 1) -> EisensteinRational:
    """``w1**n`` (root=1) or ``w2**n`` (root=2); any integer ``n``, period 3."""
    try:
        return _POWERS[root][n % 3]
    except KeyError:
        raise ValueError(f"root must be 1 or 2, got {root!r}") from None
