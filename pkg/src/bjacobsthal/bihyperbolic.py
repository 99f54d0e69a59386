"""Bihyperbolic numbers ``w + x1*j1 + x2*j2 + x3*j3`` over a commutative scalar ring.

The units satisfy ``j1**2 = j2**2 = j3**2 = 1`` and ``j1*j2 = j3``,
``j1*j3 = j2``, ``j2*j3 = j1``; the algebra is commutative, associative and
has zero divisors such as ``(1 + j1) * (1 - j1) = 0``.

The scalars can be anything supporting ``+``, ``-`` and ``*`` with ints:
ints, ``Fraction``, :class:`EisensteinRational`, :class:`Polynomial`,
:class:`RationalFunction`.
"""

from __future__ import annotations

__all__ = ["Bihyperbolic", "bh_add", "bh_mul", "bh_scale", "J1", "J2", "J3"]


class Bihyperbolic:
    __slots__ = ("w", "x1", "x2", "x3")

    def __init__(self, w=0, x1=0, x2=0, x3=0):
        self.w = w
        self.x1 = x1
        self.x2 = x2
        self.x3 = x3

    @classmethod
    def scalar(cls, s) -> Bihyperbolic:
        """Embed a scalar as ``(s, 0, 0, 0)``."""
        return cls(s, 0 * s, 0 * s, 0 * s)

    @property
    def components(self) -> tuple:
        return (self.w, self.x1, self.x2, self.x3)

    def __iter__(self):
        return iter(self.components)

    def map(self, f) -> Bihyperbolic:
        return Bihyperbolic(f(self.w), f(self.x1), f(self.x2), f(self.x3))

    def is_zero(self) -> bool:
        return not (self.w or self.x1 or self.x2 or self.x3)

    def __bool__(self):
        return not self.is_zero()

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, Bihyperbolic):
            other = Bihyperbolic.scalar(other)
        return Bihyperbolic(self.w + other.w, self.x1 + other.x1, self.x2 + other.x2, self.x3 + other.x3)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Bihyperbolic):
            other = Bihyperbolic.scalar(other)
        return Bihyperbolic(self.w - other.w, self.x1 - other.x1, self.x2 - other.x2, self.x3 - other.x3)

    def __rsub__(self, other):
        return Bihyperbolic.scalar(other) - self

    def __neg__(self):
        return Bihyperbolic(-self.w, -self.x1, -self.x2, -self.x3)

    def __mul__(self, other):
        if not isinstance(other, Bihyperbolic):
            return self.scale(other)
        a0, a1, a2, a3 = self.w, self.x1, self.x2, self.x3
        b0, b1, b2, b3 = other.w, other.x1, other.x2, other.x3
        return Bihyperbolic(
            a0 * b0 + a1 * b1 + a2 * b2 + a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 + a3 * b2,
            a0 * b2 + a2 * b0 + a1 * b3 + a3 * b1,
            a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1,
        )

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, s) -> Bihyperbolic:
        return Bihyperbolic(s * self.w, s * self.x1, s * self.x2, s * self.x3)

    def __truediv__(self, s):
        """Divide every component by the scalar ``s``."""
        if isinstance(s, Bihyperbolic):
            return NotImplemented
        return Bihyperbolic(self.w / s, self.x1 / s, self.x2 / s, self.x3 / s)

    def __pow__(self, n: int) -> Bihyperbolic:
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = Bihyperbolic(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Bihyperbolic):
            return self.components == other.components
        if isinstance(other, (tuple, list)) and len(other) == 4:
            return self.components == tuple(other)
        if other == 0:
            return self.is_zero()
        return NotImplemented

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return f"Bihyperbolic({self.w!r}, {self.x1!r}, {self.x2!r}, {self.x3!r})"

    def __str__(self):
        return f"({self.w}) + ({self.x1})j1 + ({self.x2})j2 + ({self.x3})j3"

    def to_json(self, encode=None) -> list:
        enc = encode or _default_encode
        return [enc(c) for c in self.components]


def _default_encode(c):
    from .jsonio import encode

    return encode(c)


J1 = Bihyperbolic(0, 1, 0, 0)
J2 = Bihyperbolic(0, 0, 1, 0)
J3 = Bihyperbolic(0, 0, 0, 1)


def bh_add(u: Bihyperbolic, v: Bihyperbolic) -> Bihyperbolic:
    return u + v


def bh_mul(u: Bihyperbolic, v: Bihyperbolic) -> Bihyperbolic:
    return u * v


def bh_scale(s, u: Bihyperbolic) -> Bihyperbolic:
    return u.scale(s)
