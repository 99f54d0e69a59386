"""Dense univariate polynomials in ``x`` and reduced rational functions.

Coefficients may be Python ints, ``Fraction`` or :class:`EisensteinRational`.
Polynomials are immutable tuples of coefficients in ascending degree with no
trailing zeros; the zero polynomial is the empty tuple.

A :class:`RationalFunction` is kept in a canonical form so that structural
equality is semantic equality:

* If every coefficient is rational, numerator and denominator are integer
  polynomials, coprime in Q[x], with jointly coprime integer coefficients and a
  positive leading coefficient in the denominator.
* Otherwise (a genuine w-part survives) the fraction is reduced over Q(w) and
  the denominator is monic.

Rational values are always demoted to the first form, so a function in Q(x)
has one representation no matter which field it was computed in.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .eisenstein import EisensteinRational

__all__ = [
    "Polynomial",
    "RationalFunction",
    "DomainError",
    "poly_arith",
    "ratfunc_arith",
    "poly_eval",
    "X",
]

_SCALARS = (int, Fraction, EisensteinRational)


class DomainError(ArithmeticError):
    """Evaluation at a point where a denominator vanishes."""


# ---------------------------------------------------------------------------
# tuple-level kernels
# ---------------------------------------------------------------------------


def _strip(cs) -> tuple:
    n = len(cs)
    while n and not cs[n - 1]:
        n -= 1
    return tuple(cs[:n])


def _add(a: tuple, b: tuple) -> tuple:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return _strip(out)


def _sub(a: tuple, b: tuple) -> tuple:
    out = list(a)
    if len(out) < len(b):
        out.extend([0] * (len(b) - len(out)))
    for i, c in enumerate(b):
        out[i] = out[i] - c
    return _strip(out)


def _low_zeros(a: tuple) -> int:
    k = 0
    while not a[k]:
        k += 1
    return k


def _mul(a: tuple, b: tuple) -> tuple:
    if not a or not b:
        return ()
    if len(a) < len(b):
        a, b = b, a
    # monomial fast path: shift and scale
    if not any(b[:-1]):
        k = len(b) - 1
        c = b[-1]
        if c == 1:
            return (0,) * k + a
        return (0,) * k + tuple(ai * c for ai in a)
    out = [0] * (len(a) + len(b) - 1)
    for j, bj in enumerate(b):
        if not bj:
            continue
        for i, ai in enumerate(a, j):
            out[i] += ai * bj
    return _strip(out)


def _scale(a: tuple, c) -> tuple:
    if not c:
        return ()
    if c == 1:
        return a
    return _strip([ai * c for ai in a])


def _all_int(a: tuple) -> bool:
    return all(type(c) is int for c in a)


def _content(a: tuple) -> int:
    g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def _primitive(a: tuple) -> tuple:
    g = _content(a)
    if a and a[-1] < 0:
        g = -g
    if g in (0, 1):
        return a
    return tuple(c // g for c in a)


def _divmod_field(a: tuple, b: tuple) -> tuple[tuple, tuple]:
    """Long division over a field of coefficients (Fraction or Q(w))."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    db = len(b) - 1
    inv_lc = _field_inverse(b[-1])
    q = [0] * max(len(a) - db, 0)
    for k in range(len(a) - 1 - db, -1, -1):
        c = r[k + db]
        if not c:
            continue
        c = c * inv_lc
        q[k] = c
        for i, bi in enumerate(b):
            r[k + i] = r[k + i] - c * bi
    return _strip(q), _strip(r[:db])


def _exact_div_int(a: tuple, b: tuple) -> tuple:
    """Exact quotient of integer polynomials; raises if ``b`` does not divide ``a``."""
    r = list(a)
    db = len(b) - 1
    lb = b[-1]
    q = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c = r[k + db]
        if not c:
            continue
        qc, rem = divmod(c, lb)
        if rem:
            raise ArithmeticError("inexact integer polynomial division")
        q[k] = qc
        for i, bi in enumerate(b):
            r[k + i] -= qc * bi
    if any(r[:db]):
        raise ArithmeticError("inexact integer polynomial division")
    return _strip(q)


def _gcd_int(a: tuple, b: tuple) -> tuple:
    """Primitive gcd of two integer polynomials (positive leading coefficient)."""
    a, b = _primitive(a), _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        # primitive pseudo-remainder; constant factors do not affect the gcd
        r = list(a)
        db = len(b) - 1
        lb = b[-1]
        while len(r) - 1 >= db and r:
            c = r[-1]
            k = len(r) - 1 - db
            if c % lb == 0:
                f = c // lb
                for i, bi in enumerate(b):
                    r[k + i] -= f * bi
            else:
                r = [lb * ri for ri in r]
                for i, bi in enumerate(b):
                    r[k + i] -= c * bi
            r.pop()
            while r and not r[-1]:
                r.pop()
        a, b = b, _primitive(tuple(r))
    return _primitive(a)


def _gcd_field(a: tuple, b: tuple) -> tuple:
    """Monic gcd over a coefficient field."""
    while b:
        a, b = b, _divmod_field(a, b)[1]
    if not a:
        return a
    inv = _field_inverse(a[-1])
    return tuple(c * inv for c in a)


def _field_inverse(c):
    if isinstance(c, int):
        return Fraction(1, c)
    return 1 / c


# ---------------------------------------------------------------------------
# Polynomial
# ---------------------------------------------------------------------------


class Polynomial:
    """Immutable dense polynomial in ``x``; ``coeffs[i]`` multiplies ``x**i``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, _SCALARS):
            coeffs = (coeffs,)
        self.coeffs = _strip(tuple(coeffs))

    @classmethod
    def _make(cls, coeffs: tuple) -> Polynomial:
        p = cls.__new__(cls)
        p.coeffs = coeffs
        return p

    @classmethod
    def x(cls) -> Polynomial:
        return cls._make((0, 1))

    @classmethod
    def monomial(cls, k: int, c=1) -> Polynomial:
        if k < 0:
            raise ValueError("negative exponent; use RationalFunction")
        return cls((0,) * k + (c,))

    @classmethod
    def coerce(cls, value) -> Polynomial:
        if isinstance(value, Polynomial):
            return value
        if isinstance(value, _SCALARS):
            return cls._make(_strip((value,)))
        raise TypeError(f"cannot coerce {value!r} to Polynomial")

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monomial(self) -> bool:
        return bool(self.coeffs) and not any(self.coeffs[:-1])

    def __bool__(self):
        return bool(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    # -- arithmetic --------------------------------------------------------

    def _other(self, other):
        if isinstance(other, Polynomial):
            return other.coeffs
        if isinstance(other, _SCALARS):
            return _strip((other,))
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Polynomial._make(_add(self.coeffs, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Polynomial._make(_sub(self.coeffs, o))

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return Polynomial._make(_sub(o, self.coeffs))

    def __neg__(self):
        return Polynomial._make(tuple(-c for c in self.coeffs))

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return Polynomial._make(_mul(self.coeffs, other.coeffs))
        if isinstance(other, _SCALARS):
            return Polynomial._make(_scale(self.coeffs, other))
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result, base = Polynomial._make((1,)), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        return RationalFunction(self) / other

    def __rtruediv__(self, other):
        return RationalFunction(other) / self

    def divmod(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        """Quotient and remainder over the coefficient field (ints promote to Fraction)."""
        q, r = _divmod_field(self.coeffs, Polynomial.coerce(other).coeffs)
        return Polynomial._make(q), Polynomial._make(r)

    def gcd(self, other: Polynomial) -> Polynomial:
        a, b = self.coeffs, Polynomial.coerce(other).coeffs
        if _all_int(a) and _all_int(b):
            return Polynomial._make(_gcd_int(a, b))
        return Polynomial._make(_gcd_field(a, b))

    def __call__(self, x0):
        return poly_eval(self, x0)

    def map_coeffs(self, f) -> Polynomial:
        return Polynomial(f(c) for c in self.coeffs)

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, _SCALARS):
            return self.coeffs == _strip((other,))
        return NotImplemented

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self[0])
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if not mono:
                terms.append(str(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}*{mono}")
        return " + ".join(terms).replace("+ -", "- ")

    def to_json(self) -> list:
        return [_coeff_json(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data) -> Polynomial:
        return cls(_coeff_from_json(c) for c in data)


def _coeff_json(c):
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    if isinstance(c, EisensteinRational):
        return c.to_json()
    raise TypeError(f"no JSON encoding for coefficient {c!r}")


def _coeff_from_json(c):
    if isinstance(c, int):
        return c
    if isinstance(c, str):
        q = Fraction(c)
        return q.numerator if q.denominator == 1 else q
    if isinstance(c, list):
        return EisensteinRational.from_json(c)
    raise TypeError(f"bad coefficient encoding {c!r}")


X = Polynomial.x()


def poly_eval(p: Polynomial, x0):
    """Horner evaluation of ``p`` at ``x0``."""
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x0 + c
    return acc


def poly_arith(op: str, p: Polynomial, q: Polynomial) -> Polynomial:
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown polynomial operation {op!r}")


# ---------------------------------------------------------------------------
# RationalFunction
# ---------------------------------------------------------------------------

_ONE = (1,)


def _normalize_int(num: tuple, den: tuple) -> tuple[tuple, tuple]:
    """Canonical form for integer numerator and denominator."""
    if not den:
        raise ZeroDivisionError("rational function with zero denominator")
    if not num:
        return (), _ONE
    if den == _ONE:
        return num, den
    k = min(_low_zeros(num), _low_zeros(den))
    if k:
        num, den = num[k:], den[k:]
    if len(den) > 1 and len(num) > 1:
        # a monomial on either side is coprime to the other once x^k is removed
        if any(num[:-1]) and any(den[:-1]):
            g = _gcd_int(num, den)
            if len(g) > 1:
                num = _exact_div_int(num, g)
                den = _exact_div_int(den, g)
    c = _content(den)
    if c != 1:
        c = gcd(c, _content(num))
    if den[-1] < 0:
        c = -c
    if c != 1:
        num = tuple(v // c for v in num)
        den = tuple(v // c for v in den)
    return num, den


def _clear_fractions(num: tuple, den: tuple) -> tuple[tuple, tuple]:
    ln = lcm(*(Fraction(c).denominator for c in num)) if num else 1
    ld = lcm(*(Fraction(c).denominator for c in den))
    num = tuple(int(Fraction(c) * ln * ld) for c in num)
    den = tuple(int(Fraction(c) * ld * ln) for c in den)
    return num, den


def _normalize(num: tuple, den: tuple) -> tuple[tuple, tuple]:
    if not den:
        raise ZeroDivisionError("rational function with zero denominator")
    if _all_int(num) and _all_int(den):
        return _normalize_int(num, den)
    if not any(isinstance(c, EisensteinRational) for c in num + den):
        return _normalize_int(*_clear_fractions(num, den))
    num = tuple(EisensteinRational.coerce(c) for c in num)
    den = tuple(EisensteinRational.coerce(c) for c in den)
    if not num:
        return (), _ONE
    k = min(_low_zeros(num), _low_zeros(den))
    if k:
        num, den = num[k:], den[k:]
    if len(den) > 1 and len(num) > 1:
        g = _gcd_field(num, den)
        if len(g) > 1:
            num = _divmod_field(num, g)[0]
            den = _divmod_field(den, g)[0]
    lc = den[-1]
    if lc != 1:
        inv = lc.inverse()
        num = tuple(c * inv for c in num)
        den = tuple(c * inv for c in den)
    if all(c.is_rational() for c in num) and all(c.is_rational() for c in den):
        num = tuple(c.to_rational() for c in num)
        den = tuple(c.to_rational() for c in den)
        return _normalize_int(*_clear_fractions(num, den))
    return num, den


class RationalFunction:
    """Reduced fraction ``num / den`` of polynomials in ``x``."""

    __slots__ = ("num", "den", "_int")

    def __init__(self, num=0, den=1):
        if isinstance(num, RationalFunction) or isinstance(den, RationalFunction):
            f = RationalFunction.coerce(num) / RationalFunction.coerce(den)
            self.num, self.den, self._int = f.num, f.den, f._int
            return
        self._set(*_normalize(Polynomial.coerce(num).coeffs, Polynomial.coerce(den).coeffs))

    def _set(self, num: tuple, den: tuple) -> None:
        self.num = Polynomial._make(num)
        self.den = Polynomial._make(den)
        self._int = _all_int(num) and _all_int(den)

    @classmethod
    def _make(cls, num: tuple, den: tuple) -> RationalFunction:
        f = cls.__new__(cls)
        f._set(*_normalize(num, den))
        return f

    @classmethod
    def _make_int(cls, num: tuple, den: tuple) -> RationalFunction:
        f = cls.__new__(cls)
        f.num, f.den = (Polynomial._make(t) for t in _normalize_int(num, den))
        f._int = True
        return f

    @classmethod
    def _canonical(cls, num: tuple, den: tuple, is_int: bool) -> RationalFunction:
        f = cls.__new__(cls)
        f.num = Polynomial._make(num)
        f.den = Polynomial._make(den)
        f._int = is_int
        return f

    @classmethod
    def coerce(cls, value) -> RationalFunction:
        if isinstance(value, RationalFunction):
            return value
        if isinstance(value, int):
            return cls._canonical(_strip((value,)), _ONE, True)
        return cls(value)

    @classmethod
    def x(cls) -> RationalFunction:
        return cls._canonical((0, 1), _ONE, True)

    @classmethod
    def x_pow(cls, k: int) -> RationalFunction:
        """``x**k`` for any integer ``k``; negative powers have denominator ``x**-k``."""
        if k >= 0:
            return cls._canonical((0,) * k + (1,), _ONE, True)
        return cls._canonical(_ONE, (0,) * (-k) + (1,), True)

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num.coeffs

    def is_polynomial(self) -> bool:
        return self.den.coeffs == _ONE

    def is_rational(self) -> bool:
        """True when every coefficient lies in Q (no w-part)."""
        return self._int

    def as_polynomial(self) -> Polynomial:
        if not self.is_polynomial():
            raise ValueError(f"{self} is not a polynomial")
        return self.num

    def __bool__(self):
        return bool(self.num.coeffs)

    # -- arithmetic --------------------------------------------------------

    @staticmethod
    def _parts(other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (Polynomial,) + _SCALARS):
            return RationalFunction.coerce(other)
        return None

    def __add__(self, other):
        o = self._parts(other)
        if o is None:
            return NotImplemented
        n1, d1, n2, d2 = self.num.coeffs, self.den.coeffs, o.num.coeffs, o.den.coeffs
        if self._int and o._int:
            if not n1:
                return o
            if not n2:
                return self
            if d1 == d2:
                if d1 == _ONE:
                    return RationalFunction._canonical(_add(n1, n2), _ONE, True)
                return RationalFunction._make_int(_add(n1, n2), d1)
            return RationalFunction._make_int(_add(_mul(n1, d2), _mul(n2, d1)), _mul(d1, d2))
        return RationalFunction._make(_add(_mul(n1, d2), _mul(n2, d1)), _mul(d1, d2))

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._canonical(tuple(-c for c in self.num.coeffs), self.den.coeffs, self._int)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._parts(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._parts(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._parts(other)
        if o is None:
            return NotImplemented
        n1, d1, n2, d2 = self.num.coeffs, self.den.coeffs, o.num.coeffs, o.den.coeffs
        if self._int and o._int:
            if d1 == _ONE and d2 == _ONE:
                return RationalFunction._canonical(_mul(n1, n2), _ONE, True)
            return RationalFunction._make_int(_mul(n1, n2), _mul(d1, d2))
        return RationalFunction._make(_mul(n1, n2), _mul(d1, d2))

    __rmul__ = __mul__

    def inverse(self) -> RationalFunction:
        if not self.num.coeffs:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction._make(self.den.coeffs, self.num.coeffs)

    def __truediv__(self, other):
        o = self._parts(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._parts(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = RationalFunction.coerce(1)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, x0):
        return self.evaluate(x0)

    def evaluate(self, x0):
        d = poly_eval(self.den, x0)
        if not d:
            raise DomainError(f"denominator {self.den} vanishes at x = {x0}")
        n = poly_eval(self.num, x0)
        if isinstance(n, int) and isinstance(d, int):
            return Fraction(n, d)
        return n / d

    def map_coeffs(self, f) -> RationalFunction:
        return RationalFunction(self.num.map_coeffs(f), self.den.map_coeffs(f))

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.num.coeffs == other.num.coeffs and self.den.coeffs == other.den.coeffs
        if isinstance(other, (Polynomial,) + _SCALARS):
            return self == RationalFunction.coerce(other)
        return NotImplemented

    def __hash__(self):
        if self.den.coeffs == _ONE:
            return hash(self.num)
        return hash((self.num.coeffs, self.den.coeffs))

    def __repr__(self):
        return f"RationalFunction({list(self.num.coeffs)!r}, {list(self.den.coeffs)!r})"

    def __str__(self):
        if self.den.coeffs == _ONE:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data) -> RationalFunction:
        if isinstance(data, dict):
            return cls(Polynomial.from_json(data["num"]), Polynomial.from_json(data["den"]))
        return cls(Polynomial.from_json(data))


def ratfunc_arith(op: str, f: RationalFunction, g: RationalFunction) -> RationalFunction:
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "div":
        return f / g
    raise ValueError(f"unknown rational-function operation {op!r}")
