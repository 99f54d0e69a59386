"""JSON encodings shared by the library and the CLI.

* rational: int, or ``"p/q"`` string
* Eisenstein rational: ``["p/q", "r/s"]`` meaning ``p/q + (r/s)*w``
* polynomial: ascending coefficient array
* rational function: ``{"num": [...], "den": [...]}``; polynomials (denominator 1)
  are written as a bare coefficient array
* bihyperbolic: ``[w, x1, x2, x3]`` in the scalar encoding
"""

from __future__ import annotations

from fractions import Fraction

from .bihyperbolic import Bihyperbolic
from .eisenstein import EisensteinRational
from .polyring import Polynomial, RationalFunction


def encode(value):
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, EisensteinRational):
        return value.to_json()
    if isinstance(value, Polynomial):
        return value.to_json()
    if isinstance(value, RationalFunction):
        if value.is_polynomial():
            return value.num.to_json()
        return value.to_json()
    if isinstance(value, Bihyperbolic):
        return [encode(c) for c in value.components]
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    if value is None:
        return None
    if hasattr(value, "to_json"):
        return value.to_json()
    raise TypeError(f"no JSON encoding for {type(value).__name__}")


def decode_rational(data) -> int | Fraction:
    q = Fraction(data)
    return q.numerator if q.denominator == 1 else q


def decode_ratfunc(data) -> RationalFunction:
    return RationalFunction.from_json(data)


def decode_bihyperbolic(data, scalar=decode_ratfunc) -> Bihyperbolic:
    if len(data) != 4:
        raise ValueError("bihyperbolic JSON must have four components")
    return Bihyperbolic(*(scalar(c) for c in data))
