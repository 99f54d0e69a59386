"""Truncated power series in ``t`` and the ordinary generating function of BJ.

The sequence recurrence ``BJ(n) = (x-1) BJ(n-1) + (x-1) BJ(n-2) + x BJ(n-3)``
forces the denominator ``1 - (x-1) t - (x-1) t^2 - x t^3``.  The variant with
``t^3`` in place of ``t^2`` is kept behind ``printed=True`` so its mismatch can
be demonstrated.
"""

from __future__ import annotations

from fractions import Fraction

from .eisenstein import EisensteinRational
from .polyring import Polynomial
from .report import IdentityReport
from .sequences import SeqParams, engine_for

__all__ = ["PowerSeries", "genfunc_components", "series_expand", "check_genfunc"]

_X = Polynomial.x()
_ONE = Polynomial((1,))


class PowerSeries:
    """Coefficients ``c[0..N]`` of a power series in ``t`` modulo ``t^(N+1)``."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order: int, zero=0):
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        cs = list(coeffs)[: order + 1]
        cs.extend([zero] * (order + 1 - len(cs)))
        self.coeffs = tuple(cs)
        self.order = order

    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def _check(self, other: PowerSeries) -> int:
        if not isinstance(other, PowerSeries):
            raise TypeError("expected a PowerSeries")
        return min(self.order, other.order)

    def __add__(self, other):
        n = self._check(other)
        return PowerSeries((a + b for a, b in zip(self.coeffs[: n + 1], other.coeffs)), n)

    def __sub__(self, other):
        n = self._check(other)
        return PowerSeries((a - b for a, b in zip(self.coeffs[: n + 1], other.coeffs)), n)

    def __mul__(self, other):
        n = self._check(other)
        out = []
        for k in range(n + 1):
            acc = self.coeffs[0] * other.coeffs[k]
            for i in range(1, k + 1):
                acc = acc + self.coeffs[i] * other.coeffs[k - i]
            out.append(acc)
        return PowerSeries(out, n)

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self):
        return f"PowerSeries({list(self.coeffs)!r}, order={self.order})"


def genfunc_components(params: SeqParams, printed: bool = False) -> tuple[list, list[Polynomial]]:
    """Numerator (three bihyperbolic coefficients) and denominator (four scalars) in ``t``."""
    e = engine_for(params)
    b0, b1, b2 = e.bj_rec(0), e.bj_rec(1), e.bj_rec(2)
    xm1 = _X - 1
    num = [
        b0,
        b1 - b0.scale(xm1),
        b2 - b1.scale(xm1) - b0.scale(xm1),
    ]
    if printed:
        # 1 - (x-1) t - (x-1) t^3 - x t^3
        den = [_ONE, -xm1, Polynomial(()), -xm1 - _X]
    else:
        den = [_ONE, -xm1, -xm1, -_X]
    return num, den


def _unit_inverse(c):
    if c == 1:
        return None
    if c == -1:
        return -1
    if isinstance(c, (Fraction, EisensteinRational)) and c:
        return 1 / c
    raise ValueError(f"denominator constant term {c} is not a unit")


def series_expand(num, den, N: int) -> PowerSeries:
    """First ``N + 1`` coefficients of ``num(t) / den(t)`` by power-series long division."""
    num, den = list(num), list(den)
    if not den:
        raise ValueError("empty denominator")
    inv = _unit_inverse(den[0])
    zero = 0 * num[0] if num else 0
    out = []
    for k in range(N + 1):
        acc = num[k] if k < len(num) else zero
        for i in range(1, min(k, len(den) - 1) + 1):
            if den[i]:
                acc = acc - den[i] * out[k - i]
        if inv is not None:
            acc = inv * acc
        out.append(acc)
    return PowerSeries(out, N, zero)


def check_genfunc(N: int, params: SeqParams, printed_denominator: bool = False) -> IdentityReport:
    """Series coefficients ``0..N`` of the generating function against the recurrence."""
    if N < 0:
        raise ValueError("N must be >= 0")
    num, den = genfunc_components(params, printed=printed_denominator)
    series = series_expand(num, den, N)
    e = engine_for(params)
    expected = tuple(e.bj_rec(k) for k in range(N + 1))
    report = IdentityReport.compare(
        "genfunc",
        {"N": N, **params.as_dict(), "printed_denominator": printed_denominator},
        series.coeffs,
        expected,
    )
    if not report.equal:
        first = next(k for k in range(N + 1) if series[k] != expected[k])
        report.detail = f"first mismatching coefficient: t^{first}"
    return report
