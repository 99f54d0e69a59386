"""Third-order Jacobsthal polynomials and their generalized bihyperbolic extension.

``J(n)`` obeys ``J(n+3) = (x-1) J(n+2) + (x-1) J(n+1) + x J(n)`` with
``J(0) = 0, J(1) = 1, J(2) = x - 1``.  ``BJ(n) = J(n) + J(n+a) j1 + J(n+b) j2 + J(n+c) j3``.

Negative indices are reached through the backward recurrence
``J(n) = (J(n+3) - (x-1) J(n+2) - (x-1) J(n+1)) / x`` and live in Q(x).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import cached_property, lru_cache

from .bihyperbolic import Bihyperbolic
from .eisenstein import OMEGA1, OMEGA2, EisensteinRational, omega_pow
from .polyring import Polynomial, RationalFunction

__all__ = [
    "InconsistencyError",
    "SeqParams",
    "BinetConstants",
    "SequenceEngine",
    "engine_for",
    "jacobsthal_poly",
    "jacobsthal_ext",
    "bj",
    "bj_rec",
    "bj_binet",
    "binet_constants",
    "z_seq",
    "cal_A",
    "cal_B",
    "cal_T",
]


class InconsistencyError(AssertionError):
    """Two exact computations that must agree did not; always an arithmetic bug."""


_XP = Polynomial.x()
_XM1 = _XP - 1
_X = RationalFunction.x()
_XM1_RF = _X - 1
# x^2 + x + 1 = (x - w1)(x - w2)
CYCLOTOMIC = Polynomial((1, 1, 1))
CYCLOTOMIC_RF = RationalFunction(CYCLOTOMIC)


@dataclass(frozen=True, order=True)
class SeqParams:
    a: int = 1
    b: int = 2
    c: int = 3

    def __post_init__(self):
        for name in ("a", "b", "c"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 1:
                raise ValueError(f"{name} must be an integer >= 1, got {v!r}")

    @property
    def shifts(self) -> tuple[int, int, int, int]:
        return (0, self.a, self.b, self.c)

    def as_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "c": self.c}


# ---------------------------------------------------------------------------
# scalar sequence
# ---------------------------------------------------------------------------

_J_LOCK = threading.Lock()
_J: list[Polynomial] = [Polynomial(()), Polynomial((1,)), _XM1]
_J_EXT: dict[int, RationalFunction] = {}


def jacobsthal_poly(n: int) -> Polynomial:
    """``J(n)`` as an integer polynomial, ``n >= 0``."""
    if n < 0:
        raise ValueError("jacobsthal_poly needs n >= 0; use jacobsthal_ext for negative n")
    if n >= len(_J):
        with _J_LOCK:
            while len(_J) <= n:
                _J.append(_XM1 * _J[-1] + _XM1 * _J[-2] + _XP * _J[-3])
    return _J[n]


def jacobsthal_ext(n: int) -> RationalFunction:
    """``J(n)`` for any integer ``n`` as an element of Q(x)."""
    f = _J_EXT.get(n)
    if f is not None:
        return f
    if n >= 0:
        f = _J_EXT[n] = RationalFunction(jacobsthal_poly(n))
        return f
    for i in range(-1, n - 1, -1):
        if i not in _J_EXT:
            _J_EXT[i] = (
                jacobsthal_ext(i + 3) - _XM1_RF * jacobsthal_ext(i + 2) - _XM1_RF * jacobsthal_ext(i + 1)
            ) / _X
    return _J_EXT[n]


@lru_cache(maxsize=None)
def cal_A(n: int) -> int:
    """``(w1**n - w2**n) / (w1 - w2)``; takes values 0, 1, -1 with period 3."""
    v = (omega_pow(n, 1) - omega_pow(n, 2)) / (OMEGA1 - OMEGA2)
    r = v.to_rational()
    if not isinstance(r, int):
        raise InconsistencyError(f"A({n}) = {v} is not an integer")
    return r


# ---------------------------------------------------------------------------
# bihyperbolic sequence
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BinetConstants:
    theta: Bihyperbolic  # over Polynomial
    phi1: Bihyperbolic  # over EisensteinRational
    phi2: Bihyperbolic


def binet_constants(params: SeqParams) -> BinetConstants:
    return engine_for(params).constants


def _require_rational(value: Bihyperbolic, what: str) -> Bihyperbolic:
    for comp in value.components:
        if not comp.is_rational():
            raise InconsistencyError(f"{what} has a nonzero w-part: {value}")
    return value


class SequenceEngine:
    """Memoized generator of BJ, Z and friends for one ``(a, b, c)``.

    Values are computed once under a lock and never mutated afterwards, so
    concurrent readers only ever see finished results.
    """

    def __init__(self, params: SeqParams):
        self.params = params
        self._lock = threading.RLock()
        self._bj: dict[int, Bihyperbolic] = {}
        self._z: dict[int, Bihyperbolic] = {}
        self._products: dict[tuple, Bihyperbolic] = {}
        self._rec: list[Bihyperbolic] = [
            Bihyperbolic(*(jacobsthal_poly(n + s) for s in params.shifts)) for n in range(3)
        ]

    # -- constants ---------------------------------------------------------

    @cached_property
    def constants(self) -> BinetConstants:
        a, b, c = self.params.a, self.params.b, self.params.c
        theta = Bihyperbolic(Polynomial((1,)), Polynomial.monomial(a), Polynomial.monomial(b), Polynomial.monomial(c))
        one = EisensteinRational(1)
        phi1 = Bihyperbolic(one, omega_pow(a, 1), omega_pow(b, 1), omega_pow(c, 1))
        phi2 = Bihyperbolic(one, omega_pow(a, 2), omega_pow(b, 2), omega_pow(c, 2))
        if phi1.map(EisensteinRational.conjugate) != phi2:
            raise InconsistencyError("phi2 is not the conjugate of phi1")
        return BinetConstants(theta, phi1, phi2)

    @cached_property
    def theta_rf(self) -> Bihyperbolic:
        return self.constants.theta.map(RationalFunction)

    @cached_property
    def phi_product(self) -> Bihyperbolic:
        """``phi1 * phi2`` embedded as rational constants (its w-part must vanish)."""
        prod = self.constants.phi1 * self.constants.phi2
        for comp in prod.components:
            if not comp.is_rational():
                raise InconsistencyError(f"phi1*phi2 has a nonzero w-part: {prod}")
        return prod.map(lambda e: RationalFunction(e.to_rational()))

    # -- BJ ----------------------------------------------------------------

    def bj(self, n: int) -> Bihyperbolic:
        """Definition: componentwise ``J(n + shift)`` over Q(x)."""
        v = self._bj.get(n)
        if v is None:
            with self._lock:
                v = Bihyperbolic(*(jacobsthal_ext(n + s) for s in self.params.shifts))
                self._bj[n] = v
        return v

    def bj_rec(self, n: int) -> Bihyperbolic:
        """BJ(n) over integer polynomials, generated only by the bihyperbolic recurrence."""
        if n < 0:
            raise ValueError("bj_rec needs n >= 0")
        rec = self._rec
        if n >= len(rec):
            with self._lock:
                while len(rec) <= n:
                    rec.append(rec[-1] * _XM1 + rec[-2] * _XM1 + rec[-3] * _XP)
        return rec[n]

    def bj_binet(self, n: int) -> Bihyperbolic:
        """Closed form evaluated over Q(w)(x); the w-part of the result must vanish."""
        k = self.constants
        diff = OMEGA1 - OMEGA2
        lin1 = RationalFunction(Polynomial((-OMEGA1, 1)) * diff)
        lin2 = RationalFunction(Polynomial((-OMEGA2, 1)) * diff)
        head = self.theta_rf.scale(RationalFunction.x_pow(n + 1) / CYCLOTOMIC_RF)
        w1 = omega_pow(n + 1, 1)
        w2 = omega_pow(n + 1, 2)
        tail = Bihyperbolic(*(
            RationalFunction(w2 * p2) / lin2 - RationalFunction(w1 * p1) / lin1
            for p1, p2 in zip(k.phi1.components, k.phi2.components)
        ))
        return _require_rational(head + tail, f"Binet value BJ({n})")

    # -- Z, B, T -----------------------------------------------------------

    def z_direct(self, n: int) -> Bihyperbolic:
        """``((w1 x - 1) w1^n phi1 - (w2 x - 1) w2^n phi2) / (w1 - w2)`` in Q(w)[x]."""
        k = self.constants
        inv = (OMEGA1 - OMEGA2).inverse()
        l1 = Polynomial((-1, OMEGA1)) * omega_pow(n, 1)
        l2 = Polynomial((-1, OMEGA2)) * omega_pow(n, 2)
        out = Bihyperbolic(*(
            RationalFunction((l1 * p1 - l2 * p2) * inv)
            for p1, p2 in zip(k.phi1.components, k.phi2.components)
        ))
        return _require_rational(out, f"Z({n})")

    def z_from_bj(self, n: int) -> Bihyperbolic:
        """``x^(n+1) theta - (x^2 + x + 1) BJ(n)``."""
        return self.theta_rf.scale(RationalFunction.x_pow(n + 1)) - self.bj(n).scale(CYCLOTOMIC_RF)

    def z(self, n: int) -> Bihyperbolic:
        v = self._z.get(n)
        if v is None:
            direct = self.z_direct(n)
            if direct != self.z_from_bj(n):
                raise InconsistencyError(f"Z({n}) disagrees between its two constructions")
            with self._lock:
                self._z[n] = v = direct
        return v

    def product(self, kind: str, i: int, j: int) -> Bihyperbolic:
        """Memoized ``BJ(i) * BJ(j)`` (kind ``"bj"``) or ``Z(i) * Z(j)`` (kind ``"z"``)."""
        if i > j:
            i, j = j, i
        key = (kind, i, j)
        v = self._products.get(key)
        if v is None:
            seq = self.bj if kind == "bj" else self.z
            v = self._products[key] = seq(i) * seq(j)
        return v

    def clear_products(self) -> None:
        self._products = {}

    def cal_B(self, n: int, p: int) -> Bihyperbolic:
        """``Z(n+p) - x^p Z(n)``."""
        return self.z(n + p) - self.z(n).scale(RationalFunction.x_pow(p))

    def cal_T(self, n: int) -> Bihyperbolic:
        """``BJ(n) - (x-1) BJ(n-1)`` over integer polynomials, ``n >= 1``."""
        if n < 1:
            raise ValueError("cal_T needs n >= 1")
        return self.bj_rec(n) - self.bj_rec(n - 1).scale(_XM1)


@lru_cache(maxsize=None)
def engine_for(params: SeqParams) -> SequenceEngine:
    return SequenceEngine(params)


def bj(n: int, params: SeqParams) -> Bihyperbolic:
    return engine_for(params).bj(n)


def bj_rec(n: int, params: SeqParams) -> Bihyperbolic:
    return engine_for(params).bj_rec(n)


def bj_binet(n: int, params: SeqParams) -> Bihyperbolic:
    return engine_for(params).bj_binet(n)


def z_seq(n: int, params: SeqParams) -> Bihyperbolic:
    return engine_for(params).z(n)


def cal_B(n: int, p: int, params: SeqParams) -> Bihyperbolic:
    return engine_for(params).cal_B(n, p)


def cal_T(n: int, params: SeqParams) -> Bihyperbolic:
    return engine_for(params).cal_T(n)
