"""Exact checkers, one per identity satisfied by the bihyperbolic Jacobsthal sequence.

Every checker builds both sides in Q(x) (componentwise for bihyperbolic values)
and returns an :class:`IdentityReport`.  Shifts may be negative throughout;
negative indices are handled by the rational extension of the sequence.
"""

from __future__ import annotations

from .polyring import Polynomial, RationalFunction
from .report import IdentityReport
from .sequences import (
    CYCLOTOMIC_RF,
    SeqParams,
    cal_A,
    engine_for,
    jacobsthal_ext,
    jacobsthal_poly,
)

__all__ = [
    "check_lemma1",
    "check_triple_sum",
    "check_vajda",
    "check_catalan",
    "check_cassini",
    "check_docagne",
    "check_partial_sum_scalar",
    "check_partial_sum",
    "check_recurrence",
    "check_binet",
]

_X = RationalFunction.x()
_CYC_SQ = CYCLOTOMIC_RF * CYCLOTOMIC_RF
_SUM_DEN = 3 * (_X - 1)


def _xp(k: int) -> RationalFunction:
    return RationalFunction.x_pow(k)


def _labels(params: SeqParams, **kw) -> dict:
    return {**kw, **params.as_dict()}


def check_lemma1(n: int) -> IdentityReport:
    """``J(n+2) = -J(n+1) - J(n) + x^(n+1)``."""
    if n < 0:
        raise ValueError("check_lemma1 needs n >= 0")
    lhs = jacobsthal_poly(n + 2)
    rhs = -jacobsthal_poly(n + 1) - jacobsthal_poly(n) + Polynomial.monomial(n + 1)
    return IdentityReport.compare("lemma1", {"n": n}, lhs, rhs)


def check_triple_sum(n: int, params: SeqParams) -> IdentityReport:
    """``BJ(n+2) + BJ(n+1) + BJ(n) = x^(n+1) * theta``."""
    e = engine_for(params)
    lhs = e.bj(n + 2) + e.bj(n + 1) + e.bj(n)
    rhs = e.theta_rf.scale(_xp(n + 1))
    return IdentityReport.compare("triple_sum", _labels(params, n=n), lhs, rhs)


def _correction(e, n: int, p: int, q: int):
    """``x^(n+1) * theta * (B(n+q, p) - x^q B(n, p))``."""
    inner = e.cal_B(n + q, p) - e.cal_B(n, p).scale(_xp(q))
    return (e.theta_rf * inner).scale(_xp(n + 1))


def check_vajda(n: int, p: int, q: int, params: SeqParams) -> tuple[IdentityReport, IdentityReport]:
    """Vajda identity for Z (first report) and for BJ (second report)."""
    e = engine_for(params)
    labels = _labels(params, n=n, p=p, q=q)
    constant = e.phi_product.scale(CYCLOTOMIC_RF * (cal_A(p) * cal_A(q)))

    z_lhs = e.product("z", n + p, n + q) - e.product("z", n, n + p + q)
    z_report = IdentityReport.compare("vajda_z", labels, z_lhs, constant)

    bj_lhs = e.product("bj", n + p, n + q) - e.product("bj", n, n + p + q)
    bj_rhs = (constant + _correction(e, n, p, q)) / _CYC_SQ
    bj_report = IdentityReport.compare("vajda_bj", labels, bj_lhs, bj_rhs)
    return z_report, bj_report


def check_catalan(n: int, p: int, params: SeqParams) -> IdentityReport:
    """``BJ(n+p) BJ(n-p) - BJ(n)^2`` against its closed form."""
    e = engine_for(params)
    lhs = e.bj(n + p) * e.bj(n - p) - e.bj(n) * e.bj(n)
    constant = e.phi_product.scale(CYCLOTOMIC_RF * (-cal_A(p) ** 2))
    inner = e.cal_B(n - p, p) - e.cal_B(n, p).scale(_xp(-p))
    rhs = (constant + (e.theta_rf * inner).scale(_xp(n + 1))) / _CYC_SQ
    return IdentityReport.compare("catalan", _labels(params, n=n, p=p), lhs, rhs)


def check_cassini(n: int, params: SeqParams) -> IdentityReport:
    """``BJ(n+1) BJ(n-1) - BJ(n)^2`` against its closed form."""
    e = engine_for(params)
    lhs = e.bj(n + 1) * e.bj(n - 1) - e.bj(n) * e.bj(n)
    constant = -e.phi_product.scale(CYCLOTOMIC_RF)
    inner = e.cal_B(n - 1, 1) - e.cal_B(n, 1).scale(_xp(-1))
    rhs = (constant + (e.theta_rf * inner).scale(_xp(n + 1))) / _CYC_SQ
    return IdentityReport.compare("cassini", _labels(params, n=n), lhs, rhs)


def check_docagne(n: int, m: int, params: SeqParams) -> IdentityReport:
    """``BJ(n+1) BJ(m) - BJ(n) BJ(m+1)``; holds for either ordering of ``m`` and ``n``."""
    e = engine_for(params)
    lhs = e.bj(n + 1) * e.bj(m) - e.bj(n) * e.bj(m + 1)
    constant = e.phi_product.scale(CYCLOTOMIC_RF * cal_A(m - n))
    inner = e.cal_B(m, 1) - e.cal_B(n, 1).scale(_xp(m - n))
    rhs = (constant + (e.theta_rf * inner).scale(_xp(n + 1))) / _CYC_SQ
    return IdentityReport.compare("docagne", _labels(params, n=n, m=m), lhs, rhs)


def check_partial_sum_scalar(n: int) -> IdentityReport:
    """``sum_{s<=n} J(s) = (J(n+2) - (x-2) J(n+1) + x J(n) - 1) / (3(x-1))``."""
    if n < 0:
        raise ValueError("check_partial_sum_scalar needs n >= 0")
    lhs = RationalFunction(sum((jacobsthal_poly(s) for s in range(n + 1)), Polynomial(())))
    rhs = (jacobsthal_ext(n + 2) - (_X - 2) * jacobsthal_ext(n + 1) + _X * jacobsthal_ext(n) - 1) / _SUM_DEN
    return IdentityReport.compare("partial_sum_scalar", {"n": n}, lhs, rhs)


def check_partial_sum(n: int, params: SeqParams) -> IdentityReport:
    """Closed form of ``sum_{s<=n} BJ(s)`` with the ``1/(3(x-1))`` prefactor."""
    if n < 0:
        raise ValueError("check_partial_sum needs n >= 0")
    e = engine_for(params)
    lhs = e.bj(0)
    for s in range(1, n + 1):
        lhs = lhs + e.bj(s)
    x = _X
    numer = (
        e.bj(0).scale(2 * x - 3)
        + e.bj(1).scale(x - 2)
        - e.bj(2)
        + e.bj(n + 2)
        - e.bj(n + 1).scale(x - 2)
        + e.bj(n).scale(x)
    )
    rhs = numer / _SUM_DEN
    return IdentityReport.compare("partial_sum", _labels(params, n=n), lhs, rhs)


def check_recurrence(n: int, params: SeqParams) -> IdentityReport:
    """BJ generated by its own third-order recurrence equals the componentwise definition."""
    e = engine_for(params)
    return IdentityReport.compare("recurrence", _labels(params, n=n), e.bj_rec(n), e.bj(n))


def check_binet(n: int, params: SeqParams) -> IdentityReport:
    """Closed form over Q(w)(x) equals the componentwise definition (any integer ``n``)."""
    e = engine_for(params)
    return IdentityReport.compare("binet", _labels(params, n=n), e.bj_binet(n), e.bj(n))
