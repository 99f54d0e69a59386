"""Acceptance gate: one test per criterion, each exact, each recorded as a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py`` (the lines appear in the terminal
summary) or ``python tests/test_acceptance.py``.
"""

import itertools
import sys
import time

from hypothesis import given, settings
from hypothesis import strategies as st

from bjacobsthal.bihyperbolic import J1, J3, Bihyperbolic, bh_mul
from bjacobsthal.eisenstein import OMEGA1, OMEGA2, EisensteinRational
from bjacobsthal.genfunc import check_genfunc
from bjacobsthal.identities import check_cassini
from bjacobsthal.matrixgen import Mat3, charpoly, mat_pow, qj_matrix
from bjacobsthal.polyring import X, Polynomial, poly_eval
from bjacobsthal.sequences import (
    InconsistencyError,
    SeqParams,
    _require_rational,
    binet_constants,
    engine_for,
    jacobsthal_poly,
)
from bjacobsthal.suite import SuiteGrid, abc_cube, run_suite, summarize
from oracles import at, bh_ints, bh_polys, fractions, int_bj, table_mul

RESULTS: dict[int, str] = {}

CUBE4 = abc_cube(4)
CUBE3 = abc_cube(3)
P123 = SeqParams(1, 2, 3)


def _record(number: int, title: str, budget: float | None, body):
    start = time.perf_counter()
    ok, note = False, ""
    try:
        note = body() or ""
        ok = True
    except AssertionError as exc:
        note = str(exc) or "assertion failed"
        raise
    finally:
        elapsed = time.perf_counter() - start
        timing = f"{elapsed:.1f}s" + (f" (budget {budget:.0f}s)" if budget else "")
        RESULTS[number] = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title} | {timing}" + (
            f" | {note}" if note else ""
        )


def _suite_all_equal(grid: SuiteGrid) -> str:
    summary = summarize(run_suite(grid))
    assert summary["failed"] == 0, f"first failure: {summary['first_failure']}"
    counts = ", ".join(f"{k}={v['total']}" for k, v in summary["by_identity"].items())
    return f"{summary['total']} reports equal ({counts})"


def test_criterion_1_definition_recurrence_binet():
    def body():
        grid = SuiteGrid(abc=CUBE4, seq_n=tuple(range(0, 41)), only=frozenset({"recurrence", "binet"}))
        return _suite_all_equal(grid)

    _record(1, "bj = bj_rec = bj_binet, n in [0,40], (a,b,c) in [1,4]^3", 30, body)


def test_criterion_2_identity_suite():
    def body():
        grid = SuiteGrid(
            abc=CUBE4,
            lemma_n=tuple(range(0, 31)),
            triple_n=tuple(range(0, 25)),
            vajda_n=tuple(range(0, 13)),
            vajda_p=tuple(range(-4, 5)),
            vajda_q=tuple(range(-4, 5)),
            catalan_n=tuple(range(0, 13)),
            catalan_p=tuple(range(0, 5)),
            cassini_n=tuple(range(1, 13)),
            docagne_n=tuple(range(0, 13)),
            docagne_m=tuple(range(0, 13)),
            sum_n=tuple(range(0, 21)),
            only=frozenset({
                "lemma1", "triple_sum", "vajda", "catalan", "cassini", "docagne",
                "partial_sum_scalar", "partial_sum",
            }),
        )
        return _suite_all_equal(grid)

    _record(2, "identity suite over (a,b,c) in [1,4]^3", 60, body)


def test_criterion_3_integer_specialization():
    def body():
        values = [poly_eval(jacobsthal_poly(n), 2) for n in range(9)]
        assert values == [0, 1, 1, 2, 5, 9, 18, 37, 73], values
        return f"J(0..8)(2) = {values}"

    _record(3, "integer specialization at x = 2", None, body)


def test_criterion_4_cassini_witness():
    def body():
        oracle = tuple(a - b for a, b in zip(table_mul(int_bj(2), int_bj(0)), table_mul(int_bj(1), int_bj(1))))
        assert oracle == (-6, -2, 0, -5), oracle
        report = check_cassini(1, P123)
        assert report.equal
        assert at(report.lhs, 2) == oracle
        assert at(report.rhs, 2) == oracle
        return f"lhs(2) = rhs(2) = {oracle}"

    _record(4, "Cassini witness n=1, (1,2,3), x=2", None, body)


def test_criterion_5_generating_function():
    def body():
        for params in CUBE3:
            r = check_genfunc(20, params)
            assert r.equal, f"corrected denominator fails for {params}"
        printed = check_genfunc(20, P123, printed_denominator=True)
        assert not printed.equal
        assert printed.lhs[2] != printed.rhs[2]
        assert printed.lhs[0] == printed.rhs[0] and printed.lhs[1] == printed.rhs[1]
        return f"corrected: 27/27 equal to t^20; printed: {printed.detail}"

    _record(5, "generating function, corrected vs printed denominator", 10, body)


def test_criterion_6_matrix_identities():
    def body():
        grid = SuiteGrid(
            abc=(), matrix_abc=CUBE3, matrix_n=tuple(range(0, 13)),
            only=frozenset({"column_relation", "matrix_identity"}),
        )
        note = _suite_all_equal(grid)
        Q = qj_matrix()
        assert Q.det() == X
        zero, one = Polynomial(()), Polynomial([1])
        ch = charpoly(Q)
        total = mat_pow(Q, 3) + mat_pow(Q, 2) * ch[2] + Q * ch[1] + Mat3.identity(one, zero) * ch[0]
        assert ch == [-X, 1 - X, 1 - X, 1]
        assert total == Mat3.identity(zero, zero)
        return note + "; det(Q) = x; Cayley-Hamilton holds"

    _record(6, "matrix identities, det(Q_J), Cayley-Hamilton", 20, body)


eis = st.builds(EisensteinRational, fractions, fractions)


@settings(max_examples=200, deadline=None, database=None)
@given(bh_ints, bh_ints, bh_ints)
def _h2_laws_int(u, v, w):
    assert u * v == v * u
    assert (u * v) * w == u * (v * w)
    assert u * (v + w) == u * v + u * w
    assert (u * v).components == table_mul(u.components, v.components)


@settings(max_examples=200, deadline=None, database=None)
@given(bh_polys, bh_polys, bh_polys)
def _h2_laws_poly(u, v, w):
    assert u * v == v * u
    assert (u * v) * w == u * (v * w)
    assert u * (v + w) == u * v + u * w


@settings(max_examples=200, deadline=None, database=None)
@given(eis, eis, eis)
def _eisenstein_laws(u, v, w):
    assert u * v == v * u
    assert (u * v) * w == u * (v * w)
    assert u * (v + w) == u * v + u * w
    assert u + v == v + u
    if u:
        assert u * u.inverse() == 1


def test_criterion_7_algebra_laws():
    def body():
        _h2_laws_int()
        _h2_laws_poly()
        _eisenstein_laws()
        one = Bihyperbolic(1)
        for unit in (J1, J3):
            assert bh_mul(one + unit, one - unit) == 0
            assert bh_mul(one - unit, one + unit) == 0
        assert (OMEGA1 - OMEGA2) ** 2 == -3
        return "H2 over Z and Z[x], Q(w) field laws: 200 cases each; zero divisors 1+-j1, 1+-j3"

    _record(7, "algebra laws", 10, body)


def test_criterion_8_omega_parts_vanish():
    def body():
        # the inconsistency guard is live: a value with w-part must be rejected
        try:
            _require_rational(Bihyperbolic.scalar(EisensteinRational(0, 1)), "probe")
        except InconsistencyError:
            pass
        else:
            raise AssertionError("w-part guard did not fire")
        checked = 0
        for abc in itertools.product(range(1, 7), repeat=3):
            params = SeqParams(*abc)
            k = binet_constants(params)
            prod = k.phi1 * k.phi2
            assert all(c.is_rational() for c in prod.components), f"phi1*phi2 for {abc}"
            checked += 1
        for params in CUBE4:
            e = engine_for(params)
            for n in range(-5, 41):
                for value in (e.bj_binet(n), e.z_direct(n)):
                    assert all(c.is_rational() for c in value.components)
                    checked += 1
        return f"{checked} values with zero w-part"

    _record(8, "w-parts of bj_binet, z_seq, phi1*phi2 vanish", None, body)


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    failed = 0
    for t in tests:
        try:
            t()
        except AssertionError:
            failed += 1
    for n in sorted(RESULTS):
        print(RESULTS[n])
    sys.exit(1 if failed else 0)
