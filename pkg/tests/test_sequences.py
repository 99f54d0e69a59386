import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bjacobsthal.bihyperbolic import Bihyperbolic
from bjacobsthal.eisenstein import OMEGA1, OMEGA2
from bjacobsthal.polyring import X, Polynomial, RationalFunction, poly_eval
from bjacobsthal.sequences import (
    SeqParams,
    binet_constants,
    bj,
    bj_binet,
    bj_rec,
    cal_A,
    cal_B,
    cal_T,
    engine_for,
    jacobsthal_ext,
    jacobsthal_poly,
    z_seq,
)
from oracles import JACOBSTHAL_INT, at, int_bj

P123 = SeqParams(1, 2, 3)
x = RationalFunction.x()
params_strategy = st.builds(SeqParams, *(st.integers(min_value=1, max_value=6),) * 3)


def _omega_free(u: Bihyperbolic) -> bool:
    return all(c.is_rational() for c in u.components)


def test_params_validation():
    with pytest.raises(ValueError):
        SeqParams(0, 2, 3)
    assert SeqParams().as_dict() == {"a": 1, "b": 2, "c": 3}


def test_initial_polynomials():
    assert jacobsthal_poly(0) == Polynomial(())
    assert jacobsthal_poly(1) == Polynomial([1])
    assert jacobsthal_poly(2) == X - 1
    assert jacobsthal_poly(3) == X * X - X
    assert jacobsthal_poly(4) == X ** 3 - X ** 2 + 1


def test_integer_specialization():
    assert [poly_eval(jacobsthal_poly(n), 2) for n in range(9)] == [0, 1, 1, 2, 5, 9, 18, 37, 73]
    assert [poly_eval(jacobsthal_poly(n), 2) for n in range(40)] == JACOBSTHAL_INT[:40]


@pytest.mark.parametrize("n", range(1, 31))
def test_degree_and_leading_coefficient(n):
    p = jacobsthal_poly(n)
    assert p.degree == n - 1
    assert p.lc == 1


def test_negative_indices():
    assert jacobsthal_ext(1) == 1
    assert jacobsthal_ext(-1) == 0
    assert jacobsthal_ext(-2) == 1 / x
    for n in range(-12, 0):
        # the forward recurrence still holds across negative indices
        lhs = jacobsthal_ext(n + 3)
        rhs = (x - 1) * jacobsthal_ext(n + 2) + (x - 1) * jacobsthal_ext(n + 1) + x * jacobsthal_ext(n)
        assert lhs == rhs
        assert jacobsthal_ext(n).den.is_monomial()


@pytest.mark.parametrize("n", range(0, 31))
def test_lemma_triple_sum_scalar(n):
    assert jacobsthal_poly(n + 2) + jacobsthal_poly(n + 1) + jacobsthal_poly(n) == X ** (n + 1)


def test_bj_examples():
    assert bj(0, P123) == (0, 1, x - 1, x * x - x)
    assert at(bj(0, P123), 2) == (0, 1, 1, 2)
    assert at(bj(2, P123), 2) == (1, 2, 5, 9)
    assert at(bj_rec(3, P123), 2) == (2, 5, 9, 18)
    assert bj_rec(10, P123) == bj(10, P123)


@pytest.mark.parametrize("abc", [(1, 2, 3), (3, 1, 2), (4, 4, 4), (2, 5, 1)])
def test_bj_at_two_matches_integer_oracle(abc):
    for n in range(25):
        assert at(bj(n, SeqParams(*abc)), 2) == int_bj(n, *abc)


def test_binet_constants():
    k = binet_constants(P123)
    assert k.theta == Bihyperbolic(Polynomial([1]), X, X ** 2, X ** 3)
    assert k.phi1 == Bihyperbolic(1, OMEGA1, OMEGA2, 1)
    assert k.phi2 == k.phi1.map(lambda c: c.conjugate())
    assert binet_constants(SeqParams(3, 3, 3)).phi1 == (1, 1, 1, 1)


@pytest.mark.parametrize("n", [-6, -1, 0, 1, 2, 5, 17])
def test_binet_agrees_with_definition(n):
    for params in (P123, SeqParams(2, 4, 1)):
        assert bj_binet(n, params) == bj(n, params)
        assert _omega_free(bj_binet(n, params))


def test_cal_A():
    assert [cal_A(n) for n in (0, 1, 2)] == [0, 1, -1]
    assert cal_A(-1) == -1
    for n in range(-30, 31):
        assert cal_A(n + 3) == cal_A(n)
        assert cal_A(-n) == -cal_A(n)


@pytest.mark.parametrize("n", range(-5, 21))
def test_z_triple_sum_vanishes(n):
    assert z_seq(n, P123) + z_seq(n + 1, P123) + z_seq(n + 2, P123) == 0


@pytest.mark.parametrize("n", range(0, 11))
def test_z_two_ways(n):
    e = engine_for(SeqParams(2, 1, 3))
    assert e.z_direct(n) == e.z_from_bj(n)
    assert _omega_free(e.z(n))


def test_cal_B():
    assert cal_B(4, 0, P123) == 0
    for n in range(-3, 6):
        for p in (-2, 1, 3):
            assert cal_B(n, p, P123) + cal_B(n + 1, p, P123) + cal_B(n + 2, p, P123) == 0
    # independent expansion through BJ: Z(n) = x^(n+1) theta - (x^2+x+1) BJ(n)
    theta = engine_for(P123).theta_rf
    cyc = x * x + x + 1

    def z(n):
        return theta.scale(x ** (n + 1)) - bj(n, P123).scale(cyc)

    assert cal_B(0, 1, P123) == z(1) - z(0).scale(x)


def test_cal_T():
    assert cal_T(1, P123) == bj(1, P123) - bj(0, P123).scale(x - 1)
    assert at(cal_T(3, P123), 2) == (1, 3, 4, 9)
    with pytest.raises(ValueError):
        cal_T(0, P123)


def test_phi_product_is_rational():
    for abc in itertools.product(range(1, 7), repeat=3):
        assert _omega_free(engine_for(SeqParams(*abc)).phi_product)


def test_cache_matches_fresh_computation():
    from bjacobsthal.sequences import SequenceEngine

    params = SeqParams(3, 2, 4)
    cached = engine_for(params)
    fresh = SequenceEngine(params)
    for n in (7, -3, 12):
        assert cached.bj(n) == fresh.bj(n)
        assert cached.z(n) == fresh.z(n)


@settings(max_examples=40, deadline=None)
@given(params_strategy, st.integers(min_value=-4, max_value=20))
def test_three_constructions_agree(params, n):
    assert bj_binet(n, params) == bj(n, params)
    if n >= 0:
        assert bj_rec(n, params) == bj(n, params)
