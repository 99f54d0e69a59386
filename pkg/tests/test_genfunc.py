from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bjacobsthal.bihyperbolic import Bihyperbolic
from bjacobsthal.genfunc import PowerSeries, check_genfunc, genfunc_components, series_expand
from bjacobsthal.polyring import Polynomial, poly_eval
from bjacobsthal.sequences import SeqParams, bj_rec
from oracles import at

P123 = SeqParams(1, 2, 3)


def test_geometric_series():
    assert list(series_expand([1], [1, -1], 3)) == [1, 1, 1, 1]


def test_non_unit_constant_rejected():
    with pytest.raises(ValueError):
        series_expand([1], [2, 1], 3)
    with pytest.raises(ValueError):
        PowerSeries([1], -1)


def test_components():
    num, den = genfunc_components(P123)
    assert num[0] == bj_rec(0, P123)
    assert [poly_eval(d, 2) for d in den] == [1, -1, -1, -2]
    assert at(num[2], 2) == (0, 0, 2, 2)


def test_expansion_matches_recurrence():
    num, den = genfunc_components(P123)
    series = series_expand(num, den, 12)
    assert list(series) == [bj_rec(k, P123) for k in range(13)]


def test_printed_denominator_differs_at_t2():
    num, den = genfunc_components(P123, printed=True)
    series = series_expand(num, den, 4)
    assert series[0] == bj_rec(0, P123)
    assert series[1] == bj_rec(1, P123)
    assert series[2] != bj_rec(2, P123)
    report = check_genfunc(4, P123, printed_denominator=True)
    assert not report.equal
    assert report.detail == "first mismatching coefficient: t^2"


@pytest.mark.parametrize("N,abc", [(0, (1, 2, 3)), (20, (1, 2, 3)), (20, (3, 1, 2))])
def test_check_genfunc(N, abc):
    assert check_genfunc(N, SeqParams(*abc)).equal


def test_power_series_truncation():
    a = PowerSeries([1, 2, 3], 4)
    b = PowerSeries([1, 1], 2)
    assert (a * b).order == 2
    assert list(a * b) == [1, 3, 5]
    assert list(a + b) == [2, 3, 3]


small = st.integers(min_value=-5, max_value=5)


@settings(max_examples=200, deadline=None)
@given(
    st.lists(small, min_size=1, max_size=4),
    st.sampled_from([1, -1]),
    st.lists(small, max_size=3),
    st.integers(min_value=0, max_value=8),
)
def test_den_times_expansion_recovers_num(num, unit, tail, N):
    den = [unit, *tail]
    series = series_expand(num, den, N)
    prod = PowerSeries(den, N) * series
    assert prod == PowerSeries(num, N)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.builds(Fraction, small, st.integers(1, 4)), min_size=1, max_size=3), st.integers(0, 6))
def test_bihyperbolic_polynomial_coefficients(cs, N):
    num = [Bihyperbolic(Polynomial(cs), 0, Polynomial([0, 1]), 1)]
    den = [Polynomial([1]), Polynomial([0, -1])]
    series = series_expand(num, den, N)
    prod = PowerSeries(den, N) * series
    assert list(prod) == [num[0], *([0 * num[0]] * N)]
