import math
import warnings

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from sicigamma.numcore import value
from sicigamma.series import (
    Alternating, NoTail, PowerLaw, SeriesTask, TailModelWarning, UserBound, euler_average, extrapolate,
    finite_sum_odd_reciprocals, harmonic_partials, period_denominator, richardson, sum_fourier_pointwise,
    sum_series,
)
from sicigamma.specfun import ci_array, digamma, digamma_array

GAMMA = value("euler_gamma")
LOG2 = value("log2")
ZETA2 = value("zeta2")


def inv_sq(n):
    return 1.0 / n.astype(float) ** 2


def alt_inv(n):
    n = n.astype(float)
    return (1.0 - 2.0 * (n % 2 == 0)) / n


def psi_half(n):
    n = n.astype(float)
    return digamma_array(n + 0.5) - np.log(n)


def test_zeta2_power_law():
    r = sum_series(SeriesTask(inv_sq, tail_model=PowerLaw(2.0), max_terms=10_000))
    assert abs(r.value - ZETA2) <= r.err <= 1e-7


def test_zeta2_richardson():
    r = sum_series(SeriesTask(inv_sq, tail_model=PowerLaw(2.0), acceleration="richardson_power",
                              max_terms=4096, abs_tol=1e-12))
    assert abs(r.value - ZETA2) <= r.err <= 1e-11
    assert r.converged


def test_log2_euler():
    r = sum_series(SeriesTask(alt_inv, tail_model=Alternating(), acceleration="euler_alternating", max_terms=2000))
    assert abs(r.value - LOG2) <= r.err <= 1e-12


def test_log2_alternating_bound_is_honest():
    r = sum_series(SeriesTask(alt_inv, tail_model=Alternating(), max_terms=1000))
    assert abs(r.value - LOG2) <= r.err


def test_no_tail_and_user_bound():
    geo = lambda n: 0.5 ** n.astype(float)
    r = sum_series(SeriesTask(geo, tail_model=NoTail(), max_terms=64))
    assert abs(r.value - 1.0) <= r.err
    r = sum_series(SeriesTask(inv_sq, tail_model=UserBound(lambda n: 1.0 / n), max_terms=100))
    assert abs(r.value - ZETA2) <= r.err


def test_sum_of_ci_n_pi():
    r = sum_series(SeriesTask(lambda n: ci_array(math.pi * n.astype(float)), tail_model=PowerLaw(2.0),
                              acceleration="richardson_power", max_terms=1 << 16))
    assert abs(r.value - 0.5 * (LOG2 - GAMMA)) <= max(r.err, 1e-10)
    assert r.err <= 1e-8


def test_alternating_ci_2n_pi():
    def term(n):
        n = n.astype(float)
        return (1.0 - 2.0 * (n % 2)) * ci_array(2 * math.pi * n)

    r = sum_series(SeriesTask(term, tail_model=Alternating(), acceleration="euler_alternating", max_terms=2000))
    assert abs(r.value - (1.0 - 0.5 * GAMMA - LOG2)) <= max(r.err, 1e-10)
    assert r.err <= 1e-8


def test_psi_half_series():
    r = sum_series(SeriesTask(psi_half, tail_model=PowerLaw(2.0), acceleration="richardson_power",
                              max_terms=1 << 16, term_err=4e-15))
    want = GAMMA + math.log(2 / math.pi)
    assert abs(2 * r.value - want) <= 1e-8
    assert abs(2 * r.value - want) <= 2 * r.err


def test_wrong_power_law_warns():
    with pytest.warns(TailModelWarning):
        sum_series(SeriesTask(lambda n: 1.0 / n.astype(float) ** 4, tail_model=PowerLaw(2.0), max_terms=1000))
    with warnings.catch_warnings():
        warnings.simplefilter("error", TailModelWarning)
        sum_series(SeriesTask(inv_sq, tail_model=PowerLaw(2.0), max_terms=1000))


@pytest.mark.parametrize("term", [
    alt_inv,
    lambda n: (1.0 - 2.0 * (n % 2 == 0)) / n.astype(float) ** 2,
    lambda n: (1.0 - 2.0 * (n % 2 == 0)) / np.sqrt(n.astype(float)),
])
def test_euler_agrees_with_direct(term):
    fast = sum_series(SeriesTask(term, tail_model=Alternating(), acceleration="euler_alternating", max_terms=512))
    slow = sum_series(SeriesTask(term, tail_model=Alternating(), max_terms=200_000))
    assert abs(fast.value - slow.value) <= fast.err + slow.err


@pytest.mark.parametrize("term,p", [(inv_sq, 2.0), (lambda n: 1.0 / n.astype(float) ** 3, 3.0), (psi_half, 2.0)])
@pytest.mark.parametrize("accel", ["none", "richardson_power"])
def test_doubling_stays_within_err(term, p, accel):
    a = sum_series(SeriesTask(term, tail_model=PowerLaw(p), acceleration=accel, max_terms=4096, term_err=4e-15))
    b = sum_series(SeriesTask(term, tail_model=PowerLaw(p), acceleration=accel, max_terms=8192, term_err=4e-15))
    assert abs(a.value - b.value) <= a.err


def test_task_validation():
    with pytest.raises(ValueError):
        PowerLaw(1.0)
    with pytest.raises(ValueError):
        SeriesTask(inv_sq, abs_tol=0.0)
    with pytest.raises(ValueError):
        SeriesTask(inv_sq, max_terms=4)
    with pytest.raises(ValueError):
        SeriesTask(inv_sq, acceleration="levin")
    with pytest.raises(ValueError):
        SeriesTask(inv_sq, acceleration="richardson_power")
    with pytest.raises(ValueError, match="term 3"):
        sum_series(SeriesTask(lambda n: np.where(n == 3, np.nan, 1.0 / n ** 2.0), max_terms=16))


def test_odd_reciprocals_examples():
    assert finite_sum_odd_reciprocals(1) == 2.0
    assert finite_sum_odd_reciprocals(2) == pytest.approx(2 + 2 / 3, abs=1e-15)
    d = digamma(10.5)
    assert abs(finite_sum_odd_reciprocals(10) - (d.value + GAMMA + 2 * LOG2)) <= 1e-13
    for bad in (0, -3, 2.5):
        with pytest.raises(ValueError):
            finite_sum_odd_reciprocals(bad)


def test_odd_reciprocals_log_limit():
    n = 10 ** 6
    assert abs(finite_sum_odd_reciprocals(n) - math.log(n) - (GAMMA + 2 * LOG2)) <= 5e-7


def test_harmonic_partials():
    h = harmonic_partials([1, 2, 10])
    assert h[0] == 1.0 and h[1] == 1.5
    assert h[2] == pytest.approx(7381 / 2520, rel=1e-15)


def test_euler_average_needs_two():
    with pytest.raises(ValueError):
        euler_average([1.0])


def test_period_denominator():
    assert period_denominator(0.25) == 4
    assert period_denominator(0.3) == 10
    assert period_denominator(1 / 3) == 3
    assert period_denominator(math.sqrt(2) - 1) is None


def test_fourier_pointwise_sawtooth():
    # sum sin(2 pi n x)/n = pi (1 - 2x)/2 on (0, 1)
    for x in (0.1, 0.3, 0.75):
        r = sum_fourier_pointwise(lambda n: np.sin(2 * math.pi * n * x) / n, x, log_terms=False)
        assert abs(r.value - 0.5 * math.pi * (1 - 2 * x)) <= max(r.err, 1e-9)
        assert r.err <= 1e-6


@given(st.floats(1.5, 4.0), st.floats(-3.0, 3.0), st.floats(-3.0, 3.0))
def test_extrapolate_removes_known_powers(s, c1, c2):
    ns = np.array([64, 128, 256, 512, 1024], dtype=float)
    vals = s + c1 / ns + c2 / ns ** 2
    v, err = extrapolate(ns, vals, [1.0, 2.0])
    assert abs(v - s) <= 1e-10
    assert richardson(ns, vals, [1.0, 2.0]) == v
    assert err >= 0


@given(st.lists(st.floats(-1.0, 1.0), min_size=4, max_size=40))
def test_euler_average_of_constant_tail(noise):
    seq = np.concatenate([np.asarray(noise), np.full(8, 0.125)])
    v, err = euler_average(seq)
    assert v == 0.125 and err <= 1e-15
