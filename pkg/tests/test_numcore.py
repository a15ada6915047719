import math
from dataclasses import replace
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sicigamma.numcore import (
    CONSTANTS, Approx, UnknownConstantError, approx_add, approx_mul, approx_scale, approx_sum,
    check_entry, constant, value, verify_constants, zeta_jet, zeta_prime_neg1_relation,
)

import frozen

finite = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False)
errs = st.floats(min_value=0.0, max_value=1e-3, allow_nan=False)
approxes = st.builds(Approx, finite, errs)


def test_add_examples():
    r = approx_add(Approx(1.0), Approx(2.0))
    assert r.value == 3.0 and r.err <= 1e-15
    r = Approx(1.0, 1e-9) + Approx(1.0, 1e-9)
    assert r.value == 2.0 and r.err >= 2e-9
    r = Approx(value("euler_gamma"), 1e-14) + Approx(value("log2"), 1e-14)
    assert r.value == pytest.approx(1.270362845461478, abs=1e-15)
    assert r.err >= 2e-14


def test_nan_propagates_with_infinite_bound():
    r = Approx(math.nan, 0.0) + Approx(1.0)
    assert math.isnan(r.value) and r.err == math.inf


def test_negative_err_is_stored_as_magnitude():
    assert Approx(1.0, -0.5).err == 0.5


@given(approxes, approxes)
def test_add_bound_never_shrinks(a, b):
    assert approx_add(a, b).err >= a.err + b.err
    assert (a - b).err >= a.err + b.err


@given(approxes, approxes, st.sampled_from([-1, 1]), st.sampled_from([-1, 1]))
def test_add_and_mul_enclose_exact_corner_results(a, b, sa, sb):
    # any true values inside the input intervals map inside the output interval
    x = Fraction(a.value) + sa * Fraction(a.err)
    y = Fraction(b.value) + sb * Fraction(b.err)
    s = a + b
    assert abs(Fraction(s.value) - (x + y)) <= Fraction(s.err)
    p = a * b
    assert abs(Fraction(p.value) - x * y) <= Fraction(p.err)


@given(approxes, st.floats(min_value=-1e3, max_value=1e3, allow_nan=False))
def test_scale_matches_mul_by_exact(a, c):
    r = approx_scale(a, c)
    assert r.value == c * a.value
    assert r.err >= abs(c) * a.err
    assert (a * c).err >= abs(c) * a.err


@given(st.lists(approxes, min_size=1, max_size=20))
def test_sum_bound_covers_inputs(items):
    r = approx_sum(items)
    assert r.err >= sum(i.err for i in items)
    assert abs(r.value - math.fsum(i.value for i in items)) <= 1e-9 * (1 + abs(r.value))


@given(approxes, st.floats(min_value=0.5, max_value=10.0))
def test_division_encloses(a, d):
    q = a / Approx(d, 1e-6)
    for dd in (d - 1e-6, d + 1e-6):
        for aa in (a.value - a.err, a.value + a.err):
            assert abs(q.value - aa / dd) <= q.err * (1 + 1e-12) + 1e-300


def test_division_by_uncertain_zero_is_unbounded():
    q = Approx(1.0) / Approx(0.0, 1.0)
    assert q.err == math.inf


def test_constant_examples():
    assert constant("euler_gamma").value == 0.5772156649015329
    assert constant("catalan").value == 0.9159655941772190
    assert abs(constant("glaisher").value - 1.282427130) <= 1e-9
    assert constant("zeta_prime_neg1").value == -0.1654211437004509
    assert constant("gamma") == constant("euler_gamma")
    assert constant("euler_gamma").err == 1e-15


def test_unknown_constant():
    with pytest.raises(UnknownConstantError):
        constant("not_a_constant")
    with pytest.raises(KeyError):
        constant("")


@pytest.mark.parametrize("name", sorted(CONSTANTS))
def test_literals_against_frozen_references(name):
    entry = CONSTANTS[name]
    assert abs(entry.value - frozen.CONSTANTS[name]) <= 10.0 ** (-entry.digits)


@pytest.mark.parametrize("name", sorted(CONSTANTS))
def test_recompute_recipes(name):
    ok, diff = check_entry(CONSTANTS[name])
    assert ok, diff
    r = CONSTANTS[name].recompute()
    assert abs(r.value - frozen.CONSTANTS[name]) <= r.err


def test_verify_constants_all_pass():
    out = verify_constants()
    assert all(ok for _, ok in out)
    assert {n for n, _ in out} == set(CONSTANTS) | {"zeta_prime_neg1_relation"}


def test_zeta_prime_relation_on_literals():
    assert zeta_prime_neg1_relation() <= 1e-12


def test_corrupted_literal_is_flagged():
    table = dict(CONSTANTS)
    table["zeta3"] = replace(table["zeta3"], value=1.2020569031596)
    out = dict(verify_constants(table))
    assert out["zeta3"] is False
    assert out["pi"] is True


def test_corrupted_relation_is_flagged():
    table = dict(CONSTANTS)
    table["zeta_prime_2"] = replace(table["zeta_prime_2"], value=-0.93754825)
    assert dict(verify_constants(table))["zeta_prime_neg1_relation"] is False


@pytest.mark.parametrize("s,a,want", [
    (2.0, 1.0, frozen.CONSTANTS["zeta2"]),
    (3.0, 1.0, frozen.CONSTANTS["zeta3"]),
    (2.0, 0.5, 3.0 * frozen.CONSTANTS["zeta2"]),
    (-1.0, 1.0, -1.0 / 12.0),
])
def test_zeta_jet_values(s, a, want):
    assert zeta_jet(s, a)[0] == pytest.approx(want, abs=1e-14)


def test_zeta_jet_derivatives_match_finite_differences():
    h = 1e-4
    v = zeta_jet(2.5)
    lo, hi = zeta_jet(2.5 - h)[0], zeta_jet(2.5 + h)[0]
    assert v[1] == pytest.approx((hi - lo) / (2 * h), abs=1e-7)
    assert v[2] == pytest.approx((hi - 2 * v[0] + lo) / h ** 2, abs=1e-5)


def test_format():
    assert f"{Approx(1.5, 1e-3)}".startswith("1.5 ± 0.001")
