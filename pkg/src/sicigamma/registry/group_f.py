"""Limits and consistency checks."""

import math

import numpy as np

from ..numcore import EPS, Approx
from ..series import extrapolate, finite_sum_odd_reciprocals
from .common import GAMMA, LOG2, PI, TWO_PI, Param, Q, ci, cosec_gap, exact, log
from .model import IdentityRecord

G_VAL = GAMMA.value


def _limit(ns, values, exponents, log_terms, point_err):
    value, err = extrapolate(ns, values, exponents, log_terms)
    return Approx(value, err + point_err)


def f1_lhs(form, n):
    js = np.arange(6, 12)
    ns = 2.0 ** js
    if form == "2.4":
        y = 1.0 / ns
        vals = np.cos(y) * ci(y) - np.log(y)
        return _limit(ns, vals, (2, 4), True, 1e-14)
    a = 1.0 / ns
    y = TWO_PI * n * a
    if form == "2.5":
        vals = np.cos(y) * ci(y) - np.log(a)
        return _limit(ns, vals, (2, 4), True, 1e-14)
    vals = np.sin(y) * ci(y)
    return _limit(ns, vals, (1, 3), True, 1e-14)


def f1_rhs(form, n):
    if form == "2.4":
        return GAMMA
    if form == "2.5":
        return GAMMA + log(TWO_PI * n)
    return exact(0.0)


def f2_lhs():
    ns = [2 ** j for j in range(4, 13)]
    vals = [finite_sum_odd_reciprocals(n) - math.log(n) for n in ns]
    return _limit(ns, vals, (2, 4, 6), False, 4.0 * EPS * ns[-1])


def f2_rhs():
    return GAMMA + 2.0 * LOG2


def f3_lhs(nmax):
    vals = [Q(lambda u, n=n: cosec_gap(u) * np.cos(TWO_PI * n * u), 0.0, 0.5) for n in range(1, nmax + 1)]
    first = abs(vals[0].value) + vals[0].err
    bad = sum(1 for n, v in enumerate(vals, 1) if n * (abs(v.value) - v.err) > first)
    return Approx(float(bad), 0.0)


def f3_rhs(nmax):
    return Approx(0.0, 0.0)


RECORDS = [
    IdentityRecord("F1", "small-argument limits of Ci", "2.4-2.6", f1_lhs, f1_rhs, "ASYMPT", "L",
                   (Param("form", "2.4", choices=("2.4", "2.5", "2.6"), sweep=("2.4", "2.5", "2.6")),
                    Param("n", 1, lo=1, hi=100, sweep=(1, 3), integer=True, lo_open=False))),
    IdentityRecord("F2", "odd reciprocal sums minus log n", "1.12", f2_lhs, f2_rhs, "ASYMPT", "L"),
    IdentityRecord("F3", "decay of the cosine moments of 1/u - pi/sin(pi u)", "1.13", f3_lhs, f3_rhs, "TIGHT",
                   "decay check: n |I_n| <= |I_1|",
                   (Param("nmax", 64, lo=1, hi=4096, integer=True, lo_open=False),)),
]
