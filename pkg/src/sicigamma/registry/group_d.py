"""Fourier series evaluated at interior points."""

import math

import numpy as np

from ..series import period_denominator
from ..specfun import kummer_log_gamma, sine_int
from .common import (
    GAMMA, LOG_2PI, PI, TWO_PI, P, Param, S, ci, exact, f_aux, fl, g_aux, lgam, log, param_x01,
    psi, si,
)
from .model import IdentityRecord

G_VAL = GAMMA.value
LOG_2PI_VAL = LOG_2PI.value


def d1_lhs(x):
    return kummer_log_gamma(x)


def d1_rhs(x):
    return lgam(x)


def d2_lhs(x):
    def term(n):
        n = fl(n)
        w = TWO_PI * n
        return (ci(w) * np.sin(w * x) - si(w) * np.cos(w * x)) / (PI * n)

    return 0.5 * LOG_2PI - 1.0 + P(term, x)


def d2_rhs(x):
    return lgam(1.0 + x)


def d3_lhs(a):
    return 0.5 * LOG_2PI + (a - 0.5) * log(a) - a + S(lambda n: f_aux(TWO_PI * a * fl(n)) / (PI * fl(n)), 2.0)


def d3_rhs(a):
    return lgam(a)


def d4_lhs(x):
    def term(n):
        n = fl(n)
        return (1.0 - 2.0 * (n % 2)) * f_aux(TWO_PI * x * n) / (PI * n)

    return 0.5 * LOG_2PI + x * log(x) - x + S(term, 2.0)


def d4_rhs(x):
    return lgam(x + 0.5)


def d5_lhs(x):
    def term(n):
        n = fl(n)
        w = TWO_PI * n
        sin_c = ci(w) - G_VAL - np.log(w)
        return (sin_c * np.sin(w * x) - (si(w) + 0.5 * PI) * np.cos(w * x)) / (PI * n)

    return P(term, x) - 1.0


def d5_rhs(x):
    return log(x)


def d6_lhs(x, form):
    if form == "3.6":
        def term(n):
            n = fl(n)
            return si(TWO_PI * n) * np.cos(TWO_PI * n * x) / n

        return P(term, x) * (-2.0 / PI)

    def term(n):
        n = fl(n)
        return (ci(TWO_PI * n) - np.log(n)) * np.sin(TWO_PI * n * x) / n

    return P(term, x) * (2.0 / PI)


def d6_rhs(x, form):
    if form == "3.6":
        return log(x) + log(1.0 - x) - log(2.0 * math.sin(PI * x)) + 2.0
    return log(x) - log(1.0 - x) + (GAMMA + LOG_2PI) * (1.0 - 2.0 * x)


def d7_lhs(x):
    # the phase (2n+1) pi x repeats in n with the period of x/2
    q = period_denominator(0.5 * x)
    return -P(lambda n: np.sin((2.0 * fl(n) + 1.0) * PI * x) * np.log1p(1.0 / fl(n)), x, denominator=q)


def d7_rhs(x):
    s, c = math.sin(PI * x), math.cos(PI * x)
    return psi(x) * s + exact(0.5 * PI * c) + (GAMMA + LOG_2PI) * s


def d8_lhs(a, x):
    la = math.log(a)

    def term(n):
        n = fl(n)
        w = TWO_PI * a * n
        return (f_aux(w) * np.cos(TWO_PI * n * x) - (la + g_aux(w)) * np.sin(TWO_PI * n * x)) / (PI * n)

    return 0.5 * LOG_2PI + a * log(a) - a + P(term, x)


def d8_rhs(a, x):
    return lgam(a + x)


def d9_lhs(a, x):
    def term(n):
        n = fl(n)
        w = TWO_PI * a * n
        return g_aux(w) * np.cos(TWO_PI * n * x) + f_aux(w) * np.sin(TWO_PI * n * x)

    return log(a) - 2.0 * P(term, x)


def d9_rhs(a, x):
    return psi(x + a)


RECORDS = [
    IdentityRecord("D1", "Kummer's series for log Gamma(x)", "2.7", d1_lhs, d1_rhs, "LOOSE", "P vs log Gamma",
                   (param_x01(0.25, (0.1, 0.25, 0.5, 0.9)),)),
    IdentityRecord("D2", "Fourier series of log Gamma(1+x)", "2.8", d2_lhs, d2_rhs, "LOOSE", "P vs log Gamma",
                   (param_x01(0.3, (0.1, 0.3, 0.75)),)),
    IdentityRecord("D3", "log Gamma(a) as a series in f", "2.11", d3_lhs, d3_rhs, "LOOSE", "S vs log Gamma",
                   (Param("a", 0.7, lo=0.0, hi=20.0, sweep=(0.25, 0.7, 2.5)),)),
    IdentityRecord("D4", "log Gamma(x+1/2) as an alternating series in f", "2.12", d4_lhs, d4_rhs, "LOOSE",
                   "S vs log Gamma", (Param("x", 0.7, lo=0.0, hi=20.0, sweep=(0.25, 0.7, 2.5)),)),
    IdentityRecord("D5", "Fourier series of log x", "3.4", d5_lhs, d5_rhs, "LOOSE", "P vs log",
                   (param_x01(0.3, (0.1, 0.3, 0.75)),)),
    IdentityRecord("D6", "cosine and sine parts of the log x series", "3.6/3.7", d6_lhs, d6_rhs, "LOOSE",
                   "P vs SF",
                   (param_x01(0.3, (0.1, 0.3, 0.75)),
                    Param("form", "3.6", choices=("3.6", "3.7"), sweep=("3.6", "3.7")))),
    IdentityRecord("D7", "Lerch's trigonometric series for psi", "4.10", d7_lhs, d7_rhs, "LOOSE", "P vs psi",
                   (param_x01(0.3, (0.1, 0.3, 0.75)),)),
    IdentityRecord("D8", "Fourier series of log Gamma(a+x)", "2.3", d8_lhs, d8_rhs, "LOOSE", "P vs log Gamma",
                   (Param("a", 0.7, lo=0.0, hi=20.0, sweep=(0.5, 1.7)), param_x01(0.3, (0.25, 0.6)))),
    IdentityRecord("D9", "Fourier series of psi(x+a)", "4.2.1", d9_lhs, d9_rhs, "LOOSE", "P vs psi",
                   (Param("a", 0.7, lo=0.0, hi=20.0, sweep=(0.5, 1.7)), param_x01(0.3, (0.25, 0.6))),
                   questionable=True, note="convergence of the series is not established"),
]
