"""Fourier coefficients of log Gamma, log x and psi: quadrature vs closed form."""

import numpy as np

from ..specfun import digamma_array, log_gamma_array
from .common import (
    GAMMA, PI, TWO_PI, Ci, Param, Q, log, param_a, param_n, sf, si_,
)
from .model import IdentityRecord


def _w(a, n):
    return TWO_PI * n * a


def a1_lhs(a, n):
    return Q(lambda x: log_gamma_array(x + a) * np.sin(TWO_PI * n * x), 0.0, 1.0)


def a1_rhs(a, n):
    w = _w(a, n)
    c, s = Ci(w), si_(w)
    return -(log(a) - c * np.cos(w) - s * np.sin(w)) * (1.0 / (TWO_PI * n))


def a2_lhs(a, n):
    return Q(lambda x: log_gamma_array(x + a) * np.cos(TWO_PI * n * x), 0.0, 1.0)


def a2_rhs(a, n):
    w = _w(a, n)
    c, s = Ci(w), si_(w)
    return -(-c * np.sin(w) + s * np.cos(w)) * (1.0 / (TWO_PI * n))


def a3_lhs(n):
    return Q(lambda x: np.log(x) * np.cos(n * x), 0.0, TWO_PI, singular_lo=True) * (1.0 / PI)


def a3_rhs(n):
    return -sf.sine_int(TWO_PI * n) * (1.0 / (n * PI))


def a4_lhs(n):
    return Q(lambda x: np.log(x) * np.sin(n * x), 0.0, TWO_PI, singular_lo=True) * (1.0 / PI)


def a4_rhs(n):
    w = TWO_PI * n
    return (Ci(w) - GAMMA - log(w)) * (1.0 / (n * PI))


def a5_lhs(x, a):
    return Q(lambda t: np.log(t) * np.sin(a * t), 0.0, x, singular_lo=True)


def a5_rhs(x, a):
    return (Ci(a * x) - GAMMA - log(x) * np.cos(a * x) - log(a)) * (1.0 / a)


def a6_lhs(a, n):
    return Q(lambda x: digamma_array(x + a) * np.cos(TWO_PI * n * x), 0.0, 1.0)


def a6_rhs(a, n):
    w = _w(a, n)
    c, s = Ci(w), si_(w)
    return s * np.sin(w) + c * np.cos(w)


def a7_lhs(a, n):
    return Q(lambda x: digamma_array(x + a) * np.sin(TWO_PI * n * x), 0.0, 1.0)


def a7_rhs(a, n):
    w = _w(a, n)
    c, s = Ci(w), si_(w)
    return -c * np.sin(w) + s * np.cos(w)


RECORDS = [
    IdentityRecord("A1", "sine coefficients of log Gamma(x+a)", "2.1", a1_lhs, a1_rhs, "MED", "Q vs SF",
                   (param_a(), param_n())),
    IdentityRecord("A2", "cosine coefficients of log Gamma(x+a)", "2.2", a2_lhs, a2_rhs, "MED", "Q vs SF",
                   (param_a(), param_n())),
    IdentityRecord("A3", "cosine coefficients of log x on (0, 2pi)", "3.1", a3_lhs, a3_rhs, "MED", "Q vs SF",
                   (param_n(),)),
    IdentityRecord("A4", "sine coefficients of log x on (0, 2pi)", "3.2", a4_lhs, a4_rhs, "MED", "Q vs SF",
                   (param_n(),)),
    IdentityRecord("A5", "integral of log t sin(at) from 0 to x", "3.3", a5_lhs, a5_rhs, "MED", "Q vs SF",
                   (Param("x", 1.3, lo=0.0, hi=50.0, sweep=(0.5, 1.3, 3.0)),
                    Param("a", 2.2, lo=0.0, hi=50.0, sweep=(0.5, 2.2)))),
    IdentityRecord("A6", "cosine coefficients of psi(x+a)", "4.1", a6_lhs, a6_rhs, "MED", "Q vs SF",
                   (param_a(), param_n())),
    IdentityRecord("A7", "sine coefficients of psi(x+a)", "4.2", a7_lhs, a7_rhs, "MED", "Q vs SF",
                   (param_a(), param_n())),
]
