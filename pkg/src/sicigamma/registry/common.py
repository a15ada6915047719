"""Shorthands shared by the catalog modules."""

from __future__ import annotations

import math

import numpy as np

from .. import specfun as sf
from ..numcore import EPS, Approx, constant
from ..quad import QuadTask, integrate
from ..series import PowerLaw, SeriesTask, Alternating, sum_fourier_pointwise, sum_series
from .model import Param

PI = math.pi
TWO_PI = 2.0 * math.pi

GAMMA = constant("euler_gamma")
LOG2 = constant("log2")
LOG_2PI = constant("log_2pi")
CATALAN = constant("catalan")
ZETA2 = constant("zeta2")
ZETA3 = constant("zeta3")
ZETA_P2 = constant("zeta_prime_2")
ZETA_PP2 = constant("zeta_second_2")
ZETA_P_NEG1 = constant("zeta_prime_neg1")
LOG_GLAISHER = Approx(math.log(constant("glaisher").value), 1e-15)

g_val = GAMMA.value


def exact(x) -> Approx:
    """A float computed from exact inputs with a few roundings."""
    x = float(x)
    return Approx(x, 8.0 * EPS * abs(x))


def Q(f, lo, hi, **kw) -> Approx:
    kw.setdefault("abs_tol", 1e-13)
    kw.setdefault("rel_tol", 1e-12)
    return integrate(QuadTask(f, lo, hi, **kw)).approx


def S(term, p, max_terms=8192, log_terms=False, start=1, term_err=EPS) -> Approx:
    """Power-law series summed with Richardson extrapolation."""
    task = SeriesTask(term, start_index=start, tail_model=PowerLaw(p), acceleration="richardson_power",
                      max_terms=max_terms, abs_tol=1e-10, log_terms=log_terms, term_err=term_err)
    return sum_series(task).approx


def S_alt(term, max_terms=2048, term_err=EPS) -> Approx:
    task = SeriesTask(term, tail_model=Alternating(), acceleration="euler_alternating",
                      max_terms=max_terms, abs_tol=1e-10, term_err=term_err)
    return sum_series(task).approx


def P(term, x, max_terms=1 << 15, denominator=None) -> Approx:
    return sum_fourier_pointwise(term, x, max_terms=max_terms, denominator=denominator).approx


def fl(n):
    return np.asarray(n, dtype=np.float64)


def ci(x):
    return sf.ci_array(x)


def si(x):
    return sf.si_lower_array(x)


def f_aux(x):
    return sf.sici_array(x)[2]


def g_aux(x):
    return sf.sici_array(x)[3]


def Ci(x) -> Approx:
    return sf.cosine_int(x)


def si_(x) -> Approx:
    return sf.si_lower(x)


def fw(x) -> Approx:
    """sin x Ci(x) - cos x si(x) assembled from its parts."""
    c, s = Ci(x), si_(x)
    return c * math.sin(x) - s * math.cos(x)


def gw(x) -> Approx:
    """-(cos x Ci(x) + sin x si(x)) assembled from its parts."""
    c, s = Ci(x), si_(x)
    return -(c * math.cos(x) + s * math.sin(x))


def lgam(x) -> Approx:
    return sf.log_gamma(x)


def psi(x) -> Approx:
    return sf.digamma(x)


def log(x) -> Approx:
    x = float(x)
    v = math.log(x)
    return Approx(v, 2.0 * EPS * abs(v))


def bk(v):
    return sf.bernoulli_kernel(v)


def stirling_rest(z) -> Approx:
    """log Gamma(z) - (1/2) log 2 pi - (z - 1/2) log z + z."""
    return lgam(z) - 0.5 * LOG_2PI - (z - 0.5) * log(z) + z


def param_a(default=0.7, sweep=(0.25, 0.5, 1.0, 1.7), hi=None):
    return Param("a", default, lo=0.0, hi=hi, sweep=sweep)


def param_n(default=3, sweep=(1, 2, 5), hi=1000):
    return Param("n", default, lo=1, hi=hi, sweep=sweep, integer=True, lo_open=False)


def param_x01(default, sweep):
    return Param("x", default, lo=0.0, hi=1.0 - 1e-12, sweep=sweep)


def log_barnes(z) -> Approx:
    return sf.barnes_log_G(z)


# coefficients of csc x - 1/x in powers of x
_CSC_COEF = (1.0 / 6.0, 7.0 / 360.0, 31.0 / 15120.0, 127.0 / 604800.0,
             73.0 / 3421440.0, 1414477.0 / 653837184000.0)


def cosec_gap(u):
    """1/u - pi/sin(pi u) on (0, 1), series near u = 0."""
    u = np.asarray(u, dtype=np.float64)
    x = PI * u
    out = np.empty_like(u)
    small = x < 0.1
    xs = x[small]
    x2 = xs * xs
    acc = np.zeros_like(xs)
    for c in _CSC_COEF[::-1]:
        acc = acc * x2 + c
    out[small] = -PI * acc * xs
    xl = x[~small]
    out[~small] = PI * (1.0 / xl - 1.0 / np.sin(xl))
    return out


def planck(v, scale=TWO_PI):
    """v / (e^{scale v} - 1), finite at 0 and without overflow."""
    v = np.asarray(v, dtype=np.float64)
    e = np.exp(-scale * v)
    return v * e / -np.expm1(-scale * v)


def coth_kernel(v):
    """(pi v coth pi v - 1) / v^2 written through the Bernoulli kernel."""
    v = np.asarray(v, dtype=np.float64)
    return TWO_PI * bk(TWO_PI * v) / v


def barnes_series_rhs(u) -> Approx:
    """Closed form of sum over n of -g(2 n pi u)/(2 n pi)^2."""
    head = 0.5 * (log_barnes(1.0 + u) - u * lgam(u))
    poly = 0.25 * (u * (u - 1.0) + 1.0 / 6.0)
    return head + poly * log(u) - exact(u * u / 8.0) + 0.5 * (1.0 / 12.0 - ZETA_P_NEG1)

HALF_LOG_2PI = 0.5 * LOG_2PI.value
