"""Definite integrals checked against closed forms or series."""

import math

import numpy as np

from ..numcore import Approx
from ..series import extrapolate
from ..specfun import dilog_array, digamma_array, log_gamma_array
from .common import (
    CATALAN, GAMMA, LOG2, LOG_2PI, LOG_GLAISHER, PI, TWO_PI, ZETA2, ZETA3, ZETA_P2, ZETA_PP2,
    ZETA_P_NEG1, Ci, Param, Q, S, barnes_series_rhs, bk, ci, coth_kernel, cosec_gap, exact,
    f_aux, fw, g_aux, gw, lgam, log, log_barnes, param_a, param_n, planck, psi, si,
    stirling_rest,
)
from .model import IdentityRecord

INF = math.inf

P_A = Param("a", 0.8, lo=0.0, hi=20.0, sweep=(0.3, 0.8, 2.0))
P_MU = Param("mu", 1.7, lo=0.0, hi=20.0, sweep=(0.5, 1.7, 3.0))
P_X = Param("x", 1.5, lo=0.0, hi=20.0, sweep=(0.5, 1.5))


def _v(x):
    return -np.log(x)


# --- sine and cosine integral representations

def b1_lhs():
    head = Q(lambda t: 2.0 * np.sin(0.5 * t) ** 2 / t, 0.0, 1.0)
    tail = Q(lambda t: np.cos(t) / t, 1.0, INF, oscillatory_tail=TWO_PI)
    return head - tail


def b1_rhs():
    return GAMMA


def b2_lhs(n):
    return Q(lambda u: 2.0 * np.sin(n * PI * u) ** 2 / u, 0.0, 0.5)


def b2_rhs(n):
    w = n * PI
    return -Ci(w) + GAMMA + log(w)


def b3_lhs(n):
    return Q(lambda u: cosec_gap(u) * np.cos(TWO_PI * n * u), 0.0, 0.5)


def b3_rhs(n):
    return Ci(n * PI) + psi(n + 0.5) - log(n)


def b4_lhs():
    return Q(lambda x: x / np.sin(x), 0.0, 0.5 * PI)


def b4_rhs():
    return 2.0 * CATALAN


def b5_lhs():
    return Q(lambda x: x * x / np.sin(x), 0.0, 0.5 * PI)


def b5_rhs():
    return TWO_PI * CATALAN - 3.5 * ZETA3


def b6_lhs():
    return Q(lambda u: cosec_gap(u) * (u * u - u + 1.0 / 6.0), 0.0, 0.5) * (PI * PI)


def b6_rhs():
    return -3.0 * PI * PI / 8.0 + 3.5 * ZETA3 + ZETA2 * (log(PI) - 2.0 * LOG2)


# --- Laplace-type integrals and the auxiliary functions

def b7_lhs(a, x):
    return Q(lambda v: np.exp(-x * v) / (a * a + v * v), 0.0, INF)


def b7_rhs(a, x):
    return fw(a * x) * (1.0 / a)


def b8_lhs(a, mu):
    return Q(lambda v: v * np.exp(-mu * v) / (a * a + v * v), 0.0, INF)


def b8_rhs(a, mu):
    return gw(a * mu)


def b9_lhs(a, mu):
    return Q(lambda t: t ** (mu - 1.0) / (a * a + np.log(t) ** 2), 0.0, 1.0, singular_lo=True)


def b9_rhs(a, mu):
    return fw(a * mu) * (1.0 / a)


def b10_lhs(a, mu):
    def f(t):
        L = np.log(t)
        return t ** (mu - 1.0) * L / (a * a + L * L)

    return Q(f, 0.0, 1.0, singular_lo=True)


def b10_rhs(a, mu):
    return -gw(a * mu)


def b11_lhs(a):
    def f(t):
        L = np.log(t)
        return L / (a * a + L * L) ** 2

    return Q(f, 0.0, 1.0, singular_lo=True)


def b11_rhs(a):
    return fw(a) * (0.5 / a) - exact(0.5 / (a * a))


def b12_lhs(a, mu):
    def f(t):
        L2 = np.log(t) ** 2
        return t ** (mu - 1.0) * L2 / (a * a + L2)

    return Q(f, 0.0, 1.0, singular_lo=True)


def b12_rhs(a, mu):
    return exact(1.0 / mu) - a * fw(a * mu)


# --- Binet-type integrals

def b13_lhs(mu):
    def f(x):
        v = _v(x)
        return bk(v) * x ** (mu - 1.0) / v

    return Q(f, 0.0, 1.0, singular_lo=True)


def b13_rhs(mu):
    return stirling_rest(mu)


def b14_lhs():
    def f(x):
        v = _v(x)
        return -bk(v) / v

    return Q(f, 0.0, 1.0, singular_lo=True)


def b14_rhs():
    return 0.5 * LOG_2PI - 1.0


def b15_lhs():
    def f(x):
        v = _v(x)
        return bk(2.0 * v) / v

    return Q(f, 0.0, 1.0, singular_lo=True)


def b15_rhs():
    return 0.5 * (1.0 - LOG2)


def b16_lhs():
    return Q(lambda u: bk(u) * np.exp(-u) / u, 0.0, INF)


def b16_rhs():
    return 1.0 - 0.5 * LOG_2PI


def b17_lhs(a):
    def f(u):
        L = np.log(u)
        return (np.expm1((a - 1.0) * L) / (u - 1.0) - a + 1.0) / L

    return Q(f, 0.0, 1.0, singular_lo=True)


def b17_rhs(a):
    return lgam(a)


def b18_lhs(a):
    def f(u):
        L = np.log(u)
        return (-np.expm1((a - 1.0) * L) + 0.5 * u ** (a - 1.0) * L) / L

    return Q(f, 0.0, 1.0, singular_lo=True)


def b18_rhs(a):
    return exact(0.5 / a) - log(a)


def b19_lhs(a):
    def f(u):
        L = np.log(u)
        return np.expm1((a - 1.0) * L) / L

    return Q(f, 0.0, 1.0, singular_lo=True)


def b19_rhs(a):
    return log(a)


def b20_lhs(a, mu):
    def f(x):
        v = _v(x)
        return (-bk(v / a) - 0.5) * x ** (mu - 1.0)

    return Q(f, 0.0, 1.0, singular_lo=True) * (1.0 / a)


def b20_rhs(a, mu):
    return psi(a * mu) - log(a * mu)


def _b21_partial(eps):
    # b(-log t) + 1/2 = 1/(1 - t) + 1/log t
    def f(t):
        return bk(-np.log(t)) + 0.5

    return Q(f, 0.0, 1.0 - eps, singular_lo=True)


def b21_lhs():
    ns = [2 ** j for j in range(3, 10)]
    parts = [_b21_partial(1.0 / n) for n in ns]
    value, err = extrapolate(ns, [p.value for p in parts], (1, 2, 3, 4))
    return Approx(value, err + max(p.err for p in parts))


def b21_rhs():
    return GAMMA


# --- coth integrals

def b22_lhs():
    return Q(lambda v: coth_kernel(v) * np.exp(-PI * v), 0.0, INF) * 0.5


def b22_rhs():
    return 0.5 * PI * (1.0 - LOG2)


def b23_lhs():
    return Q(lambda v: coth_kernel(v) * np.exp(-TWO_PI * v), 0.0, INF) * 0.5


def b23_rhs():
    return PI - 0.5 * PI * LOG_2PI


def b24_lhs(mu):
    return Q(lambda v: coth_kernel(v) * np.exp(-mu * v), 0.0, INF) * (1.0 / TWO_PI)


def b24_rhs(mu):
    return stirling_rest(mu / TWO_PI)


def b25_lhs(p):
    return Q(lambda x: np.exp(-p * np.tan(x)), 0.0, 0.5 * PI)


def b25_rhs(p):
    return fw(p)


def b26_lhs(a):
    integral = Q(lambda x: np.log(-np.expm1(-TWO_PI * a * np.tan(x))), 0.0, 0.5 * PI, singular_lo=True)
    return 0.5 * LOG_2PI + (a - 0.5) * log(a) - a - integral * (1.0 / PI)


def b26_rhs(a):
    return lgam(a)


# --- Binet digamma integrals

def b27_lhs(a):
    integral = Q(lambda t: planck(t) / (a * a + t * t), 0.0, INF)
    return log(a) - exact(0.5 / a) - 2.0 * integral


def b27_rhs(a):
    return psi(a)


def b28_lhs(mu):
    return Q(lambda v: bk(v) * np.exp(-mu * v), 0.0, INF)


def b28_rhs(mu):
    return log(mu) - psi(mu) - exact(0.5 / mu)


# --- Barnes G, Adamchik and moment integrals

def b29_lhs(u):
    integral = Q(lambda v: planck(v) * np.log(v * v + u * u), 0.0, INF)
    head = exact(0.5 * u * u) * (log(u) - 1.5) + 0.5 * u * LOG_2PI + ZETA_P_NEG1
    return head - integral


def b29_rhs(u):
    return log_barnes(1.0 + u)


def b30_lhs():
    return Q(lambda v: planck(v) * np.log(v), 0.0, INF, singular_lo=True)


def b30_rhs():
    return 0.5 * ZETA_P_NEG1


def b31_lhs(a):
    return Q(lambda x: (1.0 - 2.0 * x) * log_gamma_array(x + a), 0.0, 1.0)


def b31_rhs(a):
    w = TWO_PI * a

    def term(n):
        n = n.astype(np.float64)
        return g_aux(w * n) / (n * n)

    return -log(a) * (1.0 / 6.0) - S(term, 4.0, max_terms=4096) * (1.0 / (PI * PI))


def b32_lhs(a):
    return Q(lambda x: log_gamma_array(x + a), 0.0, 1.0)


def b32_rhs(a):
    return 0.5 * LOG_2PI + a * log(a) - a


def b33_lhs(a):
    return Q(lambda t: t * log_gamma_array(a + t), 0.0, 1.0) * 2.0


def b33_rhs(a):
    la = log(a)
    return (exact(-a + 0.5 * a * a) - 2.0 * LOG_GLAISHER + 0.5 * LOG_2PI + la
            - (a - 1.0) ** 2 * la + 2.0 * (a - 1.0) * lgam(a) - 2.0 * log_barnes(a))


def b34_lhs():
    return Q(lambda x: log_gamma_array(x) ** 2, 0.0, 1.0, singular_lo=True)


def b34_rhs():
    pi2 = PI * PI
    g = GAMMA
    return (g * g * (1.0 / 12.0) + pi2 / 48.0 + g * LOG_2PI * (1.0 / 6.0) + LOG_2PI * LOG_2PI * (1.0 / 3.0)
            - (g + LOG_2PI) * ZETA_P2 * (1.0 / pi2) + ZETA_PP2 * (0.5 / pi2))


def b35_lhs(a):
    return Q(lambda x: digamma_array(x + a) ** 2, 0.0, 1.0)


def b35_rhs(a):
    w = TWO_PI * a

    def term(n):
        x = w * n.astype(np.float64)
        return f_aux(x) ** 2 + g_aux(x) ** 2

    la = log(a)
    return la * la + 2.0 * S(term, 2.0, max_terms=8192)


def b36_lhs():
    return Q(lambda x: log_gamma_array(x + 1.0) ** 2, 0.0, 1.0)


def b36_rhs():
    def term(n):
        n = n.astype(np.float64)
        x = TWO_PI * n
        return (ci(x) ** 2 + si(x) ** 2) / (n * n)

    c0 = 0.5 * LOG_2PI - 1.0
    return c0 * c0 + S(term, 4.0, max_terms=4096) * (0.5 / (PI * PI))


def b37_lhs(u):
    w2 = (TWO_PI * u) ** 2
    integral = Q(lambda v: v * dilog_array(np.exp(-v)) / (w2 + v * v), 0.0, INF)
    return integral * (-0.25 / (PI * PI))


def b37_rhs(u):
    return barnes_series_rhs(u)


P_U = Param("u", 0.5, lo=0.0, hi=4.0, sweep=(0.25, 0.5, 1.0, 2.0))
P_A_BIN = Param("a", 1.0, lo=0.0, hi=50.0, sweep=(0.5, 1.0, 2.0, 5.0))
P_MU_BIN = Param("mu", 1.0, lo=0.0, hi=50.0, sweep=(0.5, 1.0, 2.0, 5.0))
P_A_LOG = param_a(default=0.7, sweep=(0.25, 0.5, 1.0, 1.7), hi=20.0)

RECORDS = [
    IdentityRecord("B1", "Euler's constant from cosine integrals", "1.14", b1_lhs, b1_rhs, "MED", "Q vs constant"),
    IdentityRecord("B2", "integral of 2 sin^2(n pi u)/u on (0, 1/2)", "1.16", b2_lhs, b2_rhs, "MED", "Q vs SF",
                   (param_n(),)),
    IdentityRecord("B3", "cosine moments of 1/u - pi/sin(pi u)", "1.18", b3_lhs, b3_rhs, "MED", "Q vs SF",
                   (param_n(),)),
    IdentityRecord("B4", "integral of x/sin x on (0, pi/2)", "1.28", b4_lhs, b4_rhs, "TIGHT", "Q vs 2G"),
    IdentityRecord("B5", "integral of x^2/sin x on (0, pi/2)", "1.29", b5_lhs, b5_rhs, "TIGHT", "Q vs constants"),
    IdentityRecord("B6", "Bernoulli-weighted moment of 1/u - pi/sin(pi u)", "S-identity", b6_lhs, b6_rhs, "MED",
                   "Q vs constants"),
    IdentityRecord("B7", "Laplace transform of 1/(a^2+v^2)", "5.7", b7_lhs, b7_rhs, "MED", "Q vs SF", (P_A, P_X)),
    IdentityRecord("B8", "Laplace transform of v/(a^2+v^2)", "5.9", b8_lhs, b8_rhs, "MED", "Q vs SF", (P_A, P_MU)),
    IdentityRecord("B9", "t^(mu-1)/(a^2+log^2 t) on (0, 1)", "5.10", b9_lhs, b9_rhs, "MED", "Q vs SF", (P_A, P_MU)),
    IdentityRecord("B10", "t^(mu-1) log t/(a^2+log^2 t) on (0, 1)", "5.12", b10_lhs, b10_rhs, "MED", "Q vs SF",
                   (P_A, P_MU)),
    IdentityRecord("B11", "log t/(a^2+log^2 t)^2 on (0, 1)", "5.14", b11_lhs, b11_rhs, "MED", "Q vs SF", (P_A,)),
    IdentityRecord("B12", "t^(mu-1) log^2 t/(a^2+log^2 t) on (0, 1)", "5.15", b12_lhs, b12_rhs, "MED", "Q vs SF",
                   (P_A, P_MU)),
    IdentityRecord("B13", "Binet's first formula in the variable x = exp(-v)", "5.18", b13_lhs, b13_rhs, "MED",
                   "Q vs SF", (Param("mu", 1.7, lo=0.0, hi=50.0, sweep=(0.5, 1.7, 4.0)),)),
    IdentityRecord("B14", "Binet integral at mu = 1", "5.19", b14_lhs, b14_rhs, "MED", "Q vs constant"),
    IdentityRecord("B15", "Binet integral with doubled kernel", "5.22", b15_lhs, b15_rhs, "MED", "Q vs constant",
                   note="right-hand side sign corrected"),
    IdentityRecord("B16", "Binet integral with weight exp(-u)", "5.23", b16_lhs, b16_rhs, "MED", "Q vs constant"),
    IdentityRecord("B17", "log Gamma(a) as an integral over (0, 1)", "5.26", b17_lhs, b17_rhs, "MED", "Q vs SF",
                   (P_A_LOG,)),
    IdentityRecord("B18", "derivative form of the log Gamma integral", "5.27", b18_lhs, b18_rhs, "MED", "Q vs SF",
                   (P_A_LOG,)),
    IdentityRecord("B19", "Frullani-type integral for log a", "5.28", b19_lhs, b19_rhs, "MED", "Q vs SF",
                   (P_A_LOG,)),
    IdentityRecord("B20", "psi(a mu) - log(a mu) as an integral over (0, 1)", "5.29", b20_lhs, b20_rhs, "MED",
                   "Q vs SF", (P_A, P_MU)),
    IdentityRecord("B21", "Euler's constant as a limit of truncated integrals", "5.30", b21_lhs, b21_rhs, "ASYMPT",
                   "L vs constant"),
    IdentityRecord("B22", "coth integral with mu = pi", "5.33", b22_lhs, b22_rhs, "MED", "Q vs constant",
                   note="right-hand side sign corrected"),
    IdentityRecord("B23", "coth integral with mu = 2 pi", "5.34", b23_lhs, b23_rhs, "MED", "Q vs constant",
                   note="right-hand side sign corrected"),
    IdentityRecord("B24", "coth integral for general mu", "5.34.1", b24_lhs, b24_rhs, "MED", "Q vs SF",
                   (Param("mu", 1.0, lo=0.0, hi=100.0, sweep=(0.5, 1.0, 3.0)),),
                   note="normalisation corrected"),
    IdentityRecord("B25", "f(p) from exp(-p tan x)", "5.35", b25_lhs, b25_rhs, "MED", "Q vs SF",
                   (Param("p", 0.9, lo=0.0, hi=50.0, sweep=(0.3, 0.9, 4.0)),)),
    IdentityRecord("B26", "log Gamma(a) from an integral over (0, pi/2)", "5.36", b26_lhs, b26_rhs, "MED",
                   "Q vs log Gamma", (param_a(default=1.3, sweep=(0.25, 1.3, 4.0), hi=20.0),)),
    IdentityRecord("B27", "Binet's second formula for psi", "6.2", b27_lhs, b27_rhs, "MED", "Q vs psi",
                   (P_A_BIN,)),
    IdentityRecord("B28", "Binet's first formula for psi", "6.3", b28_lhs, b28_rhs, "MED", "Q vs psi",
                   (P_MU_BIN,)),
    IdentityRecord("B29", "log G(1+u) from an integral with log(v^2+u^2)", "7.9", b29_lhs, b29_rhs, "MED",
                   "Q vs Barnes G", (P_U,)),
    IdentityRecord("B30", "integral of v log v/(e^(2 pi v) - 1)", "7.10", b30_lhs, b30_rhs, "MED",
                   "Q vs zeta'(-1)"),
    IdentityRecord("B31", "first moment of log Gamma(x+a) against 1 - 2x", "7.13", b31_lhs, b31_rhs, "MED",
                   "Q vs S", (param_a(),)),
    IdentityRecord("B32", "Raabe's integral", "7.14", b32_lhs, b32_rhs, "MED", "Q vs SF", (param_a(),)),
    IdentityRecord("B33", "first moment of log Gamma(a+t)", "7.15", b33_lhs, b33_rhs, "MED", "Q vs SF",
                   (param_a(),)),
    IdentityRecord("B34", "integral of log^2 Gamma over (0, 1)", "log2gamma", b34_lhs, b34_rhs, "MED",
                   "Q vs constants"),
    IdentityRecord("B35", "Parseval for psi(x+a)", "4.3.1/4.3.2", b35_lhs, b35_rhs, "MED", "Q vs S",
                   (param_a(default=1.0, sweep=(0.5, 1.0, 2.0)),)),
    IdentityRecord("B36", "integral of log^2 Gamma(x+1) over (0, 1)", "log2gamma-shift", b36_lhs, b36_rhs, "MED",
                   "Q vs S"),
    IdentityRecord("B37", "dilogarithm integral", "dilog", b37_lhs, b37_rhs, "MED", "Q vs SF",
                   (Param("u", 0.5, lo=0.0, hi=4.0, sweep=(0.25, 0.5, 1.0)),)),
]
