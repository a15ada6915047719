"""Series with closed-form sums."""

import math

import numpy as np

from ..numcore import Approx
from ..series import finite_sum_odd_reciprocals
from ..specfun import digamma_array, zeta_prime_neg1_hurwitz
from .common import (
    GAMMA, LOG2, LOG_2PI, PI, TWO_PI, ZETA2, ZETA3, ZETA_P_NEG1, Param, Q, S, S_alt,
    barnes_series_rhs, ci, coth_kernel, exact, f_aux, fl, g_aux, lgam, log, log_barnes,
    param_a, planck, psi, si,
)
from .model import IdentityRecord

INF = math.inf
G_VAL = GAMMA.value
# a digamma difference loses a few ulps of psi(n) ~ log n
PSI_TERM_ERR = 4e-15


def c1_lhs(n):
    v = finite_sum_odd_reciprocals(n)
    return Approx(v, 2.0 * n * 2.2e-16 * abs(v))


def c1_rhs(n):
    return psi(n + 0.5) + GAMMA + 2.0 * LOG2


def c2_lhs():
    def term(n):
        n = fl(n)
        return ci(PI * n) + digamma_array(n + 0.5) - np.log(n)

    return 2.0 * S(term, 2.0, term_err=PSI_TERM_ERR)


def c2_rhs():
    return log(4.0 / PI)


def c3_lhs(a):
    def term(n):
        n = fl(n)
        return (1.0 - 2.0 * (n % 2)) * g_aux(TWO_PI * a * n)

    return log(a) - 2.0 * S(term, 2.0)


def c3_rhs(a):
    return psi(a + 0.5)


def c4_lhs():
    return S(lambda n: ci(PI * fl(n)), 2.0)


def c4_rhs():
    return 0.5 * (LOG2 - GAMMA)


def c5_lhs():
    def term(n):
        n = fl(n)
        return digamma_array(n + 0.5) - np.log(n)

    return 2.0 * S(term, 2.0, term_err=PSI_TERM_ERR)


def c5_rhs():
    return GAMMA + log(2.0 / PI)


def c6_lhs(x):
    def term(n):
        n = fl(n)
        return digamma_array(x + n) - digamma_array(1.0 + n) - (x - 1.0) / (1.0 + n)

    return S(term, 2.0, start=0, term_err=PSI_TERM_ERR)


def c6_rhs(x):
    return (1.0 - x) * (psi(x) + GAMMA - 1.0)


def c7_lhs():
    def term(n):
        n = fl(n)
        return digamma_array(1.0 + n) - np.log(n) - 0.5 / (1.0 + n)

    return S(term, 2.0, term_err=PSI_TERM_ERR)


def c7_rhs():
    return 1.0 + 0.5 * GAMMA - 0.5 * LOG_2PI


def c8_lhs():
    return S(lambda n: ci(PI * fl(n)) / fl(n) ** 2, 4.0, max_terms=4096)


def c8_rhs():
    pi2 = PI * PI
    return -(pi2 / 6.0) * LOG2 - exact(5.0 * pi2 / 24.0) - 2.0 * pi2 * ZETA_P_NEG1


def c9_lhs():
    return S(lambda n: digamma_array(fl(n) + 0.5) / fl(n) ** 2, 2.0, log_terms=True, term_err=PSI_TERM_ERR)


def c9_rhs():
    return 3.5 * ZETA3 - (GAMMA + 2.0 * LOG2) * ZETA2


def c10_lhs(a):
    return log(a) - exact(0.5 / a) - 2.0 * S(lambda n: g_aux(TWO_PI * a * fl(n)), 2.0)


def c10_rhs(a):
    return psi(a)


def c11_lhs():
    return S_alt(lambda n: (1.0 - 2.0 * (fl(n) % 2)) * ci(TWO_PI * fl(n)))


def c11_rhs():
    return 1.0 - 0.5 * GAMMA - LOG2


def c12_lhs():
    return S(lambda n: (1.0 - 2.0 * (fl(n) % 2)) * ci(PI * fl(n)), 2.0)


def c12_rhs():
    return 0.5 * (1.0 - GAMMA - LOG2)


def c13_lhs():
    return S(lambda n: (1.0 - 2.0 * (fl(n) % 2)) * si(PI * fl(n)) / fl(n), 2.0)


def c13_rhs():
    return 0.5 * PI * LOG2 - 0.5 * PI


def c14_lhs():
    return S(lambda n: si(TWO_PI * fl(n)) / fl(n), 2.0)


def c14_rhs():
    return 0.5 * PI * LOG_2PI - PI


def c15_lhs(u):
    def term(n):
        w = TWO_PI * fl(n)
        return -g_aux(w * u) / (w * w)

    return S(term, 4.0, max_terms=4096)


def c15_rhs(u):
    return barnes_series_rhs(u)


def c16_lhs():
    def term(n):
        w = TWO_PI * fl(n)
        return ci(w) / (w * w)

    return S(term, 4.0, max_terms=4096)


def c16_rhs():
    return exact(-1.0 / 12.0) - 0.5 * ZETA_P_NEG1


def c17_lhs():
    def term(n):
        w = TWO_PI * fl(n)
        return (G_VAL + np.log(w)) / (w * w)

    return S(term, 2.0, log_terms=True)


def c17_rhs():
    return 0.5 * (1.0 / 12.0 - ZETA_P_NEG1)


def c18_lhs(u):
    return zeta_prime_neg1_hurwitz(u)


def c18_rhs(u):
    return ZETA_P_NEG1 - (log_barnes(u + 1.0) - u * lgam(u))


def c19_lhs():
    def term(n):
        n = fl(n)
        w = TWO_PI * n
        odd = n % 2
        return -2.0 * odd * (ci(w) - G_VAL - np.log(w)) / (w * w)

    return 4.0 * S(term, 2.0, log_terms=True)


def c19_rhs():
    return LOG2


def c20_lhs(mu):
    return Q(lambda v: coth_kernel(v) * np.exp(-mu * v), 0.0, INF) * 0.5


def c20_rhs(mu):
    return S(lambda n: f_aux(mu * fl(n)) / fl(n), 2.0)


def c21_lhs(a):
    return Q(lambda t: planck(t) / (a * a + t * t), 0.0, INF)


def c21_rhs(a):
    return S(lambda n: g_aux(TWO_PI * a * fl(n)), 2.0)


P_U = Param("u", 0.5, lo=0.0, hi=4.0, sweep=(0.25, 0.5, 1.0))

RECORDS = [
    IdentityRecord("C1", "odd reciprocal sums and psi(n+1/2)", "1.17", c1_lhs, c1_rhs, "TIGHT",
                   "exact finite identity",
                   (Param("n", 10, lo=1, hi=10 ** 6, integer=True, lo_open=False),),
                   points=tuple({"n": k} for k in range(1, 51))),
    IdentityRecord("C2", "sum of Ci(n pi) + psi(n+1/2) - log n", "1.20", c2_lhs, c2_rhs, "MED", "S vs constant"),
    IdentityRecord("C3", "psi(a+1/2) from an alternating g-series", "1.21", c3_lhs, c3_rhs, "MED", "S vs psi",
                   (param_a(default=0.5, sweep=(0.3, 0.5, 1.0)),)),
    IdentityRecord("C4", "sum of Ci(n pi)", "1.22", c4_lhs, c4_rhs, "MED", "S vs constant"),
    IdentityRecord("C5", "sum of psi(n+1/2) - log n", "1.23", c5_lhs, c5_rhs, "MED", "S vs constant"),
    IdentityRecord("C6", "digamma series in x", "1.24", c6_lhs, c6_rhs, "MED", "S vs SF",
                   (Param("x", 0.5, lo=0.0, hi=20.0, sweep=(0.5, 1.5)),)),
    IdentityRecord("C7", "sum of psi(1+n) - log n - 1/(2(1+n))", "1.25", c7_lhs, c7_rhs, "MED", "S vs constant"),
    IdentityRecord("C8", "sum of Ci(n pi)/n^2", "1.26", c8_lhs, c8_rhs, "MED", "S vs SF"),
    IdentityRecord("C9", "sum of psi(n+1/2)/n^2", "1.27", c9_lhs, c9_rhs, "MED", "S vs constants"),
    IdentityRecord("C10", "psi(a) from a g-series", "4.3", c10_lhs, c10_rhs, "MED", "S vs psi",
                   (param_a(default=1.0, sweep=(0.5, 1.0, 2.0)),)),
    IdentityRecord("C11", "alternating sum of Ci(2 n pi)", "4.7", c11_lhs, c11_rhs, "MED", "S vs constant"),
    IdentityRecord("C12", "alternating sum of Ci(n pi)", "4.8", c12_lhs, c12_rhs, "MED", "S vs constant"),
    IdentityRecord("C13", "alternating sum of si(n pi)/n", "si-alt", c13_lhs, c13_rhs, "MED", "S vs constant"),
    IdentityRecord("C14", "sum of si(2 n pi)/n", "si-2npi", c14_lhs, c14_rhs, "MED", "S vs constant"),
    IdentityRecord("C15", "g-series for the Barnes G expression", "7.5", c15_lhs, c15_rhs, "MED",
                   "S vs Barnes G", (P_U,)),
    IdentityRecord("C16", "sum of Ci(2 n pi)/(2 n pi)^2", "7.5-bis", c16_lhs, c16_rhs, "MED", "S vs zeta'(-1)"),
    IdentityRecord("C17", "sum of (gamma + log 2 n pi)/(2 n pi)^2", "zeta-prime-rep", c17_lhs, c17_rhs, "MED",
                   "S vs zeta'(-1)"),
    IdentityRecord("C18", "Hurwitz zeta'(-1, u) against Barnes G", "7.6/7.7", c18_lhs, c18_rhs, "MED",
                   "SF vs SF", (Param("u", 1.0, lo=0.0, hi=4.0, sweep=(0.5, 1.0, 2.0)),)),
    IdentityRecord("C19", "odd-index series for log 2", "x-half", c19_lhs, c19_rhs, "MED", "S vs constant"),
    IdentityRecord("C20", "coth integral as a series in f", "5.32", c20_lhs, c20_rhs, "MED", "Q vs S",
                   (Param("mu", PI, lo=0.0, hi=100.0, sweep=(PI, TWO_PI, 1.0)),)),
    IdentityRecord("C21", "Binet integral as a series in g", "6.1", c21_lhs, c21_rhs, "MED", "Q vs S",
                   (param_a(default=1.0, sweep=(0.5, 1.0, 2.0)),)),
]
