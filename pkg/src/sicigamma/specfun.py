"""Sine and cosine integrals, the gamma family, Barnes G and the dilogarithm.

Scalar entry points return :class:`~sicigamma.numcore.Approx`. The ``*_array``
helpers are the unchecked vectorised forms used inside integrands and series
terms.
"""

from __future__ import annotations

import math

import numpy as np

from . import kernels
from .numcore import EPS, Approx, value, zeta_jet
from .quad import QuadTask, integrate_semi_infinite
from .series import PowerLaw, SeriesTask, sum_fourier_pointwise, sum_series

EULER_GAMMA = value("euler_gamma")
LOG_2PI = value("log_2pi")
ZETA_PRIME_NEG1 = value("zeta_prime_neg1")
HALF_PI = 0.5 * math.pi

BARNES_TERMS = 100_000
BARNES_MAX_U = 4.0


class DomainError(ValueError):
    """Argument outside the domain where the function is implemented."""


def _scalar(x, name, lo=None, lo_open=False, hi=None):
    try:
        x = float(x)
    except (TypeError, ValueError):
        raise DomainError(f"{name}: argument must be a real number, got {x!r}") from None
    if not math.isfinite(x):
        raise DomainError(f"{name}: argument must be finite, got {x!r}")
    if lo is not None and (x < lo or (lo_open and x == lo)):
        op = ">" if lo_open else ">="
        raise DomainError(f"{name}: argument must be {op} {lo}, got {x!r}")
    if hi is not None and x > hi:
        raise DomainError(f"{name}: argument must be <= {hi}, got {x!r}")
    return x


# --------------------------------------------------------------------------
# vectorised helpers


def sici_array(x):
    """(Si, Ci, f, g) at each x >= 0; Ci = -inf and g = inf at x = 0."""
    x = np.ascontiguousarray(x, dtype=np.float64)
    shape = x.shape
    out = kernels.sici_aux(x.ravel())
    return tuple(a.reshape(shape) for a in out)


def si_lower_array(x):
    return sici_array(x)[0] - HALF_PI


def ci_array(x):
    return sici_array(x)[1]


def aux_fg_array(x):
    _, _, f, g = sici_array(x)
    return f, g


def digamma_array(x):
    x = np.ascontiguousarray(x, dtype=np.float64)
    return kernels.digamma(x.ravel()).reshape(x.shape)


def log_gamma_array(x):
    x = np.ascontiguousarray(x, dtype=np.float64)
    return kernels.log_gamma(x.ravel()).reshape(x.shape)


def dilog_array(x):
    x = np.ascontiguousarray(x, dtype=np.float64)
    return kernels.dilog(x.ravel()).reshape(x.shape)


# B_2k / (2k)! for the small-argument series of bernoulli_kernel
_BK_COEF = np.array([
    1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0, -1.0 / 1209600.0,
    1.0 / 47900160.0, -691.0 / 1307674368000.0, 1.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0, 43867.0 / 5109094217170944000.0,
    -174611.0 / 802857662698291200000.0, 77683.0 / 14101100039391805440000.0,
])


def bernoulli_kernel(v):
    """1/(e^v - 1) - 1/v + 1/2 without cancellation near v = 0."""
    v = np.asarray(v, dtype=np.float64)
    out = np.empty_like(v)
    small = np.abs(v) < 1.0
    vs = v[small]
    v2 = vs * vs
    acc = np.zeros_like(vs)
    for c in _BK_COEF[::-1]:
        acc = acc * v2 + c
    out[small] = acc * vs
    vl = v[~small]
    with np.errstate(over="ignore"):
        out[~small] = 1.0 / np.expm1(vl) - 1.0 / vl + 0.5
    return out


# --------------------------------------------------------------------------
# sine and cosine integrals


def _sici_err(v):
    return 4e-15 + 8.0 * EPS * abs(v)


def sine_int(x) -> Approx:
    """Si(x) for x >= 0."""
    x = _scalar(x, "sine_int", lo=0.0)
    v = float(sici_array([x])[0][0])
    return Approx(v, _sici_err(v))


def si_lower(x) -> Approx:
    """si(x) = Si(x) - pi/2 for x >= 0."""
    x = _scalar(x, "si_lower", lo=0.0)
    return sine_int(x) - HALF_PI


def cosine_int(x) -> Approx:
    """Ci(x) for x > 0."""
    x = _scalar(x, "cosine_int", lo=0.0, lo_open=True)
    v = float(sici_array([x])[1][0])
    return Approx(v, _sici_err(v))


def _aux_quad(x, weight_u):
    # integral over u of e^{-xu} w(u) / (1 + u^2), substituting t = x u
    def integrand(t):
        u = t / x
        return np.exp(-t) * (u if weight_u else 1.0) / (1.0 + u * u) / x

    r = integrate_semi_infinite(QuadTask(integrand, 0.0, math.inf, abs_tol=1e-14, rel_tol=1e-13))
    return Approx(r.value, r.err + 8.0 * EPS * abs(r.value))


def aux_f(x, method: str = "rule") -> Approx:
    """f(x) = integral_0^inf e^{-xu}/(1+u^2) du for x > 0.

    ``method="rule"`` uses the fixed Gauss-Laguerre rule (series below the
    switch point); ``method="quad"`` runs the adaptive semi-infinite
    quadrature on the same integral and is meant as a cross-check.
    """
    x = _scalar(x, "aux_f", lo=0.0, lo_open=True)
    if method == "quad" and x >= 1.0:
        return _aux_quad(x, False)
    v = float(sici_array([x])[2][0])
    return Approx(v, _sici_err(v))


def aux_g(x, method: str = "rule") -> Approx:
    """g(x) = integral_0^inf u e^{-xu}/(1+u^2) du for x > 0."""
    x = _scalar(x, "aux_g", lo=0.0, lo_open=True)
    if method == "quad" and x >= 1.0:
        return _aux_quad(x, True)
    v = float(sici_array([x])[3][0])
    return Approx(v, _sici_err(v))


# --------------------------------------------------------------------------
# gamma family


def digamma(x) -> Approx:
    """psi(x) for x > 0."""
    x = _scalar(x, "digamma", lo=0.0, lo_open=True)
    v = float(digamma_array([x])[0])
    return Approx(v, 4e-15 + 16.0 * EPS * (abs(v) + 1.0 / x))


def log_gamma(x) -> Approx:
    """log Gamma(x) for x > 0."""
    x = _scalar(x, "log_gamma", lo=0.0, lo_open=True)
    v = float(log_gamma_array([x])[0])
    return Approx(v, 4e-15 + 16.0 * EPS * (abs(v) + abs(math.log(x))))


def _kummer_terms(x):
    def term(n):
        n = n.astype(np.float64)
        w = 2.0 * math.pi * x * n
        return np.cos(w) / (2.0 * n) + (EULER_GAMMA + np.log(2.0 * math.pi * n)) / (math.pi * n) * np.sin(w)

    return term


def kummer_log_gamma(x, terms: int = 1 << 15) -> Approx:
    """log Gamma(x) on (0, 1) from its Fourier series.

    Window-averaged partial sums up to ``terms`` are extrapolated in the
    number of terms; the error reflects that extrapolation.
    """
    x = _scalar(x, "kummer_log_gamma", lo=0.0, lo_open=True)
    if x >= 1.0:
        raise DomainError(f"kummer_log_gamma: argument must be in (0, 1), got {x!r}")
    r = sum_fourier_pointwise(_kummer_terms(x), x, max_terms=int(terms))
    return r.approx + 0.5 * LOG_2PI


def _hurwitz(s, a):
    return zeta_jet(float(s), float(a), n=2)[0]


def _barnes_product(u: float) -> Approx:
    k = BARNES_TERMS
    body = kernels.barnes_product_sum(u, k)
    # sum over k > K of the bracket: sum_j (-1)^(j+1) u^j / j * zeta(j-1, K+1)
    tail = 0.0
    for j in range(3, 10):
        tail += (-1.0) ** (j + 1) * u ** j / j * _hurwitz(j - 1, k + 1)
    head = 0.5 * u * LOG_2PI - 0.5 * ((EULER_GAMMA + 1.0) * u * u + u)
    v = head + body + tail
    return Approx(v, 1e-13 + 64.0 * EPS * (abs(head) + abs(body) + 1.0))


def barnes_log_G(z) -> Approx:
    """log G(z) for real z > 0, where G(z+1) = Gamma(z) G(z) and G(1) = 1.

    Arguments 1 + u with 0 <= u <= 4 use the truncated Weierstrass product;
    the functional equation covers the rest.
    """
    z = _scalar(z, "barnes_log_G", lo=0.0, lo_open=True)
    if z < 1.0:
        # G(z) = G(1+z) / Gamma(z)
        return barnes_log_G(z + 1.0) - log_gamma(z)
    u = z - 1.0
    if u == 0.0:
        return Approx(0.0, 0.0)
    acc = Approx(0.0, 0.0)
    while u > BARNES_MAX_U:
        # log G(1+u) = log Gamma(u) + log G(u)
        acc = acc + log_gamma(u)
        u -= 1.0
    return acc + _barnes_product(u)


def dilog(x) -> Approx:
    """Li_2(x) for 0 <= x <= 1."""
    x = _scalar(x, "dilog", lo=0.0, hi=1.0)
    v = float(dilog_array([x])[0])
    return Approx(v, 1e-15 + 8.0 * EPS * abs(v))


def zeta_prime_neg1_hurwitz(u) -> Approx:
    """zeta'(-1, u) for u > 0 from its Ci/si series.

    zeta(-1, u) log u terms plus sum over n of -g(2 n pi u)/(2 pi^2 n^2),
    where g is the auxiliary function.
    """
    u = _scalar(u, "zeta_prime_neg1_hurwitz", lo=0.0, lo_open=True)

    def term(n):
        n = n.astype(np.float64)
        _, _, _, g = sici_array(2.0 * math.pi * u * n)
        return g / (n * n)

    # g(w) ~ 1/w^2, so the terms fall like n^-4
    s = sum_series(SeriesTask(term, tail_model=PowerLaw(4.0), acceleration="richardson_power",
                              max_terms=4096, abs_tol=1e-12, term_err=1e-17))
    b2 = u * u - u + 1.0 / 6.0
    head = 0.5 * b2 * math.log(u) - 0.25 * u * u + 1.0 / 12.0
    return Approx(head, 8.0 * EPS * (abs(head) + 1.0)) + s.approx * (1.0 / (2.0 * math.pi ** 2))
