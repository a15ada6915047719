"""Hot numeric loops behind the special functions and series summation.

Each kernel exists twice with one signature: ``*_loop`` is a scalar loop that
numba compiles (it also runs as plain Python, slowly), ``*_numpy`` is a
vectorised numpy formulation. The unsuffixed names pick one of the two
according to :data:`sicigamma._accel.USE_NUMBA`.

Kernels take and return float64 arrays and do no argument validation.
"""

import math

import numpy as np

from ._accel import USE_NUMBA, njit

EULER_GAMMA = 0.5772156649015329
HALF_PI = 0.5 * math.pi
HALF_LOG_2PI = 0.5 * math.log(2.0 * math.pi)
ZETA2 = math.pi * math.pi / 6.0

# below this argument Si/Ci use their power series, above it the
# auxiliary-function form with f, g from a Gauss-Laguerre rule
SICI_SWITCH = 4.0
LAGUERRE_ORDER = 64
_LAG_T, _LAG_W = np.polynomial.laguerre.laggauss(LAGUERRE_ORDER)
_LAG_T = np.ascontiguousarray(_LAG_T)
_LAG_W = np.ascontiguousarray(_LAG_W)

# digamma / log-gamma are lifted by recurrence to this argument before the
# asymptotic series is applied
ASYMPTOTIC_FLOOR = 10.0
# B_2k / (2k) for the digamma tail, k = 1..7
_PSI_COEF = np.array([
    1.0 / 12.0, -1.0 / 120.0, 1.0 / 252.0, -1.0 / 240.0,
    1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0,
])
# B_2k / (2k (2k - 1)) for the Stirling series, k = 1..7
_STIRLING_COEF = np.array([
    1.0 / 12.0, -1.0 / 360.0, 1.0 / 1260.0, -1.0 / 1680.0,
    1.0 / 1188.0, -691.0 / 360360.0, 1.0 / 156.0,
])


# --------------------------------------------------------------------------
# sine and cosine integrals with the auxiliary functions f, g


@njit
def sici_aux_loop(x):
    n = x.shape[0]
    si_out = np.empty(n)
    ci_out = np.empty(n)
    f_out = np.empty(n)
    g_out = np.empty(n)
    for i in range(n):
        xi = x[i]
        if xi == 0.0:
            si_out[i] = 0.0
            ci_out[i] = -np.inf
            f_out[i] = HALF_PI
            g_out[i] = np.inf
            continue
        s = math.sin(xi)
        c = math.cos(xi)
        if xi < SICI_SWITCH:
            x2 = xi * xi
            term = xi
            acc_s = xi
            k = 0
            while True:
                k += 1
                term *= -x2 / ((2.0 * k) * (2.0 * k + 1.0))
                acc_s += term / (2.0 * k + 1.0)
                if abs(term) < 1e-18:
                    break
            term = 1.0
            acc_c = 0.0
            k = 0
            while True:
                k += 1
                term *= -x2 / ((2.0 * k - 1.0) * (2.0 * k))
                acc_c += term / (2.0 * k)
                if abs(term) < 1e-18:
                    break
            big_si = acc_s
            ci = EULER_GAMMA + math.log(xi) + acc_c
            lo_si = big_si - HALF_PI
            fv = ci * s - lo_si * c
            gv = -ci * c - lo_si * s
        else:
            fv = 0.0
            gv = 0.0
            for j in range(_LAG_T.shape[0]):
                r = _LAG_T[j] / xi
                d = _LAG_W[j] / (1.0 + r * r)
                fv += d
                gv += d * _LAG_T[j]
            fv /= xi
            gv /= xi * xi
            big_si = HALF_PI - fv * c - gv * s
            ci = fv * s - gv * c
        si_out[i] = big_si
        ci_out[i] = ci
        f_out[i] = fv
        g_out[i] = gv
    return si_out, ci_out, f_out, g_out


def sici_aux_numpy(x):
    x = np.asarray(x, dtype=np.float64)
    si_out = np.empty_like(x)
    ci_out = np.empty_like(x)
    f_out = np.empty_like(x)
    g_out = np.empty_like(x)

    zero = x == 0.0
    small = (x < SICI_SWITCH) & ~zero
    large = x >= SICI_SWITCH

    if small.any():
        xs = x[small]
        x2 = xs * xs
        term = xs.copy()
        acc_s = xs.copy()
        term_c = np.ones_like(xs)
        acc_c = np.zeros_like(xs)
        # 30 terms reach 1e-18 for every argument below the switch point
        for k in range(1, 31):
            term = term * (-x2 / ((2.0 * k) * (2.0 * k + 1.0)))
            acc_s += term / (2.0 * k + 1.0)
            term_c = term_c * (-x2 / ((2.0 * k - 1.0) * (2.0 * k)))
            acc_c += term_c / (2.0 * k)
        ci = EULER_GAMMA + np.log(xs) + acc_c
        lo_si = acc_s - HALF_PI
        s, c = np.sin(xs), np.cos(xs)
        si_out[small] = acc_s
        ci_out[small] = ci
        f_out[small] = ci * s - lo_si * c
        g_out[small] = -ci * c - lo_si * s

    if large.any():
        xl = x[large]
        r = _LAG_T[None, :] / xl[:, None]
        d = _LAG_W[None, :] / (1.0 + r * r)
        fv = d.sum(axis=1) / xl
        gv = (d * _LAG_T[None, :]).sum(axis=1) / (xl * xl)
        s, c = np.sin(xl), np.cos(xl)
        si_out[large] = HALF_PI - fv * c - gv * s
        ci_out[large] = fv * s - gv * c
        f_out[large] = fv
        g_out[large] = gv

    si_out[zero] = 0.0
    ci_out[zero] = -np.inf
    f_out[zero] = HALF_PI
    g_out[zero] = np.inf
    return si_out, ci_out, f_out, g_out


# --------------------------------------------------------------------------
# digamma and log-gamma for positive arguments


@njit
def digamma_loop(x):
    n = x.shape[0]
    out = np.empty(n)
    for i in range(n):
        xi = x[i]
        shift = 0.0
        while xi < ASYMPTOTIC_FLOOR:
            shift -= 1.0 / xi
            xi += 1.0
        inv2 = 1.0 / (xi * xi)
        tail = 0.0
        p = inv2
        for k in range(_PSI_COEF.shape[0]):
            tail += _PSI_COEF[k] * p
            p *= inv2
        out[i] = shift + math.log(xi) - 0.5 / xi - tail
    return out


def digamma_numpy(x):
    x = np.array(x, dtype=np.float64, copy=True)
    shift = np.zeros_like(x)
    while True:
        low = x < ASYMPTOTIC_FLOOR
        if not low.any():
            break
        shift[low] -= 1.0 / x[low]
        x[low] += 1.0
    inv2 = 1.0 / (x * x)
    tail = np.zeros_like(x)
    p = inv2.copy()
    for coef in _PSI_COEF:
        tail += coef * p
        p *= inv2
    return shift + np.log(x) - 0.5 / x - tail


@njit
def log_gamma_loop(x):
    n = x.shape[0]
    out = np.empty(n)
    for i in range(n):
        xi = x[i]
        prod = 1.0
        while xi < ASYMPTOTIC_FLOOR:
            prod *= xi
            xi += 1.0
        inv = 1.0 / xi
        inv2 = inv * inv
        tail = 0.0
        p = inv
        for k in range(_STIRLING_COEF.shape[0]):
            tail += _STIRLING_COEF[k] * p
            p *= inv2
        out[i] = (xi - 0.5) * math.log(xi) - xi + HALF_LOG_2PI + tail - math.log(prod)
    return out


def log_gamma_numpy(x):
    x = np.array(x, dtype=np.float64, copy=True)
    prod = np.ones_like(x)
    while True:
        low = x < ASYMPTOTIC_FLOOR
        if not low.any():
            break
        prod[low] *= x[low]
        x[low] += 1.0
    inv = 1.0 / x
    inv2 = inv * inv
    tail = np.zeros_like(x)
    p = inv.copy()
    for coef in _STIRLING_COEF:
        tail += coef * p
        p *= inv2
    return (x - 0.5) * np.log(x) - x + HALF_LOG_2PI + tail - np.log(prod)


# --------------------------------------------------------------------------
# dilogarithm on [0, 1]


@njit
def _dilog_series(x):
    acc = 0.0
    p = x
    k = 1
    while True:
        t = p / (k * k)
        acc += t
        if t < 1e-18:
            break
        k += 1
        p *= x
    return acc


@njit
def dilog_loop(x):
    n = x.shape[0]
    out = np.empty(n)
    for i in range(n):
        xi = x[i]
        if xi == 0.0:
            out[i] = 0.0
        elif xi == 1.0:
            out[i] = ZETA2
        elif xi <= 0.5:
            out[i] = _dilog_series(xi)
        else:
            y = 1.0 - xi
            out[i] = ZETA2 - math.log(xi) * math.log1p(-xi) - _dilog_series(y)
    return out


def _dilog_series_numpy(x):
    acc = np.zeros_like(x)
    p = x.copy()
    # 0.5**56 / 56**2 < 1e-20
    for k in range(1, 57):
        acc += p / (k * k)
        p *= x
    return acc


def dilog_numpy(x):
    x = np.asarray(x, dtype=np.float64)
    out = np.empty_like(x)
    low = x <= 0.5
    out[low] = _dilog_series_numpy(x[low])
    high = ~low
    xh = x[high]
    with np.errstate(divide="ignore", invalid="ignore"):
        refl = ZETA2 - np.log(xh) * np.log1p(-xh) - _dilog_series_numpy(1.0 - xh)
    refl[xh == 1.0] = ZETA2
    out[high] = refl
    return out


# --------------------------------------------------------------------------
# compensated prefix sums


@njit
def compensated_cumsum_loop(terms):
    n = terms.shape[0]
    out = np.empty(n)
    s = 0.0
    comp = 0.0
    for i in range(n):
        t = terms[i]
        u = s + t
        if abs(s) >= abs(t):
            comp += (s - u) + t
        else:
            comp += (t - u) + s
        s = u
        out[i] = s + comp
    return out


def compensated_cumsum_numpy(terms):
    # extended-precision accumulator; float64 on platforms without one
    wide = np.cumsum(np.asarray(terms, dtype=np.longdouble))
    return wide.astype(np.float64)


# --------------------------------------------------------------------------
# truncated Weierstrass product for the Barnes G function


@njit
def _barnes_term(u, k):
    y = u / k
    if y < 0.05:
        # k log(1+y) - u + u y / 2 = k * sum_{j>=3} (-1)^(j+1) y^j / j
        acc = 0.0
        p = y * y * y
        j = 3
        sign = 1.0
        while True:
            t = sign * p / j
            acc += t
            if abs(t) < 1e-20 * abs(acc):
                break
            j += 1
            sign = -sign
            p *= y
        return k * acc
    return k * math.log1p(y) - u + 0.5 * u * y


@njit
def barnes_product_sum_loop(u, kmax):
    s = 0.0
    comp = 0.0
    for k in range(1, kmax + 1):
        t = _barnes_term(u, float(k))
        v = s + t
        if abs(s) >= abs(t):
            comp += (s - v) + t
        else:
            comp += (t - v) + s
        s = v
    return s + comp


def barnes_product_sum_numpy(u, kmax):
    k = np.arange(1, kmax + 1, dtype=np.float64)
    y = u / k
    out = np.empty_like(k)
    direct = y >= 0.05
    out[direct] = k[direct] * np.log1p(y[direct]) - u + 0.5 * u * y[direct]
    ys = y[~direct]
    acc = np.zeros_like(ys)
    p = ys ** 3
    sign = 1.0
    # y < 0.05: 14 terms put the truncation below 1e-20 relative
    for j in range(3, 17):
        acc += sign * p / j
        sign = -sign
        p = p * ys
    out[~direct] = k[~direct] * acc
    return math.fsum(out)


if USE_NUMBA:
    sici_aux = sici_aux_loop
    digamma = digamma_loop
    log_gamma = log_gamma_loop
    dilog = dilog_loop
    compensated_cumsum = compensated_cumsum_loop
    barnes_product_sum = barnes_product_sum_loop
else:
    sici_aux = sici_aux_numpy
    digamma = digamma_numpy
    log_gamma = log_gamma_numpy
    dilog = dilog_numpy
    compensated_cumsum = compensated_cumsum_numpy
    barnes_product_sum = barnes_product_sum_numpy

BACKEND = "numba" if USE_NUMBA else "numpy"
