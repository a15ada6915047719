"""Error-tracked binary64 values and the table of mathematical constants."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

EPS = 2.220446049250313e-16


@dataclass(frozen=True)
class Approx:
    """A float together with a claimed absolute error bound."""

    value: float
    err: float = 0.0

    # let numpy scalars defer to the reflected operators below
    __array_ufunc__ = None

    def __post_init__(self):
        value = float(self.value)
        err = abs(float(self.err))
        if math.isnan(value) or math.isnan(err):
            err = math.inf
        object.__setattr__(self, "value", value)
        object.__setattr__(self, "err", err)

    def __add__(self, other):
        return approx_add(self, as_approx(other))

    __radd__ = __add__

    def __sub__(self, other):
        return approx_add(self, -as_approx(other))

    def __rsub__(self, other):
        return approx_add(as_approx(other), -self)

    def __neg__(self):
        return Approx(-self.value, self.err)

    def __mul__(self, other):
        return approx_mul(self, as_approx(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = as_approx(other)
        if other.err >= abs(other.value):
            return Approx(math.nan, math.inf)
        inv = 1.0 / other.value
        rel = other.err / (abs(other.value) - other.err)
        return approx_mul(self, Approx(inv, abs(inv) * rel + EPS * abs(inv)))

    def contains(self, x: float, slack: float = 0.0) -> bool:
        return abs(self.value - x) <= self.err + slack

    def __format__(self, spec):
        spec = spec or ".16g"
        return f"{format(self.value, spec)} ± {self.err:.2g}"


def as_approx(x) -> Approx:
    if isinstance(x, Approx):
        return x
    return Approx(float(x), 0.0)


# a few subnormal units absorb results and bounds that underflow
_TINY = 2e-323


def _ulp_slack(x: float) -> float:
    return EPS * abs(x) + _TINY if math.isfinite(x) else math.inf


# the bound arithmetic itself rounds; this factor keeps it an upper bound
_ROUND_UP = 1.0 + 4.0 * EPS


def approx_add(a: Approx, b: Approx) -> Approx:
    """Sum of two approximations; bounds add, plus one rounding of the result."""
    value = a.value + b.value
    if math.isnan(value):
        return Approx(math.nan, math.inf)
    return Approx(value, (a.err + b.err) * _ROUND_UP + _ulp_slack(value))


def approx_mul(a: Approx, b: Approx) -> Approx:
    value = a.value * b.value
    if math.isnan(value):
        return Approx(math.nan, math.inf)
    err = abs(a.value) * b.err + abs(b.value) * a.err + a.err * b.err
    return Approx(value, err * _ROUND_UP + _ulp_slack(value))


def approx_scale(a: Approx, c: float) -> Approx:
    value = c * a.value
    return Approx(value, abs(c) * a.err * _ROUND_UP + _ulp_slack(value))


def approx_sum(items) -> Approx:
    vals = []
    err = 0.0
    for it in items:
        it = as_approx(it)
        vals.append(it.value)
        err += it.err
    value = math.fsum(vals)
    return Approx(value, err + _ulp_slack(value) * max(1, len(vals)))


# --------------------------------------------------------------------------
# independent recomputation recipes

# B_2, B_4, ..., B_20
_BERNOULLI_EVEN = (
    1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0, 5.0 / 66.0,
    -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0, 43867.0 / 798.0, -174611.0 / 330.0,
)


def _jet_mul(a, b):
    # truncated Taylor jets in s: (value, d/ds, d2/ds2)
    return (
        a[0] * b[0],
        a[0] * b[1] + a[1] * b[0],
        a[0] * b[2] + 2.0 * a[1] * b[1] + a[2] * b[0],
    )


def _jet_pow(base: float, s: float):
    # base**(-s) and its first two s-derivatives
    v = base ** (-s)
    lg = math.log(base)
    return (v, -lg * v, lg * lg * v)


def zeta_jet(s: float, a: float = 1.0, n: int = 24, terms: int = 9):
    """Hurwitz zeta(s, a) with its first two s-derivatives by Euler-Maclaurin.

    Valid for any real s != 1; the formula is the analytic continuation.
    """
    cols = [[], [], []]
    for k in range(n):
        j = _jet_pow(k + a, s)
        for i in range(3):
            cols[i].append(j[i])
    acc = [math.fsum(c) for c in cols]
    x = n + a
    lx = math.log(x)
    # x^(1-s)/(s-1)
    p = x ** (1.0 - s)
    q = 1.0 / (s - 1.0)
    integral = _jet_mul((p, -lx * p, lx * lx * p), (q, -q * q, 2.0 * q ** 3))
    half = _jet_pow(x, s)
    total = [acc[i] + integral[i] + 0.5 * half[i] for i in range(3)]
    # sum_j B_2j/(2j)! * (s)_(2j-1) * x^(-s-2j+1)
    rising = (1.0, 0.0, 0.0)
    fact = 1.0
    for j in range(1, terms + 1):
        m = 2 * j - 1
        # extend the rising factorial (s)_m from (s)_(m-2)
        for off in (m - 2, m - 1):
            if off >= 0:
                rising = _jet_mul(rising, (s + off, 1.0, 0.0))
        fact *= (2 * j - 1) * (2 * j)
        tail = _jet_mul(rising, _jet_pow(x, s + m))
        c = _BERNOULLI_EVEN[j - 1] / fact
        for i in range(3):
            total[i] += c * tail[i]
    return tuple(total)


def _recompute_pi():
    return Approx(4.0 * math.atan(1.0), 4 * EPS)


def _recompute_euler_gamma():
    # H_n - log n - 1/(2n) + sum B_2k / (2k n^2k)
    n = 40
    h = math.fsum(1.0 / k for k in range(1, n + 1))
    corr = math.fsum(_BERNOULLI_EVEN[k - 1] / (2 * k * n ** (2 * k)) for k in range(1, 6))
    return Approx(h - math.log(n) - 0.5 / n + corr, 1e-15)


def _recompute_catalan():
    # (zeta(2, 1/4) - zeta(2, 3/4)) / 16
    return Approx((zeta_jet(2.0, 0.25)[0] - zeta_jet(2.0, 0.75)[0]) / 16.0, 1e-15)


def _recompute_zeta2():
    return Approx(zeta_jet(2.0)[0], 1e-15)


def _recompute_zeta3():
    return Approx(zeta_jet(3.0)[0], 1e-15)


def _recompute_zeta_prime2():
    return Approx(zeta_jet(2.0)[1], 1e-14)


def _recompute_zeta_second2():
    return Approx(zeta_jet(2.0)[2], 1e-14)


def _recompute_zeta_prime_neg1():
    return Approx(zeta_jet(-1.0)[1], 5e-14)


def _recompute_glaisher():
    return Approx(math.exp(1.0 / 12.0 - zeta_jet(-1.0)[1]), 5e-14)


def _recompute_log_2pi():
    return Approx(math.log(2.0 * _recompute_pi().value), 4 * EPS)


def _recompute_log2():
    # log 2 = sum 1/(k 2^k)
    return Approx(math.fsum(1.0 / (k * 2.0 ** k) for k in range(1, 60)), 2 * EPS)


@dataclass(frozen=True)
class ConstantEntry:
    name: str
    value: float
    digits: int
    recompute: Callable[[], Approx]
    aliases: tuple = ()

    def approx(self) -> Approx:
        return Approx(self.value, 10.0 ** (-self.digits))


CONSTANTS = {
    e.name: e
    for e in (
        ConstantEntry("pi", 3.141592653589793, 15, _recompute_pi, ("π",)),
        ConstantEntry("euler_gamma", 0.5772156649015329, 15, _recompute_euler_gamma, ("gamma", "γ")),
        ConstantEntry("catalan", 0.9159655941772190, 15, _recompute_catalan, ("G",)),
        ConstantEntry("glaisher", 1.282427129100623, 15, _recompute_glaisher, ("A",)),
        ConstantEntry("zeta2", 1.644934066848226, 15, _recompute_zeta2, ("ζ(2)",)),
        ConstantEntry("zeta3", 1.202056903159594, 15, _recompute_zeta3, ("ζ(3)",)),
        ConstantEntry("zeta_prime_2", -0.9375482543158437, 15, _recompute_zeta_prime2, ("ζ'(2)",)),
        ConstantEntry("zeta_second_2", 1.98928023429890, 14, _recompute_zeta_second2, ("ζ''(2)",)),
        ConstantEntry("zeta_prime_neg1", -0.1654211437004509, 15, _recompute_zeta_prime_neg1, ("ζ'(-1)",)),
        ConstantEntry("log2", 0.6931471805599453, 15, _recompute_log2, ("log 2",)),
        ConstantEntry("log_2pi", 1.837877066409345, 15, _recompute_log_2pi, ("log 2π",)),
    )
}

_ALIASES = {alias: e.name for e in CONSTANTS.values() for alias in e.aliases}


class UnknownConstantError(KeyError):
    pass


def constant(name: str) -> Approx:
    """Table literal for ``name`` with err = 10**-digits."""
    key = _ALIASES.get(name, name)
    try:
        return CONSTANTS[key].approx()
    except KeyError:
        raise UnknownConstantError(f"unknown constant {name!r}; known: {sorted(CONSTANTS)}") from None


def value(name: str) -> float:
    return constant(name).value


def check_entry(entry: ConstantEntry) -> tuple[bool, float]:
    r = entry.recompute()
    diff = abs(r.value - entry.value)
    return diff <= r.err + 10.0 ** (-entry.digits), diff


def zeta_prime_neg1_relation(table=None) -> float:
    """|zeta'(-1) - [(1 - gamma - log 2pi)/12 + zeta'(2)/(2 pi^2)]| from table literals."""
    table = CONSTANTS if table is None else table
    g = table["euler_gamma"].value
    l2p = table["log_2pi"].value
    zp2 = table["zeta_prime_2"].value
    pi = table["pi"].value
    rhs = (1.0 - g - l2p) / 12.0 + zp2 / (2.0 * pi * pi)
    return abs(table["zeta_prime_neg1"].value - rhs)


def verify_constants(table=None) -> list[tuple[str, bool]]:
    """Recompute every entry independently; failures are reported, not raised."""
    table = CONSTANTS if table is None else table
    out = []
    for name, entry in table.items():
        ok, _ = check_entry(entry)
        out.append((name, ok))
    out.append(("zeta_prime_neg1_relation", zeta_prime_neg1_relation(table) <= 1e-12))
    return out
