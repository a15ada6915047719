"""Sign properties: each left side counts violations over a sweep."""

import numpy as np

from ..numcore import Approx
from ..specfun import log_gamma_array
from .common import HALF_LOG_2PI, TWO_PI, Param, ci, si
from .model import IdentityRecord

P_SEED = Param("seed", 8, lo=0, hi=2 ** 32 - 1, integer=True, lo_open=False)


def _count(mask) -> Approx:
    return Approx(float(np.count_nonzero(mask)), 0.0)


def _zero(**_) -> Approx:
    return Approx(0.0, 0.0)


def _uniform_open(rng, hi, size):
    # samples in (0, hi]
    return hi - rng.uniform(0.0, hi, size)


def e1_lhs(samples, seed):
    rng = np.random.default_rng(seed)
    t = _uniform_open(rng, 10.0, samples)
    a = _uniform_open(rng, 10.0, samples)
    x = t * a
    value = np.sin(x) * ci(x) - np.cos(x) * si(x)
    return _count(~(value > 0.0))


def e2_lhs(samples, seed):
    rng = np.random.default_rng(seed)
    a = _uniform_open(rng, 20.0, samples)
    bound = HALF_LOG_2PI + (a - 0.5) * np.log(a) - a
    return _count(~(log_gamma_array(a) > bound))


def e3_lhs(nmax):
    n = np.arange(1, nmax + 1, dtype=np.float64)
    return _count(~(ci(TWO_PI * n) < 0.0))


RECORDS = [
    IdentityRecord("E1", "positivity of sin x Ci(x) - cos x si(x) at x = t a", "8.1", e1_lhs, _zero, "TIGHT",
                   "inequality sweep",
                   (Param("samples", 200, lo=1, hi=10 ** 6, integer=True, lo_open=False), P_SEED)),
    IdentityRecord("E2", "log Gamma above its Stirling main part", "8.2", e2_lhs, _zero, "TIGHT",
                   "inequality sweep",
                   (Param("samples", 100, lo=1, hi=10 ** 6, integer=True, lo_open=False), P_SEED)),
    IdentityRecord("E3", "Ci(2 n pi) is negative", "8.4", e3_lhs, _zero, "TIGHT", "inequality sweep",
                   (Param("nmax", 20, lo=1, hi=10 ** 5, integer=True, lo_open=False),)),
]
