"""Sine and cosine integrals, the gamma family, and a catalog of identities
built on them, each checked numerically with an error bound."""

__version__ = "0.1.0"

from .numcore import Approx, constant, verify_constants  # noqa: E402
from .quad import QuadTask, QuadratureError, integrate, quad  # noqa: E402
from .series import SeriesTask, sum_series  # noqa: E402

__all__ = [
    "Approx", "QuadTask", "QuadratureError", "SeriesTask", "__version__", "constant", "integrate",
    "quad", "sum_series", "verify_constants",
]
