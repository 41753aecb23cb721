"""Exact-arithmetic verification of Kepler-type hidden symmetry over the
simple euclidean Jordan algebras, plus a variational spectral solver for
the rank-one representation family.
"""

__version__ = "0.1.0"

from .jordan import make_algebra, parse_algebra  # noqa: F401
from .rational import RAT_BACKEND, Rat  # noqa: F401


def kernel_name():
    """Which polynomial kernel was selected at import time."""
    from . import poly

    return poly.KERNEL
