"""Consistency tests and inconsistency indicators.

A triad (i,j,k), i<j<k, compares x*z against y for (x,y,z) =
(a_ij, a_ik, a_jk); the matrix is consistent when every triad satisfies
x*z = y.  All residuals are computed in log space (r = ln x + ln z - ln y)
so entries like e^9 cannot overflow products.

Two [0,1)-valued faithful indicators are provided:

* ``koczkodaj_index``: max over triads of min(|1 - y/(xz)|, |1 - xz/y|),
  which in log space is 1 - exp(-max|r|).  Classical, but its max/min
  composition is not differentiable.
* ``smooth_index``: 1 - exp(-sum r^2), smooth in the upper-triangle log
  coordinates, used by the gradient-based consistencization.
"""

import enum
import itertools

import numpy as np

from . import _kernels
from .core import to_additive


class IndicatorKind(enum.Enum):
    KOCZKODAJ = "koczkodaj"
    SMOOTH = "smooth"


def triads(n):
    """All index triples (i,j,k) with i<j<k, lexicographic."""
    if n < 3:
        from .errors import TooSmall

        raise TooSmall(n)
    return list(itertools.combinations(range(n), 3))


def triad_values(a, i, j, k):
    """The triad (x,y,z) = (a_ij, a_ik, a_jk)."""
    return a.entries[i, j], a.entries[i, k], a.entries[j, k]


def _stats(a):
    return _kernels.triad_stats(np.asarray(to_additive(a).entries))


def max_triad_deviation(a):
    """max over triads of |ln a_ij + ln a_jk - ln a_ik|; 0 iff consistent."""
    return _stats(a)[0]


def sum_sq_triad_residuals(a):
    """Sum of squared triad log-residuals (the smooth indicator's argument)."""
    return _stats(a)[1]


def is_consistent(a, tol=1e-9):
    return max_triad_deviation(a) <= tol


def koczkodaj_index(a):
    """Distance-based indicator in [0,1): 1 - exp(-max triad |residual|)."""
    return 1.0 - np.exp(-max_triad_deviation(a))


def smooth_index(a):
    """Smooth log-residual indicator in [0,1): 1 - exp(-sum of r^2)."""
    return 1.0 - np.exp(-sum_sq_triad_residuals(a))


def indicator_value(a, kind):
    if kind is IndicatorKind.KOCZKODAJ:
        return koczkodaj_index(a)
    if kind is IndicatorKind.SMOOTH:
        return smooth_index(a)
    raise ValueError(f"unknown indicator {kind!r}")
