"""The ranking condition, characteristic matrices and admissible loci.

A PC matrix yields a strict ranking when no off-diagonal entry equals 1
(the ranking condition) and the sign pattern of its log entries is a
transitive tournament.  With the convention a_ij = w_i/w_j, entries below 1
above the diagonal mean "i weighs less than j", so the identity sign
pattern [[0,-1,-1],[1,0,-1],[1,1,0]] reads w_0 < w_1 < w_2.

Transitivity is decided from the tournament's out-degree (score) sequence:
a tournament on n nodes is transitive iff its scores are a permutation of
{0,...,n-1}, and the ranking is then the sort by score.  This O(n^2) test
is verified against a brute-force search over all n! permutations in the
test suite.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _kernels
from .core import to_additive
from .consistency import is_consistent, max_triad_deviation
from .errors import (
    NotAdmissible,
    NotConsistent,
    RConditionViolated,
    TooLarge,
    TooSmall,
    ZeroOffDiagonal,
)

ENUMERATION_LIMIT = 7  # 2^(n(n-1)/2) patterns; n=7 is ~2M


@dataclass(frozen=True, eq=False)
class CharacteristicRankingMatrix:
    """Entrywise sign of the log matrix; fingerprint of a ranking locus."""

    n: int
    signs: np.ndarray  # n x n, entries in {-1, 0, +1}


@dataclass(frozen=True)
class LocusIndex:
    """The pairs (i,j), i<j, with a_ij > 1; labels a connected component."""

    n: int
    pairs: frozenset


@dataclass(frozen=True)
class Ranking:
    """Permutation sigma listing items from lowest to highest weight;
    weights present only when the source matrix is consistent."""

    sigma: tuple
    weights: Optional[tuple] = None


@dataclass(frozen=True)
class LociStats:
    n: int
    total: int
    admissible: int


def satisfies_r_condition(a, tie_tol=0.0):
    """True iff every off-diagonal entry differs from 1: |ln a_ij| > tie_tol."""
    logs = to_additive(a).upper()
    return bool(np.all(np.abs(logs) > tie_tol))


def characteristic_matrix(a, tie_tol=0.0):
    """Entrywise sign of the log entries (0 when |ln a_ij| <= tie_tol)."""
    logs = np.asarray(to_additive(a).entries)
    signs = np.sign(logs)
    signs[np.abs(logs) <= tie_tol] = 0.0
    np.fill_diagonal(signs, 0.0)
    signs = signs.astype(np.int64)
    signs.setflags(write=False)
    return CharacteristicRankingMatrix(a.n, signs)


def locus_index(a, tie_tol=0.0):
    """The set {(i,j): i<j, a_ij > 1}; equal sets = same connected component."""
    n = a.n
    pairs = set()
    for i in range(n):
        for j in range(i + 1, n):
            if abs(np.log(a.entries[i, j])) <= tie_tol:
                raise RConditionViolated(i, j)
            if a.entries[i, j] > 1.0:
                pairs.add((i, j))
    return LocusIndex(n, frozenset(pairs))


def admissible_permutation(c):
    """The permutation sigma with signs[sigma(i)][sigma(j)] = -1 for i<j,
    or None when the sign tournament is not transitive.

    Orientation: "i beats j" (i ranks below j) when signs[i][j] = -1.
    sigma exists iff the out-degree sequence is a permutation of
    {0,...,n-1}; sigma is then the sort by descending out-degree.
    """
    n = c.n
    signs = c.signs
    for i in range(n):
        for j in range(i + 1, n):
            if signs[i, j] == 0:
                raise ZeroOffDiagonal(i, j)
    scores = np.sum(signs == -1, axis=1)
    if sorted(scores) != list(range(n)):
        return None
    # item with score n-1 ranks first (lowest weight)
    sigma = tuple(int(i) for i in np.argsort(-scores, kind="stable"))
    return sigma


def is_admissible_locus(a, tie_tol=0.0):
    """R-condition holds and the sign pattern admits a strict ranking."""
    if not satisfies_r_condition(a, tie_tol):
        return False
    return admissible_permutation(characteristic_matrix(a, tie_tol)) is not None


def weights_from_consistent(a, tol=1e-9):
    """Weights recovering a consistent matrix as a_ij = w_i/w_j.

    Geometric mean of each row, normalized so the smallest weight is 1
    (for consistent matrices every standard extraction coincides up to
    scale).
    """
    dev = max_triad_deviation(a)
    if dev > tol:
        raise NotConsistent(dev, tol)
    w = np.exp(np.mean(np.log(np.asarray(a.entries)), axis=1))
    w = w / np.min(w)
    return w


def ranking_from_matrix(a, tie_tol=0.0, tol=1e-9):
    """Strict ranking of an admissible-locus matrix, weights when consistent."""
    if not satisfies_r_condition(a, tie_tol):
        raise NotAdmissible("matrix violates the ranking condition")
    sigma = admissible_permutation(characteristic_matrix(a, tie_tol))
    if sigma is None:
        raise NotAdmissible()
    if is_consistent(a, tol):
        return Ranking(sigma, tuple(float(x) for x in weights_from_consistent(a, tol)))
    return Ranking(sigma, None)


def enumerate_loci(n):
    """Count all 2^(n(n-1)/2) sign patterns and the admissible ones (= n!)."""
    if n < 3:
        raise TooSmall(n)
    if n > ENUMERATION_LIMIT:
        raise TooLarge(n, ENUMERATION_LIMIT)
    m = n * (n - 1) // 2
    return LociStats(n, 2**m, _kernels.count_admissible(n))
