"""Orthogonal-projection consistencization in log space.

Consistent additive matrices are exactly those of the form L_ij = v_i - v_j.
Under the canonical inner product on upper-triangle coordinates, the closest
consistent matrix to L has entries

    B_ij = (1/n) * sum_k (L_ik + L_kj) = (r_i - r_j)/n,   r_i = sum_k L_ik,

which for n=3 reduces to the correction d = (b-a-c)/3 applied as
(a+d, b-d, c+d) to the upper triangle (a,b,c).  Both identities and an
independent least-squares oracle are checked in the tests.
"""

from dataclasses import dataclass

import numpy as np

from .core import additive_from_upper, from_additive, to_additive
from .ranking import (
    CharacteristicRankingMatrix,
    characteristic_matrix,
    is_admissible_locus,
    satisfies_r_condition,
)


@dataclass(frozen=True, eq=False)
class LocusChangeReport:
    """Before/after diagnostics of one consistencization."""

    before_char: CharacteristicRankingMatrix
    after_char: CharacteristicRankingMatrix
    r_before: bool
    r_after: bool
    admissible_before: bool
    admissible_after: bool
    locus_changed: bool


def orthogonal_project(l):
    """Closest consistent additive matrix in the canonical norm."""
    m = np.asarray(l.entries)
    v = m.sum(axis=1) / l.n
    b = v[:, None] - v[None, :]
    iu = np.triu_indices(l.n, 1)
    return additive_from_upper(l.n, b[iu])


def consistencize(a):
    """Multiplicative orthogonal-projection consistencization."""
    return from_additive(orthogonal_project(to_additive(a)))


def locus_change_report(a, tie_tol=0.0):
    """Consistencize and compare ranking loci before and after.

    locus_changed is only meaningful (and only set) when the ranking
    condition holds on both sides.
    """
    b = consistencize(a)
    r_before = satisfies_r_condition(a, tie_tol)
    r_after = satisfies_r_condition(b, tie_tol)
    before_char = characteristic_matrix(a, tie_tol)
    after_char = characteristic_matrix(b, tie_tol)
    locus_changed = bool(
        r_before and r_after and not np.array_equal(before_char.signs, after_char.signs)
    )
    return LocusChangeReport(
        before_char=before_char,
        after_char=after_char,
        r_before=r_before,
        r_after=r_after,
        admissible_before=is_admissible_locus(a, tie_tol),
        admissible_after=is_admissible_locus(b, tie_tol),
        locus_changed=locus_changed,
    )
