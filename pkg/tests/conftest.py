"""Shared independent oracles for the test suite.

These deliberately avoid the library's own code paths: the permutation
search enumerates all n! candidates, the projection oracles use the 3x3
correction formula and a generic least-squares solve.
"""

import itertools

import numpy as np


def brute_force_sigma(signs):
    """Search all n! permutations for one sorting the sign tournament."""
    n = len(signs)
    for sigma in itertools.permutations(range(n)):
        if all(
            signs[sigma[i]][sigma[j]] == -1
            for i in range(n)
            for j in range(i + 1, n)
        ):
            return sigma
    return None


def all_sign_patterns(n):
    """Every skew-symmetric sign matrix with entries +-1 off the diagonal."""
    m = n * (n - 1) // 2
    iu = np.triu_indices(n, 1)
    for bits in itertools.product((-1, 1), repeat=m):
        signs = np.zeros((n, n), dtype=int)
        signs[iu] = bits
        signs[iu[1], iu[0]] = -np.asarray(bits)
        yield signs


def project3_correction(upper_logs):
    """The 3x3 projection via the correction d = (b - a - c)/3."""
    a, b, c = upper_logs
    d = (b - a - c) / 3.0
    return np.array([a + d, b - d, c + d])


def project_lstsq(logmat):
    """Least-squares fit of L_ij ~ v_i - v_j over i<j; returns projected logs."""
    n = logmat.shape[0]
    iu = np.triu_indices(n, 1)
    design = np.zeros((len(iu[0]), n))
    for q, (i, j) in enumerate(zip(iu[0], iu[1])):
        design[q, i] = 1.0
        design[q, j] = -1.0
    v, *_ = np.linalg.lstsq(design, logmat[iu], rcond=None)
    return v[iu[0]] - v[iu[1]]


def random_upper_logs(rng, n, spread=2.0):
    return rng.uniform(-spread, spread, n * (n - 1) // 2)
