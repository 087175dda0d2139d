"""Pure-python (numpy) fallbacks for the compiled kernels in _speedups."""

import numpy as np


def _triad_index_arrays(n):
    idx = np.arange(n)
    i, j, k = np.meshgrid(idx, idx, idx, indexing="ij")
    mask = (i < j) & (j < k)
    return i[mask], j[mask], k[mask]


def triad_stats(logs):
    """(max |r|, sum r^2) over triad residuals r = L[i,j] + L[j,k] - L[i,k]."""
    logs = np.asarray(logs, dtype=float)
    n = logs.shape[0]
    i, j, k = _triad_index_arrays(n)
    r = logs[i, j] + logs[j, k] - logs[i, k]
    if r.size == 0:
        return 0.0, 0.0
    return float(np.max(np.abs(r))), float(np.dot(r, r))


def count_admissible(n, chunk=1 << 16):
    """Count upper-triangle sign patterns forming transitive tournaments.

    Bit q of a pattern is the sign of pair q=(i,j) in lexicographic order:
    1 for +1 (j beats i), 0 for -1 (i beats j).  Transitive iff the score
    sequence is a permutation of {0,...,n-1}.
    """
    m = n * (n - 1) // 2
    iu = np.triu_indices(n, 1)
    # score contribution matrices: beats[q] -> winner index
    win_lo = np.zeros((n, m), dtype=np.int64)  # bit 0: row item wins
    win_hi = np.zeros((n, m), dtype=np.int64)  # bit 1: col item wins
    for q in range(m):
        win_lo[iu[0][q], q] = 1
        win_hi[iu[1][q], q] = 1
    target = np.arange(n)
    total = 1 << m
    count = 0
    for start in range(0, total, chunk):
        pats = np.arange(start, min(start + chunk, total), dtype=np.uint64)
        bits = ((pats[:, None] >> np.arange(m, dtype=np.uint64)) & 1).astype(np.int64)
        scores = bits @ win_hi.T + (1 - bits) @ win_lo.T
        scores.sort(axis=1)
        count += int(np.sum(np.all(scores == target, axis=1)))
    return count
