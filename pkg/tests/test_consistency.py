import math

import numpy as np
import pytest

from pcrank import consistency, core

E = math.e
LN2 = math.log(2)

TRIAD_EXAMPLE = [[1, 2, 2], [0.5, 1, 2], [0.5, 0.5, 1]]
COUNTEREXAMPLE_1 = core.pc_from_upper_logs(3, [1.0, -1.0, 1.0])


def test_triads_counts():
    assert consistency.triads(3) == [(0, 1, 2)]
    assert len(consistency.triads(4)) == 4
    assert len(consistency.triads(6)) == 20
    assert consistency.triads(4) == sorted(consistency.triads(4))


def test_max_triad_deviation_consistent():
    a = core.pc_from_weights([1, 2, 4])
    assert consistency.max_triad_deviation(a) < 1e-12


def test_max_triad_deviation_single_triad():
    a = core.new_pc_matrix(TRIAD_EXAMPLE)
    assert consistency.max_triad_deviation(a) == pytest.approx(LN2, rel=1e-12)


def test_max_triad_deviation_counterexample():
    # logs (1, -1, 1): residual |1 + 1 - (-1)| = 3
    assert consistency.max_triad_deviation(COUNTEREXAMPLE_1) == pytest.approx(3.0, rel=1e-12)


def test_is_consistent():
    assert consistency.is_consistent(core.pc_from_weights([1, 2, 4]))
    assert not consistency.is_consistent(core.new_pc_matrix(TRIAD_EXAMPLE))


def test_koczkodaj_values():
    assert consistency.koczkodaj_index(core.pc_from_weights([2, 3, 5])) < 1e-12
    assert consistency.koczkodaj_index(core.new_pc_matrix(TRIAD_EXAMPLE)) == pytest.approx(0.5, rel=1e-12)
    assert consistency.koczkodaj_index(COUNTEREXAMPLE_1) == pytest.approx(1 - math.exp(-3), rel=1e-12)


def test_koczkodaj_matches_ratio_definition():
    # min(|1 - y/(xz)|, |1 - xz/y|) maximized over triads, computed directly
    rng = np.random.default_rng(3)
    for n in (3, 4, 5):
        a = core.pc_from_upper_logs(n, rng.uniform(-2, 2, n * (n - 1) // 2))
        direct = 0.0
        for i, j, k in consistency.triads(n):
            x, y, z = consistency.triad_values(a, i, j, k)
            direct = max(direct, min(abs(1 - y / (x * z)), abs(1 - x * z / y)))
        assert consistency.koczkodaj_index(a) == pytest.approx(direct, rel=1e-10)


def test_smooth_values():
    assert consistency.smooth_index(core.pc_from_weights([1, 2, 4])) < 1e-12
    assert consistency.smooth_index(core.new_pc_matrix(TRIAD_EXAMPLE)) == pytest.approx(
        1 - math.exp(-(LN2**2)), rel=1e-12
    )
    assert consistency.smooth_index(COUNTEREXAMPLE_1) == pytest.approx(1 - math.exp(-9), rel=1e-12)


def test_faithfulness_randomized():
    rng = np.random.default_rng(4)
    for _ in range(50):
        n = int(rng.integers(3, 6))
        w = np.exp(rng.uniform(-2, 2, n))
        a = core.pc_from_weights(w)
        assert consistency.koczkodaj_index(a) <= 1e-10
        assert consistency.smooth_index(a) <= 1e-10
        # perturb one upper entry: both indicators must detect it
        logs = np.log(a.upper())
        q = int(rng.integers(len(logs)))
        logs[q] += rng.uniform(0.1, 1.0) * rng.choice([-1, 1])
        b = core.pc_from_upper_logs(n, logs)
        assert consistency.koczkodaj_index(b) > 1e-10
        assert consistency.smooth_index(b) > 1e-10


def test_indicator_range():
    rng = np.random.default_rng(5)
    for _ in range(100):
        n = int(rng.integers(3, 7))
        a = core.pc_from_upper_logs(n, rng.uniform(-8, 8, n * (n - 1) // 2))
        for value in (consistency.koczkodaj_index(a), consistency.smooth_index(a)):
            # mathematically < 1, but exp(-s) underflows to 0 for s > ~745,
            # so the smooth indicator saturates at exactly 1.0 in floats
            assert 0.0 <= value <= 1.0


def test_smooth_permutation_invariance():
    rng = np.random.default_rng(6)
    for _ in range(20):
        n = int(rng.integers(3, 6))
        a = core.pc_from_upper_logs(n, rng.uniform(-2, 2, n * (n - 1) // 2))
        perm = rng.permutation(n)
        b = core.new_pc_matrix(a.entries[np.ix_(perm, perm)])
        assert consistency.smooth_index(b) == pytest.approx(consistency.smooth_index(a), rel=1e-10)


def test_koczkodaj_transpose_invariance():
    rng = np.random.default_rng(7)
    for _ in range(20):
        n = int(rng.integers(3, 6))
        a = core.pc_from_upper_logs(n, rng.uniform(-2, 2, n * (n - 1) // 2))
        b = core.new_pc_matrix(a.entries.T)  # entrywise reciprocal of a
        assert consistency.koczkodaj_index(b) == pytest.approx(
            consistency.koczkodaj_index(a), rel=1e-10
        )
