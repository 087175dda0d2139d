"""Ordered configuration spaces: a collision-repelling metric and path length.

A configuration is k pairwise-distinct points in R^dim.  The metric scales
the flat product metric by the square of sum_{i != j} 1/|u_i - u_j|^2 (sum
over ordered pairs; the diagonal i = j is excluded, otherwise every term is
infinite).  Lengths of paths that end in a collision diverge; the quadrature
here demonstrates that divergence numerically.
"""

from dataclasses import dataclass

import numpy as np

from .errors import CollisionError


@dataclass(frozen=True, eq=False)
class Configuration:
    """k pairwise-distinct points in R^dim; points has shape (k, dim)."""

    k: int
    dim: int
    points: np.ndarray


def new_configuration(points):
    pts = np.asarray(points, dtype=float)
    if pts.ndim == 1:
        pts = pts[:, None]
    k, dim = pts.shape
    if k < 2:
        raise ValueError("a configuration needs at least 2 points")
    _collision_factor(pts)  # raises CollisionError on coincident points
    pts = pts.copy()
    pts.setflags(write=False)
    return Configuration(k, dim, pts)


def _collision_factor(pts):
    """sum over ordered pairs i != j of 1/|u_i - u_j|^2."""
    diff = pts[:, None, :] - pts[None, :, :]
    sq = np.sum(diff * diff, axis=2)
    k = pts.shape[0]
    total = 0.0
    for i in range(k):
        for j in range(k):
            if i == j:
                continue
            if sq[i, j] == 0.0:
                raise CollisionError(i, j)
            total += 1.0 / sq[i, j]
    return total


def config_metric(u, v, v2):
    """Riemannian metric: (sum_{i!=j} 1/|u_i-u_j|^2)^2 * sum_l <v_l, v2_l>."""
    v = np.asarray(v, dtype=float).reshape(u.k, u.dim)
    v2 = np.asarray(v2, dtype=float).reshape(u.k, u.dim)
    factor = _collision_factor(np.asarray(u.points))
    return factor * factor * float(np.sum(v * v2))


@dataclass(frozen=True, eq=False)
class SampledPath:
    """Path samples (t_s, points_s): t strictly increasing in [0,1],
    points has shape (samples, k, dim)."""

    t: np.ndarray
    points: np.ndarray


def sample_path(fn, t0=0.0, t1=1.0, samples=10000):
    """Sample fn(t) -> (k, dim) array on a uniform grid over [t0, t1]."""
    t = np.linspace(t0, t1, samples)
    pts = np.asarray([np.asarray(fn(s), dtype=float) for s in t])
    if pts.ndim == 2:
        pts = pts[:, :, None]
    return SampledPath(t, pts)


def path_length(path):
    """Trapezoidal length with central-difference velocities on the grid.

    Every sampled configuration must be collision-free.
    """
    t = np.asarray(path.t, dtype=float)
    pts = np.asarray(path.points, dtype=float)
    if t.ndim != 1 or t.shape[0] < 2 or np.any(np.diff(t) <= 0):
        raise ValueError("need at least 2 strictly increasing sample times")
    vel = np.gradient(pts, t, axis=0)  # central differences, one-sided ends
    speeds = np.empty(t.shape[0])
    for s in range(t.shape[0]):
        factor = _collision_factor(pts[s])
        speeds[s] = factor * np.sqrt(np.sum(vel[s] * vel[s]))
    return float(np.trapezoid(speeds, t))


def two_point_collision_path(separation=0.5):
    """Straight line in which point 1 hits point 0 at t = 1.

    gamma(t) = ((0), (separation * (1 - t))) in R^1.  With the default
    separation 1/2 the exact truncated length on [0, 1-eps] is 4*(1/eps - 1).
    """

    def fn(t):
        return np.array([[0.0], [separation * (1.0 - t)]])

    return fn


def collision_length_table(epsilons=(1e-2, 1e-3, 1e-4), samples=100000, separation=0.5):
    """Truncated lengths of the two-point collision path, with closed forms."""
    fn = two_point_collision_path(separation)
    c = 2.0 / separation
    rows = []
    for eps in epsilons:
        path = sample_path(fn, 0.0, 1.0 - eps, samples)
        rows.append(
            {
                "epsilon": float(eps),
                "samples": int(samples),
                "length": path_length(path),
                "closed_form": c * (1.0 / eps - 1.0),
            }
        )
    return rows
