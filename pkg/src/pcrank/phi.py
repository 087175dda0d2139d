"""The ranking objective and its gradient-descent minimizer.

For a PC matrix with upper-triangle logs x_q, pair count m and inconsistency
indicator value ii, the objective is

    Phi = ( prod_q ii / (x_q^2 + ii^(n^2/2)) ) * sum_q (x_q^4 + 1),

which is nonnegative and vanishes exactly on matrices that are consistent
(ii = 0) and have no tied pair (x_q != 0).  Matrices that are consistent but
contain a tie are excluded from the domain (the 0/0 regime): evaluating Phi
there raises DomainError.

The minimizer is steepest descent on the upper-triangle log coordinates with
Armijo backtracking.  Because the minimum is flat (Phi ~ residual^(2m) near a
consistent matrix), the trial step is re-grown from the previously accepted
step each iteration; plain unit-step backtracking would need ~1e24 iterations
to reach desk tolerances, while the adaptive step converges geometrically.
The default phi_tol is sized so that stopping on it leaves the matrix
consistent to about 1e-6 in max triad deviation for log entries up to ~10.

Caveat: the objective also decays to 0 along escape directions where the log
entries grow without bound (for n=3 like 1/x^2), and when the indicator
saturates (sum of squared residuals >> 1) the pull toward consistency is
exponentially suppressed, so strongly inconsistent starts can descend into
that valley and terminate at MaxIters with diverging entries.  Mildly
inconsistent matrices (residuals below ~1, pairwise ratios bounded away
from 1) sit in the consistent stratum's basin and converge in well under a
hundred iterations; see harness.random_mildly_inconsistent_matrix.
"""

import enum
import itertools
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import (
    PCMatrix,
    UpperTriangleVector,
    pair_count,
    pc_from_upper_logs,
    to_additive,
)
from .consistency import IndicatorKind
from .errors import DomainError

CONSISTENCY_TOL = 1e-9  # "consistent" threshold for the excluded-set check
_STEP_GROWTH = 2.0
_MIN_STEP = 1e-300


class Termination(enum.Enum):
    PHI_BELOW_TOL = "PhiBelowTol"
    GRAD_BELOW_TOL = "GradBelowTol"
    MAX_ITERS = "MaxIters"
    DOMAIN_GUARD = "DomainGuard"


@dataclass(frozen=True)
class PhiConfig:
    indicator: IndicatorKind = IndicatorKind.SMOOTH
    max_iters: int = 10000
    grad_tol: float = 0.0
    phi_tol: Optional[float] = None  # None: auto-sized from n, see default_phi_tol
    initial_step: float = 1.0
    backtrack_factor: float = 0.5
    armijo_c: float = 1e-4
    guard_eps: float = 1e-8
    max_move: float = 1.0  # cap on |step * grad|_2 per iteration, in log units

    def __post_init__(self):
        if self.max_iters < 1:
            raise ValueError("max_iters must be >= 1")
        if not 0.0 < self.backtrack_factor < 1.0:
            raise ValueError("backtrack_factor must be in (0,1)")
        if not 0.0 < self.armijo_c < 1.0:
            raise ValueError("armijo_c must be in (0,1)")
        if self.guard_eps <= 0.0:
            raise ValueError("guard_eps must be > 0")
        if self.initial_step <= 0.0:
            raise ValueError("initial_step must be > 0")
        if self.phi_tol is not None and self.phi_tol <= 0.0:
            raise ValueError("phi_tol must be > 0")
        if self.grad_tol < 0.0:
            raise ValueError("grad_tol must be >= 0")
        if self.max_move <= 0.0:
            raise ValueError("max_move must be > 0")


@dataclass(frozen=True, eq=False)
class PhiTrajectory:
    """Iterate log of one minimization run.  phi values are non-increasing."""

    iterates: tuple  # of (UpperTriangleVector, phi_value, grad_norm)
    final: PCMatrix
    converged: bool
    termination: Termination

    @property
    def iterations(self):
        return len(self.iterates) - 1

    @property
    def phi_values(self):
        return [p for _, p, _ in self.iterates]


def default_phi_tol(n):
    """Auto phi_tol: m * (1e-14)^m with m = n(n-1)/2.

    Sized from the lower bound Phi >= m * (dev^2 / (X^2+1))^m with log
    entries |x| <= X ~ 10, so Phi below this value forces max triad
    deviation below ~1e-6.
    """
    m = pair_count(n)
    return m * (1e-14) ** m


# per-n cache of (triad->pair incidence matrix C, pair index arrays)
_structure_cache = {}


def _structure(n):
    if n not in _structure_cache:
        pair_index = {p: q for q, p in enumerate(itertools.combinations(range(n), 2))}
        trs = list(itertools.combinations(range(n), 3))
        c = np.zeros((len(trs), pair_count(n)))
        for t, (i, j, k) in enumerate(trs):
            c[t, pair_index[(i, j)]] += 1.0
            c[t, pair_index[(j, k)]] += 1.0
            c[t, pair_index[(i, k)]] -= 1.0
        _structure_cache[n] = c
    return _structure_cache[n]


def _check_domain(x, max_abs_res, cons_tol):
    if max_abs_res <= cons_tol and np.any(x == 0.0):
        raise DomainError(
            "matrix is consistent but has a tied pair (entry equal to 1); "
            "it lies outside the objective's domain"
        )


def _phi_from_logs(x, n, kind, cons_tol=CONSISTENCY_TOL):
    c = _structure(n)
    r = c @ x
    max_abs = float(np.max(np.abs(r))) if r.size else 0.0
    _check_domain(x, max_abs, cons_tol)
    if kind is IndicatorKind.SMOOTH:
        ii = -math.expm1(-float(r @ r))
    else:
        ii = -math.expm1(-max_abs)
    if ii == 0.0:
        return 0.0
    p = n * n / 2.0
    d = x * x + ii**p
    return float(np.prod(ii / d) * np.sum(x**4 + 1.0))


def _phi_value_and_grad_smooth(x, n, cons_tol=CONSISTENCY_TOL):
    """Analytic value and gradient for the smooth indicator."""
    c = _structure(n)
    r = c @ x
    max_abs = float(np.max(np.abs(r)))
    _check_domain(x, max_abs, cons_tol)
    s = float(r @ r)
    ii = -math.expm1(-s)
    m = x.shape[0]
    if ii == 0.0:
        # global minimum along the consistent, tie-free stratum
        return 0.0, np.zeros(m)
    p = n * n / 2.0
    d = x * x + ii**p
    prod = float(np.prod(ii / d))
    tot = float(np.sum(x**4 + 1.0))
    dii = math.exp(-s) * (c.T @ (2.0 * r))
    grad = prod * 4.0 * x**3 + prod * tot * (
        dii * (m / ii - p * ii ** (p - 1.0) * float(np.sum(1.0 / d))) - 2.0 * x / d
    )
    return prod * tot, grad


def _fd_gradient(x, n, kind, cons_tol=CONSISTENCY_TOL):
    """Central finite differences, step 1e-6 * max(1, |x|_inf)."""
    h = 1e-6 * max(1.0, float(np.max(np.abs(x))) if x.size else 1.0)
    g = np.zeros_like(x)
    for q in range(x.shape[0]):
        e = np.zeros_like(x)
        e[q] = h
        g[q] = (
            _phi_from_logs(x + e, n, kind, cons_tol)
            - _phi_from_logs(x - e, n, kind, cons_tol)
        ) / (2.0 * h)
    return g


def phi(a, indicator=IndicatorKind.SMOOTH, cons_tol=CONSISTENCY_TOL):
    """Objective value at a PC matrix; DomainError on the excluded set."""
    x = np.asarray(to_additive(a).upper())
    return _phi_from_logs(x, a.n, indicator, cons_tol)


def phi_gradient(v, indicator=IndicatorKind.SMOOTH, cons_tol=CONSISTENCY_TOL):
    """Gradient of the objective in upper-triangle log coordinates.

    Analytic for the smooth indicator, central finite differences otherwise
    (the distance-based indicator is not differentiable at its kinks).
    """
    x = np.asarray(v.coords, dtype=float)
    if indicator is IndicatorKind.SMOOTH:
        _, g = _phi_value_and_grad_smooth(x, v.n, cons_tol)
    else:
        g = _fd_gradient(x, v.n, indicator, cons_tol)
    g.setflags(write=False)
    return UpperTriangleVector(v.n, g)


def _value_and_grad(x, n, kind, cons_tol):
    if kind is IndicatorKind.SMOOTH:
        return _phi_value_and_grad_smooth(x, n, cons_tol)
    return _phi_from_logs(x, n, kind, cons_tol), _fd_gradient(x, n, kind, cons_tol)


def minimize_phi(a, cfg=None):
    """Steepest descent with Armijo backtracking on the objective.

    Stops on phi <= phi_tol, grad norm <= grad_tol, max_iters, or the domain
    guard (all off-diagonal logs within guard_eps of 0 while the matrix is
    still inconsistent, i.e. the iterate approaches the excluded set where
    the objective is singular).  A line search that cannot make progress at
    the smallest representable step also reports MaxIters.
    """
    if cfg is None:
        cfg = PhiConfig()
    n = a.n
    kind = cfg.indicator
    phi_tol = cfg.phi_tol if cfg.phi_tol is not None else default_phi_tol(n)
    c = _structure(n)

    x = np.asarray(to_additive(a).upper(), dtype=float)
    value, grad = _value_and_grad(x, n, kind, CONSISTENCY_TOL)

    iterates = []

    def record(xv, pv, gn):
        snap = xv.copy()
        snap.setflags(write=False)
        iterates.append((UpperTriangleVector(n, snap), pv, gn))

    def near_excluded(xv):
        if float(np.max(np.abs(xv))) >= cfg.guard_eps:
            return False
        r = c @ xv
        return float(np.max(np.abs(r))) > CONSISTENCY_TOL

    gnorm = float(np.linalg.norm(grad))
    record(x, value, gnorm)

    termination = Termination.MAX_ITERS
    converged = False
    step = cfg.initial_step / _STEP_GROWTH  # first trial step = initial_step

    for _ in range(cfg.max_iters):
        if value <= phi_tol:
            termination = Termination.PHI_BELOW_TOL
            converged = True
            break
        if gnorm <= cfg.grad_tol:
            termination = Termination.GRAD_BELOW_TOL
            converged = True
            break
        if near_excluded(x):
            termination = Termination.DOMAIN_GUARD
            break

        # re-grow the trial step, but never move farther than max_move:
        # the objective also decays along escape directions with growing
        # log entries, and an uncapped accepted step can teleport the
        # iterate into that valley instead of toward consistency
        step = min(step * _STEP_GROWTH, cfg.max_move / gnorm)
        accepted = False
        while step >= _MIN_STEP:
            x_new = x - step * grad
            try:
                v_new = _phi_from_logs(x_new, n, kind, CONSISTENCY_TOL)
            except DomainError:
                v_new = math.inf
            if v_new <= value - cfg.armijo_c * step * gnorm * gnorm:
                accepted = True
                break
            step *= cfg.backtrack_factor
        if not accepted:
            break  # MaxIters: no representable step decreases the objective

        x = x_new
        value, grad = _value_and_grad(x, n, kind, CONSISTENCY_TOL)
        gnorm = float(np.linalg.norm(grad))
        record(x, value, gnorm)
    else:
        termination = Termination.MAX_ITERS

    if termination is Termination.MAX_ITERS and value <= phi_tol:
        termination = Termination.PHI_BELOW_TOL
        converged = True

    return PhiTrajectory(
        iterates=tuple(iterates),
        final=pc_from_upper_logs(n, x),
        converged=converged,
        termination=termination,
    )
