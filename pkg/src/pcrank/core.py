"""Pairwise-comparisons matrix data model.

A multiplicative PC matrix is a strictly positive n x n matrix (n >= 3) with
unit diagonal and a_ji = 1/a_ij.  Its additive counterpart is the entrywise
natural log, a skew-symmetric matrix.  Both are stored canonically: only the
strict upper triangle is authoritative, the diagonal and lower triangle are
derived at construction time, so reciprocity is a representation invariant
rather than a runtime check.

Index convention is 0-based everywhere.  Where weights enter, the convention
is a_ij = w_i / w_j (ratios below 1 above the diagonal mean "i weighs less
than j").
"""

import csv
import io
import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    BadDiagonal,
    FormatError,
    NonPositiveEntry,
    NonReciprocal,
    TooSmall,
)

RECIPROCITY_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class PCMatrix:
    """Multiplicative pairwise-comparisons matrix (canonical storage)."""

    n: int
    entries: np.ndarray  # read-only n x n array

    def upper(self):
        """Strict upper-triangle entries in lexicographic (i,j) order."""
        iu = np.triu_indices(self.n, 1)
        return self.entries[iu]


@dataclass(frozen=True, eq=False)
class AdditivePCMatrix:
    """Log-space (skew-symmetric) view of a PC matrix."""

    n: int
    entries: np.ndarray

    def upper(self):
        iu = np.triu_indices(self.n, 1)
        return self.entries[iu]


@dataclass(frozen=True, eq=False)
class UpperTriangleVector:
    """Flat coordinate chart: the n(n-1)/2 upper-triangle values, pairs (i,j)
    with i < j in lexicographic order."""

    n: int
    coords: np.ndarray


def pair_count(n):
    return n * (n - 1) // 2


def _freeze(a):
    a = np.ascontiguousarray(a, dtype=float)
    a.setflags(write=False)
    return a


def _pc_from_upper_entries(n, upper):
    """Canonical multiplicative matrix from its strict upper triangle."""
    m = np.ones((n, n))
    iu = np.triu_indices(n, 1)
    m[iu] = upper
    m[iu[1], iu[0]] = 1.0 / np.asarray(upper, dtype=float)
    return PCMatrix(n, _freeze(m))


def _additive_from_upper(n, upper):
    """Canonical skew-symmetric matrix from its strict upper triangle."""
    m = np.zeros((n, n))
    iu = np.triu_indices(n, 1)
    m[iu] = upper
    m[iu[1], iu[0]] = -np.asarray(upper, dtype=float)
    return AdditivePCMatrix(n, _freeze(m))


def new_pc_matrix(raw, reciprocity_tol=RECIPROCITY_TOL):
    """Validate a raw array and build a canonical PCMatrix.

    Validation order: shape, n >= 3, positivity, diagonal, reciprocity;
    each error names the first offending location (row-major scan).
    The lower triangle of the result is recomputed as exact reciprocals
    of the upper triangle.
    """
    raw = np.asarray(raw, dtype=float)
    if raw.ndim != 2 or raw.shape[0] != raw.shape[1]:
        raise FormatError(f"expected a square matrix, got shape {raw.shape}")
    n = raw.shape[0]
    if n < 3:
        raise TooSmall(n)
    for i in range(n):
        for j in range(n):
            if not raw[i, j] > 0 or not math.isfinite(raw[i, j]):
                raise NonPositiveEntry(i, j, raw[i, j])
    for i in range(n):
        if abs(raw[i, i] - 1.0) > reciprocity_tol:
            raise BadDiagonal(i, raw[i, i])
    for i in range(n):
        for j in range(i + 1, n):
            dev = abs(raw[i, j] * raw[j, i] - 1.0)
            if dev > reciprocity_tol:
                raise NonReciprocal(i, j, dev)
    iu = np.triu_indices(n, 1)
    return _pc_from_upper_entries(n, raw[iu])


def pc_from_upper(n, upper):
    """PCMatrix from strictly positive upper-triangle entries (lexicographic)."""
    upper = np.asarray(upper, dtype=float)
    if upper.shape != (pair_count(n),):
        raise FormatError(
            f"expected {pair_count(n)} upper-triangle entries for n={n}, got {upper.shape}"
        )
    if n < 3:
        raise TooSmall(n)
    for q, v in enumerate(upper):
        if not v > 0 or not math.isfinite(v):
            iu = np.triu_indices(n, 1)
            raise NonPositiveEntry(int(iu[0][q]), int(iu[1][q]), v)
    return _pc_from_upper_entries(n, upper)


def pc_from_upper_logs(n, logs):
    """PCMatrix whose upper-triangle log entries are ``logs``.

    Logs beyond ~709 overflow to inf in the multiplicative picture; callers
    that may produce such values (diverged optimizer runs) keep the log-space
    iterate around for inspection.
    """
    logs = np.asarray(logs, dtype=float)
    with np.errstate(over="ignore", divide="ignore"):
        return _pc_from_upper_entries(n, np.exp(logs))


def pc_from_weights(weights):
    """Consistent PCMatrix with a_ij = w_i / w_j."""
    w = np.asarray(weights, dtype=float)
    if w.ndim != 1 or w.shape[0] < 3:
        raise TooSmall(w.shape[0] if w.ndim == 1 else 0)
    if np.any(w <= 0):
        k = int(np.argmax(w <= 0))
        raise NonPositiveEntry(k, k, w[k])
    iu = np.triu_indices(w.shape[0], 1)
    return _pc_from_upper_entries(w.shape[0], w[iu[0]] / w[iu[1]])


def to_additive(a):
    """Entrywise natural log of a PCMatrix."""
    return _additive_from_upper(a.n, np.log(a.upper()))


def from_additive(l):
    """Entrywise exponential; inverse of :func:`to_additive`."""
    return _pc_from_upper_entries(l.n, np.exp(l.upper()))


def upper_coords(l):
    """Flatten an AdditivePCMatrix to its upper-triangle coordinate vector."""
    return UpperTriangleVector(l.n, _freeze(l.upper()))


def from_upper_coords(v):
    """Rebuild the skew-symmetric matrix from upper-triangle coordinates."""
    return _additive_from_upper(v.n, v.coords)


def additive_from_upper(n, upper):
    """AdditivePCMatrix from raw upper-triangle log values."""
    return _additive_from_upper(n, np.asarray(upper, dtype=float))


# ---------------------------------------------------------------------------
# serialization

def matrix_from_json_dict(obj, reciprocity_tol=RECIPROCITY_TOL):
    """Build a PCMatrix from {"n": int, "upper": [...]} or
    {"n": int, "entries": [[...], ...]}."""
    if not isinstance(obj, dict) or "n" not in obj:
        raise FormatError('matrix JSON must be an object with an "n" field')
    n = obj["n"]
    if not isinstance(n, int):
        raise FormatError('"n" must be an integer')
    if "upper" in obj:
        return pc_from_upper(n, obj["upper"])
    if "entries" in obj:
        entries = np.asarray(obj["entries"], dtype=float)
        if entries.shape != (n, n):
            raise FormatError(f'"entries" must be {n}x{n}, got {entries.shape}')
        return new_pc_matrix(entries, reciprocity_tol)
    raise FormatError('matrix JSON needs an "upper" or "entries" field')


def matrix_to_json_dict(a):
    return {"n": a.n, "entries": [[float(x) for x in row] for row in a.entries]}


def parse_matrix(text, fmt="json", reciprocity_tol=RECIPROCITY_TOL):
    """Parse a matrix from JSON or CSV text.  Values are plain decimals;
    exponential notation like e^2 is not parsed."""
    if fmt == "json":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON: {exc}") from exc
        return matrix_from_json_dict(obj, reciprocity_tol)
    if fmt == "csv":
        rows = []
        for row in csv.reader(io.StringIO(text)):
            if not row or all(not cell.strip() for cell in row):
                continue
            try:
                rows.append([float(cell) for cell in row])
            except ValueError as exc:
                raise FormatError(f"invalid CSV number: {exc}") from exc
        if not rows:
            raise FormatError("empty CSV input")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise FormatError("ragged CSV rows")
        return new_pc_matrix(np.asarray(rows), reciprocity_tol)
    raise FormatError(f"unknown format {fmt!r}")


def format_matrix(a, fmt="json"):
    """Render a PCMatrix as JSON or CSV text."""
    if fmt == "json":
        return json.dumps(matrix_to_json_dict(a))
    if fmt == "csv":
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        for row in a.entries:
            writer.writerow([repr(float(x)) for x in row])
        return out.getvalue()
    raise FormatError(f"unknown format {fmt!r}")
