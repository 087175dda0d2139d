"""Exception hierarchy for pcrank.

Every domain error names the first offending location so CLI users can fix
their input without guessing.
"""


class PcrankError(Exception):
    """Base class for all pcrank domain errors."""


class TooSmall(PcrankError):
    def __init__(self, n):
        self.n = n
        super().__init__(f"pairwise-comparisons matrices need n >= 3, got n = {n}")


class TooLarge(PcrankError):
    def __init__(self, n, limit):
        self.n = n
        self.limit = limit
        super().__init__(f"n = {n} exceeds the enumeration guard (n <= {limit})")


class NonPositiveEntry(PcrankError):
    def __init__(self, i, j, value):
        self.i, self.j, self.value = i, j, value
        super().__init__(f"entry ({i},{j}) = {value} is not strictly positive")


class BadDiagonal(PcrankError):
    def __init__(self, i, value):
        self.i, self.value = i, value
        super().__init__(f"diagonal entry ({i},{i}) = {value} is not 1")


class NonReciprocal(PcrankError):
    def __init__(self, i, j, deviation):
        self.i, self.j, self.deviation = i, j, deviation
        super().__init__(
            f"entries ({i},{j}) and ({j},{i}) are not reciprocal: "
            f"|a_ij * a_ji - 1| = {deviation}"
        )


class RConditionViolated(PcrankError):
    def __init__(self, i, j):
        self.i, self.j = i, j
        super().__init__(f"off-diagonal entry ({i},{j}) equals 1: ranking condition fails")


class ZeroOffDiagonal(PcrankError):
    def __init__(self, i, j):
        self.i, self.j = i, j
        super().__init__(f"characteristic matrix has a zero off-diagonal sign at ({i},{j})")


class NotAdmissible(PcrankError):
    def __init__(self, msg="matrix does not lie in an admissible locus"):
        super().__init__(msg)


class NotConsistent(PcrankError):
    def __init__(self, deviation, tol):
        self.deviation, self.tol = deviation, tol
        super().__init__(
            f"matrix is not consistent: max triad deviation {deviation} > tol {tol}"
        )


class DomainError(PcrankError):
    """Raised when a matrix lies in the set excluded from the Phi objective:
    consistent but with some off-diagonal entry equal to 1 (tied items)."""


class CollisionError(PcrankError):
    def __init__(self, i, j):
        self.i, self.j = i, j
        super().__init__(f"configuration points {i} and {j} coincide")


class FormatError(PcrankError):
    """Malformed matrix file (JSON/CSV)."""
