"""Structural shape detection for the classifier's dispatch.

The bidiagonal-southwest (bdsw) shape allows nonzeros only on the diagonal,
the superdiagonal and the southwest corner entry (n,1).  Matrices of that
shape split into four type-classes by row sign patterns; the detector also
recognises triangular and triangular-plus-nonnegative-row block forms.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import NotBdswShapeError
from .matrices import (
    RationalMatrix,
    is_lower_triangular,
    is_upper_triangular,
    nonnegative_rows,
    nonpositive_rows,
)

UPPER_TRIANGULAR = "upper-triangular"
LOWER_TRIANGULAR = "lower-triangular"
TRIANGULAR_PLUS_ROW = "triangular-plus-row"
BDSW_TYPE_1 = "bdsw-type-1"
BDSW_TYPE_2 = "bdsw-type-2"
BDSW_TYPE_3 = "bdsw-type-3"
BDSW_TYPE_4 = "bdsw-type-4"
GENERAL = "general"


@dataclass(frozen=True)
class Permutation:
    """Permutation of {1..n} stored as 1-based images: i maps to images[i-1]."""

    images: tuple

    @property
    def n(self) -> int:
        return len(self.images)

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError("not a permutation of 1..n: %r" % (self.images,))

    def apply(self, i: int) -> int:
        """Image of 1-based index i."""
        return self.images[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, im in enumerate(self.images, start=1):
            inv[im - 1] = i
        return Permutation(tuple(inv))

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: (self.compose(other))(i) = self(other(i))."""
        return Permutation(tuple(self.apply(other.apply(i)) for i in range(1, self.n + 1)))

    def matrix(self) -> RationalMatrix:
        """0/1 matrix P with P e_i = e_{images[i]}."""
        n = self.n
        return RationalMatrix(
            [[1 if self.images[j] == i + 1 else 0 for j in range(n)] for i in range(n)]
        )

    def conjugate(self, matrix: RationalMatrix) -> RationalMatrix:
        """P A P^T: entry (sigma(i), sigma(j)) of the result equals A[i, j]."""
        if matrix.n != self.n:
            raise ValueError("order mismatch")
        inv = self.inverse()
        return RationalMatrix(
            [
                [matrix.rows[inv.apply(i) - 1][inv.apply(j) - 1] for j in range(1, self.n + 1)]
                for i in range(1, self.n + 1)
            ]
        )


@dataclass(frozen=True)
class StructureClass:
    """Detected structure tag plus auxiliary data.

    k is 1-based: for bdsw-type-1 it is the index of a nonnegative row
    (normalised so k < n, see detect_structure); for bdsw-type-4 it is the
    count of negative diagonal entries.
    """

    tag: str
    k: Optional[int] = None
    notes: tuple = field(default_factory=tuple)


def is_bdsw_shape(matrix: RationalMatrix) -> bool:
    """True when nonzeros appear only on diagonal, superdiagonal, corner (n,1)."""
    n = matrix.n
    if n < 2:
        return False
    for i in range(n):
        for j in range(n):
            if i == j or j == i + 1 or (i == n - 1 and j == 0):
                continue
            if matrix.rows[i][j] != 0:
                return False
    return True


def bdsw_offdiagonal(matrix: RationalMatrix, i: int) -> Fraction:
    """The single relevant off-diagonal entry of 0-based row i of a bdsw matrix."""
    n = matrix.n
    if i < n - 1:
        return matrix.rows[i][i + 1]
    return matrix.rows[n - 1][0]


def bdsw_determinant(matrix: RationalMatrix) -> Fraction:
    """Closed-form determinant for the bdsw shape.

    det A = prod of diagonal entries
            + (-1)^(n+1) * a_12 a_23 ... a_(n-1)n * a_n1.
    """
    if not is_bdsw_shape(matrix):
        raise NotBdswShapeError("matrix does not have the bdsw zero pattern")
    n = matrix.n
    diag_term = Fraction(1)
    for i in range(n):
        diag_term *= matrix.rows[i][i]
    cycle_term = Fraction(1)
    for i in range(n - 1):
        cycle_term *= matrix.rows[i][i + 1]
    cycle_term *= matrix.rows[n - 1][0]
    if (n + 1) % 2 == 1:
        cycle_term = -cycle_term
    return diag_term + cycle_term


def rotation_permutation(n: int, k: int) -> Permutation:
    """The rotation sending index a to a + (n - k), wrapping around 1..n.

    Columns of its matrix are e_(n-k+1), ..., e_n, e_1, ..., e_(n-k); it
    moves row/column k of a conjugated matrix into the last position.
    """
    if not 1 <= k < n:
        raise ValueError("need 1 <= k < n, got k=%d n=%d" % (k, n))
    return Permutation(tuple((a + n - k - 1) % n + 1 for a in range(1, n + 1)))


def rotate_conjugate(matrix: RationalMatrix, k: int) -> RationalMatrix:
    """Conjugate by the rotation that moves index k to index n.

    Preserves the bdsw shape; the result B has b_nn = a_kk and
    b_n1 = a_k(k+1) (1-based names).
    """
    return rotation_permutation(matrix.n, k).conjugate(matrix)


def antidiagonal_conjugate(matrix: RationalMatrix) -> RationalMatrix:
    """J A J with J the antidiagonal identity: reverses both index orders."""
    n = matrix.n
    return RationalMatrix(
        [[matrix.rows[n - 1 - i][n - 1 - j] for j in range(n)] for i in range(n)]
    )


def triangular_plus_row_split(matrix: RationalMatrix):
    """Match the block form (B c; d^T a_nn) with B upper triangular of order
    n-1, d >= 0 and a_nn > 0.  Returns (B, c, d, a_nn) or None.

    The head c of the last column is unconstrained.
    """
    n = matrix.n
    if n < 2:
        return None
    ann = matrix.rows[n - 1][n - 1]
    if ann <= 0:
        return None
    d = [matrix.rows[n - 1][j] for j in range(n - 1)]
    if any(v < 0 for v in d):
        return None
    b_rows = [[matrix.rows[i][j] for j in range(n - 1)] for i in range(n - 1)]
    for i in range(n - 1):
        for j in range(i):
            if b_rows[i][j] != 0:
                return None
    c = [matrix.rows[i][n - 1] for i in range(n - 1)]
    return RationalMatrix(b_rows), c, d, ann


def detect_structure(matrix: RationalMatrix) -> StructureClass:
    """Return the most specific structure tag.

    Precedence: a nonpositive row forces the general tag (classification
    short-circuits to No); bdsw-shaped matrices get their type-class, with a
    nonzero nonnegative row taking priority (type 1); only non-bdsw shapes
    fall through to the triangular tags.  Secondary shape facts (bidiagonal,
    two-by-two, triangularity of a bdsw matrix) go into notes.
    """
    n = matrix.n
    notes = []
    if n == 2:
        notes.append("two-by-two")

    bad_rows = nonpositive_rows(matrix)
    if bad_rows:
        notes.extend("nonpositive-row:%d" % (i + 1) for i in bad_rows)
        return StructureClass(GENERAL, notes=tuple(notes))

    if is_bdsw_shape(matrix):
        if matrix.rows[n - 1][0] == 0:
            notes.append("bidiagonal")
        if is_upper_triangular(matrix):
            notes.append("upper-triangular")
        nonneg = nonnegative_rows(matrix)
        if nonneg:
            ahead = [i for i in nonneg if i < n - 1]
            if ahead:
                k = ahead[0] + 1
            else:
                # Only row n is nonnegative; rotating by n-1 moves it to
                # position 1, which is the normalised index we report.
                k = 1
                notes.append("nonnegative-row-n-normalized-to-1")
            return StructureClass(BDSW_TYPE_1, k=k, notes=tuple(notes))
        # No nonpositive and no nonnegative row: every row holds exactly one
        # positive and one negative entry among its diagonal and relevant
        # off-diagonal slot, so the sign of the diagonal decides the type.
        diag_signs = [matrix.rows[i][i] > 0 for i in range(n)]
        if all(diag_signs):
            return StructureClass(BDSW_TYPE_2, notes=tuple(notes))
        if not any(diag_signs):
            return StructureClass(BDSW_TYPE_3, notes=tuple(notes))
        neg_count = sum(1 for i in range(n) if matrix.rows[i][i] < 0)
        return StructureClass(BDSW_TYPE_4, k=neg_count, notes=tuple(notes))

    if is_upper_triangular(matrix):
        return StructureClass(UPPER_TRIANGULAR, notes=tuple(notes))
    if is_lower_triangular(matrix):
        return StructureClass(LOWER_TRIANGULAR, notes=tuple(notes))
    if triangular_plus_row_split(matrix) is not None:
        return StructureClass(TRIANGULAR_PLUS_ROW, notes=tuple(notes))
    return StructureClass(GENERAL, notes=tuple(notes))
