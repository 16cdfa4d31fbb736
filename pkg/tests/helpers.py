"""Shared test helpers: independent reference implementations.

The routines here deliberately avoid the package's own algorithms so the
tests compare two different computations.  Determinants use cofactor
expansion (the package uses Gaussian elimination), and LCP solutions are
checked straight from the definition.
"""

from fractions import Fraction
from itertools import combinations


def cofactor_det(rows):
    """Determinant by first-row cofactor expansion, exact over Fraction."""
    n = len(rows)
    if n == 1:
        return Fraction(rows[0][0])
    total = Fraction(0)
    for j in range(n):
        entry = Fraction(rows[0][j])
        if entry == 0:
            continue
        minor = [
            [rows[i][c] for c in range(n) if c != j] for i in range(1, n)
        ]
        sign = -1 if j % 2 else 1
        total += sign * entry * cofactor_det(minor)
    return total


def check_lcp_solution(matrix, q, x):
    """Exact check of x >= 0, w = Ax + q >= 0, x . w = 0."""
    xf = [Fraction(v) for v in x]
    qf = [Fraction(v) for v in q]
    if any(v < 0 for v in xf):
        return False
    w = [wi + qi for wi, qi in zip(matrix.matvec(xf), qf)]
    if any(v < 0 for v in w):
        return False
    return sum((a * b for a, b in zip(xf, w)), Fraction(0)) == 0


def principal_minors(rows):
    """All principal minors (nonempty index sets), exact, via cofactor_det."""
    n = len(rows)
    out = []
    for size in range(1, n + 1):
        for idx in combinations(range(n), size):
            sub = [[rows[i][j] for j in idx] for i in idx]
            out.append((idx, cofactor_det(sub)))
    return out
