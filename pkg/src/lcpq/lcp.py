"""Exact LCP solving by complementary-support enumeration, plus LCP degree.

LCP(A, q): find x >= 0 with w = Ax + q >= 0 and x . w = 0.  Every solution
is recovered by enumerating the 2^n candidate supports, so the order is
capped (default 16, override with the LCP_ENUM_CAP environment variable).
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

from .errors import DegreeSamplingError, EnumerationCapError, NotR0Error
from .matrices import RationalMatrix, determinant, solve_linear, vec_to_fractions
from .simplex import FeasibilitySystem, solve_feasibility

DEFAULT_ENUM_CAP = 16
DEGREE_DRAW_BUDGET = 64


def enumeration_cap() -> int:
    value = os.environ.get("LCP_ENUM_CAP")
    if value is None:
        return DEFAULT_ENUM_CAP
    try:
        cap = int(value)
    except ValueError:
        return DEFAULT_ENUM_CAP
    return cap if cap >= 1 else DEFAULT_ENUM_CAP


def check_cap(n: int) -> None:
    cap = enumeration_cap()
    if n > cap:
        raise EnumerationCapError(
            "order %d exceeds the support-enumeration cap %d" % (n, cap)
        )


@dataclass(frozen=True)
class LcpInstance:
    matrix: RationalMatrix
    q: tuple

    def __init__(self, matrix: RationalMatrix, q: Sequence):
        qf = tuple(vec_to_fractions(q))
        if len(qf) != matrix.n:
            raise ValueError("q length %d does not match order %d" % (len(qf), matrix.n))
        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "q", qf)


@dataclass(frozen=True)
class LcpSolution:
    """One solution x of LCP(A, q).

    support is the true support {i : x_i > 0} (1-based indices);
    support_det_sign is the sign of det A restricted to that support (+1 for
    the empty support); a zero sign marks a singular supporting block, which
    is how representatives of affine solution families are recognised.
    nondegenerate means x + Ax + q > 0 componentwise, exactly.
    """

    x: tuple
    support: tuple
    nondegenerate: bool
    support_det_sign: int


def _sign(v: Fraction) -> int:
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


def _solution_from_x(matrix: RationalMatrix, q: Sequence[Fraction], x: List[Fraction]) -> LcpSolution:
    n = matrix.n
    w = [wi + qi for wi, qi in zip(matrix.matvec(x), q)]
    support = tuple(i + 1 for i in range(n) if x[i] > 0)
    if support:
        sub = matrix.principal_submatrix([i - 1 for i in support])
        det_sign = _sign(determinant(sub))
    else:
        det_sign = 1
    nondeg = all(x[i] + w[i] > 0 for i in range(n))
    return LcpSolution(tuple(x), support, nondeg, det_sign)


def _candidate_for_support(matrix: RationalMatrix, q: Sequence[Fraction], idx: List[int]):
    """Solve for x supported on the 0-based index list idx with (Ax+q)_idx = 0.

    Returns ("unique", x) / ("family", x or None) / ("none", None); x is the
    full-length vector, sign feasibility not yet checked for "unique".
    """
    n = matrix.n
    if not idx:
        return "unique", [Fraction(0)] * n
    sub = matrix.principal_submatrix(idx)
    rhs = [-q[i] for i in idx]
    status, xi = solve_linear(sub, rhs)
    if status == "unique":
        x = [Fraction(0)] * n
        for pos, i in enumerate(idx):
            x[i] = xi[pos]
        return "unique", x
    if status == "inconsistent":
        return "none", None
    # Singular but consistent: search the affine family for a representative
    # satisfying the sign constraints (an exact LP feasibility problem).
    comp = [j for j in range(n) if j not in idx]
    system = FeasibilitySystem(len(idx))
    for pos_r, i in enumerate(idx):
        system.add_eq([sub.rows[pos_r][c] for c in range(len(idx))], -q[i])
    for j in comp:
        system.add_ge([matrix.rows[j][i] for i in idx], -q[j])
    point = solve_feasibility(system)
    if point is None:
        return "none", None
    x = [Fraction(0)] * n
    for pos, i in enumerate(idx):
        x[i] = point[pos]
    return "family", x


def solve_lcp(inst: LcpInstance) -> List[LcpSolution]:
    """All solutions of LCP(A, q), one representative per affine family.

    Deterministic: supports are enumerated in bitmask order and duplicate
    solution vectors are kept once (first occurrence wins).
    """
    matrix, q = inst.matrix, inst.q
    n = matrix.n
    check_cap(n)
    seen = {}
    for mask in range(1 << n):
        idx = [i for i in range(n) if mask >> i & 1]
        kind, x = _candidate_for_support(matrix, q, idx)
        if x is None:
            continue
        if any(v < 0 for v in x):
            continue
        w = [wi + qi for wi, qi in zip(matrix.matvec(x), q)]
        if any(w[j] < 0 for j in range(n) if j not in idx):
            continue
        key = tuple(x)
        if key not in seen:
            seen[key] = _solution_from_x(matrix, q, x)
    return list(seen.values())


def is_solvable(matrix: RationalMatrix, q: Sequence) -> bool:
    return bool(solve_lcp(LcpInstance(matrix, q)))


def _generic_candidates(matrix: RationalMatrix, q: Sequence[Fraction]):
    """Per-support analysis at a would-be generic q.

    Returns (ok, contributions): ok is False when q must be resampled
    (a singular-but-consistent support system, or an exact zero in a
    candidate's x_I or complementary slack).  contributions lists the signs
    of det A_II over the supports that yield actual solutions.
    """
    n = matrix.n
    contributions = []
    for mask in range(1 << n):
        idx = [i for i in range(n) if mask >> i & 1]
        if not idx:
            if any(v == 0 for v in q):
                return False, []
            if all(v > 0 for v in q):
                contributions.append(1)
            continue
        sub = matrix.principal_submatrix(idx)
        det = determinant(sub)
        if det == 0:
            status, _ = solve_linear(sub, [-q[i] for i in idx])
            if status != "inconsistent":
                return False, []
            continue
        status, xi = solve_linear(sub, [-q[i] for i in idx])
        assert status == "unique"
        if any(v == 0 for v in xi):
            return False, []
        if any(v < 0 for v in xi):
            continue
        x = [Fraction(0)] * n
        for pos, i in enumerate(idx):
            x[i] = xi[pos]
        w = [wi + qi for wi, qi in zip(matrix.matvec(x), q)]
        comp = [j for j in range(n) if j not in idx]
        if any(w[j] == 0 for j in comp):
            return False, []
        if any(w[j] < 0 for j in comp):
            continue
        contributions.append(_sign(det))
    return True, contributions


def degree(matrix: RationalMatrix, rng_seed: int = 0) -> int:
    """LCP degree: sum of sgn det A_II over the solutions at a generic q.

    Requires the R0 property (checked by the caller via classes.is_R0; this
    function only needs it for the value to be well defined).  Draws integer
    q vectors from a large symmetric range and resamples on any degeneracy;
    the result is independent of the seed.
    """
    n = matrix.n
    check_cap(n)
    rng = random.Random(rng_seed)
    bound = 10 ** 6 * (1 + n)
    for _ in range(DEGREE_DRAW_BUDGET):
        q = [Fraction(rng.randint(-bound, bound)) for _ in range(n)]
        ok, contributions = _generic_candidates(matrix, q)
        if not ok:
            continue
        return sum(contributions)
    raise DegreeSamplingError(
        "no generic q found in %d draws; matrix may not be R0" % DEGREE_DRAW_BUDGET
    )
