"""Support-enumeration LCP solving and the sampled degree computation."""

import random
from fractions import Fraction

import pytest

from helpers import check_lcp_solution
from lcpq.errors import EnumerationCapError
from lcpq.lcp import (
    DEFAULT_ENUM_CAP,
    LcpInstance,
    degree,
    enumeration_cap,
    is_solvable,
    solve_lcp,
)
from lcpq.matrices import RationalMatrix, determinant, inverse


def _solve_2x2_by_formula(matrix, q):
    """Independent 2x2 enumeration with explicit closed forms.

    Only valid when all principal submatrices are nonsingular, which the
    caller guarantees.
    """
    a, b = matrix.rows[0]
    c, d = matrix.rows[1]
    q1, q2 = Fraction(q[0]), Fraction(q[1])
    out = set()
    if q1 >= 0 and q2 >= 0:
        out.add((Fraction(0), Fraction(0)))
    x1 = -q1 / a
    if x1 >= 0 and c * x1 + q2 >= 0:
        out.add((x1, Fraction(0)))
    x2 = -q2 / d
    if x2 >= 0 and b * x2 + q1 >= 0:
        out.add((Fraction(0), x2))
    det = a * d - b * c
    x1 = (-d * q1 + b * q2) / det
    x2 = (c * q1 - a * q2) / det
    if x1 >= 0 and x2 >= 0:
        out.add((x1, x2))
    return out


def test_solutions_satisfy_definition_exactly():
    rng = random.Random(23)
    for _ in range(50):
        n = rng.randint(1, 4)
        m = RationalMatrix(
            [[rng.randint(-4, 4) for _ in range(n)] for _ in range(n)]
        )
        q = [Fraction(rng.randint(-4, 4)) for _ in range(n)]
        for sol in solve_lcp(LcpInstance(m, q)):
            assert check_lcp_solution(m, q, sol.x)
            assert sol.support == tuple(
                i + 1 for i in range(n) if sol.x[i] > 0
            )


def test_enumeration_complete_against_2x2_formulas():
    rng = random.Random(29)
    checked = 0
    while checked < 60:
        m = RationalMatrix(
            [[rng.randint(-3, 3) for _ in range(2)] for _ in range(2)]
        )
        if m[0, 0] == 0 or m[1, 1] == 0 or determinant(m) == 0:
            continue
        q = [Fraction(rng.randint(-3, 3)) for _ in range(2)]
        expected = _solve_2x2_by_formula(m, q)
        got = {sol.x for sol in solve_lcp(LcpInstance(m, q))}
        assert got == expected
        checked += 1


def test_unsolvable_fixture():
    m = RationalMatrix(
        [[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, -1], [1, 0, 0, 0]]
    )
    assert not is_solvable(m, [0, 0, 0, -1])
    assert is_solvable(m, [1, 1, 1, 1])  # x = 0 works for q >= 0


def test_nondegeneracy_flag():
    eye = RationalMatrix.identity(2)
    sols = solve_lcp(LcpInstance(eye, [1, 1]))
    assert len(sols) == 1 and sols[0].nondegenerate

    sols = solve_lcp(LcpInstance(eye, [0, -1]))
    # x = (0, 1) has x_1 + w_1 = 0: degenerate.
    assert {s.x for s in sols} == {(Fraction(0), Fraction(1))}
    assert not sols[0].nondegenerate


def test_singular_support_family_representative():
    # Every x >= 0 solves LCP([[0]], 0); one representative comes back.
    sols = solve_lcp(LcpInstance(RationalMatrix([[0]]), [0]))
    assert len(sols) == 1
    assert sols[0].x == (Fraction(0),)
    assert sols[0].support == ()
    assert sols[0].support_det_sign == 1
    assert check_lcp_solution(RationalMatrix([[0]]), [0], sols[0].x)


def test_duplicate_vectors_kept_once():
    # Supports {1} and {1,2} of this singular matrix give the same point.
    m = RationalMatrix([[1, -1], [1, -1]])
    sols = solve_lcp(LcpInstance(m, [-1, -1]))
    vectors = [s.x for s in sols]
    assert len(vectors) == len(set(vectors))
    for sol in sols:
        assert check_lcp_solution(m, [-1, -1], sol.x)


def test_instance_validation():
    with pytest.raises(ValueError):
        LcpInstance(RationalMatrix.identity(2), [1])
    inst = LcpInstance(RationalMatrix.identity(2), ["1/2", -1])
    assert inst.q == (Fraction(1, 2), Fraction(-1))


def test_enumeration_cap_default_and_override(monkeypatch):
    big = RationalMatrix.identity(DEFAULT_ENUM_CAP + 1)
    with pytest.raises(EnumerationCapError):
        solve_lcp(LcpInstance(big, [1] * big.n))

    monkeypatch.setenv("LCP_ENUM_CAP", "2")
    assert enumeration_cap() == 2
    with pytest.raises(EnumerationCapError):
        solve_lcp(LcpInstance(RationalMatrix.identity(3), [1, 1, 1]))

    monkeypatch.setenv("LCP_ENUM_CAP", "not-a-number")
    assert enumeration_cap() == DEFAULT_ENUM_CAP
    monkeypatch.setenv("LCP_ENUM_CAP", "0")
    assert enumeration_cap() == DEFAULT_ENUM_CAP


def test_degree_identity_is_one():
    assert degree(RationalMatrix.identity(3)) == 1


def test_degree_fixture_negative_one():
    m = RationalMatrix([[-1, 2], [1, -1]])
    assert degree(m) == -1
    # Sanity for the fixture: the inverse is entrywise positive.
    inv = inverse(m)
    assert all(v > 0 for row in inv.rows for v in row)


def test_degree_seed_independent():
    fixtures = [
        RationalMatrix([[-1, 2], [1, -1]]),
        RationalMatrix([[2, -1], [-1, 2]]),
        RationalMatrix([[1, 5], [0, 1]]),
    ]
    for m in fixtures:
        values = {degree(m, rng_seed=s) for s in (0, 1, 2)}
        assert len(values) == 1


def test_degree_one_for_p_matrices():
    for m in (
        RationalMatrix([[2, 1], [0, 3]]),
        RationalMatrix([[3, -1, 0], [0, 2, -1], [0, 0, 1]]),
    ):
        assert degree(m) == 1
