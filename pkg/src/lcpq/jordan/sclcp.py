"""Symmetric-cone LCP checks: embedding exact matrix-LCP solutions along a
frame, verifying cone solutions, classifying rank-one transforms for the
Q-property, and sampling-based falsifiers.

The complementarity problem for a transform L and element q asks for x in
the cone with y := L(x) + q in the cone and <x, y> = 0.  Verification is
numeric with explicit tolerances; the underlying matrix LCP is solved in
exact rational arithmetic first, so the only float error is the embedding.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

import numpy as np

from ..classes import NO, UNDECIDED, YES, Verdict
from ..lcp import LcpInstance, solve_lcp
from ..matrices import RationalMatrix
from .algebra import (
    JordanElement,
    JordanFrame,
    eigenvalues_of,
    jordan_product,
    random_element,
    trace_inner_product,
)
from .transforms import LinearTransform, hat_transform, hat_vector

DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class ScLcpSolutionCheck:
    """Diagnostics for a candidate cone solution x with y = L(x) + q."""

    x: JordanElement
    y: JordanElement
    x_min_eigenvalue: float
    y_min_eigenvalue: float
    inner_product: float
    tol: float
    passed: bool

    def to_json_obj(self) -> dict:
        return {
            "x_min_eigenvalue": self.x_min_eigenvalue,
            "y_min_eigenvalue": self.y_min_eigenvalue,
            "inner_product": self.inner_product,
            "tol": self.tol,
            "pass": self.passed,
        }


def verify_sc_solution(
    transform: LinearTransform,
    q: JordanElement,
    x: JordanElement,
    tol: float = DEFAULT_TOL,
) -> ScLcpSolutionCheck:
    """Check x >= 0, L(x) + q >= 0 and <x, L(x)+q> = 0 within tol."""
    y = transform.apply(x) + q
    x_min = float(eigenvalues_of(x).min())
    y_min = float(eigenvalues_of(y).min())
    inner = trace_inner_product(x, y)
    passed = x_min >= -tol and y_min >= -tol and abs(inner) <= tol
    return ScLcpSolutionCheck(x, y, x_min, y_min, inner, tol, passed)


@dataclass(frozen=True)
class EmbedOutcome:
    """Result of embedding a matrix LCP along a frame.

    status "embedded": a solution r was found exactly and its frame-diagonal
    image passed verification (check holds the record, r the rational
    solution).  status "unsolvable": the matrix LCP has no solution, which
    also certifies that no frame-diagonal cone solution exists.
    """

    status: str
    check: Optional[ScLcpSolutionCheck]
    r: Optional[Tuple[Fraction, ...]]

    @property
    def passed(self) -> bool:
        return self.status == "unsolvable" or (
            self.check is not None and self.check.passed
        )


def embed_solve(
    matrix: RationalMatrix,
    q: Sequence,
    frame: JordanFrame,
    tol: float = DEFAULT_TOL,
) -> EmbedOutcome:
    """Solve LCP(matrix, q) exactly, then verify the hat embedding of the
    first solution against the embedded transform at the given frame."""
    if matrix.n != len(frame):
        raise ValueError("matrix order %d does not match frame rank %d" % (matrix.n, len(frame)))
    instance = LcpInstance(matrix, q)
    solutions = solve_lcp(instance)
    if not solutions:
        return EmbedOutcome("unsolvable", None, None)
    r = solutions[0].x
    transform = hat_transform(matrix, frame)
    x_hat = hat_vector([float(v) for v in r], frame)
    q_hat = hat_vector([float(v) for v in instance.q], frame)
    check = verify_sc_solution(transform, q_hat, x_hat, tol)
    return EmbedOutcome("embedded", check, tuple(r))


def classify_rank_one_q(
    a: JordanElement, b: JordanElement, tol: float = DEFAULT_TOL
) -> Verdict:
    """Q-property of x -> <b, x> a, decided by eigenvalue signs.

    Yes when both factors are interior to the cone, or both interior to its
    negative.  No when the signs decisively rule out both orientations.
    Eigenvalues inside the tolerance band leave the question open."""
    if a.algebra != b.algebra:
        raise ValueError("elements live in different algebras")
    a_eigs = eigenvalues_of(a)
    b_eigs = eigenvalues_of(b)
    a_min, a_max = float(a_eigs.min()), float(a_eigs.max())
    b_min, b_max = float(b_eigs.min()), float(b_eigs.max())
    data = {"a_min": a_min, "a_max": a_max, "b_min": b_min, "b_max": b_max}
    if a_min > tol and b_min > tol:
        return Verdict(YES, "rank-one-eigensign", "both factors interior to the cone", data)
    if a_max < -tol and b_max < -tol:
        return Verdict(
            YES, "rank-one-eigensign", "both factors interior to the negated cone", data
        )
    fails_positive = a_min < -tol or b_min < -tol
    fails_negative = a_max > tol or b_max > tol
    if fails_positive and fails_negative:
        return Verdict(
            NO,
            "rank-one-eigensign",
            "eigenvalue signs rule out both cone orientations",
            data,
        )
    return Verdict(
        UNDECIDED,
        "rank-one-eigensign",
        "an eigenvalue sits inside the tolerance band",
        data,
    )


@dataclass(frozen=True)
class SamplingReport:
    """Outcome of a randomized falsification search.

    found marks a witness; value is the witnessing quantity when found,
    otherwise the minimum observed over all samples.  Absence of a witness
    is one-sided evidence only, never a certificate.
    """

    found: bool
    witness: Optional[JordanElement]
    value: float
    samples_used: int
    note: str

    def to_json_obj(self) -> dict:
        return {
            "violation": self.found,
            "value": self.value,
            "samples": self.samples_used,
            "note": self.note,
        }


_EVIDENCE_NOTE = "sampled evidence only; absence of a violation is not a certificate"


def _cone_samples(algebra, samples: int, rng_seed: int):
    rng = np.random.default_rng(rng_seed)
    produced = 0
    while produced < samples:
        y = random_element(algebra, rng)
        z = jordan_product(y, y)
        norm = z.norm()
        if norm < 1e-12:
            continue
        produced += 1
        yield z * (1.0 / norm)


def strict_copositivity_sample(
    transform: LinearTransform,
    samples: int = 1000,
    rng_seed: int = 0,
    tol: float = DEFAULT_TOL,
) -> SamplingReport:
    """Search normalized cone elements for <L(x), x> <= tol."""
    worst = np.inf
    used = 0
    for z in _cone_samples(transform.algebra, samples, rng_seed):
        used += 1
        value = trace_inner_product(transform.apply(z), z)
        worst = min(worst, value)
        if value <= tol:
            return SamplingReport(True, z, value, used, _EVIDENCE_NOTE)
    return SamplingReport(False, None, float(worst), used, _EVIDENCE_NOTE)


def sample_positivity_violation(
    transform: LinearTransform,
    samples: int = 1000,
    rng_seed: int = 0,
    tol: float = DEFAULT_TOL,
) -> SamplingReport:
    """Search normalized cone elements for one mapped outside the cone,
    reporting the witness x with min eigenvalue of L(x) below -tol."""
    worst = np.inf
    used = 0
    for z in _cone_samples(transform.algebra, samples, rng_seed):
        used += 1
        value = float(eigenvalues_of(transform.apply(z)).min())
        worst = min(worst, value)
        if value < -tol:
            return SamplingReport(True, z, value, used, _EVIDENCE_NOTE)
    return SamplingReport(False, None, float(worst), used, _EVIDENCE_NOTE)
