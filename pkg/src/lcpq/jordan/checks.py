"""Sampled residual checks for the algebra axioms and the frame-transfer
identities.  Used by the command line and the test suite; every check is
seeded and returns the worst residual observed per identity family.
"""

from __future__ import annotations

from typing import Dict

import numpy as np

from .algebra import (
    Algebra,
    jordan_product,
    random_element,
    random_frame,
    spectral_decomposition,
    trace_inner_product,
)
from .transforms import bracket, hat_transform, hat_vector

IDENTITY_NAMES = (
    "bracket-roundtrip",
    "inner-product-transfer",
    "hat-commutes",
    "quadratic-form-transfer",
    "commutativity",
    "jordan-identity",
    "trace-compatibility",
    "frame-validity",
    "spectral-reconstruction",
)


def identity_residuals(
    algebra: Algebra, samples: int, rng_seed: int = 0
) -> Dict[str, float]:
    """Max residuals over seeded samples, one entry per identity family.

    Covers the frame-transfer identities (bracket of hat, inner products,
    transform of a frame-span element, quadratic forms), the algebra axioms
    (commutativity, the Jordan identity, trace compatibility) and the
    validity of frames produced by spectral decomposition.
    """
    rng = np.random.default_rng(rng_seed)
    rank = algebra.rank
    worst = {name: 0.0 for name in IDENTITY_NAMES}

    def bump(name: str, value: float) -> None:
        if value > worst[name]:
            worst[name] = value

    for _ in range(samples):
        frame = random_frame(algebra, rng)
        bump("frame-validity", frame.validate(tol=np.inf))

        r = rng.standard_normal(rank)
        s = rng.standard_normal(rank)
        a = rng.standard_normal((rank, rank))
        r_hat = hat_vector(r, frame)
        s_hat = hat_vector(s, frame)
        bump("bracket-roundtrip", float(np.max(np.abs(bracket(r_hat, frame) - r))))
        bump(
            "inner-product-transfer",
            abs(float(np.dot(r, s)) - trace_inner_product(r_hat, s_hat)),
        )
        a_hat = hat_transform(a, frame)
        lhs = a_hat.apply(r_hat)
        rhs = hat_vector(a @ r, frame)
        bump("hat-commutes", float(np.max(np.abs(lhs.coords - rhs.coords))))

        x = random_element(algebra, rng)
        bx = bracket(x, frame)
        bump(
            "quadratic-form-transfer",
            abs(trace_inner_product(a_hat.apply(x), x) - float(bx @ a @ bx)),
        )

        y = random_element(algebra, rng)
        z = random_element(algebra, rng)
        bump(
            "commutativity",
            float(np.max(np.abs((jordan_product(x, y) - jordan_product(y, x)).coords))),
        )
        x_sq = jordan_product(x, x)
        left = jordan_product(x, jordan_product(x_sq, y))
        right = jordan_product(x_sq, jordan_product(x, y))
        bump("jordan-identity", float(np.max(np.abs((left - right).coords))))
        bump(
            "trace-compatibility",
            abs(
                trace_inner_product(jordan_product(x, y), z)
                - trace_inner_product(x, jordan_product(y, z))
            ),
        )

        eigenvalues, spec_frame = spectral_decomposition(x)
        bump("frame-validity", spec_frame.validate(tol=np.inf))
        rebuilt = hat_vector(eigenvalues, spec_frame)
        bump(
            "spectral-reconstruction",
            float(np.max(np.abs(rebuilt.coords - x.coords))),
        )
    return worst
