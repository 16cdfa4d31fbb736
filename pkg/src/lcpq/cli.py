"""Command line front end.

Subcommands: classify, verify, generate, degree, and the jordan group
(identities, rank-one, embed-check).  Reports are deterministic for fixed
inputs and seeds; wall-clock timings only appear behind --timings so the
default output is byte-identical across runs.

Exit codes: 0 yes/pass, 1 no/fail/contradiction, 2 undecided,
64 usage or parse error, 65 enumeration cap exceeded, 70 sampling budget
exhausted.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from fractions import Fraction
from typing import Optional, Tuple

import numpy as np

from .classes import NO, UNDECIDED, YES, Verdict, is_R0, q_oracle
from .classifier import classify
from .errors import (
    DegreeSamplingError,
    EnumerationCapError,
    MatrixFormatError,
)
from .generate import GENERATOR_TYPES, generate
from .jordan.algebra import (
    Algebra,
    element_from_eigenvalues,
    parse_algebra,
    random_frame,
    standard_frame,
    sym_algebra,
)
from .jordan.checks import IDENTITY_NAMES, identity_residuals
from .jordan.sclcp import (
    classify_rank_one_q,
    embed_solve,
    sample_positivity_violation,
)
from .jordan.transforms import rank_one
from .lcp import degree
from .matrices import RationalMatrix, parse_matrix, parse_vector
from .structure import detect_structure

EXIT_YES = 0
EXIT_NO = 1
EXIT_UNDECIDED = 2
EXIT_USAGE = 64
EXIT_CAP = 65
EXIT_SAMPLING = 70

_ANSWER_EXIT = {YES: EXIT_YES, NO: EXIT_NO, UNDECIDED: EXIT_UNDECIDED}


class _Parser(argparse.ArgumentParser):
    """argparse parser whose usage errors exit with the documented code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, "%s: error: %s\n" % (self.prog, message))


def _fail(message: str, code: int) -> int:
    print(message, file=sys.stderr)
    return code


def _read_matrix_file(path: str) -> Tuple[RationalMatrix, str]:
    with open(path, "rb") as fh:
        raw = fh.read()
    digest = hashlib.sha256(raw).hexdigest()
    return parse_matrix(raw.decode("utf-8")), digest


def _format_scalar(value) -> Optional[str]:
    if isinstance(value, bool):
        return str(value)
    if isinstance(value, (int, Fraction)):
        return str(value)
    if isinstance(value, float):
        return "%.6g" % value
    if isinstance(value, str):
        return value
    return None  # vectors and nested data stay in the JSON report


def _verdict_summary(verdict: Verdict) -> str:
    parts = ["%s: %s" % (verdict.rule, verdict.condition)]
    scalars = []
    for key in sorted(verdict.data):
        text = _format_scalar(verdict.data[key])
        if text is not None:
            scalars.append("%s=%s" % (key, text))
    if scalars:
        parts.append("; " + ", ".join(scalars))
    return "".join(parts)


def _emit(record: dict) -> None:
    print(json.dumps(record, sort_keys=True))


def cmd_classify(args) -> int:
    worst = EXIT_YES
    for path in args.paths:
        try:
            matrix, digest = _read_matrix_file(path)
        except (OSError, UnicodeDecodeError, MatrixFormatError) as exc:
            return _fail("%s: %s" % (path, exc), EXIT_USAGE)
        structure = detect_structure(matrix)
        started = time.perf_counter()
        try:
            verdict = classify(matrix, oracle_budget=args.budget, oracle_seed=args.seed)
        except EnumerationCapError as exc:
            return _fail("%s: %s" % (path, exc), EXIT_CAP)
        elapsed = time.perf_counter() - started
        if args.format == "jsonl":
            _emit(
                {
                    "input": path,
                    "sha256": digest,
                    "n": matrix.n,
                    "structure": structure.tag,
                    "k": structure.k,
                    "notes": list(structure.notes),
                    "verdict": verdict.to_json_obj(),
                }
            )
        else:
            print("%s: Q: %s (%s)" % (path, verdict.answer, _verdict_summary(verdict)))
            if args.timings:
                print("  elapsed: %.3fs" % elapsed)
        worst = max(worst, _ANSWER_EXIT[verdict.answer])
    return worst


def cmd_verify(args) -> int:
    clean = True
    for path in args.paths:
        try:
            matrix, digest = _read_matrix_file(path)
        except (OSError, UnicodeDecodeError, MatrixFormatError) as exc:
            return _fail("%s: %s" % (path, exc), EXIT_USAGE)
        structure = detect_structure(matrix)
        started = time.perf_counter()
        try:
            verdict = classify(matrix, oracle_budget=args.budget, oracle_seed=args.seed)
            oracle = q_oracle(matrix, budget=args.budget, rng_seed=args.seed)
        except EnumerationCapError as exc:
            return _fail("%s: %s" % (path, exc), EXIT_CAP)
        elapsed = time.perf_counter() - started
        contradiction = (verdict.is_yes and oracle.is_no) or (
            verdict.is_no and oracle.is_yes
        )
        clean = clean and not contradiction
        if args.format == "jsonl":
            _emit(
                {
                    "input": path,
                    "sha256": digest,
                    "n": matrix.n,
                    "structure": structure.tag,
                    "k": structure.k,
                    "classifier": verdict.to_json_obj(),
                    "oracle": oracle.to_json_obj(),
                    "agreement": not contradiction,
                }
            )
        else:
            print(
                "%s: classifier=%s (%s) oracle=%s (%s) %s"
                % (
                    path,
                    verdict.answer,
                    verdict.rule,
                    oracle.answer,
                    oracle.rule,
                    "OK" if not contradiction else "CONTRADICTION",
                )
            )
            if args.timings:
                print("  elapsed: %.3fs" % elapsed)
    return EXIT_YES if clean else EXIT_NO


def cmd_generate(args) -> int:
    try:
        matrices = generate(args.type, args.n, args.count, args.seed, args.entry_range)
    except ValueError as exc:
        return _fail(str(exc), EXIT_USAGE)
    os.makedirs(args.out, exist_ok=True)
    for index, matrix in enumerate(matrices):
        name = "%s-n%d-seed%d-%04d.json" % (args.type, matrix.n, args.seed, index)
        path = os.path.join(args.out, name)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(matrix.to_json_obj(), sort_keys=True))
            fh.write("\n")
        print(path)
    return EXIT_YES


def cmd_degree(args) -> int:
    try:
        matrix, _ = _read_matrix_file(args.path)
    except (OSError, UnicodeDecodeError, MatrixFormatError) as exc:
        return _fail("%s: %s" % (args.path, exc), EXIT_USAGE)
    try:
        r0 = is_R0(matrix)
        if not r0.is_yes:
            print("NotR0")
            return EXIT_NO
        print(degree(matrix, rng_seed=args.seed))
    except EnumerationCapError as exc:
        return _fail(str(exc), EXIT_CAP)
    except DegreeSamplingError as exc:
        return _fail(str(exc), EXIT_SAMPLING)
    return EXIT_YES


def _parse_algebra_arg(text: str) -> Algebra:
    try:
        return parse_algebra(text)
    except (ValueError, TypeError) as exc:
        raise ValueError("bad --algebra %r: %s" % (text, exc))


def _build_frame(algebra: Algebra, which: str, seed: int):
    if which == "rotated":
        return random_frame(algebra, np.random.default_rng(seed))
    return standard_frame(algebra)


def cmd_jordan_identities(args) -> int:
    try:
        algebra = _parse_algebra_arg(args.algebra)
    except ValueError as exc:
        return _fail(str(exc), EXIT_USAGE)
    residuals = identity_residuals(algebra, args.samples, args.seed)
    overall = max(residuals.values())
    passed = overall < args.tol
    if args.json:
        _emit(
            {
                "algebra": args.algebra,
                "samples": args.samples,
                "seed": args.seed,
                "residuals": residuals,
                "overall": overall,
                "tol": args.tol,
                "pass": passed,
            }
        )
    else:
        for name in IDENTITY_NAMES:
            print("%-24s max residual %.3e" % (name, residuals[name]))
        print(
            "overall                  max residual %.3e (tol %.1e) -> %s"
            % (overall, args.tol, "pass" if passed else "fail")
        )
    return EXIT_YES if passed else EXIT_NO


def _parse_eigs(text: str) -> list:
    body = text[5:] if text.startswith("eigs:") else text
    try:
        values = [float(part) for part in body.split(",") if part.strip() != ""]
    except ValueError:
        raise ValueError("bad eigenvalue list %r" % (text,))
    if not values:
        raise ValueError("empty eigenvalue list %r" % (text,))
    return values


def cmd_jordan_rank_one(args) -> int:
    try:
        eigs_a = _parse_eigs(args.a)
        eigs_b = _parse_eigs(args.b)
        algebra = (
            _parse_algebra_arg(args.algebra)
            if args.algebra
            else Algebra("rn", len(eigs_a))
        )
    except ValueError as exc:
        return _fail(str(exc), EXIT_USAGE)
    if len(eigs_a) != algebra.rank or len(eigs_b) != algebra.rank:
        return _fail(
            "need %d eigenvalues per element for %s" % (algebra.rank, args.algebra),
            EXIT_USAGE,
        )
    frame = _build_frame(algebra, args.frame, args.seed)
    a = element_from_eigenvalues(frame, eigs_a)
    b = element_from_eigenvalues(frame, eigs_b)
    verdict = classify_rank_one_q(a, b, tol=args.tol)
    sampler = None
    if verdict.is_no:
        sampler = sample_positivity_violation(
            rank_one(a, b), samples=args.samples, rng_seed=args.seed, tol=args.tol
        )
    if args.json:
        record = {
            "a": eigs_a,
            "b": eigs_b,
            "algebra": algebra.kind + ":" + str(algebra.size),
            "frame": args.frame,
            "verdict": verdict.to_json_obj(),
        }
        if sampler is not None:
            record["violation_sampler"] = sampler.to_json_obj()
        _emit(record)
    else:
        print("Q: %s (%s)" % (verdict.answer, _verdict_summary(verdict)))
        if sampler is not None:
            if sampler.found:
                print(
                    "cone map violation found after %d samples: min eigenvalue %.6g"
                    % (sampler.samples_used, sampler.value)
                )
            else:
                print(
                    "no violation in %d samples (%s)"
                    % (sampler.samples_used, sampler.note)
                )
    return _ANSWER_EXIT[verdict.answer]


def cmd_jordan_embed_check(args) -> int:
    try:
        matrix, digest = _read_matrix_file(args.matrix)
        qvec = parse_vector(args.q)
    except (OSError, UnicodeDecodeError, MatrixFormatError) as exc:
        return _fail(str(exc), EXIT_USAGE)
    if len(qvec) != matrix.n:
        return _fail(
            "q has %d entries but the matrix has order %d" % (len(qvec), matrix.n),
            EXIT_USAGE,
        )
    if args.algebra:
        try:
            algebra = _parse_algebra_arg(args.algebra)
        except ValueError as exc:
            return _fail(str(exc), EXIT_USAGE)
    else:
        algebra = sym_algebra(args.n if args.n else matrix.n)
    if algebra.rank != matrix.n:
        return _fail(
            "algebra rank %d does not match matrix order %d" % (algebra.rank, matrix.n),
            EXIT_USAGE,
        )
    frame = _build_frame(algebra, args.frame, args.seed)
    try:
        outcome = embed_solve(matrix, qvec, frame, tol=args.tol)
    except EnumerationCapError as exc:
        return _fail(str(exc), EXIT_CAP)
    if args.json:
        record = {
            "input": args.matrix,
            "sha256": digest,
            "q": [str(v) for v in qvec],
            "algebra": algebra.kind + ":" + str(algebra.size),
            "frame": args.frame,
            "status": outcome.status,
        }
        if outcome.check is not None:
            record["check"] = outcome.check.to_json_obj()
            record["r"] = [str(v) for v in outcome.r]
        _emit(record)
    else:
        if outcome.status == "unsolvable":
            print(
                "status: unsolvable (no solution at this q; "
                "no frame-diagonal cone solution exists either)"
            )
        else:
            check = outcome.check
            print("status: embedded, r = (%s)" % ", ".join(str(v) for v in outcome.r))
            print(
                "x_min_eig=%.3e y_min_eig=%.3e inner=%.3e tol=%.1e -> %s"
                % (
                    check.x_min_eigenvalue,
                    check.y_min_eigenvalue,
                    check.inner_product,
                    check.tol,
                    "pass" if check.passed else "fail",
                )
            )
    return EXIT_YES if outcome.passed else EXIT_NO


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="lcpq",
        description="Classify structured matrices for the Q-property, "
        "verify against a brute-force oracle, and check symmetric-cone "
        "embeddings on Jordan algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("classify", help="classify matrix files by theorem rules")
    p.add_argument("paths", nargs="+", help="matrix files (JSON or plain rows)")
    p.add_argument("--format", choices=("table", "jsonl"), default="table")
    p.add_argument("--json", action="store_const", const="jsonl", dest="format")
    p.add_argument("--budget", type=int, default=64, help="oracle witness budget")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--timings", action="store_true", help="print wall-clock timings")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="run classifier and oracle, flag contradictions")
    p.add_argument("paths", nargs="+")
    p.add_argument("--format", choices=("table", "jsonl"), default="table")
    p.add_argument("--json", action="store_const", const="jsonl", dest="format")
    p.add_argument("--budget", type=int, default=64)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--timings", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="write seeded structured instances")
    p.add_argument("--type", required=True, choices=GENERATOR_TYPES)
    p.add_argument("--n", type=int, default=3, help="matrix order (2x2 ignores it)")
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--entry-range", type=int, default=5)
    p.add_argument("--out", default=".", help="output directory")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("degree", help="LCP degree of an R0 matrix")
    p.add_argument("path")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_degree)

    jordan = sub.add_parser("jordan", help="Jordan algebra checks")
    jsub = jordan.add_subparsers(dest="subcommand", required=True, metavar="subcommand")

    p = jsub.add_parser("identities", help="sampled residuals for the transfer identities")
    p.add_argument("--algebra", required=True, help="rn:N or sym:M")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_jordan_identities)

    p = jsub.add_parser("rank-one", help="Q-property of the map x -> <b,x> a")
    p.add_argument("--a", required=True, help="eigenvalues, e.g. eigs:1,2")
    p.add_argument("--b", required=True)
    p.add_argument("--algebra", help="rn:N or sym:M (default rn sized to --a)")
    p.add_argument("--frame", choices=("standard", "rotated"), default="standard")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--samples", type=int, default=200, help="witness search budget")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_jordan_rank_one)

    p = jsub.add_parser("embed-check", help="embed an exact LCP solution along a frame")
    p.add_argument("--matrix", required=True, help="matrix file")
    p.add_argument("--q", required=True, help="comma separated rational vector")
    p.add_argument("--n", type=int, help="shorthand for --algebra sym:N")
    p.add_argument("--algebra", help="rn:N or sym:M (default sym sized to the matrix)")
    p.add_argument("--frame", choices=("standard", "rotated"), default="standard")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_jordan_embed_check)

    return parser


_DASH_VALUE_FLAGS = ("--q", "--a", "--b")


def _merge_dash_values(argv):
    """Join flag/value pairs whose value starts with '-' (e.g. --q "-1,-1")
    into --flag=value tokens so argparse does not read them as options."""
    merged = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if (
            token in _DASH_VALUE_FLAGS
            and i + 1 < len(argv)
            and argv[i + 1].startswith("-")
        ):
            merged.append("%s=%s" % (token, argv[i + 1]))
            i += 2
        else:
            merged.append(token)
            i += 1
    return merged


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    args = parser.parse_args(_merge_dash_values(list(argv)))
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
