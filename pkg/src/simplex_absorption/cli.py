"""Command-line interface.

Exit codes: 0 ok, 1 verification failure, 2 parse/config error,
3 degenerate simplex, 4 dimension mismatch, 5 unsupported Hadamard order.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import logging
import math
import sys
import time
from pathlib import Path

import numpy as np

from . import absorption, constructions, metrics, oracle, verify
from .bodies import body_from_dict
from .errors import (DegenerateSimplex, DimensionMismatch, SingularMatrix,
                     UnsupportedOrder)
from .search import SearchConfig, minimize_xi
from .simplex import Simplex, simplex_from_dict, simplex_to_dict

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_PARSE = 2
EXIT_DEGENERATE = 3
EXIT_DIMENSION = 4
EXIT_ORDER = 5

log = logging.getLogger("simplex_absorption")


class ParseError(Exception):
    pass


def _read_source(src: str) -> bytes:
    """A path, ``-`` for stdin, or inline JSON starting with ``{``."""
    if src == "-":
        return sys.stdin.buffer.read()
    if src.lstrip().startswith("{"):
        return src.encode()
    try:
        return Path(src).read_bytes()
    except OSError as exc:
        raise ParseError(f"cannot read {src}: {exc}") from exc


def _load_json(raw: bytes, what: str) -> dict:
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{what} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ParseError(f"{what} must be a JSON object")
    return data


def _load_simplex(src: str, mode: str) -> tuple[Simplex, bytes]:
    raw = _read_source(src)
    data = _load_json(raw, "simplex")
    try:
        return simplex_from_dict(data, mode), raw
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise ParseError(f"bad simplex: {exc}") from exc


def _jsonable(obj):
    from fractions import Fraction
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [_jsonable(v) for v in obj.tolist()]
    if isinstance(obj, Fraction):
        return int(obj) if obj.denominator == 1 else f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, (np.bool_, bool)):
        return bool(obj)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.floating, float)):
        return float(obj)
    return obj


def _report(args, command: str, results: dict, inputs: list[bytes] = (),
            tolerances: dict | None = None, seed=None, start: float | None = None) -> dict:
    digest = hashlib.sha256(b"".join(inputs)).hexdigest() if inputs else None
    report = {
        "command": command,
        "input_digest": digest,
        "mode": args.mode,
        "seed": seed,
        "tolerances": tolerances or {},
        "results": results,
    }
    if not args.no_timing and start is not None:
        report["wall_time"] = round(time.perf_counter() - start, 6)
    return _jsonable(report)


def _emit(obj, args) -> None:
    text = json.dumps(obj, sort_keys=True, indent=2)
    out = getattr(args, "output", None)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


# -- commands -------------------------------------------------------------

def cmd_info(args) -> int:
    start = time.perf_counter()
    s, raw = _load_simplex(args.simplex, args.mode)
    m = metrics.compute_metrics(s, args.regular_tol)
    results = m.to_dict()
    results["volume"] = s.volume()
    results["euler"] = {"R": m.circumradius, "n_r": s.n * m.inradius, "gap": m.euler_gap}
    results["lagrange_coeffs"] = s.coeffs
    _emit(_report(args, "info", results, [raw], {"regular": args.regular_tol}, start=start), args)
    return EXIT_OK


def cmd_absorb(args) -> int:
    start = time.perf_counter()
    s, raw = _load_simplex(args.simplex, args.mode)
    body_raw = _read_source(args.body)
    try:
        body = body_from_dict(_load_json(body_raw, "body"), s.n, args.mode)
    except (KeyError, TypeError) as exc:
        raise ParseError(f"bad body descriptor: {exc}") from exc
    if body.n != s.n:
        raise DimensionMismatch(f"body dimension {body.n} != simplex dimension {s.n}")
    results = {"body": body.to_dict(), "simplex": simplex_to_dict(s)}
    wanted = ("xi", "alpha") if args.index == "both" else (args.index,)
    for name in wanted:
        fn = absorption.xi if name == "xi" else absorption.alpha
        results[name] = fn(body, s, args.tol).to_dict()
    if args.check:
        checks = {"xi_bisection": oracle.xi_bisection(body, s)}
        if body.kind == "ball":
            checks["xi_ball_formula"] = absorption.xi_ball_formula(s, body.center, float(body.radius))
            checks["alpha_ball_coeff"] = absorption.alpha_ball_coeff(s, float(body.radius))
        results["checks"] = checks
    _emit(_report(args, "absorb", results, [raw, body_raw], {"circumscribed": args.tol}, start=start), args)
    return EXIT_OK


def cmd_construct(args) -> int:
    kind, n = args.kind, args.n
    if n < 1:
        raise ParseError("n must be at least 1")
    if kind == "standard":
        s = constructions.standard_simplex(n, args.mode)
    elif kind == "regular_ball":
        s = constructions.regular_inscribed_simplex(n)
    elif kind == "hadamard":
        s = constructions.hadamard_simplex(n, args.mode)
    else:
        s = constructions.random_simplex(n, args.seed, args.scheme)
    print(json.dumps(simplex_to_dict(s)))
    return EXIT_OK


def cmd_verify(args) -> int:
    start = time.perf_counter()
    results = verify.run_suites(args.suite, args.n, args.cases, args.seed, args.tol)
    ok = all(r.passed for r in results)
    tolerances = {r.suite: r.tolerance for r in results}
    body = {"passed": ok, "suites": [r.to_dict() for r in results]}
    _emit(_report(args, "verify", body, [], tolerances, seed=args.seed, start=start), args)
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_search(args) -> int:
    start = time.perf_counter()
    try:
        cfg = SearchConfig(n=args.n, body=args.body, restarts=args.restarts,
                           max_iters=args.max_iters, seed=args.seed)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc
    res = minimize_xi(cfg)
    if args.history:
        Path(args.history).write_text(res.history_csv())
    best = res.best_simplex
    results = {
        "config": vars(cfg),
        "best_value": res.best_value,
        "best_simplex": simplex_to_dict(best),
        "history": res.history,
        "iterations": res.iterations,
        "regular": metrics.is_regular(best, 1e-2),
        "side_spread": float(np.ptp(metrics.pairwise_distances(best))),
        "circumradius": metrics.circumball(best)[0],
    }
    if args.n == 2 and args.body == "cube":
        results["reference_xi2"] = 1 + 3 * math.sqrt(5) / 5
    _emit(_report(args, "search", results, [], {}, seed=args.seed, start=start), args)
    return EXIT_OK


# -- parser ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=("float", "rational"), default="float",
                        help="scalar mode for simplex arithmetic")
    common.add_argument("--no-timing", action="store_true",
                        help="omit wall_time so reports are byte-for-byte reproducible")
    common.add_argument("-o", "--output", help="write the report here instead of stdout")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="simplex-absorb",
                                description="Absorption and translate indices of simplices.")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("info", parents=[common], help="metrics of a simplex")
    q.add_argument("simplex", help="simplex JSON file, '-' for stdin, or inline JSON")
    q.add_argument("--regular-tol", type=float, default=metrics.REGULAR_TOL)
    q.set_defaults(func=cmd_info)

    q = sub.add_parser("absorb", parents=[common], help="xi and/or alpha of a body w.r.t. a simplex")
    q.add_argument("simplex")
    q.add_argument("body", help="body JSON file or inline JSON")
    q.add_argument("--index", choices=("xi", "alpha", "both"), default="both")
    q.add_argument("--tol", type=float, default=absorption.CIRCUMSCRIBED_TOL)
    q.add_argument("--check", action="store_true", help="add bisection and closed-form cross-checks")
    q.set_defaults(func=cmd_absorb)

    q = sub.add_parser("construct", parents=[common], help="print a named simplex as JSON")
    q.add_argument("kind", choices=("standard", "regular_ball", "hadamard", "random"))
    q.add_argument("n", type=int)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--scheme", choices=constructions.RANDOM_SCHEMES, default="gaussian")
    q.set_defaults(func=cmd_construct)

    q = sub.add_parser("verify", parents=[common], help="run cross-validation sweeps")
    q.add_argument("--suite", nargs="+", choices=(*verify.SUITES, "all"), default=["all"])
    q.add_argument("--n", type=int, default=3)
    q.add_argument("--cases", type=int, default=200)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--tol", type=float, default=None, help="override every suite tolerance")
    q.set_defaults(func=cmd_verify)

    q = sub.add_parser("search", parents=[common], help="minimize xi over simplices in a cube or ball")
    q.add_argument("--n", type=int, default=2)
    q.add_argument("--body", default="cube")
    q.add_argument("--restarts", type=int, default=50)
    q.add_argument("--max-iters", type=int, default=SearchConfig.max_iters)
    q.add_argument("--seed", type=int, default=0)
    q.add_argument("--history", help="write per-restart improvement trace as CSV")
    q.set_defaults(func=cmd_search)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except ParseError as exc:
        log.error("%s", exc)
        return EXIT_PARSE
    except (DegenerateSimplex, SingularMatrix) as exc:
        log.error("degenerate simplex: %s", exc)
        return EXIT_DEGENERATE
    except DimensionMismatch as exc:
        log.error("dimension mismatch: %s", exc)
        return EXIT_DIMENSION
    except UnsupportedOrder as exc:
        log.error("%s", exc)
        return EXIT_ORDER
    except ValueError as exc:
        log.error("%s", exc)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
