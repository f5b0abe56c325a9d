"""Command-line entry point: ``exactla compute|verify|witness|bench``.

Exit codes: 0 success, 1 a property or verification failed, 2 bad usage or
a violated precondition.
"""
from __future__ import annotations

import argparse
import sys
from typing import Sequence, TextIO

from . import charpoly as cp
from .errors import ExactLAError
from .field import Field, Q
from .matrix import Matrix, hstack, identity, mul, power, unit_vector, zeros
from .poly import eval_matrix, format_poly
from .principles import (INVERSE, annihilating_poly, inverse_or_zero_divisor,
                         krylov_local_poly, pow_via_inverse, steinitz_exchange)
from .elimination import rank
from .reports import RunConfig, run_bench, run_verify
from .serialize import format_matrix, parse_matrix


class UsageError(Exception):
    pass


class WitnessCheckFailed(Exception):
    pass


def _field_arg(text: str) -> Field:
    try:
        return Field.from_name(text)
    except ExactLAError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _seed_arg(text: str) -> int:
    v = int(text)
    if not 0 <= v < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit natural")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", type=_field_arg, default=None,
                        help="q (rationals) or gf:<p>; default q")
    common.add_argument("--alg", choices=["csanky", "berkowitz", "oracle", "all"], default=None)
    common.add_argument("--seed", type=_seed_arg, default=1)
    common.add_argument("--count", type=_positive, default=50)
    common.add_argument("--max-dim", type=_positive, default=5)
    common.add_argument("--format", choices=["plain", "json"], default="plain")
    common.add_argument("--parallel", action="store_true",
                        help="run the balanced-tree product levels on a thread pool")
    common.add_argument("--in", dest="input", default=None, help="input file (default stdin)")

    parser = argparse.ArgumentParser(prog="exactla", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", parents=[common], help="charpoly, det, adjugate or inverse")
    p.add_argument("what", choices=["charpoly", "det", "adj", "inv"])

    sub.add_parser("verify", parents=[common], help="randomized property report")

    p = sub.add_parser("witness", parents=[common], help="construct and check a principle witness")
    p.add_argument("kind", choices=["annihilator", "invzero", "steinitz", "powers", "krylov"])
    p.add_argument("--index", type=_positive, default=1, help="basis vector e_i for krylov")
    p.add_argument("--m", type=_positive, default=None, help="number of powers (default n)")
    p.add_argument("--other", default=None, help="second matrix (E for steinitz)")

    p = sub.add_parser("bench", parents=[common], help="CSV timings of both product modes")
    p.add_argument("--sizes", default="4,8,16", help="comma-separated matrix sizes")
    return parser


def _config(args, default_alg: str) -> RunConfig:
    return RunConfig(field=args.field or Q, algorithm=args.alg or default_alg, seed=args.seed,
                     count=args.count, max_dim=args.max_dim, parallel=args.parallel)


def _read(path: str | None, stdin) -> bytes:
    if path is None:
        return stdin.buffer.read() if hasattr(stdin, "buffer") else stdin.read().encode()
    with open(path, "rb") as fh:
        return fh.read()


def _load(args, path, stdin) -> Matrix:
    return parse_matrix(_read(path, stdin), args.format, args.field)


def cmd_compute(what: str, A: Matrix, cfg: RunConfig, fmt: str, out: TextIO) -> int:
    if cfg.algorithm == "all":
        p = A.field.characteristic
        algs = ["berkowitz"]
        if p == 0 or p > A.rows:
            algs.append("csanky")
        if A.rows <= cp.ORACLE_MAX_N:
            algs.append("oracle")
    else:
        algs = [cfg.algorithm]
    mode = "tree" if cfg.parallel else "sequential"

    def one(alg):
        if what == "charpoly":
            if alg == "oracle":
                return cp.charpoly_oracle(A).poly
            fn = cp.csanky if alg == "csanky" else cp.berkowitz
            return fn(A, mode, cfg.parallel).poly
        if what == "det":
            return cp.determinant(A, alg)
        if what == "adj":
            return cp.adjoint(A, alg)
        return cp.inverse(A, alg)

    results = [one(a) for a in algs]
    if any(r != results[0] for r in results[1:]):
        raise WitnessCheckFailed(f"algorithms disagree: {', '.join(map(str, results))}")
    r = results[0]
    if what == "charpoly":
        out.write(format_poly(r) + "\n")
    elif what == "det":
        out.write(f"{r}\n")
    else:
        out.write(format_matrix(r, fmt) + "\n")
    return 0


def _check(cond: bool, message: str) -> str:
    if not cond:
        raise WitnessCheckFailed(f"witness failed its own check: {message}")
    return message + " verified"


def cmd_witness(kind: str, A: Matrix, args, fmt: str, out: TextIO, other: Matrix | None = None) -> int:
    F = A.field
    lines: list[str] = []
    if kind == "annihilator":
        p = annihilating_poly(A)
        lines.append(format_poly(p))
        lines.append(_check(eval_matrix(p, A).is_zero(), "p(A) = 0"))
    elif kind == "invzero":
        w = inverse_or_zero_divisor(A)
        B = w.payload
        AB = mul(A, B)
        lines += [w.kind, format_matrix(B, fmt)]
        if w.kind == INVERSE:
            lines.append(_check(AB == identity(F, A.rows) and mul(B, A) == identity(F, A.rows),
                                "A*B = B*A = I"))
        else:
            lines.append(_check(not B.is_zero() and AB == zeros(F, A.rows, A.rows),
                                "B != 0 and A*B = 0"))
    elif kind == "krylov":
        kr = krylov_local_poly(A, args.index)
        e = unit_vector(F, A.rows, args.index)
        lines.append(f"k={kr.k}, g={format_poly(kr.g)}")
        lines.append(format_matrix(kr.basis, fmt))
        lines.append(_check(mul(eval_matrix(kr.g, A), e).is_zero()
                            and rank(kr.basis) == kr.k, f"g(A) e_{args.index} = 0 and basis independent"))
    elif kind == "steinitz":
        if other is None:
            raise UsageError("steinitz needs the independent set E via --other")
        evicted, T2 = steinitz_exchange(A, other)
        lines.append("F = {" + ", ".join(map(str, evicted)) + "}")
        lines.append(format_matrix(T2, fmt))
        lines.append(_check(len(evicted) == other.cols and rank(T2) == A.rows,
                            f"|F| = {other.cols} and T' total (rank {A.rows})"))
    elif kind == "powers":
        m = args.m or A.rows
        powers = pow_via_inverse(A, m).payload
        for i, P in enumerate(powers):
            lines.append(f"A^{i}:")
            lines.append(format_matrix(P, fmt))
        ok = powers[0] == identity(F, A.rows) and all(
            powers[i + 1] == mul(powers[i], A) for i in range(m - 1))
        lines.append(_check(ok and powers[-1] == power(A, m - 1), "X_0 = I and X_(i+1) = X_i*A"))
    out.write("\n".join(lines) + "\n")
    return 0


def main(argv: Sequence[str] | None = None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        if args.command == "verify":
            return run_verify(_config(args, "all"), out)
        if args.command == "bench":
            try:
                sizes = [int(s) for s in args.sizes.split(",") if s.strip()]
            except ValueError:
                raise UsageError(f"bad --sizes {args.sizes!r}")
            if not sizes or min(sizes) < 1:
                raise UsageError("sizes must be positive")
            return run_bench(_config(args, "all"), sizes, out, err)
        A = _load(args, args.input, stdin)
        if args.command == "compute":
            if not A.is_square:
                raise UsageError(f"NotSquare: {args.what} needs a square matrix")
            return cmd_compute(args.what, A, _config(args, "berkowitz"), args.format, out)
        other = _load(args, args.other, stdin) if args.kind == "steinitz" and args.other else None
        return cmd_witness(args.kind, A, args, args.format, out, other)
    except WitnessCheckFailed as exc:
        err.write(f"error: {exc}\n")
        return 1
    except ExactLAError as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return 2
    except (UsageError, OSError) as exc:
        err.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
