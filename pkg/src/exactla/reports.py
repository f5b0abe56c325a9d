"""Randomized property reports (``verify``) and timing tables (``bench``).

Every property draws from its own stream seeded by ``"<seed>/<name>"``, so
adding or removing a property never changes what another one sees.
"""
from __future__ import annotations

import csv
import random
import time
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, TextIO

from . import charpoly as cp
from .errors import ExactLAError
from .field import Field, Q
from .identities import power_blocks, weighted_rank_one_sum
from .matrix import Matrix, block2x2, companion, count_scalar_ops, mul, zeros
from .poly import Poly, eval_matrix, poly_divmod
from .principles import krylov_local_poly
from .sampling import random_invertible, random_matrix, random_monic_coeffs
from .serialize import format_matrix

ALL_ALGS = ("csanky", "berkowitz", "oracle")


@dataclass(frozen=True)
class RunConfig:
    field: Field = Q
    algorithm: str = "all"
    seed: int = 1
    count: int = 50
    max_dim: int = 5
    parallel: bool = False

    def __post_init__(self):
        if self.count < 1:
            raise ValueError("count must be >= 1")
        if self.max_dim < 1:
            raise ValueError("max_dim must be >= 1")
        if self.algorithm not in ALL_ALGS + ("all",):
            raise ValueError(f"unknown algorithm {self.algorithm!r}")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError("seed must fit in 64 bits")

    @property
    def algorithms(self) -> tuple[str, ...]:
        return ALL_ALGS if self.algorithm == "all" else (self.algorithm,)


def skip_reason(cfg: RunConfig, alg: str) -> Optional[str]:
    p = cfg.field.characteristic
    if alg == "csanky" and p != 0 and p <= cfg.max_dim:
        return f"characteristic {p} <= max_dim {cfg.max_dim}"
    return None


def _dim(cfg: RunConfig, alg: str | None, rng: random.Random, lo: int = 1) -> int:
    hi = cfg.max_dim
    if alg == "oracle":
        hi = min(hi, cp.ORACLE_MAX_N)
    return rng.randint(lo, max(lo, hi))


def _square(cfg, alg, rng) -> Matrix:
    n = _dim(cfg, alg, rng)
    return random_matrix(cfg.field, n, n, rng)


# -- trials: return the offending matrices, or None on success ---------------

Trial = Callable[[random.Random, RunConfig, Optional[str]], Optional[Sequence[Matrix]]]


def _oracle_agreement(rng, cfg, alg):
    A = _square(cfg, "oracle", rng)
    algs = [a for a in cfg.algorithms if not skip_reason(cfg, a)]
    if "oracle" not in algs:
        algs.append("oracle")
    results = {cp.charpoly(A, a) for a in algs}
    return None if len(results) == 1 else [A]


def _cayley_hamilton(rng, cfg, alg):
    A = _square(cfg, alg, rng)
    return None if eval_matrix(cp.charpoly(A, alg).poly, A).is_zero() else [A]


def _csanky_paths(rng, cfg, alg):
    A = _square(cfg, alg, rng)
    return None if cp.csanky(A) == cp.to_charpoly(cp.newton_coeffs(A)) else [A]


def _similarity(rng, cfg, alg):
    A = _square(cfg, alg, rng)
    P = random_invertible(cfg.field, A.rows, rng)
    B = mul(mul(P, A), cp.inverse(P))
    return None if cp.charpoly(B, alg) == cp.charpoly(A, alg) else [A, P]


def _block_factorization(rng, cfg, alg):
    F = cfg.field
    total = _dim(cfg, alg, rng, lo=2)
    j = rng.randint(1, total - 1)
    k = total - j
    B, D = random_matrix(F, j, j, rng), random_matrix(F, k, k, rng)
    C = random_matrix(F, k, j, rng)
    A = block2x2(B, zeros(F, j, k), C, D)
    lhs = cp.charpoly(A, alg).poly
    return None if lhs == cp.charpoly(B, alg).poly * cp.charpoly(D, alg).poly else [A]


def _det_multiplicative(rng, cfg, alg):
    n = _dim(cfg, alg, rng)
    A, B = random_matrix(cfg.field, n, n, rng), random_matrix(cfg.field, n, n, rng)
    ok = cp.determinant(mul(A, B), alg) == cp.determinant(A, alg) * cp.determinant(B, alg)
    return None if ok else [A, B]


def _krylov_divisibility(rng, cfg, alg):
    A = _square(cfg, alg, rng)
    p = cp.charpoly(A, alg).poly
    for i in range(1, A.rows + 1):
        if not poly_divmod(p, krylov_local_poly(A, i).g)[1].is_zero():
            return [A]
    return None


def _companion_charpoly(rng, cfg, alg):
    F = cfg.field
    c = random_monic_coeffs(F, _dim(cfg, alg, rng), rng)
    A = companion(F, c)
    return None if cp.charpoly(A, alg).poly == Poly(F, list(reversed(c)) + [1]) else [A]


def _companion_identities(rng, cfg, alg):
    F = cfg.field
    c = random_monic_coeffs(F, _dim(cfg, None, rng, lo=2), rng)
    A = companion(F, c)
    k = len(c)
    for i in range(1, k):
        actual, predicted = power_blocks(A, i)
        if actual[1:] != predicted[1:]:
            return [A]
        corner = actual[0].data[0][0]
        if corner != (F.zero if i < k - 1 else -F.coerce(c[-1])):
            return [A]
    total, expected = weighted_rank_one_sum(A, c)
    return None if total == expected else [A]


# (name, trial, algorithms it runs for; None means algorithm independent)
PROPERTIES: list[tuple[str, Trial, Optional[tuple[str, ...]]]] = [
    ("oracle_agreement", _oracle_agreement, None),
    ("cayley_hamilton", _cayley_hamilton, ALL_ALGS),
    ("csanky_two_paths", _csanky_paths, ("csanky",)),
    ("similarity_invariance", _similarity, ("csanky", "berkowitz")),
    ("block_factorization", _block_factorization, ALL_ALGS),
    ("det_multiplicative", _det_multiplicative, ALL_ALGS),
    ("krylov_divides_charpoly", _krylov_divisibility, ("csanky", "berkowitz")),
    ("companion_charpoly", _companion_charpoly, ("csanky", "berkowitz")),
    ("companion_block_identities", _companion_identities, None),
]


def run_verify(cfg: RunConfig, out: TextIO) -> int:
    """Write one line per property; return 0 iff nothing failed."""
    out.write(f"verify field={cfg.field} alg={cfg.algorithm} seed={cfg.seed} "
              f"count={cfg.count} max_dim={cfg.max_dim}\n")
    passed = failed = skipped = 0
    for name, trial, algs in PROPERTIES:
        runs = [None] if algs is None else [a for a in cfg.algorithms if a in algs]
        for alg in runs:
            label = name if alg is None else f"{name}[{alg}]"
            reason = skip_reason(cfg, "csanky") if alg == "csanky" or name == "csanky_two_paths" else None
            if reason:
                out.write(f"SKIPPED {label} ({reason})\n")
                skipped += 1
                continue
            rng = random.Random(f"{cfg.seed}/{label}")
            bad, err = None, None
            for t in range(cfg.count):
                try:
                    bad = trial(rng, cfg, alg)
                except ExactLAError as exc:
                    err = f"{type(exc).__name__}: {exc}"
                    bad = []
                if bad is not None:
                    break
            if bad is None:
                out.write(f"PASS {label} {cfg.count}/{cfg.count}\n")
                passed += 1
            else:
                out.write(f"FAIL {label} at trial {t + 1}/{cfg.count}\n")
                if err:
                    out.write(f"  error: {err}\n")
                for M in bad:
                    out.write(f"  counterexample: {format_matrix(M, 'json')}\n")
                failed += 1
    out.write(f"summary: {passed} passed, {failed} failed, {skipped} skipped\n")
    return 1 if failed else 0


# -- benchmark -----------------------------------------------------------------

BENCH_COLUMNS = ("algorithm", "n", "mode", "wall_time_s", "scalar_mults", "status")


def _timed(fn):
    with count_scalar_ops() as counter:
        t0 = time.perf_counter()
        result = fn()
        dt = time.perf_counter() - t0
    return result, dt, counter.mults


def run_bench(cfg: RunConfig, sizes: Sequence[int], out: TextIO, err: TextIO) -> int:
    """CSV timing rows; exit 1 if product modes disagree on any input."""
    rows = []
    for n in sizes:
        A = random_matrix(cfg.field, n, n, random.Random(f"{cfg.seed}/bench/{n}"))
        for alg in cfg.algorithms:
            if alg == "oracle":
                if n > cp.ORACLE_MAX_N:
                    rows.append((alg, n, "sequential", "", "", "skipped: TooLarge"))
                    continue
                _, dt, ops = _timed(lambda: cp.charpoly_oracle(A))
                rows.append((alg, n, "sequential", f"{dt:.6f}", "", "ok"))
                continue
            p = cfg.field.characteristic
            if alg == "csanky" and p != 0 and p <= n:
                for mode in ("sequential", "tree"):
                    rows.append((alg, n, mode, "", "", "skipped: CharacteristicTooSmall"))
                continue
            fn = cp.csanky if alg == "csanky" else cp.berkowitz
            results = {}
            for mode in ("sequential", "tree"):
                res, dt, ops = _timed(lambda: fn(A, mode, cfg.parallel and mode == "tree"))
                results[mode] = res.coeffs
                rows.append((alg, n, mode, f"{dt:.6f}", str(ops), "ok"))
            if results["sequential"] != results["tree"]:
                err.write(f"mode mismatch for {alg} at n={n}: "
                          f"{results['sequential']} vs {results['tree']}\n"
                          f"  counterexample: {format_matrix(A, 'json')}\n")
                return 1
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(BENCH_COLUMNS)
    writer.writerows(rows)
    return 0
