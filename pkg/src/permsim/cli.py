"""Command-line front end.

Exit codes: 0 indistinguishable / similar, 1 distinct / not similar, 2 error.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import graphio
from .detsim import TestParams, permutation_similarity_test, sample_coefficients, similarity_trial
from .graphio import FormatError
from .hunter import DEFAULT_BUDGET, hunt
from .matrix import Matrix
from .oracle import ORACLE_GUARD, OracleGuardError, apply_permutation, brute_force_similar
from .ring import MERSENNE_61, RingConfig

EXIT_OK, EXIT_DISTINCT, EXIT_ERROR = 0, 1, 2
BENCH_SIZES = (64, 128, 256, 512)

COMPLEXITY_NOTE = (
    "note: the O(n^2.373) end-to-end bound is NOT reproduced here. Forming f(A)\n"
    "requires n - 1 matrix products (Horner), so one trial costs n matrix\n"
    "multiplications plus one determinant; with cubic kernels that is ~n^4.")


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    subcommand: str
    inputs: list[str]
    fmt: str = "auto"
    p: int = MERSENNE_61
    trials: int = 3
    seed: int = 0
    exact: bool = False
    force_oracle: bool = False
    budget: int = DEFAULT_BUDGET
    out: str | None = None
    lines: tuple[int, int] = (1, 1)
    hunt_n: int | None = None
    sizes: tuple[int, ...] = BENCH_SIZES

    @property
    def params(self) -> TestParams:
        return TestParams(p=self.p, trials=self.trials, seed=self.seed)


def load_matrix(path: str, fmt: str = "auto", line: int = 1) -> Matrix:
    """Read one exact matrix; graphs become adjacency matrices."""
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    if fmt == "auto":
        fmt = graphio.detect_format(text)
    if fmt == "matrix":
        return graphio.parse_matrix_text(text)
    if fmt == "dimacs":
        return graphio.adjacency_matrix(graphio.parse_dimacs(text))
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not 1 <= line <= len(lines):
        raise UsageError(f"{path} has no graph on line {line}")
    return graphio.adjacency_matrix(graphio.parse_graph6(lines[line - 1]))


def _emit(text: str, out: str | None) -> None:
    print(text, end="" if text.endswith("\n") else "\n")
    if out:
        Path(out).write_text(text if text.endswith("\n") else text + "\n")


def run_test(cfg: RunConfig) -> int:
    A = load_matrix(cfg.inputs[0], cfg.fmt, cfg.lines[0])
    B = load_matrix(cfg.inputs[1], cfg.fmt, cfg.lines[1])
    verdict = permutation_similarity_test(A, B, cfg.params, exact=cfg.exact)
    lines = [f"verdict: {verdict.kind.value}",
             f"n: {A.n} vs {B.n}",
             f"ring: {'ZZ' if cfg.exact else f'GF({cfg.p})'}",
             f"seed: {cfg.seed}",
             f"trials_run: {verdict.trials_run}"]
    for t, (da, db) in enumerate(verdict.per_trial_dets):
        lines.append(f"trial {t}: det f(A) = {da}  det f(B) = {db}")
    lines.append(f"error_bound: {verdict.error_bound}")
    if verdict.distinguishing_trial is not None:
        w = verdict.witness
        lines.append(f"distinguishing_trial: {verdict.distinguishing_trial}")
        lines.append(f"witness: c = {w.c}; coeffs = {' '.join(map(str, w.coeffs))}")
    elif verdict.distinct:
        lines.append("decided without trials (dimension mismatch or 1x1 entries differ)")
    _emit("\n".join(lines), cfg.out)
    return EXIT_DISTINCT if verdict.distinct else EXIT_OK


def run_oracle(cfg: RunConfig) -> int:
    A = load_matrix(cfg.inputs[0], cfg.fmt, cfg.lines[0])
    B = load_matrix(cfg.inputs[1], cfg.fmt, cfg.lines[1])
    if A.n != B.n:
        _emit("NOT SIMILAR", cfg.out)
        return EXIT_DISTINCT
    try:
        P = brute_force_similar(A, B, force=cfg.force_oracle)
    except OracleGuardError as exc:
        raise UsageError(f"{exc}; pass --force-oracle to override") from None
    if P is None:
        _emit("NOT SIMILAR", cfg.out)
        return EXIT_DISTINCT
    assert apply_permutation(P, B) == A
    _emit(str(P), cfg.out)
    return EXIT_OK


def run_hunt(cfg: RunConfig) -> int:
    if cfg.inputs:
        try:
            text = Path(cfg.inputs[0]).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {cfg.inputs[0]}: {exc.strerror}") from None
        graphs = graphio.dedup_graphs(graphio.read_graph6_file(text))
    elif cfg.hunt_n is not None:
        if not 1 <= cfg.hunt_n <= graphio.ENUMERATION_CEILING:
            raise UsageError(f"--n must be in 1..{graphio.ENUMERATION_CEILING}")
        graphs = graphio.isomorphism_classes(cfg.hunt_n)
    else:
        raise UsageError("hunt needs a graph6 corpus file or --n")
    report = hunt(graphs, cfg.budget, cfg.params)
    if cfg.out:
        Path(cfg.out).write_text(report.to_tsv())
    else:
        print(report.to_tsv(), end="")
    print(report.summary())
    return EXIT_OK


def bench(sizes=BENCH_SIZES, p: int = MERSENNE_61, seed: int = 0) -> tuple[list[tuple[int, float]], float]:
    """Time one similarity trial on random 0/1 matrices; return rows and log-log slope."""
    rng = np.random.default_rng(seed)
    ring = RingConfig(p)
    rows = []
    for n in sizes:
        A = Matrix(rng.integers(0, 2, (n, n)), ring)
        B = Matrix(rng.integers(0, 2, (n, n)), ring)
        draw = sample_coefficients(n, p, seed, 0)
        t0 = time.perf_counter()
        similarity_trial(A, B, draw)
        rows.append((n, time.perf_counter() - t0))
    slope = float("nan")
    if len(rows) >= 2:
        x = np.log([r[0] for r in rows])
        y = np.log([max(r[1], 1e-9) for r in rows])
        slope = float(np.polyfit(x, y, 1)[0])
    return rows, slope


def run_bench(cfg: RunConfig) -> int:
    rows, slope = bench(cfg.sizes, cfg.p, cfg.seed)
    lines = ["n\tseconds"] + [f"{n}\t{s:.4f}" for n, s in rows]
    lines.append(f"log-log slope: {slope:.3f}")
    lines.append(COMPLEXITY_NOTE)
    _emit("\n".join(lines), cfg.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prime", type=int, default=MERSENNE_61, help="field modulus p")
    common.add_argument("--trials", type=int, default=3)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", help="also write the report here")

    inputs = argparse.ArgumentParser(add_help=False)
    inputs.add_argument("a")
    inputs.add_argument("b")
    inputs.add_argument("--format", dest="fmt", default="auto",
                        choices=["auto", "graph6", "dimacs", "matrix"])
    inputs.add_argument("--line-a", type=int, default=1, help="graph6 line for input A")
    inputs.add_argument("--line-b", type=int, default=1, help="graph6 line for input B")

    parser = argparse.ArgumentParser(prog="permsim", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True)
    t = sub.add_parser("test", parents=[common, inputs], help="randomized determinant test")
    t.add_argument("--exact", action="store_true", help="run trials over the integers")
    o = sub.add_parser("oracle", parents=[common, inputs], help="brute-force n! search")
    o.add_argument("--force-oracle", action="store_true",
                   help=f"allow n > {ORACLE_GUARD}")
    h = sub.add_parser("hunt", parents=[common], help="search for co-det pairs")
    h.add_argument("corpus", nargs="?", help="graph6 file; omit to enumerate with --n")
    h.add_argument("--n", type=int, dest="hunt_n")
    h.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    b = sub.add_parser("bench", parents=[common], help="time one trial per size")
    b.add_argument("--sizes", type=int, nargs="+", default=list(BENCH_SIZES))
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(ns.subcommand, [], p=ns.prime, trials=ns.trials, seed=ns.seed, out=ns.out)
    if ns.subcommand in ("test", "oracle"):
        cfg.inputs = [ns.a, ns.b]
        cfg.fmt = ns.fmt
        cfg.lines = (ns.line_a, ns.line_b)
        cfg.exact = getattr(ns, "exact", False)
        cfg.force_oracle = getattr(ns, "force_oracle", False)
    elif ns.subcommand == "hunt":
        cfg.inputs = [ns.corpus] if ns.corpus else []
        cfg.hunt_n = ns.hunt_n
        cfg.budget = ns.budget
    else:
        cfg.sizes = tuple(ns.sizes)
    return cfg


COMMANDS = {"test": run_test, "oracle": run_oracle, "hunt": run_hunt, "bench": run_bench}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_ERROR
    cfg = config_from_args(ns)
    try:
        return COMMANDS[cfg.subcommand](cfg)
    except (UsageError, FormatError, ValueError) as exc:
        print(f"permsim {cfg.subcommand}: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
