"""
drinpoly command line: Frobenius charpolys, endomorphism charpolys, norms, morphism checks,
random modules and benchmarks
"""

import argparse
import sys
import uuid
from collections.abc import Sequence
from datetime import datetime, timezone
from pathlib import Path
from typing import Any

import galois
from rich.console import Console
from rich.table import Table

from .audit import AuditLogger, EventType
from .bench import CSV_HEADER, BenchSummary, run_bench, to_csv
from .config import get_settings
from .drinfeld import DrinfeldModule, make_morphism, push_forward, random_module
from .fields import random_tower
from .frobenius import Method, frobenius_charpoly
from .motive import endomorphism_charpoly, isogeny_norm
from .parser import parse_module, parse_ore, render_module
from .types import DrinpolyError, GammaMismatch, NotAMorphism, NotPrime, TowerMismatch

console = Console(highlight=False, markup=False)
err_console = Console(stderr=True, highlight=False, markup=False)


class Run:
    """One CLI invocation: output plus the optional event log"""

    def __init__(self, args: argparse.Namespace):
        self.args = args
        log_dir = args.log_dir or get_settings().audit_dir
        self.audit: AuditLogger | None = None
        if log_dir:
            stamp = datetime.now(timezone.utc).strftime("%Y%m%d_%H%M%S")
            self.audit = AuditLogger(f"{args.command}-{stamp}-{uuid.uuid4().hex[:6]}", log_dir)

    @property
    def strategy(self) -> str | None:
        return self.args.strategy

    @property
    def seed(self) -> int:
        return get_settings().seed if self.args.seed is None else self.args.seed

    def log(self, event_type: EventType, text: str, data: dict[str, Any] | None = None) -> None:
        if self.audit is not None:
            self.audit.log_event(event_type, text, data)

    def result(self, text: str) -> None:
        console.out(text)
        self.log(EventType.RESULT, text)
        if self.audit is not None:
            self.audit.save_artifact("result", text + "\n", "text")

    def finish(self) -> None:
        if self.audit is not None:
            self.audit.generate_summary_report()


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise DrinpolyError(f"cannot read {path}: {exc.strerror}", {"path": path}) from exc


def _module(path: str) -> DrinfeldModule:
    return parse_module(_read(path))


def cmd_frobenius(run: Run) -> int:
    phi = _module(run.args.module)
    charpoly = frobenius_charpoly(phi, Method(run.args.method), run.strategy)
    run.result(charpoly.to_text())
    return 0


def cmd_charpoly(run: Run) -> int:
    phi = _module(run.args.module)
    u = parse_ore(_read(run.args.endomorphism), phi.tower)
    charpoly = endomorphism_charpoly(phi, make_morphism(phi, phi, u), run.strategy)
    run.result(charpoly.to_text())
    return 0


def cmd_norm(run: Run) -> int:
    phi = _module(run.args.domain)
    u = parse_ore(_read(run.args.isogeny), phi.tower)
    if run.args.codomain:
        psi = _module(run.args.codomain)
    else:
        found = push_forward(phi, u)
        if found is None:
            raise NotAMorphism("the isogeny does not map the domain to a module with the same gamma")
        psi = found
    norm = isogeny_norm(phi, psi, make_morphism(phi, psi, u), run.strategy)
    run.result(norm.to_text())
    return 0


def cmd_verify(run: Run) -> int:
    phi = _module(run.args.domain)
    psi = _module(run.args.codomain)
    u = parse_ore(_read(run.args.morphism), phi.tower)
    try:
        morphism = make_morphism(phi, psi, u)
    except (NotAMorphism, GammaMismatch, TowerMismatch) as exc:
        console.out("not a morphism")
        run.log(EventType.VERIFICATION, "not a morphism", {"reason": str(exc)})
        return 1
    text = "isogeny" if morphism.is_isogeny else "morphism"
    console.out(text)
    run.log(EventType.VERIFICATION, text, {"degree": morphism.degree})
    return 0


def _prime_power(q: int, e: int | None) -> tuple[int, int]:
    if q < 2:
        raise NotPrime(f"{q} is not a prime power", {"q": q})
    primes, exponents = galois.factors(q)
    if len(primes) != 1:
        raise NotPrime(f"{q} is not a prime power", {"q": q})
    p, k = int(primes[0]), int(exponents[0])
    if e is not None and e != k:
        raise NotPrime(f"q = {q} is not p^{e} for a prime p", {"q": q, "e": e})
    return p, k


def cmd_random(run: Run) -> int:
    p, e = _prime_power(run.args.q, run.args.e)
    tower = random_tower(p, e, run.args.d, run.seed)
    phi = random_module(tower, run.args.r, run.seed)
    text = render_module(phi)
    console.out(text, end="")
    run.log(EventType.RESULT, "random module", {"q": tower.q, "d": tower.d, "r": phi.rank})
    if run.audit is not None:
        run.audit.save_artifact("module", text, "text")
    return 0


def _grid(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid grid {text!r}") from None


def _methods(text: str) -> list[str]:
    methods = [v.strip() for v in text.split(",") if v.strip()]
    for m in methods:
        if m not in ("mff", "mku", "csa"):
            raise argparse.ArgumentTypeError(f"unknown method {m!r}")
    return methods


def cmd_bench(run: Run) -> int:
    args = run.args
    p, e = _prime_power(args.q, args.e)
    reps = args.reps or get_settings().bench_reps
    console.out(CSV_HEADER)
    rows = []
    for row in run_bench(p, e, args.d_grid, args.r_grid, args.methods, reps, run.seed, run.strategy):
        rows.append(row)
        console.out(row.to_csv())
        run.log(EventType.BENCH_ROW, row.method, row.model_dump())
    if run.audit is not None:
        run.audit.save_artifact("bench", to_csv(rows), "csv")
    if args.summary:
        print_summary(BenchSummary(rows))
    return 0


def print_summary(summary: BenchSummary) -> None:
    """Mean timings table, monotonicity report and the fastest method at (d=8, r=8)"""

    table = Table(title="Mean wall time (seconds)")
    table.add_column("method")
    table.add_column("d", justify="right")
    table.add_column("r", justify="right")
    table.add_column("mean", justify="right")
    report = summary.report()
    for entry in report["means"]:
        table.add_row(entry["method"], str(entry["d"]), str(entry["r"]), f"{entry['mean_seconds']:.6f}")
    err_console.print(table)

    violations = report["monotonicity_violations"]
    if violations:
        for v in violations:
            err_console.out(f"non-monotone: {v['method']} r={v['r']} d {v['d_from']} -> {v['d_to']}")
    else:
        err_console.out("monotone in d for every method and r")
    fastest = report["fastest"]
    if fastest["method"] is not None:
        err_console.out(f"fastest at d={fastest['d']}, r={fastest['r']}: {fastest['method']}")
        if report["deviation"]:
            err_console.out(f"deviation: expected csa, measured {fastest['method']}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--strategy",
        choices=["division_free", "interpolation"],
        default=None,
        help="Polynomial-matrix strategy (default from settings)",
    )
    common.add_argument("--seed", type=int, default=None, help="Seed for randomised steps")
    common.add_argument("--log-dir", type=str, default=None, help="Write an event log under this directory")

    parser = argparse.ArgumentParser(prog="drinpoly", description="Drinfeld module charpolys and norms")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("frobenius", parents=[common], help="Characteristic polynomial of the Frobenius")
    p.add_argument("--module", required=True, help="Module file")
    p.add_argument("--method", choices=[m.value for m in Method], default="auto")
    p.set_defaults(handler=cmd_frobenius)

    p = sub.add_parser("charpoly", parents=[common], help="Characteristic polynomial of an endomorphism")
    p.add_argument("--module", required=True, help="Module file")
    p.add_argument("--endomorphism", required=True, help="Ore file")
    p.set_defaults(handler=cmd_charpoly)

    p = sub.add_parser("norm", parents=[common], help="Norm of an isogeny")
    p.add_argument("--domain", required=True, help="Module file")
    p.add_argument("--isogeny", required=True, help="Ore file")
    p.add_argument("--codomain", default=None, help="Module file (default: pushed forward)")
    p.set_defaults(handler=cmd_norm)

    p = sub.add_parser("verify", parents=[common], help="Check u * phi_T = psi_T * u")
    p.add_argument("--domain", required=True, help="Module file")
    p.add_argument("--codomain", required=True, help="Module file")
    p.add_argument("--morphism", required=True, help="Ore file")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("random", parents=[common], help="Emit a random module file")
    p.add_argument("--q", type=int, default=3, help="Size of the base field")
    p.add_argument("--e", type=int, default=None, help="Degree of F_q over F_p")
    p.add_argument("--d", type=int, default=2, help="Degree of K over F_q")
    p.add_argument("--r", type=int, default=2, help="Rank")
    p.set_defaults(handler=cmd_random)

    p = sub.add_parser("bench", parents=[common], help="Time the Frobenius methods, CSV on stdout")
    p.add_argument("--q", type=int, default=2, help="Size of the base field")
    p.add_argument("--e", type=int, default=None, help="Degree of F_q over F_p")
    p.add_argument("--d-grid", type=_grid, default=[8, 16, 32])
    p.add_argument("--r-grid", type=_grid, default=[2, 4, 8])
    p.add_argument("--methods", type=_methods, default=["mff", "mku", "csa"])
    p.add_argument("--reps", type=int, default=None, help="Repetitions (default from settings)")
    p.add_argument("--summary", action="store_true", help="Print mean timings to stderr")
    p.set_defaults(handler=cmd_bench)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """CLI entry point"""

    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        run = Run(args)
    except OSError as exc:
        err_console.out(f"error: cannot create log directory: {exc.strerror}")
        return 1
    run.log(EventType.COMMAND, args.command, {"argv": list(argv) if argv is not None else sys.argv[1:]})
    try:
        status = args.handler(run)
    except DrinpolyError as exc:
        err_console.out(f"error: {exc}")
        run.log(EventType.ERROR, str(exc), {"kind": type(exc).__name__, **exc.details})
        status = 1
    run.finish()
    return status


if __name__ == "__main__":
    sys.exit(main())
