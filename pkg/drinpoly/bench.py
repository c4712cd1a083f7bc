"""
Wall-clock timings of the Frobenius charpoly methods over a (d, r) grid, and their summary
"""

import itertools
import time
from collections import defaultdict
from collections.abc import Callable, Iterator, Sequence
from typing import Any

from pydantic import BaseModel

from .drinfeld import random_module
from .fields import random_tower
from .frobenius import Method, frobenius_charpoly
from .linalg import Strategy

CSV_HEADER = "q,e,d,r,m,method,rep,wall_seconds"


class BenchRow(BaseModel):
    q: int
    e: int
    d: int
    r: int
    m: int
    method: str
    rep: int
    wall_seconds: float

    def to_csv(self) -> str:
        return f"{self.q},{self.e},{self.d},{self.r},{self.m},{self.method},{self.rep},{self.wall_seconds:.6f}"


def run_bench(
    p: int,
    e: int,
    d_grid: Sequence[int],
    r_grid: Sequence[int],
    methods: Sequence[str],
    reps: int,
    seed: int = 0,
    strategy: Strategy | None = None,
    clock: Callable[[], float] = time.perf_counter,
) -> Iterator[BenchRow]:
    """Yield one row per (d, r, method, repetition); repetitions run back to back"""
    for d in d_grid:
        tower = random_tower(p, e, d, seed + d)
        for r in r_grid:
            phi = random_module(tower, r, seed + 1000 * d + r)
            for method in methods:
                for rep in range(reps):
                    start = clock()
                    frobenius_charpoly(phi, Method(method), strategy)
                    elapsed = clock() - start
                    yield BenchRow(
                        q=tower.q, e=e, d=d, r=r, m=phi.m, method=method, rep=rep, wall_seconds=elapsed
                    )


def to_csv(rows: Sequence[BenchRow]) -> str:
    return "\n".join([CSV_HEADER, *(row.to_csv() for row in rows)]) + "\n"


class BenchSummary:
    """Means per (method, d, r), monotonicity along d, and the fastest method at a grid point"""

    def __init__(self, rows: Sequence[BenchRow]):
        self.rows = list(rows)
        samples: dict[tuple[str, int, int], list[float]] = defaultdict(list)
        for row in self.rows:
            samples[(row.method, row.d, row.r)].append(row.wall_seconds)
        self.means = {key: sum(v) / len(v) for key, v in samples.items()}

    def mean(self, method: str, d: int, r: int) -> float | None:
        return self.means.get((method, d, r))

    def monotonicity_violations(self) -> list[dict[str, Any]]:
        """(method, r) pairs whose mean time decreases somewhere as d grows"""
        series: dict[tuple[str, int], list[tuple[int, float]]] = defaultdict(list)
        for (method, d, r), value in self.means.items():
            series[(method, r)].append((d, value))
        violations = []
        for (method, r), points in sorted(series.items()):
            points.sort()
            for (d0, t0), (d1, t1) in itertools.pairwise(points):
                if t1 < t0:
                    violations.append({"method": method, "r": r, "d_from": d0, "d_to": d1})
        return violations

    def fastest(self, d: int, r: int) -> str | None:
        candidates = [(value, method) for (method, dd, rr), value in self.means.items() if (dd, rr) == (d, r)]
        if not candidates:
            return None
        return min(candidates)[1]

    def report(self, d: int = 8, r: int = 8) -> dict[str, Any]:
        fastest = self.fastest(d, r)
        return {
            "means": [
                {"method": method, "d": dd, "r": rr, "mean_seconds": value}
                for (method, dd, rr), value in sorted(self.means.items())
            ],
            "monotonicity_violations": self.monotonicity_violations(),
            "fastest": {"d": d, "r": r, "method": fastest},
            "deviation": fastest is not None and fastest != Method.CSA.value,
        }
