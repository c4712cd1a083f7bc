"""
Matrices over F[T]: determinant and characteristic polynomial.

Two interchangeable strategies:

- ``division_free``: Berkowitz over the ring F[T] itself, deterministic.
- ``interpolation``: specialise T at enough points of F (or of a random extension
  of F when F is too small), solve over the field and interpolate back, using
  the caller's degree bound. With ``period = s`` the coefficients are known to be
  polynomials in T^s and the points are chosen with pairwise distinct s-th powers;
  the T^s reconstruction is then checked at random points of a larger field.
"""

from __future__ import annotations

import math
import random
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Literal

from .config import get_settings
from .fields import ExtensionField
from .polynomials import Poly, PolyRing, coeffwise_frobenius, find_irreducible, interpolate
from .types import InsufficientPoints, NonPeriodicCoefficient, NotSquare

Strategy = Literal["division_free", "interpolation"]


class PolyMatrix:
    """rows x cols matrix of polynomials over ``field``, stored row-major"""

    __slots__ = ("cols", "entries", "field", "rows")

    def __init__(self, field: Any, rows: int, cols: int, entries: Sequence[Poly]):
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        self.field = field
        self.rows = rows
        self.cols = cols
        self.entries: tuple[Poly, ...] = tuple(entries)

    @classmethod
    def from_rows(cls, field: Any, rows: Sequence[Sequence[Poly]]) -> PolyMatrix:
        n = len(rows)
        m = len(rows[0]) if n else 0
        return cls(field, n, m, [e for row in rows for e in row])

    @classmethod
    def from_columns(cls, field: Any, columns: Sequence[Sequence[Poly]]) -> PolyMatrix:
        m = len(columns)
        n = len(columns[0]) if m else 0
        return cls(field, n, m, [columns[j][i] for i in range(n) for j in range(m)])

    @classmethod
    def zero(cls, field: Any, rows: int, cols: int) -> PolyMatrix:
        return cls(field, rows, cols, [Poly(field)] * (rows * cols))

    @classmethod
    def identity(cls, field: Any, n: int) -> PolyMatrix:
        one, zero = Poly.one(field), Poly(field)
        return cls(field, n, n, [one if i == j else zero for i in range(n) for j in range(n)])

    @classmethod
    def scalar(cls, field: Any, n: int, value: Poly) -> PolyMatrix:
        zero = Poly(field)
        return cls(field, n, n, [value if i == j else zero for i in range(n) for j in range(n)])

    def __getitem__(self, index: tuple[int, int]) -> Poly:
        i, j = index
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list[Poly]:
        return list(self.entries[i * self.cols : (i + 1) * self.cols])

    def column(self, j: int) -> list[Poly]:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def to_rows(self) -> list[list[Poly]]:
        return [self.row(i) for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def max_degree(self) -> int:
        return max((e.degree for e in self.entries), default=-1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        body = "; ".join(", ".join(repr(e) for e in row) for row in self.to_rows())
        return f"PolyMatrix({self.rows}x{self.cols}: [{body}])"

    def __add__(self, other: PolyMatrix) -> PolyMatrix:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        entries = [a + b for a, b in zip(self.entries, other.entries, strict=True)]
        return PolyMatrix(self.field, self.rows, self.cols, entries)

    def __sub__(self, other: PolyMatrix) -> PolyMatrix:
        return self + (-other)

    def __neg__(self) -> PolyMatrix:
        return self.map_entries(lambda e: -e)

    def __matmul__(self, other: PolyMatrix) -> PolyMatrix:
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        zero = Poly(self.field)
        out = []
        for i in range(self.rows):
            row = self.row(i)
            for j in range(other.cols):
                acc = zero
                for k, a in enumerate(row):
                    if a.is_zero():
                        continue
                    b = other[k, j]
                    if not b.is_zero():
                        acc = acc + a * b
                out.append(acc)
        return PolyMatrix(self.field, self.rows, other.cols, out)

    def map_entries(self, fn: Callable[[Poly], Poly]) -> PolyMatrix:
        return PolyMatrix(self.field, self.rows, self.cols, [fn(e) for e in self.entries])

    def twist(self, s: int) -> PolyMatrix:
        """Entry-wise coefficient Frobenius P -> P^{tau^s}"""
        return self.map_entries(lambda e: coeffwise_frobenius(e, s))

    def evaluate(self, target: Any, point: Any, lift: Callable[[Any], Any]) -> list[list[Any]]:
        """Specialise T at ``point`` of ``target``; ``lift`` embeds coefficients into target"""
        return [[_eval_lifted(e, target, point, lift) for e in self.row(i)] for i in range(self.rows)]


def _eval_lifted(poly: Poly, target: Any, point: Any, lift: Callable[[Any], Any]) -> Any:
    acc = target.zero()
    for c in reversed(poly.coeffs):
        acc = target.add(target.mul(acc, point), lift(c))
    return acc


def berkowitz(ring: Any, rows: Sequence[Sequence[Any]]) -> list[Any]:
    """Division-free characteristic polynomial det(X I - A) over any commutative ring.

    Returns coefficients in ascending order (the last one is 1).
    """
    n = len(rows)
    add, mul, neg = ring.add, ring.mul, ring.neg
    vec = [ring.one()]  # descending coefficients of the trailing principal block
    for k in range(n - 1, -1, -1):
        size = n - k
        a = rows[k][k]
        r_row = [rows[k][j] for j in range(k + 1, n)]
        col = [rows[i][k] for i in range(k + 1, n)]
        diags = [ring.one(), neg(a)]
        # -R A^i C for i = 0 .. size - 2
        current = col
        for step in range(size - 1):
            diags.append(neg(_dot(ring, r_row, current)))
            if step < size - 2:
                current = [
                    _dot(ring, [rows[k + 1 + i][k + 1 + j] for j in range(size - 1)], current)
                    for i in range(size - 1)
                ]
        new_vec = []
        for i in range(size + 1):
            acc = ring.zero()
            for j in range(min(i + 1, size)):
                acc = add(acc, mul(diags[i - j], vec[j]))
            new_vec.append(acc)
        vec = new_vec
    return list(reversed(vec))


def _dot(ring: Any, a: Sequence[Any], b: Sequence[Any]) -> Any:
    acc = ring.zero()
    for x, y in zip(a, b, strict=True):
        acc = ring.add(acc, ring.mul(x, y))
    return acc


def hessenberg_charpoly(field: Any, rows: Sequence[Sequence[Any]]) -> list[Any]:
    """det(X I - A) over a field, ascending, by reduction to upper Hessenberg form"""
    h = [list(r) for r in rows]
    n = len(h)
    add, sub, mul = field.add, field.sub, field.mul
    for j in range(n - 2):
        pivot = next((i for i in range(j + 1, n) if not field.is_zero(h[i][j])), None)
        if pivot is None:
            continue
        if pivot != j + 1:
            h[pivot], h[j + 1] = h[j + 1], h[pivot]
            for row in h:
                row[pivot], row[j + 1] = row[j + 1], row[pivot]
        inv = field.inv(h[j + 1][j])
        for k in range(j + 2, n):
            if field.is_zero(h[k][j]):
                continue
            factor = mul(h[k][j], inv)
            # row_k -= factor row_{j+1}, then col_{j+1} += factor col_k
            h[k] = [sub(a, mul(factor, b)) for a, b in zip(h[k], h[j + 1], strict=True)]
            for row in h:
                row[j + 1] = add(row[j + 1], mul(factor, row[k]))

    zero = field.zero()
    # polys[m]: charpoly of the leading m x m block, ascending
    polys: list[list[Any]] = [[field.one()]]
    for m in range(1, n + 1):
        prev = polys[m - 1]
        diag = h[m - 1][m - 1]
        nxt = [zero, *prev]
        for i, c in enumerate(prev):
            nxt[i] = sub(nxt[i], mul(diag, c))
        chain = field.one()
        for i in range(1, m):
            chain = mul(chain, h[m - i][m - i - 1])
            if field.is_zero(chain):
                break
            weight = mul(h[m - 1 - i][m - 1], chain)
            if field.is_zero(weight):
                continue
            for k, c in enumerate(polys[m - 1 - i]):
                nxt[k] = sub(nxt[k], mul(weight, c))
        polys.append(nxt)
    return polys[n]


def det_field(field: Any, rows: Sequence[Sequence[Any]]) -> Any:
    """Determinant over a field by Gaussian elimination"""
    m = [list(r) for r in rows]
    n = len(m)
    det = field.one()
    for c in range(n):
        pivot = next((i for i in range(c, n) if not field.is_zero(m[i][c])), None)
        if pivot is None:
            return field.zero()
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = field.neg(det)
        det = field.mul(det, m[c][c])
        inv = field.inv(m[c][c])
        for i in range(c + 1, n):
            if field.is_zero(m[i][c]):
                continue
            factor = field.mul(m[i][c], inv)
            for j in range(c, n):
                m[i][j] = field.sub(m[i][j], field.mul(factor, m[c][j]))
    return det


def _check_square(matrix: PolyMatrix) -> None:
    if not matrix.is_square:
        raise NotSquare(f"matrix is {matrix.rows}x{matrix.cols}", {"rows": matrix.rows, "cols": matrix.cols})


def _default_bound(matrix: PolyMatrix) -> int:
    return max(matrix.rows * max(matrix.max_degree, 0), 0)


def _resolve(strategy: str | None, workers: int | None, seed: int | None) -> tuple[str, int, int]:
    settings = get_settings()
    return (
        strategy or settings.linalg_strategy,
        workers or settings.workers,
        settings.seed if seed is None else seed,
    )


def _same(c: Any) -> Any:
    return c


def _evaluation_field(
    field: Any, large_enough: Callable[[int], bool], rng: random.Random
) -> tuple[Any, Callable[[Any], Any], Callable[[Any], Any]]:
    """``field`` itself or its smallest extension passing ``large_enough``, with embed and lower maps"""
    order = field.order
    if large_enough(order):
        return field, _same, _same
    k = 2
    while not large_enough(order**k):
        k += 1
    ext = ExtensionField(field, find_irreducible(field, k, rng), check=False)
    return ext, ext.embed, lambda c: _lower(ext, c)


class _SamplingPlan:
    """Evaluation field and points with pairwise distinct s-th powers"""

    def __init__(self, field: Any, count: int, period: int, rng: random.Random):
        self.base = field
        self.period = period
        self.target, self.lift, self.lower = _evaluation_field(
            field, lambda order: _usable_points(order, period) >= count, rng
        )
        self.points = self._sample(count, rng)

    def _sample(self, count: int, rng: random.Random) -> list[Any]:
        target = self.target
        points: list[Any] = []
        powers: set[Any] = set()
        if target.order <= 4 * count + 16:
            candidates = list(target.elements())
            rng.shuffle(candidates)
            source = iter(candidates)
        else:
            source = iter(lambda: target.random_element(rng), None)
        for u in source:
            up = _power(target, u, self.period)
            if up in powers:
                continue
            powers.add(up)
            points.append(u)
            if len(points) == count:
                return points
        raise InsufficientPoints(f"could not find {count} evaluation points", {"count": count})


def _usable_points(order: int, period: int) -> int:
    """Number of distinct values of u^s for u in a field of the given order"""
    return 1 + (order - 1) // math.gcd(period, order - 1)


def _power(field: Any, a: Any, n: int) -> Any:
    result = field.one()
    while n > 0:
        if n & 1:
            result = field.mul(result, a)
        n >>= 1
        if n:
            a = field.mul(a, a)
    return result


def _lower(ext: ExtensionField, a: Any) -> Any:
    if not ext.in_base(a):
        raise ValueError("interpolated coefficient outside the base field")
    return a[0]


def _evaluate_all(fn: Callable[[Any], Any], points: Sequence[Any], workers: int) -> list[Any]:
    if workers <= 1 or len(points) < 2:
        return [fn(u) for u in points]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, points))


# a coefficient c of degree <= bound that is not a polynomial in T^s still agrees with its
# T^s reconstruction at the sampled points; it survives a random check point with
# probability at most bound / |check field|
PERIOD_CHECKS = 3
CHECK_FIELD_FACTOR = 32


def _check_periodic(
    matrix: PolyMatrix, compressed: Sequence[Poly], period: int, bound: int, rng: random.Random
) -> None:
    """Compare det(X I - M) at random points with the coefficients rebuilt from T^period"""
    target, lift, _ = _evaluation_field(
        matrix.field, lambda order: order >= CHECK_FIELD_FACTOR * (bound + 1), rng
    )
    for _ in range(PERIOD_CHECKS):
        u = target.random_element(rng)
        expected = hessenberg_charpoly(target, matrix.evaluate(target, u, lift))
        up = _power(target, u, period)
        for i, c in enumerate(compressed):
            if _eval_lifted(c, target, up, lift) != expected[i]:
                raise NonPeriodicCoefficient(
                    f"coefficient of X^{i} is not a polynomial in T^{period}",
                    {"index": i, "period": period},
                )


def det_poly_matrix(
    matrix: PolyMatrix,
    degree_bound: int | None = None,
    strategy: Strategy | None = None,
    workers: int | None = None,
    seed: int | None = None,
) -> Poly:
    """Exact determinant of a square polynomial matrix"""
    _check_square(matrix)
    field = matrix.field
    n = matrix.rows
    if n == 0:
        return Poly.one(field)
    strategy_, workers_, seed_ = _resolve(strategy, workers, seed)
    bound = _default_bound(matrix) if degree_bound is None else degree_bound

    if strategy_ == "division_free":
        ring = PolyRing(field)
        coeffs = berkowitz(ring, matrix.to_rows())
        det = coeffs[0] if n % 2 == 0 else -coeffs[0]
    else:
        plan = _SamplingPlan(field, bound + 1, 1, random.Random(seed_))
        target = plan.target
        values = _evaluate_all(
            lambda u: det_field(target, matrix.evaluate(target, u, plan.lift)), plan.points, workers_
        )
        det = interpolate(target, list(zip(plan.points, values, strict=True))).map_coeffs(plan.lower, field)

    if get_settings().check_bounds:
        assert det.degree <= bound, f"determinant degree {det.degree} exceeds bound {bound}"
    return det


def charpoly_poly_matrix(
    matrix: PolyMatrix,
    degree_bound: int | None = None,
    period: int = 1,
    strategy: Strategy | None = None,
    workers: int | None = None,
    seed: int | None = None,
) -> Poly:
    """Monic det(X I - M) as a polynomial in X whose coefficients are polynomials in T.

    With ``period > 1`` every coefficient must lie in F[T^period]; both strategies raise
    ``NonPeriodicCoefficient`` otherwise.
    """
    _check_square(matrix)
    field = matrix.field
    ring = PolyRing(field)
    n = matrix.rows
    strategy_, workers_, seed_ = _resolve(strategy, workers, seed)
    bound = _default_bound(matrix) if degree_bound is None else degree_bound

    if n == 0:
        return Poly.one(ring)

    if strategy_ == "division_free":
        coeffs = berkowitz(ring, matrix.to_rows())
        if period > 1:
            for i, c in enumerate(coeffs):
                if not c.is_periodic(period):
                    raise NonPeriodicCoefficient(
                        f"coefficient of X^{i} is not a polynomial in T^{period}",
                        {"index": i, "period": period},
                    )
    else:
        rng = random.Random(seed_)
        plan = _SamplingPlan(field, bound // period + 1, period, rng)
        target = plan.target

        def at(u: Any) -> list[Any]:
            return hessenberg_charpoly(target, matrix.evaluate(target, u, plan.lift))

        values = _evaluate_all(at, plan.points, workers_)
        abscissae = [_power(target, u, period) for u in plan.points]
        compressed = []
        for i in range(n + 1):
            interpolated = interpolate(target, list(zip(abscissae, [v[i] for v in values], strict=True)))
            try:
                compressed.append(interpolated.map_coeffs(plan.lower, field))
            except ValueError as exc:
                raise NonPeriodicCoefficient(
                    f"coefficient of X^{i} is not a polynomial in T^{period}",
                    {"index": i, "period": period},
                ) from exc
        if period > 1:
            _check_periodic(matrix, compressed, period, bound, rng)
        coeffs = [c.substitute_power(period) for c in compressed]

    if get_settings().check_bounds:
        worst = max(c.degree for c in coeffs)
        assert worst <= bound, f"charpoly coefficient degree {worst} exceeds bound {bound}"
    return Poly(ring, coeffs)
