"""Closed-form counts for shape ideals and the plausibility criterion.

Everything is exact integer arithmetic, so shapes with n in the tens of
thousands are fine.
"""

from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from math import comb
from typing import Iterable, Iterator

from .order_ideals import ShapeParams


def C(a: int, b: int) -> int:
    """Binomial coefficient, zero when b < 0 or a < b."""
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


@dataclass
class ShapeCounts:
    shape: ShapeParams
    lam: int
    tau: int
    mu: int
    nu: int
    psi: int
    o_sizes: dict[int, int]
    t_sizes: dict[int, int]
    a_bounds: dict[int, int]
    relation_counts: dict[int, int]

    def to_json(self) -> dict:
        return {
            "lambda": self.lam, "tau": self.tau, "mu": self.mu, "nu": self.nu, "psi": self.psi,
            "o_sizes": {str(k): v for k, v in self.o_sizes.items()},
            "t_sizes": {str(k): v for k, v in self.t_sizes.items()},
            "a_bounds": {str(k): v for k, v in self.a_bounds.items()},
            "relation_counts": {str(k): v for k, v in self.relation_counts.items()},
        }


def o_size(shape: ShapeParams, d: int) -> int:
    n, k, r, s = shape.n, shape.kappa, shape.r, shape.s
    if d < 0 or d > s:
        return 0
    if d < r:
        return C(n - 1 + d, d)
    return C(k - 1 + d, d)


def t_sizes(shape: ShapeParams) -> dict[int, int]:
    n, k, r, s = shape.n, shape.kappa, shape.r, shape.s
    lam = C(n - 1 + r, r) - C(k - 1 + r, r)
    out = {r: lam, r + 1: C(n + r, r + 1) - C(k + r, r + 1)}
    pairs = C(n - k + 1, 2)
    for d in range(r + 2, s + 1):
        out[d] = (n - k) * C(k + d - 2, d - 1) + pairs * C(k + d - 3, d - 2)
    out[s + 1] = C(k + s, s + 1) + (n - k) * C(k - 1 + s, s) + pairs * C(k - 2 + s, s - 1)
    out[s + 2] = C(k + s + 1, s + 2) + (n - k) * C(k + s, s + 1) + pairs * C(k - 1 + s, s)
    return out


def a_bound(shape: ShapeParams, d: int, nu: int, lam: int) -> int:
    n, k, r, s = shape.n, shape.kappa, shape.r, shape.s
    free = nu - lam
    if d <= r - 1:
        return free * C(n - 1 + d, d) + nu * C(n + d - 2, d - 1)
    if d == r:
        return free * C(k - 1 + r, r) + nu * C(k + r - 2, r - 1)
    if d <= s - 1:
        return free * C(k - 1 + d, d) + nu * C(k + d - 2, d - 1)
    if d == s:
        return free * C(k - 1 + s, s) + nu * C(k + s - 2, s - 1) + nu * C(n + r - 2, r - 1)
    raise ValueError(f"degree {d} outside 0..{s}")


def shape_counts(shape: ShapeParams) -> ShapeCounts:
    n, k, r, s = shape.n, shape.kappa, shape.r, shape.s
    lam = C(n - 1 + r, r) - C(k - 1 + r, r)
    tau = C(k - 1 + s, s)
    o = {d: o_size(shape, d) for d in range(s + 1)}
    mu = sum(o.values())
    nu = lam + sum((n - k) * C(k + d - 2, d - 1) for d in range(r + 1, s + 2)) + C(k + s, s + 1)
    t = t_sizes(shape)
    psi = (n + 1) * nu - sum(t.values())
    a = {d: a_bound(shape, d, nu, lam) for d in range(s + 1)}
    rel = {d: psi * o[d] for d in range(s + 1)}
    return ShapeCounts(shape, lam, tau, mu, nu, psi, o, t, a, rel)


def condition1(shape: ShapeParams, counts: ShapeCounts | None = None) -> dict[int, bool]:
    c = counts or shape_counts(shape)
    return {d: c.relation_counts[d] >= c.a_bounds[d] for d in range(shape.s + 1)}


def condition2(shape: ShapeParams, counts: ShapeCounts | None = None) -> tuple[bool, int, int]:
    """(holds, n * lambda, |T_{r+1}| + (n-kappa) C(kappa-1+s, s) + C(kappa+s, s+1))."""
    c = counts or shape_counts(shape)
    n, k, r, s = shape.n, shape.kappa, shape.r, shape.s
    lhs = n * c.lam
    rhs = c.t_sizes[r + 1] + (n - k) * C(k - 1 + s, s) + C(k + s, s + 1)
    return lhs >= rhs, lhs, rhs


def shape_generic_dimension(shape: ShapeParams) -> int:
    """|S| + |Z'| for a shape ideal, in closed form."""
    n, k, r, s = shape.n, shape.kappa, shape.r, shape.s
    lam = C(n - 1 + r, r) - C(k - 1 + r, r)
    tau = C(k - 1 + s, s)
    return lam * tau + (n - k) * sum(C(k - 1 + d, d) for d in range(s - r + 1)) + k


@dataclass
class PlausibilityReport:
    shape: ShapeParams
    counts: ShapeCounts
    condition1: dict[int, bool]
    condition2: bool
    lhs: int
    rhs: int

    @property
    def condition1_holds(self) -> bool:
        return all(self.condition1.values())

    @property
    def plausible(self) -> bool:
        return self.condition1_holds and self.condition2

    def row(self) -> dict:
        c = self.counts
        sh = self.shape
        return {
            "n": sh.n, "kappa": sh.kappa, "r": sh.r, "s": sh.s,
            "lambda": c.lam, "tau": c.tau, "mu": c.mu, "nu": c.nu, "psi": c.psi,
            "cond1": self.condition1_holds, "cond2": self.condition2,
            "plausible": self.plausible,
        }

    def to_json(self) -> dict:
        out = self.row()
        out["condition1_by_degree"] = {str(d): ok for d, ok in self.condition1.items()}
        out["condition2_lhs"] = self.lhs
        out["condition2_rhs"] = self.rhs
        out["counts"] = self.counts.to_json()
        return out


def genericity_is_plausible(shape: ShapeParams) -> PlausibilityReport:
    c = shape_counts(shape)
    c1 = condition1(shape, c)
    ok2, lhs, rhs = condition2(shape, c)
    return PlausibilityReport(shape, c, c1, ok2, lhs, rhs)


def _valid_shapes(ns, kappas, rs, ss) -> Iterator[ShapeParams]:
    for n, k, r, s in product(ns, kappas, rs, ss):
        if n >= 3 and 1 < k < n and 2 <= r < s:
            yield ShapeParams(n, k, r, s)


def _row_for(args) -> dict:
    return genericity_is_plausible(ShapeParams(*args)).row()


def thread_count() -> int:
    raw = os.environ.get("BORDERLAB_THREADS")
    if not raw:
        return 1
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def plausible_scan(ns: Iterable[int], kappas: Iterable[int], rs: Iterable[int], ss: Iterable[int],
                   workers: int | None = None) -> Iterator[dict]:
    """Rows for every valid shape in the product of the ranges, canonically ordered.

    Invalid combinations (e.g. kappa >= n) are skipped.
    """
    shapes = [(sh.n, sh.kappa, sh.r, sh.s) for sh in _valid_shapes(list(ns), list(kappas), list(rs), list(ss))]
    workers = thread_count() if workers is None else workers
    if workers > 1 and len(shapes) > 64:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            yield from pool.map(_row_for, shapes, chunksize=32)
    else:
        for sh in shapes:
            yield _row_for(sh)


COLUMNS = ["n", "kappa", "r", "s", "lambda", "tau", "mu", "nu", "psi", "cond1", "cond2", "plausible"]


def rows_to_csv(rows: Iterable[dict], out: io.TextIOBase) -> None:
    writer = csv.DictWriter(out, fieldnames=COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: str(v).lower() if isinstance(v, bool) else v for k, v in row.items()})


def rows_to_json(rows: Iterable[dict], out: io.TextIOBase) -> None:
    json.dump(list(rows), out, indent=2)
    out.write("\n")
