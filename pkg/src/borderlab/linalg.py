"""Exact sparse linear algebra over the rationals and over GF(p).

Matrices are stored row-wise as lists of ``{col: value}`` dicts.  Elimination
is done online: each incoming row is reduced against the pivot rows found so
far, keyed by their leading (smallest) column.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt, lcm
from typing import Iterable, Iterator, Sequence

DEFAULT_PRIME = 32713


class SparseMatrix:
    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows: Sequence[dict] | None = None):
        self.nrows = nrows
        self.ncols = ncols
        if rows is None:
            rows = [dict() for _ in range(nrows)]
        if len(rows) != nrows:
            raise ValueError(f"expected {nrows} rows, got {len(rows)}")
        clean = []
        for r in rows:
            row = {}
            for c, v in r.items():
                if not 0 <= c < ncols:
                    raise IndexError(f"column {c} outside 0..{ncols - 1}")
                if v:
                    row[c] = v
            clean.append(row)
        self.rows: list[dict] = clean

    @classmethod
    def from_entries(cls, nrows: int, ncols: int, entries: Iterable[tuple[int, int, object]]):
        rows = [dict() for _ in range(nrows)]
        for i, j, v in entries:
            if not 0 <= i < nrows:
                raise IndexError(f"row {i} outside 0..{nrows - 1}")
            rows[i][j] = rows[i].get(j, 0) + v
        return cls(nrows, ncols, rows)

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence]):
        nrows = len(dense)
        ncols = len(dense[0]) if nrows else 0
        return cls(nrows, ncols, [{j: v for j, v in enumerate(row) if v} for row in dense])

    @classmethod
    def from_columns(cls, nrows: int, columns: Sequence[dict]):
        rows = [dict() for _ in range(nrows)]
        for j, col in enumerate(columns):
            for i, v in col.items():
                if v:
                    rows[i][j] = v
        m = cls.__new__(cls)
        m.nrows, m.ncols, m.rows = nrows, len(columns), rows
        return m

    def entries(self) -> Iterator[tuple[int, int, object]]:
        for i, r in enumerate(self.rows):
            for j in sorted(r):
                yield i, j, r[j]

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows)

    def transpose(self) -> "SparseMatrix":
        cols = [dict() for _ in range(self.ncols)]
        for i, r in enumerate(self.rows):
            for j, v in r.items():
                cols[j][i] = v
        m = SparseMatrix.__new__(SparseMatrix)
        m.nrows, m.ncols, m.rows = self.ncols, self.nrows, cols
        return m

    def to_dense(self) -> list[list]:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for i, r in enumerate(self.rows):
            for j, v in r.items():
                out[i][j] = v
        return out

    def apply(self, vec: Sequence) -> list:
        """M @ vec."""
        return [sum(v * vec[j] for j, v in r.items()) for r in self.rows]

    def dump(self, path) -> None:
        """Coordinate text format: one ``row col value`` line per nonzero."""
        with open(path, "w") as fh:
            fh.write(f"% {self.nrows} {self.ncols} {self.nnz()}\n")
            for i, j, v in self.entries():
                fh.write(f"{i} {j} {v}\n")


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    for d in range(3, isqrt(p) + 1, 2):
        if p % d == 0:
            return False
    return True


def _integer_row(row: dict) -> dict:
    """Scale a rational row to coprime integers."""
    dens = [v.denominator for v in row.values() if isinstance(v, Fraction)]
    if dens:
        m = lcm(*dens)
        row = {c: int(v * m) for c, v in row.items()}
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        row = {c: v // g for c, v in row.items()}
    return row


def _column_order(rows: Sequence[dict], ncols: int) -> list[int]:
    """Permutation placing the sparsest columns first (Markowitz-flavoured)."""
    counts = [0] * ncols
    for r in rows:
        for c in r:
            counts[c] += 1
    order = sorted(range(ncols), key=lambda c: (counts[c], c))
    return order


def _prepare(rows: Sequence[dict], ncols: int, permute: bool, modulus: int | None):
    if permute:
        order = _column_order(rows, ncols)
        pos = {c: k for k, c in enumerate(order)}
    else:
        pos = None
    out = []
    for r in rows:
        if modulus is None:
            r = _integer_row(r) if r else r
        else:
            r = {c: int(v) % modulus if not isinstance(v, Fraction) else
                 (v.numerator * pow(v.denominator, -1, modulus)) % modulus
                 for c, v in r.items()}
            r = {c: v for c, v in r.items() if v}
        if not r:
            continue
        if pos is not None:
            r = {pos[c]: v for c, v in r.items()}
        out.append(r)
    out.sort(key=len)
    return out


def _echelon_mod_p(rows: Iterable[dict], p: int) -> dict[int, dict]:
    pivots: dict[int, dict] = {}
    for r in rows:
        while r:
            c = min(r)
            piv = pivots.get(c)
            if piv is None:
                inv = pow(r[c], -1, p)
                if inv != 1:
                    r = {k: (v * inv) % p for k, v in r.items()}
                pivots[c] = r
                break
            f = r[c]
            for k, v in piv.items():
                nv = (r.get(k, 0) - f * v) % p
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
    return pivots


def _echelon_rational(rows: Iterable[dict]) -> dict[int, dict]:
    """Fraction-free elimination; every stored pivot row is primitive."""
    pivots: dict[int, dict] = {}
    for r in rows:
        while r:
            c = min(r)
            piv = pivots.get(c)
            if piv is None:
                if r[c] < 0:
                    r = {k: -v for k, v in r.items()}
                pivots[c] = r
                break
            a, b = piv[c], r[c]
            g = gcd(a, b)
            a //= g
            b //= g
            if a != 1:
                r = {k: a * v for k, v in r.items()}
            for k, v in piv.items():
                nv = r.get(k, 0) - b * v
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
            if r:
                g = 0
                for v in r.values():
                    g = gcd(g, v)
                    if g == 1:
                        break
                if g > 1:
                    r = {k: v // g for k, v in r.items()}
    return pivots


def _peel_singletons(rows: list[dict]) -> tuple[int, list[dict]]:
    """Strip singleton rows and singleton columns, repeatedly.

    A row with one nonzero entry is a pivot on its own, and its column can be
    deleted from every other row.  A column with one nonzero entry makes its
    row independent of all others, so that row can be dropped.  Each step
    adds one to the rank.  Returns the pivots found this way and the
    remaining nonempty rows.
    """
    rows = [dict(r) for r in rows if r]
    by_col: dict[int, set] = {}
    for k, r in enumerate(rows):
        for c in r:
            by_col.setdefault(c, set()).add(k)
    alive = [True] * len(rows)
    row_stack = [k for k, r in enumerate(rows) if len(r) == 1]
    col_stack = [c for c, ks in by_col.items() if len(ks) == 1]
    peeled = 0

    def drop_row(k):
        alive[k] = False
        for c in rows[k]:
            ks = by_col.get(c)
            if ks is not None:
                ks.discard(k)
                if len(ks) == 1:
                    col_stack.append(c)
                elif not ks:
                    del by_col[c]

    while row_stack or col_stack:
        if row_stack:
            k = row_stack.pop()
            if not alive[k] or len(rows[k]) != 1:
                continue
            (c,) = rows[k]
            peeled += 1
            alive[k] = False
            for k2 in by_col.pop(c, ()):
                if k2 == k or not alive[k2]:
                    continue
                r2 = rows[k2]
                del r2[c]
                if len(r2) == 1:
                    row_stack.append(k2)
                elif not r2:
                    alive[k2] = False
            continue
        c = col_stack.pop()
        ks = by_col.get(c)
        if not ks or len(ks) != 1:
            continue
        (k,) = ks
        if not alive[k]:
            continue
        peeled += 1
        del by_col[c]
        del rows[k][c]
        drop_row(k)
    return peeled, [r for k, r in enumerate(rows) if alive[k] and r]


def rank_exact(m: SparseMatrix, permute: bool = True) -> int:
    """Rank over Q."""
    peeled, rest = _peel_singletons(m.rows)
    return peeled + len(_echelon_rational(_prepare(rest, m.ncols, permute, None)))


def rank_mod_p(m: SparseMatrix, p: int = DEFAULT_PRIME, permute: bool = True) -> int:
    """Rank of the reduction of M modulo the prime p (never exceeds the Q-rank)."""
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    rows = [{c: v for c, v in r.items() if _mod(v, p)} for r in m.rows]
    peeled, rest = _peel_singletons(rows)
    return peeled + len(_echelon_mod_p(_prepare(rest, m.ncols, permute, p), p))


def _mod(v, p: int) -> int:
    if isinstance(v, Fraction):
        return (v.numerator * pow(v.denominator, -1, p)) % p
    return int(v) % p


def _reduced_echelon(m: SparseMatrix) -> dict[int, dict]:
    """Reduced row echelon form over Q in natural column order, rows primitive."""
    pivots = _echelon_rational(_prepare(m.rows, m.ncols, False, None))
    for c in sorted(pivots, reverse=True):
        row = pivots[c]
        for c2 in sorted(pivots):
            if c2 >= c:
                break
            other = pivots[c2]
            b = other.get(c)
            if not b:
                continue
            a = row[c]
            g = gcd(a, b)
            a //= g
            b //= g
            new = {k: a * v for k, v in other.items()}
            for k, v in row.items():
                nv = new.get(k, 0) - b * v
                if nv:
                    new[k] = nv
                else:
                    new.pop(k, None)
            pivots[c2] = _integer_row(new)
            if pivots[c2][c2] < 0:
                pivots[c2] = {k: -v for k, v in pivots[c2].items()}
    return pivots


def kernel_basis_rational(m: SparseMatrix) -> list[list[int]]:
    """Integer vectors spanning the right kernel of M, one per free column.

    Each vector has coprime entries and a positive entry at its free column;
    vectors are listed by increasing free column.
    """
    pivots = _reduced_echelon(m)
    free = [c for c in range(m.ncols) if c not in pivots]
    # column c -> list of (pivot column, row) with a nonzero entry at c
    hits: dict[int, list] = {}
    for pc, row in pivots.items():
        for c, v in row.items():
            if c != pc:
                hits.setdefault(c, []).append((pc, row))
    basis = []
    for f in free:
        vec = {f: Fraction(1)}
        for pc, row in hits.get(f, ()):
            vec[pc] = Fraction(-row[f], row[pc])
        ints = _integer_row(vec)
        if ints[f] < 0:
            ints = {k: -v for k, v in ints.items()}
        dense = [0] * m.ncols
        for k, v in ints.items():
            dense[k] = v
        basis.append(dense)
    return basis


def rank(m: SparseMatrix, field: str | int = "Q") -> int:
    """Rank over ``"Q"`` or over GF(p) when ``field`` is a prime int."""
    if field == "Q":
        return rank_exact(m)
    return rank_mod_p(m, int(field))
