"""Exponent-vector monomials over x1, ..., xn.

A monomial is a plain tuple of non-negative ints; ``m[a]`` is the exponent
of ``x_{a+1}``.  Python's tuple comparison is exactly the lexicographic order
with x1 > x2 > ... > xn, which is the only term order used in this package.
"""

from __future__ import annotations

import re
from itertools import combinations_with_replacement
from typing import Iterable, Iterator, Sequence

Monomial = tuple


class DimensionError(ValueError):
    """Raised when monomials over different numbers of variables meet."""


def _check_same_n(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise DimensionError(f"monomials over {len(a)} and {len(b)} variables")


def monomial(exponents: Iterable[int]) -> Monomial:
    m = tuple(int(e) for e in exponents)
    if any(e < 0 for e in m):
        raise ValueError(f"negative exponent in {m}")
    return m


def one(n: int) -> Monomial:
    return (0,) * n


def variable(n: int, alpha: int) -> Monomial:
    """The monomial x_alpha (1-based, as in the literature)."""
    if not 1 <= alpha <= n:
        raise ValueError(f"variable index {alpha} outside 1..{n}")
    m = [0] * n
    m[alpha - 1] = 1
    return tuple(m)


def degree(m: Sequence[int]) -> int:
    return sum(m)


def lex_compare(a: Sequence[int], b: Sequence[int]) -> int:
    """Return -1, 0 or 1 as a is lex-smaller, equal to, or lex-greater than b."""
    _check_same_n(a, b)
    a, b = tuple(a), tuple(b)
    return (a > b) - (a < b)


def degree_split(m: Sequence[int], kappa: int) -> tuple[int, int]:
    """(front degree, back degree) with the last ``kappa`` variables at the back."""
    n = len(m)
    if not 1 <= kappa < n:
        raise ValueError(f"kappa must satisfy 1 <= kappa < n={n}, got {kappa}")
    front = sum(m[: n - kappa])
    return front, sum(m) - front


def divides(a: Sequence[int], b: Sequence[int]) -> bool:
    _check_same_n(a, b)
    return all(x <= y for x, y in zip(a, b))


def mul(a: Sequence[int], b: Sequence[int]) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def div(a: Sequence[int], b: Sequence[int]) -> Monomial:
    """a / b; the caller guarantees b | a."""
    return tuple(x - y for x, y in zip(a, b))


def lcm(a: Sequence[int], b: Sequence[int]) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def times_var(m: Sequence[int], alpha: int) -> Monomial:
    """x_alpha * m, alpha 1-based."""
    out = list(m)
    out[alpha - 1] += 1
    return tuple(out)


def canonical_key(m: Sequence[int]) -> tuple:
    """Sort key: degree ascending, then lex descending within a degree."""
    return (sum(m), tuple(-e for e in m))


def canonical_sorted(ms: Iterable[Sequence[int]]) -> list[Monomial]:
    return sorted((tuple(m) for m in ms), key=canonical_key)


def monomials_of_degree(n: int, d: int, variables: Sequence[int] | None = None) -> Iterator[Monomial]:
    """All degree-d monomials in the given 1-based variables, lex descending."""
    if variables is None:
        variables = range(1, n + 1)
    for combo in combinations_with_replacement(sorted(variables), d):
        m = [0] * n
        for a in combo:
            m[a - 1] += 1
        yield tuple(m)


def format_monomial(m: Sequence[int]) -> str:
    parts = []
    for a, e in enumerate(m, start=1):
        if e == 1:
            parts.append(f"x{a}")
        elif e > 1:
            parts.append(f"x{a}^{e}")
    return "*".join(parts) if parts else "1"


_FACTOR = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str, n: int) -> Monomial:
    """Inverse of :func:`format_monomial`; also accepts repeated factors."""
    text = text.strip().replace(" ", "")
    exps = [0] * n
    if text == "1":
        return tuple(exps)
    for factor in text.split("*"):
        match = _FACTOR.match(factor)
        if match is None:
            raise ValueError(f"cannot parse monomial factor {factor!r} in {text!r}")
        a = int(match.group(1))
        if not 1 <= a <= n:
            raise DimensionError(f"variable x{a} outside x1..x{n}")
        exps[a - 1] += int(match.group(2) or 1)
    return tuple(exps)
