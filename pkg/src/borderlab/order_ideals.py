"""Order ideals, their borders, and the combinatorics built on top of them."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import comb
from typing import Iterable, Sequence

from . import monomials as mon
from .monomials import Monomial


class OrderIdealError(ValueError):
    """An order ideal failed validation."""


@dataclass(frozen=True)
class ShapeParams:
    n: int
    kappa: int
    r: int
    s: int

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"shape needs n >= 3, got n={self.n}")
        if not 1 < self.kappa < self.n:
            raise ValueError(f"shape needs 1 < kappa < n, got kappa={self.kappa}, n={self.n}")
        if self.r < 2:
            raise ValueError(f"shape needs r >= 2, got r={self.r}")
        if self.s <= self.r:
            raise ValueError(f"shape needs s > r, got r={self.r}, s={self.s}")

    @classmethod
    def parse(cls, text: str) -> "ShapeParams":
        parts = [p for p in text.replace(" ", "").split(",") if p]
        if len(parts) != 4:
            raise ValueError(f"shape must be 'n,kappa,r,s', got {text!r}")
        return cls(*(int(p) for p in parts))

    def __str__(self):
        return f"({self.n},{self.kappa},{self.r},{self.s})"


@dataclass(frozen=True)
class NeighborPair:
    j: int
    j2: int
    kind: str  # "nextDoor" or "acrossStreet"
    k: int  # 1-based variable multiplying b_j
    l: int = 0  # 1-based variable multiplying b_j2 (0 for next-door)


class OrderIdeal:
    """An order ideal O with its border and index maps.

    ``basis[i]`` is t_{i+1} and ``border[j]`` is b_{j+1}; both lists are in
    canonical order (degree ascending, lex descending).
    """

    def __init__(self, n: int, monomials: Iterable[Sequence[int]]):
        self.n = n
        ms = {tuple(m) for m in monomials}
        for m in ms:
            if len(m) != n:
                raise mon.DimensionError(f"monomial {m} is not over {n} variables")
            if any(e < 0 for e in m):
                raise OrderIdealError(f"negative exponent in {m}")
        if mon.one(n) not in ms:
            raise OrderIdealError("order ideal must contain 1")
        for m in ms:
            for a in range(n):
                if m[a] and _lower(m, a) not in ms:
                    raise OrderIdealError(
                        f"not divisor-closed: {mon.format_monomial(m)} is in O but "
                        f"{mon.format_monomial(_lower(m, a))} is not"
                    )
        self.basis: list[Monomial] = mon.canonical_sorted(ms)
        self.basis_index: dict[Monomial, int] = {t: i for i, t in enumerate(self.basis)}
        border = {mon.times_var(t, a) for t in self.basis for a in range(1, n + 1)} - ms
        self.border: list[Monomial] = mon.canonical_sorted(border)
        self.border_index: dict[Monomial, int] = {b: j for j, b in enumerate(self.border)}

    # sizes
    @property
    def mu(self) -> int:
        return len(self.basis)

    @property
    def nu(self) -> int:
        return len(self.border)

    def __contains__(self, m) -> bool:
        return tuple(m) in self.basis_index

    def __eq__(self, other):
        return isinstance(other, OrderIdeal) and self.n == other.n and self.basis == other.basis

    def __hash__(self):
        return hash((self.n, tuple(self.basis)))

    def __repr__(self):
        return f"OrderIdeal(n={self.n}, mu={self.mu}, nu={self.nu})"

    @cached_property
    def max_degree(self) -> int:
        return max(sum(t) for t in self.basis)

    @cached_property
    def hilbert_function(self) -> tuple[int, ...]:
        h = [0] * (self.max_degree + 2)
        for t in self.basis:
            h[sum(t)] += 1
        return tuple(h)

    def basis_of_degree(self, d: int) -> list[Monomial]:
        return [t for t in self.basis if sum(t) == d]

    def border_of_degree(self, d: int) -> list[Monomial]:
        return [b for b in self.border if sum(b) == d]

    @cached_property
    def maximal_basis(self) -> list[Monomial]:
        """O_max: basis monomials t with x_k t outside O for every k."""
        return [
            t for t in self.basis
            if all(mon.times_var(t, a) not in self.basis_index for a in range(1, self.n + 1))
        ]

    @cached_property
    def minimal_border(self) -> list[Monomial]:
        """The border monomials all of whose one-variable quotients lie in O."""
        return [
            b for b in self.border
            if all(_lower(b, a) in self.basis_index for a in range(self.n) if b[a])
        ]

    def is_lex_segment_complement(self) -> bool:
        for d, h in enumerate(self.hilbert_function):
            expected = _lex_smallest(self.n, d, h)
            if set(expected) != set(self.basis_of_degree(d)):
                return False
        return True

    # neighbor pairs and target monomials

    @cached_property
    def neighbor_pairs(self) -> list[NeighborPair]:
        pairs = []
        index = self.border_index
        for j, b in enumerate(self.border):
            for k in range(1, self.n + 1):
                j2 = index.get(mon.times_var(b, k))
                if j2 is not None:
                    pairs.append(NeighborPair(j, j2, "nextDoor", k))
        for j, b in enumerate(self.border):
            for j2 in range(j + 1, self.nu):
                b2 = self.border[j2]
                if sum(b2) != sum(b):
                    continue
                diff = [y - x for x, y in zip(b, b2)]
                ups = [a for a, e in enumerate(diff) if e == 1]
                downs = [a for a, e in enumerate(diff) if e == -1]
                if len(ups) == 1 and len(downs) == 1 and sum(1 for e in diff if e) == 2:
                    # x_k b_j = x_l b_j2 with b_j2 = b_j * x_k / x_l
                    pairs.append(NeighborPair(j, j2, "acrossStreet", ups[0] + 1, downs[0] + 1))
        return pairs

    @cached_property
    def targets(self) -> list[Monomial]:
        t = set(self.border)
        for b in self.border:
            for a in range(1, self.n + 1):
                t.add(mon.times_var(b, a))
        return mon.canonical_sorted(t)

    @cached_property
    def target_index(self) -> dict[Monomial, int]:
        return {m: i for i, m in enumerate(self.targets)}

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "hilbert": list(self.hilbert_function),
            "basis": [mon.format_monomial(t) for t in self.basis],
            "border": [mon.format_monomial(b) for b in self.border],
        }

    @classmethod
    def from_json(cls, data: dict) -> "OrderIdeal":
        n = int(data["n"])
        oi = cls(n, (mon.parse_monomial(s, n) for s in data["basis"]))
        if "border" in data:
            border = {mon.parse_monomial(s, n) for s in data["border"]}
            if border != set(oi.border):
                raise OrderIdealError("stored border does not match the border of the basis")
        if "hilbert" in data and _strip(data["hilbert"]) != _strip(oi.hilbert_function):
            raise OrderIdealError("stored Hilbert function does not match the basis")
        return oi


def _strip(h):
    h = list(h)
    while h and h[-1] == 0:
        h.pop()
    return h


def _lower(m: Monomial, a: int) -> Monomial:
    out = list(m)
    out[a] -= 1
    return tuple(out)


def _lex_smallest(n: int, d: int, h: int) -> list[Monomial]:
    if h == 0:
        return []
    # monomials_of_degree yields lex descending, so the smallest come last
    return list(mon.monomials_of_degree(n, d))[-h:]


def lex_segment_complement(n: int, hilbert: Sequence[int]) -> OrderIdeal:
    """The order ideal whose degree-d part is the h_d lex-smallest monomials."""
    h = [int(x) for x in hilbert]
    if not h or h[0] != 1:
        raise OrderIdealError("Hilbert function must start with h_0 = 1")
    if h[-1] != 0:
        raise OrderIdealError("Hilbert function must end with 0")
    ms = []
    for d, hd in enumerate(h):
        total = comb(n - 1 + d, d)
        if not 0 <= hd <= total:
            raise OrderIdealError(f"h_{d} = {hd} is outside 0..{total}")
        ms.extend(_lex_smallest(n, d, hd))
    return OrderIdeal(n, ms)


def order_ideal_from_shape(shape: ShapeParams) -> tuple[OrderIdeal, list[Monomial], list[Monomial]]:
    """(O, LM, TM) for a shape: LM is the degree-r border, TM is O_s."""
    n, kappa, r, s = shape.n, shape.kappa, shape.r, shape.s
    back = range(n - kappa + 1, n + 1)
    ms = []
    for d in range(r):
        ms.extend(mon.monomials_of_degree(n, d))
    for d in range(r, s + 1):
        ms.extend(mon.monomials_of_degree(n, d, back))
    oi = OrderIdeal(n, ms)
    return oi, oi.border_of_degree(r), oi.basis_of_degree(s)


def upper_border(ms: Iterable[Monomial], n: int) -> set[Monomial]:
    """{x_k m : m in ms, 1 <= k <= n}, with nothing removed."""
    return {mon.times_var(m, a) for m in ms for a in range(1, n + 1)}
