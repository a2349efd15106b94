"""Border prebases, distinguished ideals and border division."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Mapping, Sequence

from . import monomials as mon
from .monomials import Monomial
from .order_ideals import NeighborPair, OrderIdeal, upper_border
from .polynomials import Polynomial


class IdealValidationError(ValueError):
    """Leading/trailing data or coefficients violate the distinguished pattern."""


class SchemaError(ValueError):
    """Malformed ideal description."""


def _add_into(acc: dict, vec: Mapping, scale) -> None:
    for k, v in vec.items():
        nv = acc.get(k, 0) + scale * v
        if nv:
            acc[k] = nv
        else:
            acc.pop(k, None)


class BorderPrebasis:
    """Polynomials g_j = b_j - sum_i tails[j][i] * t_i over an order ideal.

    Normal forms are returned as ``{basis index: coefficient}`` dicts by the
    low-level methods and as :class:`Polynomial` by :meth:`normal_form`.
    """

    def __init__(self, order_ideal: OrderIdeal, tails: Sequence[Mapping[int, object]]):
        if len(tails) != order_ideal.nu:
            raise SchemaError(f"expected {order_ideal.nu} tails, got {len(tails)}")
        self.O = order_ideal
        self.n = order_ideal.n
        self.tails: list[dict[int, object]] = [
            {i: c for i, c in t.items() if c} for t in tails
        ]
        for t in self.tails:
            for i in t:
                if not 0 <= i < order_ideal.mu:
                    raise SchemaError(f"tail index {i} outside the basis")
        self._nf_cache: dict[Monomial, dict[int, object]] = {}
        # border divisors tried in order: degree descending, then lex descending
        self._divisor_order = sorted(order_ideal.border, key=lambda b: (sum(b), b), reverse=True)

    def generator(self, j: int) -> Polynomial:
        terms = {self.O.border[j]: 1}
        for i, c in self.tails[j].items():
            terms[self.O.basis[i]] = -c
        return Polynomial(self.n, terms)

    @cached_property
    def generators(self) -> list[Polynomial]:
        return [self.generator(j) for j in range(self.O.nu)]

    def border_divisor(self, m: Monomial) -> Monomial:
        """Border monomial of maximal degree (lex-greatest on ties) dividing m."""
        for b in self._divisor_order:
            if all(x <= y for x, y in zip(b, m)):
                return b
        raise ValueError(f"{mon.format_monomial(m)} lies in O")

    def nf_monomial(self, m: Monomial) -> dict[int, object]:
        """Border-division normal form of a monomial, memoized.

        A monomial outside O is written as m' * b with b a border divisor of
        largest degree; then m' * t_i has strictly smaller index than m for
        every tail term t_i, so the recursion terminates.
        """
        cached = self._nf_cache.get(m)
        if cached is not None:
            return cached
        i = self.O.basis_index.get(m)
        if i is not None:
            out = {i: 1}
        else:
            j = self.O.border_index.get(m)
            if j is not None:
                out = dict(self.tails[j])
            else:
                b = self.border_divisor(m)
                rest = mon.div(m, b)
                out = {}
                for i, c in self.tails[self.O.border_index[b]].items():
                    _add_into(out, self.nf_monomial(mon.mul(rest, self.O.basis[i])), c)
        self._nf_cache[m] = out
        return out

    def nf_dict(self, terms: Mapping[Monomial, object]) -> dict[int, object]:
        out: dict[int, object] = {}
        for m, c in terms.items():
            if c:
                _add_into(out, self.nf_monomial(tuple(m)), c)
        return out

    def normal_form(self, f: Polynomial) -> Polynomial:
        return self.vector_to_polynomial(self.nf_dict(f.terms))

    def vector_to_polynomial(self, vec: Mapping[int, object]) -> Polynomial:
        return Polynomial(self.n, {self.O.basis[i]: c for i, c in vec.items()})

    def multiplication_column(self, alpha: int, i: int) -> dict[int, object]:
        """Normal form of x_alpha * t_i."""
        return self.nf_monomial(mon.times_var(self.O.basis[i], alpha))

    @cached_property
    def multiplication_matrices(self) -> list[list[dict[int, object]]]:
        """``[alpha-1][i]`` is the coordinate vector of NF(x_alpha * t_i)."""
        return [
            [self.multiplication_column(a, i) for i in range(self.O.mu)]
            for a in range(1, self.n + 1)
        ]

    def s_polynomial(self, pair: NeighborPair) -> Polynomial:
        g1, g2 = self.generators[pair.j], self.generators[pair.j2]
        left = g1.times_var(pair.k)
        right = g2.times_var(pair.l) if pair.kind == "acrossStreet" else g2
        return left - right

    def reduced_s_polynomial(self, j: int, j2: int) -> Polynomial:
        """Reduce S(g_j, g_j2) in one pass by the generators of its border terms."""
        pair = self._find_pair(j, j2)
        s = self.s_polynomial(pair)
        out = {}
        for m, c in s.terms.items():
            i = self.O.basis_index.get(m)
            if i is not None:
                _add_into(out, {i: c}, 1)
                continue
            jj = self.O.border_index.get(m)
            if jj is None:
                raise ArithmeticError(
                    f"S-polynomial term {mon.format_monomial(m)} outside O and its border"
                )
            _add_into(out, self.tails[jj], c)
        return self.vector_to_polynomial(out)

    def _find_pair(self, j: int, j2: int) -> NeighborPair:
        for p in self._pair_lookup.get((j, j2), ()):
            return p
        for p in self._pair_lookup.get((j2, j), ()):
            return p
        raise ValueError(f"border indices {j}, {j2} are not neighbors")

    @cached_property
    def _pair_lookup(self) -> dict:
        out: dict = {}
        for p in self.O.neighbor_pairs:
            out.setdefault((p.j, p.j2), []).append(p)
        return out

    def verify(self) -> tuple[bool, NeighborPair | None]:
        """(True, None) for a border basis, else (False, first failing pair)."""
        for p in self.O.neighbor_pairs:
            if self.reduced_s_polynomial(p.j, p.j2):
                return False, p
        return True, None

    def is_border_basis(self) -> bool:
        return self.verify()[0]

    def origin_support_certificate(self) -> dict[int, int]:
        """For each variable x_alpha an exponent e with NF(x_alpha^e) = 0."""
        out = {}
        limit = self.O.max_degree + 3
        for a in range(1, self.n + 1):
            e = 0
            while _power(self.n, a, e) in self.O:
                e += 1
            start = e
            while self.nf_monomial(_power(self.n, a, e)):
                e += 1
                if e > start + limit:
                    raise ArithmeticError(f"no power of x{a} found in the ideal")
            out[a] = e
        return out


def _power(n: int, alpha: int, e: int) -> Monomial:
    m = [0] * n
    m[alpha - 1] = e
    return tuple(m)


def partial_derivative(f: Polynomial, alpha: int) -> Polynomial:
    return f.derivative(alpha)


@dataclass(frozen=True)
class CoefficientSource:
    """How to fill the distinguished coefficients when no explicit map is given."""

    kind: str = "ternary"  # "ternary" or "bernoulli"
    p: float = 0.5

    @classmethod
    def parse(cls, text: str) -> "CoefficientSource":
        if text == "ternary":
            return cls("ternary")
        if text.startswith("bernoulli"):
            _, _, prob = text.partition(":")
            p = float(prob) if prob else 0.5
            if not 0 <= p <= 1:
                raise ValueError(f"bernoulli probability {p} outside [0, 1]")
            return cls("bernoulli", p)
        raise ValueError(f"unknown coefficient source {text!r}")

    def __str__(self):
        return "ternary" if self.kind == "ternary" else f"bernoulli:{self.p}"

    def draw(self, rng: random.Random) -> int:
        if self.kind == "ternary":
            return rng.choice((-1, 0, 1))
        return 1 if rng.random() < self.p else 0


class DistinguishedIdeal(BorderPrebasis):
    """A border basis whose only nonzero tails sit on LM x TM."""

    def __init__(
        self,
        order_ideal: OrderIdeal,
        leading: Sequence[Monomial],
        trailing: Sequence[Monomial],
        coefficients: Mapping[tuple[int, int], int],
        seed: int | None = None,
        source: CoefficientSource | None = None,
    ):
        self.leading = mon.canonical_sorted(leading)
        self.trailing = mon.canonical_sorted(trailing)
        self.seed = seed
        self.source = source
        self.leading_indices = [order_ideal.border_index[b] for b in self.leading]
        self.trailing_indices = [order_ideal.basis_index[t] for t in self.trailing]
        self.coefficients = dict(coefficients)
        tails: list[dict] = [dict() for _ in range(order_ideal.nu)]
        for (i, j), c in self.coefficients.items():
            if c:
                tails[j][i] = c
        super().__init__(order_ideal, tails)

    @property
    def lam(self) -> int:
        return len(self.leading)

    @property
    def tau(self) -> int:
        return len(self.trailing)

    @cached_property
    def distinguished_pairs(self) -> list[tuple[int, int]]:
        """(i, j) with b_j in LM and t_i in TM, j-major in canonical order."""
        return [(i, j) for j in self.leading_indices for i in self.trailing_indices]

    @cached_property
    def leading_generators(self) -> list[Polynomial]:
        return [self.generators[j] for j in self.leading_indices]

    def is_monomial_ideal(self) -> bool:
        return not any(self.coefficients.values())

    def coefficient(self, t: Monomial, b: Monomial) -> int:
        return self.coefficients[(self.O.basis_index[tuple(t)], self.O.border_index[tuple(b)])]

    def to_json(self) -> dict:
        data = {
            "order_ideal": self.O.to_json(),
            "leading": [mon.format_monomial(b) for b in self.leading],
            "trailing": [mon.format_monomial(t) for t in self.trailing],
            "coefficients": [
                {"t": mon.format_monomial(self.O.basis[i]),
                 "b": mon.format_monomial(self.O.border[j]),
                 "c": _json_number(self.coefficients[(i, j)])}
                for i, j in self.distinguished_pairs
            ],
        }
        if self.seed is not None:
            data["seed"] = self.seed
        if self.source is not None:
            data["rng"] = str(self.source)
        return data

    @classmethod
    def from_json(cls, data: dict) -> "DistinguishedIdeal":
        for key in ("order_ideal", "leading", "trailing", "coefficients"):
            if key not in data:
                raise SchemaError(f"missing key /{key}")
        oi = OrderIdeal.from_json(data["order_ideal"])
        n = oi.n
        lm = [mon.parse_monomial(s, n) for s in data["leading"]]
        tm = [mon.parse_monomial(s, n) for s in data["trailing"]]
        coeffs = {}
        for k, entry in enumerate(data["coefficients"]):
            try:
                t = mon.parse_monomial(entry["t"], n)
                b = mon.parse_monomial(entry["b"], n)
                c = entry["c"]
            except (KeyError, TypeError) as exc:
                raise SchemaError(f"bad entry at /coefficients/{k}: {exc}") from exc
            if isinstance(c, str):
                c = Fraction(c)
            if isinstance(c, float) or not isinstance(c, (int, Fraction)):
                raise SchemaError(f"/coefficients/{k}/c must be an integer or 'p/q' string")
            coeffs[(t, b)] = c
        source = CoefficientSource.parse(data["rng"]) if "rng" in data else None
        return build_distinguished_ideal(oi, lm, tm, coeffs, seed=data.get("seed"), source=source)


def _json_number(c):
    if isinstance(c, Fraction):
        return str(c) if c.denominator != 1 else int(c)
    return c


def validate_leading_trailing(O: OrderIdeal, leading, trailing) -> None:
    leading = [tuple(b) for b in leading]
    trailing = [tuple(t) for t in trailing]
    if not leading:
        raise IdealValidationError("LM must be nonempty")
    if not trailing:
        raise IdealValidationError("TM must be nonempty")
    minimal = set(O.minimal_border)
    for b in leading:
        if b not in minimal:
            raise IdealValidationError(f"leading monomial not minimal: {mon.format_monomial(b)}")
    maximal = set(O.maximal_basis)
    for t in trailing:
        if t not in maximal:
            raise IdealValidationError(f"trailing monomial not maximal: {mon.format_monomial(t)}")
    up = upper_border(trailing, O.n)
    for b in leading:
        if b in up:
            raise IdealValidationError(
                f"overlap violation: {mon.format_monomial(b)} lies in the border of TM"
            )


def build_distinguished_ideal(
    O: OrderIdeal,
    leading: Sequence[Monomial],
    trailing: Sequence[Monomial],
    coefficients: Mapping | None = None,
    seed: int | None = None,
    source: CoefficientSource | str | None = None,
) -> DistinguishedIdeal:
    """Build a distinguished ideal.

    ``coefficients`` maps ``(t, b)`` monomial pairs to c_{tb}; missing pairs
    default to 0.  Without explicit coefficients they are drawn from a
    ``random.Random(seed)`` in canonical pair order (b-major).
    """
    validate_leading_trailing(O, leading, trailing)
    leading = mon.canonical_sorted(leading)
    trailing = mon.canonical_sorted(trailing)
    if isinstance(source, str):
        source = CoefficientSource.parse(source)
    table: dict[tuple[int, int], object] = {}
    if coefficients is not None:
        allowed = {(t, b) for b in leading for t in trailing}
        for (t, b), c in coefficients.items():
            key = (tuple(t), tuple(b))
            if key not in allowed:
                raise SchemaError(
                    f"coefficient key (t={mon.format_monomial(key[0])}, "
                    f"b={mon.format_monomial(key[1])}) is not a distinguished pair"
                )
        for b in leading:
            for t in trailing:
                c = coefficients.get((t, b), 0)
                table[(O.basis_index[t], O.border_index[b])] = c
    else:
        if source is None:
            source = CoefficientSource()
        rng = random.Random(seed)
        for b in leading:
            for t in trailing:
                table[(O.basis_index[t], O.border_index[b])] = source.draw(rng)
    return DistinguishedIdeal(O, leading, trailing, table, seed=seed, source=source)


def ideal_from_generators(O: OrderIdeal, leading, trailing, generators: Sequence[Polynomial]) -> DistinguishedIdeal:
    """Read off c_{ij} from generators written as b_j - sum c_ij t_i."""
    lm = {tuple(b) for b in leading}
    coeffs = {}
    for g in generators:
        heads = [m for m in g.terms if m in lm]
        if len(heads) != 1 or g.terms[heads[0]] != 1:
            raise SchemaError(f"generator {g} must contain exactly one LM term with coefficient 1")
        b = heads[0]
        for m, c in g.terms.items():
            if m != b:
                coeffs[(m, b)] = -c
    return build_distinguished_ideal(O, leading, trailing, coeffs)
