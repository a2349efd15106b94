"""Explicit tangent vectors at distinguished ideals and the genericity verdict.

Two families of tangent vectors are produced:

* S vectors, one per distinguished pair (i, j): the coordinate vector with a
  single entry -1 at a_ij (moving the coefficient c_ij).
* Z vectors, one per (alpha, m) with m in Delta_alpha: the derivative of a
  coordinate change x_alpha -> x_alpha + eps * m, i.e.
  g_j -> NF(dg_j/dx_alpha * m).

If S and Z are independent and their number L equals the tangent-space
dimension, the point is smooth on a component of dimension L.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import monomials as mon
from .ideals import DistinguishedIdeal
from .linalg import SparseMatrix, rank_exact
from .monomials import Monomial
from .order_ideals import OrderIdeal
from .tangent import TangentReport, TangentSystem, field_prime, tangent_space_dimension

PRIME = "prime"
DOUBLE_PRIME = "double-prime"


class UnsupportedInputError(ValueError):
    pass


@dataclass
class DeltaEntry:
    alpha: int
    b: Monomial
    t: Monomial
    e: int
    leading: bool
    monomials: list[Monomial]
    extension: list[Monomial] = field(default_factory=list)

    @property
    def all(self) -> list[Monomial]:
        return self.monomials + self.extension

    def to_json(self) -> dict:
        return {
            "alpha": self.alpha,
            "b": mon.format_monomial(self.b),
            "t": mon.format_monomial(self.t),
            "e": self.e,
            "b_in_LM": self.leading,
            "delta": [mon.format_monomial(m) for m in self.all],
            "extension": [mon.format_monomial(m) for m in self.extension],
        }


@dataclass
class DeltaFamily:
    variant: str
    entries: list[DeltaEntry]

    def sizes(self) -> list[int]:
        return [len(e.all) for e in self.entries]

    def total(self) -> int:
        return sum(self.sizes())

    def to_json(self) -> dict:
        return {"variant": self.variant, "rows": [e.to_json() for e in self.entries]}


def _witnesses(O: OrderIdeal, alpha: int) -> tuple[Monomial, Monomial, int]:
    """(b_{j_alpha}, t_{i_alpha}, e'_alpha) for one variable."""
    n = O.n
    candidates = [b for b in O.border if b[alpha - 1] > 0]
    b = min(candidates)
    t = mon.div(b, mon.variable(n, alpha))
    e = t[n - 1]
    if t != tuple([0] * (n - 1) + [e]):
        raise UnsupportedInputError(
            f"lex-minimal border monomial {mon.format_monomial(b)} for x{alpha} "
            "is not x_alpha times a power of the last variable"
        )
    return b, t, e


def _delta_prime(O: OrderIdeal, alpha: int, t: Monomial, leading: bool, trailing: set) -> list[Monomial]:
    n = O.n
    if alpha == n:
        return [mon.one(n)]
    out = []
    for u in O.basis:
        if not mon.divides(t, u):
            continue
        m = mon.div(u, t)
        if any(m[a] for a in range(alpha)):
            continue
        if leading and u in trailing:
            continue
        out.append(m)
    return mon.canonical_sorted(out)


def delta_sets(ideal_or_data, variant: str = PRIME) -> DeltaFamily:
    """Delta'_alpha (variant ``prime``) or Delta''_alpha (``double-prime``)."""
    if isinstance(ideal_or_data, DistinguishedIdeal):
        O, lm, tm = ideal_or_data.O, ideal_or_data.leading, ideal_or_data.trailing
    else:
        O, lm, tm = ideal_or_data
    if variant not in (PRIME, DOUBLE_PRIME):
        raise ValueError(f"unknown variant {variant!r}")
    if not O.is_lex_segment_complement():
        raise UnsupportedInputError("Delta sets need a lex-segment complement order ideal")
    if O.mu == 1:
        raise UnsupportedInputError("Delta sets need O != {1}")
    lm_set = {tuple(b) for b in lm}
    tm_set = {tuple(t) for t in tm}
    entries = []
    for a in range(1, O.n + 1):
        b, t, e = _witnesses(O, a)
        leading = b in lm_set
        base = _delta_prime(O, a, t, leading, tm_set)
        ext = []
        if variant == DOUBLE_PRIME and not leading:
            have = set(base)
            for lb in lm:
                if mon.divides(t, lb):
                    m = mon.div(lb, t)
                    if m[a - 1] == 0 and m not in have:
                        ext.append(m)
                        have.add(m)
            ext = mon.canonical_sorted(ext)
        entries.append(DeltaEntry(a, b, t, e, leading, base, ext))
    return DeltaFamily(variant, entries)


def delta_prime_sets(ideal_or_data) -> DeltaFamily:
    return delta_sets(ideal_or_data, PRIME)


def delta_double_prime_sets(ideal_or_data) -> DeltaFamily:
    return delta_sets(ideal_or_data, DOUBLE_PRIME)


@dataclass
class TangentVectorSet:
    """Sparse vectors in the a_ij coordinates (index j * mu + i)."""

    size: int
    vectors: list[dict[int, object]]
    labels: list[tuple]

    def __len__(self):
        return len(self.vectors)

    def __add__(self, other: "TangentVectorSet") -> "TangentVectorSet":
        return TangentVectorSet(self.size, self.vectors + other.vectors, self.labels + other.labels)

    def dense(self, k: int) -> list:
        out = [0] * self.size
        for c, v in self.vectors[k].items():
            out[c] = v
        return out


def s_tangent_vectors(ideal: DistinguishedIdeal) -> TangentVectorSet:
    mu = ideal.O.mu
    vecs, labels = [], []
    for i, j in ideal.distinguished_pairs:
        vecs.append({j * mu + i: -1})
        labels.append(("S", i, j))
    return TangentVectorSet(mu * ideal.O.nu, vecs, labels)


def z_tangent_vectors(ideal: DistinguishedIdeal, family: DeltaFamily) -> TangentVectorSet:
    mu = ideal.O.mu
    vecs, labels = [], []
    derivs = {}
    for entry in family.entries:
        a = entry.alpha
        if a not in derivs:
            derivs[a] = [g.derivative(a) for g in ideal.generators]
        for m in entry.all:
            vec = {}
            for j, dg in enumerate(derivs[a]):
                if not dg:
                    continue
                block = ideal.nf_dict(dg.mul_monomial(m).terms)
                for i, c in block.items():
                    vec[j * mu + i] = c
            vecs.append(vec)
            labels.append(("Z", a, mon.format_monomial(m)))
    return TangentVectorSet(mu * ideal.O.nu, vecs, labels)


def independence_check(vs: TangentVectorSet) -> bool:
    if not vs.vectors:
        return True
    m = SparseMatrix(len(vs.vectors), vs.size, vs.vectors)
    return rank_exact(m) == len(vs.vectors)


GENERIC = "generic"
NOT_GENERIC = "notShapeGeneric"
INCONCLUSIVE = "inconclusive"


@dataclass
class GenericityReport:
    lower_bound: int
    s_count: int
    z_count: int
    independence_verified: bool
    tangent: TangentReport
    verdict: str
    principal_component_dim: int
    delta: DeltaFamily
    notes: list[str] = field(default_factory=list)

    @property
    def tangent_dimension(self) -> int:
        return self.tangent.dimension

    @property
    def elementary_component_dim(self) -> int | None:
        return self.lower_bound if self.verdict == GENERIC else None

    def to_json(self) -> dict:
        return {
            "L": self.lower_bound,
            "S": self.s_count,
            "Z": self.z_count,
            "independence_verified": self.independence_verified,
            "tangent_dimension": self.tangent.dimension,
            "field": self.tangent.field,
            "verdict": self.verdict,
            "elementary_component_dim": self.elementary_component_dim,
            "principal_component_dim": self.principal_component_dim,
            "delta": self.delta.to_json(),
            "notes": list(self.notes),
        }


def genericity_verdict(
    ideal: DistinguishedIdeal,
    variant: str = PRIME,
    field: str | None = None,
    tangent: TangentReport | None = None,
    system: TangentSystem | None = None,
) -> GenericityReport:
    family = delta_sets(ideal, variant)
    s_vecs = s_tangent_vectors(ideal)
    z_vecs = z_tangent_vectors(ideal, family)
    both = s_vecs + z_vecs
    independent = independence_check(both)
    if tangent is None:
        tangent = tangent_space_dimension(ideal, field, system=system)
    L = len(both)
    dim = tangent.dimension
    notes = []
    exact = field_prime(tangent.field) is None
    if not independent:
        verdict = INCONCLUSIVE
        notes.append("S and Z vectors are linearly dependent, so L is not a certified lower bound")
    elif dim == L:
        verdict = GENERIC
        if not exact:
            notes.append("modular rank pins the rational dimension to L")
    elif exact:
        verdict = NOT_GENERIC
    else:
        verdict = INCONCLUSIVE
        notes.append("modular dimension exceeds L; recompute over Q to decide")
    if ideal.O.mu < 8 and verdict != GENERIC:
        notes.append(f"mu={ideal.O.mu} < 8: no nontrivial elementary components exist for such small length")
    return GenericityReport(
        lower_bound=L,
        s_count=len(s_vecs),
        z_count=len(z_vecs),
        independence_verified=independent,
        tangent=tangent,
        verdict=verdict,
        principal_component_dim=ideal.n * ideal.O.mu,
        delta=family,
        notes=notes,
    )
