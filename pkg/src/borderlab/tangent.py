"""Tangent-space relations and dimension at the point of a border basis.

A tangent vector assigns to g_j the element sum_i a_ij t_i of R/I.  It is
compatible with a syzygy (f_j) iff sum_j f_j * (sum_i a_ij t_i) reduces to 0,
which gives mu linear relations in the a_ij per syzygy, one per t_i.
Unknown a_ij lives in column j * mu + i.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from . import monomials as mon
from .ideals import BorderPrebasis
from .linalg import DEFAULT_PRIME, SparseMatrix, is_prime, rank_exact, rank_mod_p
from .polynomials import Polynomial
from .syzygies import LinearSyzygy, linear_syzygy_basis, neighbor_syzygies, predicted_syzygy_count

RATIONAL_LIMIT = 2000


@dataclass
class TangentSystem:
    mu: int
    nu: int
    matrix: SparseMatrix
    row_degrees: list[int]
    var_degrees: list[int]

    def relations_by_degree(self) -> dict[int, int]:
        return dict(sorted(Counter(self.row_degrees).items()))

    def is_tangent_vector(self, vec: Sequence) -> bool:
        return all(v == 0 for v in self.matrix.apply(vec))


@dataclass
class TangentReport:
    mu: int
    nu: int
    rank: int
    field: str
    dimension: int
    relations_by_degree: dict[int, int] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "mu": self.mu,
            "nu": self.nu,
            "rank": self.rank,
            "field": self.field,
            "dimension": self.dimension,
            "relations_by_degree": {str(d): c for d, c in self.relations_by_degree.items()},
        }


def _as_maps(ideal: BorderPrebasis, syz) -> dict[int, Polynomial]:
    if isinstance(syz, LinearSyzygy):
        return {j: syz.f(j) for j in range(ideal.O.nu) if syz.f(j)}
    return dict(syz)


def tangent_relations(ideal: BorderPrebasis, syzygies: Sequence | None = None,
                      check_basis: bool = True) -> TangentSystem:
    """One relation row per (syzygy, basis monomial t_i'')."""
    if check_basis and not ideal.is_border_basis():
        raise ValueError("tangent relations need a verified border basis")
    if syzygies is None:
        syzygies = linear_syzygy_basis(ideal, verify=False)
    O = ideal.O
    mu, nu = O.mu, O.nu
    basis = O.basis
    rows: list[dict] = []
    row_degrees: list[int] = []
    nf = ideal.nf_monomial
    for syz in syzygies:
        block = [dict() for _ in range(mu)]
        for j, f in _as_maps(ideal, syz).items():
            base = j * mu
            for m, c in f.terms.items():
                for i in range(mu):
                    col = base + i
                    for i2, v in nf(mon.mul(m, basis[i])).items():
                        r = block[i2]
                        nv = r.get(col, 0) + c * v
                        if nv:
                            r[col] = nv
                        else:
                            del r[col]
        for i2 in range(mu):
            rows.append(block[i2])
            row_degrees.append(sum(basis[i2]))
    matrix = SparseMatrix(len(rows), mu * nu, rows)
    var_degrees = [sum(basis[c % mu]) for c in range(mu * nu)]
    return TangentSystem(mu, nu, matrix, row_degrees, var_degrees)


def default_field(ideal: BorderPrebasis) -> str:
    return "Q" if ideal.O.mu * ideal.O.nu <= RATIONAL_LIMIT else f"GF({DEFAULT_PRIME})"


def parse_field(text: str | None) -> str | None:
    """Accept ``q``/``Q`` or ``gf:P``/``GF(P)``; return the canonical label."""
    if text is None:
        return None
    t = text.strip()
    if t.lower() == "q":
        return "Q"
    low = t.lower()
    if low.startswith("gf:"):
        p = int(low[3:])
    elif low.startswith("gf(") and low.endswith(")"):
        p = int(low[3:-1])
    else:
        raise ValueError(f"unknown field {text!r}; use q or gf:PRIME")
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    return f"GF({p})"


def field_prime(label: str) -> int | None:
    return None if label == "Q" else int(label[3:-1])


def tangent_space_dimension(ideal: BorderPrebasis, field: str | None = None,
                            system: TangentSystem | None = None,
                            use_neighbor_syzygies: bool = False) -> TangentReport:
    label = parse_field(field) if field else default_field(ideal)
    if system is None:
        syz = neighbor_syzygies(ideal) if use_neighbor_syzygies else None
        system = tangent_relations(ideal, syz)
    p = field_prime(label)
    r = rank_exact(system.matrix) if p is None else rank_mod_p(system.matrix, p)
    return TangentReport(system.mu, system.nu, r, label, system.mu * system.nu - r,
                         system.relations_by_degree())


def relation_counts_by_degree(ideal: BorderPrebasis, psi: int | None = None) -> dict[int, int]:
    """psi * |O_d| for each degree d."""
    if psi is None:
        psi = predicted_syzygy_count(ideal)
    h = ideal.O.hilbert_function
    return {d: psi * hd for d, hd in enumerate(h) if hd}
