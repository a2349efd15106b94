"""Linear syzygies of a border basis through the sigma map.

sigma sends the basis vector e_{alpha,j} of K^{(n+1)nu} to the projection of
x_alpha * g_j onto the span of the target monomials (x_0 = 1).  Because every
non-border term of x_alpha * g_j lies in O, the kernel of sigma is exactly
the space of syzygies with coefficients of degree at most one.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from . import monomials as mon
from .ideals import BorderPrebasis
from .linalg import SparseMatrix, kernel_basis_rational, rank_exact
from .polynomials import Polynomial, linear_combination


@dataclass(frozen=True)
class LinearSyzygy:
    """``coeffs[alpha][j]`` is d_{alpha,j}; f_j = d_{0,j} + sum_alpha d_{alpha,j} x_alpha."""

    n: int
    nu: int
    coeffs: tuple

    @classmethod
    def from_flat(cls, n: int, nu: int, vec) -> "LinearSyzygy":
        return cls(n, nu, tuple(tuple(vec[a * nu + j] for j in range(nu)) for a in range(n + 1)))

    def flat(self) -> list:
        return [c for row in self.coeffs for c in row]

    def f(self, j: int) -> Polynomial:
        terms = {mon.one(self.n): self.coeffs[0][j]}
        for a in range(1, self.n + 1):
            terms[mon.variable(self.n, a)] = self.coeffs[a][j]
        return Polynomial(self.n, terms)

    def to_json(self) -> list:
        return [[self.coeffs[a][j] for a in range(self.n + 1)] for j in range(self.nu)]


class SigmaSystem:
    """Column (alpha, j) sits at index alpha * nu + j, so the alpha = 0 unit
    columns come first and are picked as pivots."""

    def __init__(self, ideal: BorderPrebasis):
        O = ideal.O
        self.ideal = ideal
        self.n, self.nu = O.n, O.nu
        self.targets = O.targets
        tindex = O.target_index
        columns = []
        for a in range(self.n + 1):
            for j, b in enumerate(O.border):
                if a == 0:
                    columns.append({tindex[b]: 1})
                    continue
                col = {tindex[mon.times_var(b, a)]: 1}
                for i, c in ideal.tails[j].items():
                    m = mon.times_var(O.basis[i], a)
                    k = tindex.get(m)
                    if k is not None:
                        col[k] = col.get(k, 0) - c
                        if not col[k]:
                            del col[k]
                columns.append(col)
        self.matrix = SparseMatrix.from_columns(len(self.targets), columns)

    def column_label(self, col: int) -> tuple[int, int]:
        return divmod(col, self.nu)

    @cached_property
    def rank(self) -> int:
        return rank_exact(self.matrix)

    def is_surjective(self) -> bool:
        return self.rank == len(self.targets)


def build_sigma(ideal: BorderPrebasis) -> SigmaSystem:
    return SigmaSystem(ideal)


def predicted_syzygy_count(ideal: BorderPrebasis) -> int:
    O = ideal.O
    return (O.n + 1) * O.nu - len(O.targets)


def check_syzygy(ideal: BorderPrebasis, syz: LinearSyzygy) -> bool:
    total = linear_combination(ideal.n, ((1, syz.f(j) * ideal.generators[j]) for j in range(ideal.O.nu)))
    return total.is_zero()


def linear_syzygy_basis(ideal: BorderPrebasis, verify: bool = True) -> list[LinearSyzygy]:
    sigma = SigmaSystem(ideal)
    n, nu = sigma.n, sigma.nu
    out = [LinearSyzygy.from_flat(n, nu, v) for v in kernel_basis_rational(sigma.matrix)]
    if verify:
        for s in out:
            if not check_syzygy(ideal, s):
                raise ArithmeticError("kernel vector of sigma is not a syzygy")
    return out


def neighbor_syzygies(ideal: BorderPrebasis) -> list[dict[int, Polynomial]]:
    """Syzygies read off from the vanishing reduced S-polynomials.

    Returns sparse maps j -> f_j.  Only meaningful for border bases.
    """
    O = ideal.O
    n = O.n
    out = []
    for p in O.neighbor_pairs:
        f: dict[int, Polynomial] = {}

        def add(j, poly):
            f[j] = f.get(j, Polynomial.zero(n)) + poly

        add(p.j, Polynomial.monomial(mon.variable(n, p.k)))
        if p.kind == "acrossStreet":
            add(p.j2, Polynomial.monomial(mon.variable(n, p.l), -1))
        else:
            add(p.j2, Polynomial.constant(n, -1))
        s = ideal.s_polynomial(p)
        for m, c in s.terms.items():
            jj = O.border_index.get(m)
            if jj is not None:
                add(jj, Polynomial.constant(n, -c))
        out.append({j: g for j, g in f.items() if g})
    return out
