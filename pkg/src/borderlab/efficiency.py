"""Efficiency tests: is I generated by its leading generators alone?

The cheap test builds the linear map theta sending e_{k,j} to x_k g_j for the
leading generators g_j and checks that it is onto the span of
Q = border(LM) + border(TM); combined with a divisibility condition this is
sufficient.  The exact test computes a lex Groebner basis of the leading
generators and reduces the remaining border monomials.
"""

from __future__ import annotations

from dataclasses import dataclass
import heapq
from math import gcd
from typing import Sequence

from . import monomials as mon
from .ideals import DistinguishedIdeal
from .linalg import SparseMatrix, rank_exact
from .monomials import Monomial
from .order_ideals import upper_border
from .polynomials import Polynomial


class BudgetExceeded(RuntimeError):
    """Buchberger's algorithm hit its S-pair budget."""


@dataclass
class EfficiencyReport:
    q_set: list[Monomial]
    condition_i: bool
    theta_domain_dim: int
    theta_codomain_dim: int
    theta_rank: int
    exact_efficient: bool | None = None

    @property
    def theta_surjective(self) -> bool:
        return self.theta_rank == self.theta_codomain_dim

    @property
    def theta_efficient(self) -> bool:
        return self.condition_i and self.theta_surjective

    def to_json(self) -> dict:
        return {
            "Q": [mon.format_monomial(q) for q in self.q_set],
            "condition_i": self.condition_i,
            "theta_domain_dim": self.theta_domain_dim,
            "theta_codomain_dim": self.theta_codomain_dim,
            "theta_rank": self.theta_rank,
            "theta_surjective": self.theta_surjective,
            "theta_efficient": self.theta_efficient,
            "exact_efficient": self.exact_efficient,
        }


def q_set(ideal: DistinguishedIdeal) -> list[Monomial]:
    n = ideal.n
    return mon.canonical_sorted(upper_border(ideal.leading, n) | upper_border(ideal.trailing, n))


def theta_matrix(ideal: DistinguishedIdeal) -> tuple[SparseMatrix, list[Monomial]]:
    q = q_set(ideal)
    qi = {m: k for k, m in enumerate(q)}
    columns = []
    for g in ideal.leading_generators:
        for k in range(1, ideal.n + 1):
            col = {}
            for m, c in g.times_var(k).terms.items():
                row = qi.get(m)
                if row is None:
                    raise ArithmeticError(
                        f"theta: product monomial {mon.format_monomial(m)} is outside Q"
                    )
                col[row] = c
            columns.append(col)
    return SparseMatrix.from_columns(len(q), columns), q


def theta_efficiency(ideal: DistinguishedIdeal) -> EfficiencyReport:
    matrix, q = theta_matrix(ideal)
    lm = set(ideal.leading)
    cond = all(
        any(mon.divides(x, b) for x in q)
        for b in ideal.O.border
        if b not in lm
    )
    return EfficiencyReport(q, cond, matrix.ncols, matrix.nrows, rank_exact(matrix))


# lex Buchberger over Z with content removal (dict monomial -> int)

def _primitive(f: dict) -> dict:
    g = 0
    for v in f.values():
        g = gcd(g, v)
        if g == 1:
            break
    lead = f[max(f)]
    if lead < 0:
        g = -g
    if g != 1:
        f = {m: v // g for m, v in f.items()}
    return f


def _to_int_dict(p: Polynomial) -> dict:
    from fractions import Fraction

    den = 1
    for c in p.terms.values():
        if isinstance(c, Fraction):
            den = den * c.denominator // gcd(den, c.denominator)
    return {m: int(c * den) for m, c in p.terms.items()}


def _reduce(f: dict, basis: Sequence[tuple[Monomial, dict]], max_bits: int | None = None) -> dict:
    """Full reduction of f modulo basis (list of (leading monomial, poly))."""
    f = dict(f)
    done: dict = {}
    while f:
        m = max(f)
        c = f[m]
        if max_bits is not None and abs(c).bit_length() > max_bits:
            raise BudgetExceeded(f"coefficients grew past {max_bits} bits")
        for lm, g in basis:
            if all(x <= y for x, y in zip(lm, m)):
                q = mon.div(m, lm)
                a = g[lm]
                k = gcd(a, c)
                fa, fc = a // k, c // k
                # f <- fa * f - fc * q * g
                if fa != 1:
                    f = {t: fa * v for t, v in f.items()}
                    done = {t: fa * v for t, v in done.items()}
                for t, v in g.items():
                    tt = mon.mul(t, q)
                    nv = f.get(tt, 0) - fc * v
                    if nv:
                        f[tt] = nv
                    else:
                        f.pop(tt, None)
                break
        else:
            done[m] = c
            del f[m]
        if f or done:
            # keep coefficients small
            g_ = 0
            for v in f.values():
                g_ = gcd(g_, v)
            for v in done.values():
                g_ = gcd(g_, v)
            if g_ > 1:
                f = {t: v // g_ for t, v in f.items()}
                done = {t: v // g_ for t, v in done.items()}
    return done


def _spoly(f: dict, g: dict) -> dict:
    lf, lg = max(f), max(g)
    l = mon.lcm(lf, lg)
    qf, qg = mon.div(l, lf), mon.div(l, lg)
    a, b = f[lf], g[lg]
    k = gcd(a, b)
    a, b = a // k, b // k
    out: dict = {}
    for t, v in f.items():
        out[mon.mul(t, qf)] = b * v
    for t, v in g.items():
        tt = mon.mul(t, qg)
        nv = out.get(tt, 0) - a * v
        if nv:
            out[tt] = nv
        else:
            out.pop(tt, None)
    return out


DEFAULT_BUDGET = 200_000
DEFAULT_MAX_BITS = 4096


def _pair_key(l: Monomial, strategy: str):
    return (sum(l), l) if strategy == "degree" else (l,)


def lex_groebner_basis(polys: Sequence[Polynomial], budget: int = DEFAULT_BUDGET,
                       strategy: str = "degree",
                       max_bits: int | None = DEFAULT_MAX_BITS) -> list[Polynomial]:
    """Reduced lex Groebner basis with primitive integer coefficients.

    Leading coefficients are positive; the output is sorted by leading
    monomial, lex-greatest first.  ``strategy`` picks the next S-pair by the
    smallest lcm, compared by degree then lex (``"degree"``) or by lex alone
    (``"lex"``).  Raises :class:`BudgetExceeded` after ``budget`` S-pairs or
    once a coefficient passes ``max_bits`` bits (``None`` lifts that cap).
    """
    polys = [p for p in polys if p]
    if not polys:
        return []
    n = polys[0].n
    G: list[dict] = [_primitive(_to_int_dict(p)) for p in polys]
    lead: list[Monomial] = [max(g) for g in G]
    heap: list = []
    live: set = set()

    def add_pairs(k):
        for a in range(k):
            l = mon.lcm(lead[a], lead[k])
            heapq.heappush(heap, (_pair_key(l, strategy), a, k, l))
            live.add((a, k))

    for k in range(len(G)):
        add_pairs(k)
    processed = 0
    while heap:
        _, i, j, l = heapq.heappop(heap)
        live.discard((i, j))
        if mon.mul(lead[i], lead[j]) == l:
            continue
        if _chain_skip(lead, live, i, j, l):
            continue
        processed += 1
        if processed > budget:
            raise BudgetExceeded(f"more than {budget} S-pairs")
        r = _reduce(_spoly(G[i], G[j]), list(zip(lead, G)), max_bits)
        if r:
            r = _primitive(r)
            G.append(r)
            lead.append(max(r))
            add_pairs(len(G) - 1)
    return [Polynomial(n, g) for g in _interreduce(G)]


def _chain_skip(lead, live, i, j, l) -> bool:
    for k in range(len(lead)):
        if k in (i, j):
            continue
        if (min(i, k), max(i, k)) in live or (min(j, k), max(j, k)) in live:
            continue
        if mon.divides(lead[k], l):
            return True
    return False


def _interreduce(G: list[dict]) -> list[dict]:
    lms = [max(g) for g in G]
    keep = []
    for a, g in enumerate(G):
        la = lms[a]
        redundant = False
        for b in range(len(G)):
            if b == a:
                continue
            lb = lms[b]
            if mon.divides(lb, la) and (lb != la or b < a):
                redundant = True
                break
        if not redundant:
            keep.append(g)
    out = []
    for a, g in enumerate(keep):
        others = [(max(h), h) for b, h in enumerate(keep) if b != a]
        out.append(_primitive(_reduce(g, others)))
    out.sort(key=max, reverse=True)
    return out


def reduce_modulo(f: Polynomial, basis: Sequence[Polynomial]) -> Polynomial:
    """Remainder of f modulo a Groebner basis, up to a nonzero scalar."""
    gb = [(max(d), d) for d in (_to_int_dict(g) for g in basis)]
    r = _reduce(_to_int_dict(f), gb)
    return Polynomial(f.n, _primitive(r) if r else {})


def exact_efficiency(ideal: DistinguishedIdeal, budget: int = DEFAULT_BUDGET,
                     max_bits: int | None = DEFAULT_MAX_BITS) -> bool:
    gb = lex_groebner_basis(ideal.leading_generators, budget=budget, max_bits=max_bits)
    basis = [(max(d), d) for d in (_to_int_dict(g) for g in gb)]
    lm = set(ideal.leading)
    for b in ideal.O.border:
        if b in lm:
            continue
        if _reduce({b: 1}, basis):
            return False
    return True


def efficiency_report(ideal: DistinguishedIdeal, exact: bool = False,
                      budget: int = DEFAULT_BUDGET,
                      max_bits: int | None = DEFAULT_MAX_BITS) -> EfficiencyReport:
    rep = theta_efficiency(ideal)
    if exact:
        rep.exact_efficient = exact_efficiency(ideal, budget=budget, max_bits=max_bits)
    return rep
