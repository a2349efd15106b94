"""The full analysis pipeline behind ``borderlab analyze``."""

from __future__ import annotations

from dataclasses import dataclass

from . import monomials as mon
from .deformations import GENERIC, INCONCLUSIVE, NOT_GENERIC, PRIME, genericity_verdict
from .efficiency import BudgetExceeded, DEFAULT_BUDGET, efficiency_report
from .ideals import DistinguishedIdeal
from .syzygies import SigmaSystem, linear_syzygy_basis
from .tangent import tangent_relations, tangent_space_dimension

EXIT_GENERIC = 0
EXIT_ERROR = 1
EXIT_NOT_GENERIC = 2
EXIT_INCONCLUSIVE = 3


@dataclass
class Analysis:
    report: dict
    verdict: str
    budget_exceeded: bool = False

    @property
    def exit_code(self) -> int:
        if self.budget_exceeded or self.verdict == INCONCLUSIVE:
            return EXIT_INCONCLUSIVE
        return EXIT_GENERIC if self.verdict == GENERIC else EXIT_NOT_GENERIC


def ideal_summary(ideal: DistinguishedIdeal) -> dict:
    O = ideal.O
    return {
        "n": O.n,
        "mu": O.mu,
        "nu": O.nu,
        "lambda": ideal.lam,
        "tau": ideal.tau,
        "hilbert": list(O.hilbert_function),
        "leading": [mon.format_monomial(b) for b in ideal.leading],
        "trailing": [mon.format_monomial(t) for t in ideal.trailing],
        "distinguished_pairs": len(ideal.distinguished_pairs),
        "seed": ideal.seed,
        "rng": None if ideal.source is None else str(ideal.source),
    }


def analyze(
    ideal: DistinguishedIdeal,
    variant: str = PRIME,
    field: str | None = None,
    check_efficiency: bool = False,
    check_exact_efficiency: bool = False,
    dump_matrix: str | None = None,
    budget: int = DEFAULT_BUDGET,
    source: dict | None = None,
) -> Analysis:
    ok, bad = ideal.verify()
    if not ok:
        raise ValueError(
            f"not a border basis: S-polynomial of b{bad.j + 1}, b{bad.j2 + 1} does not vanish"
        )
    sigma = SigmaSystem(ideal)
    if not sigma.is_surjective():
        raise ArithmeticError("sigma is not surjective")
    syz = linear_syzygy_basis(ideal, verify=False)
    system = tangent_relations(ideal, syz, check_basis=False)
    if dump_matrix:
        system.matrix.dump(dump_matrix)
    tangent = tangent_space_dimension(ideal, field, system=system)
    gen = genericity_verdict(ideal, variant, tangent=tangent)
    report = {
        "source": source or {},
        "ideal": ideal_summary(ideal),
        "border_basis_verified": True,
        "targets": len(ideal.O.targets),
        "psi": len(syz),
        "sigma_rank": sigma.rank,
        "tangent": tangent.to_json(),
        "genericity": gen.to_json(),
        "origin_support": {f"x{a}": e for a, e in ideal.origin_support_certificate().items()},
    }
    budget_hit = False
    if check_efficiency or check_exact_efficiency:
        try:
            eff = efficiency_report(ideal, exact=check_exact_efficiency, budget=budget)
            report["efficiency"] = eff.to_json()
        except BudgetExceeded as exc:
            eff = efficiency_report(ideal, exact=False)
            report["efficiency"] = eff.to_json()
            report["efficiency"]["inconclusive"] = f"budget exceeded: {exc}"
            budget_hit = True
    return Analysis(report, gen.verdict, budget_hit)


__all__ = [
    "Analysis", "analyze", "ideal_summary",
    "EXIT_GENERIC", "EXIT_ERROR", "EXIT_NOT_GENERIC", "EXIT_INCONCLUSIVE",
    "GENERIC", "NOT_GENERIC", "INCONCLUSIVE",
]
