"""One block of tests per acceptance criterion; see the summary section."""

import random
import time

import pytest

from borderlab.deformations import (
    DOUBLE_PRIME,
    GENERIC,
    NOT_GENERIC,
    PRIME,
    delta_sets,
    genericity_verdict,
    independence_check,
    s_tangent_vectors,
    z_tangent_vectors,
)
from borderlab.efficiency import efficiency_report, lex_groebner_basis
from borderlab.examples import EXAMPLES, RUNNING_GROEBNER, iarrobino_emsalem_data
from borderlab.ideals import build_distinguished_ideal
from borderlab.linalg import SparseMatrix, rank_exact
from borderlab.order_ideals import ShapeParams, order_ideal_from_shape
from borderlab.plausibility import a_bound, genericity_is_plausible
from borderlab.polynomials import Polynomial
from borderlab.syzygies import SigmaSystem, linear_syzygy_basis, neighbor_syzygies, predicted_syzygy_count
from borderlab.tangent import tangent_relations, tangent_space_dimension

SEEDS = range(1, 6)


def shape_ideal(shape, seed):
    O, lm, tm = order_ideal_from_shape(ShapeParams(*shape))
    return build_distinguished_ideal(O, lm, tm, seed=seed)


def first_general_seed(build, check):
    """Try seeds 1..5 and return (seed, result) for the first passing one."""
    tried = []
    for seed in SEEDS:
        result = check(build(seed))
        tried.append((seed, result))
        if result[0]:
            return seed, result
    pytest.fail(f"no general seed among {list(SEEDS)}: {tried}")


@pytest.mark.criterion(1)
def test_twelve_generator_fixture():
    start = time.perf_counter()
    I = EXAMPLES["d-5-2-2-3"].build()
    rep = genericity_verdict(I, PRIME, field="q")
    assert rep.tangent.field == "Q"
    assert rep.tangent_dimension == 59
    assert (rep.s_count, rep.z_count, rep.lower_bound) == (48, 11, 59)
    assert rep.verdict == GENERIC
    assert rep.principal_component_dim == 65
    assert time.perf_counter() - start < 30


@pytest.mark.criterion(2)
def test_efficient_running_fixture():
    start = time.perf_counter()
    I = EXAMPLES["running-3-2-1"].build()
    assert tangent_space_dimension(I, "q").dimension == 18
    gb = lex_groebner_basis(I.leading_generators)
    assert [str(g) for g in gb] == RUNNING_GROEBNER
    eff = efficiency_report(I, exact=True)
    assert eff.exact_efficient is True
    assert eff.theta_efficient
    assert (eff.theta_domain_dim, eff.theta_codomain_dim) == (12, 10)
    assert time.perf_counter() - start < 5


@pytest.mark.criterion(3)
def test_iarrobino_emsalem():
    start = time.perf_counter()

    def build(seed):
        O, lm, tm = iarrobino_emsalem_data()
        return build_distinguished_ideal(O, lm, tm, seed=seed)

    def check(I):
        rep = genericity_verdict(I, PRIME, field="q")
        ok = rep.tangent_dimension == 25 and rep.lower_bound == 25 and rep.verdict == GENERIC
        return ok, rep.tangent_dimension, rep.s_count, rep.z_count

    hits = [seed for seed in SEEDS if check(build(seed))[0]]
    assert len(SEEDS) >= 3 and hits
    _, (_, dim, s, z) = first_general_seed(build, check)
    assert (dim, s, z) == (25, 21, 4)
    assert time.perf_counter() - start < 10


@pytest.mark.criterion(4)
def test_shape_5_2_2_5():
    start = time.perf_counter()

    def check(I):
        rep = genericity_verdict(I, PRIME)
        return rep.tangent_dimension == 104 and rep.verdict == GENERIC, rep.tangent_dimension

    first_general_seed(lambda seed: shape_ideal((5, 2, 2, 5), seed), check)
    assert time.perf_counter() - start < 120


@pytest.mark.criterion(4)
def test_shape_6_3_2_3():
    start = time.perf_counter()
    I = EXAMPLES["d-6-3-2-3"].build()
    rep = genericity_verdict(I, PRIME)
    assert (rep.tangent_dimension, rep.lower_bound, rep.verdict) == (165, 165, GENERIC)
    assert rep.principal_component_dim == 138
    eff = efficiency_report(I, exact=True)
    assert (eff.theta_domain_dim, eff.theta_codomain_dim) == (90, 91)
    assert not eff.theta_efficient
    assert eff.exact_efficient is True
    assert time.perf_counter() - start < 120


@pytest.mark.criterion(5)
def test_shape_5_2_2_6():
    start = time.perf_counter()

    def check(I):
        rep = genericity_verdict(I, PRIME, field="q")
        ok = (rep.tangent_dimension, rep.lower_bound, rep.verdict) == (139, 131, NOT_GENERIC)
        return ok, rep.tangent_dimension, rep.lower_bound

    first_general_seed(lambda seed: shape_ideal((5, 2, 2, 6), seed), check)
    assert time.perf_counter() - start < 120


@pytest.mark.extended
@pytest.mark.criterion(6)
def test_shape_6_3_3_4():
    I = EXAMPLES["d-6-3-3-4"].build()
    assert I.O.mu * I.O.nu == 7526
    rep = genericity_verdict(I, PRIME, field="gf:32713")
    assert rep.tangent.rank == 6821
    assert (rep.tangent_dimension, rep.lower_bound, rep.verdict) == (705, 705, GENERIC)


@pytest.mark.extended
@pytest.mark.criterion(7)
@pytest.mark.parametrize("case,variant,dim", [
    ("first", PRIME, 255), ("second", DOUBLE_PRIME, 222), ("third", DOUBLE_PRIME, 211),
])
def test_six_variable_fixtures(case, variant, dim):
    ex = EXAMPLES[f"h-1-6-10-10-5-{case}"]
    assert ex.variant == variant
    I = ex.build()
    rep = genericity_verdict(I, variant)
    assert (rep.tangent_dimension, rep.lower_bound, rep.verdict) == (dim, dim, GENERIC)
    if case == "third":
        eff = efficiency_report(I, exact=True)
        assert not eff.theta_efficient
        assert eff.exact_efficient is True


@pytest.mark.criterion(8)
def test_plausibility_table():
    start = time.perf_counter()
    expected = {
        (5, 2, 2, 3): True,
        (17, 3, 3, 4): True, (18, 3, 3, 4): False,
        (25, 3, 3, 5): True, (26, 3, 3, 5): False,
        (15, 4, 2, 6): False, (16, 4, 2, 6): True,
        (50, 6, 4, 6): False, (50, 7, 4, 6): True,
        (50, 22, 4, 6): True, (50, 23, 4, 6): False,
        (50, 5, 4, 8): False, (50, 6, 4, 8): True, (50, 14, 4, 8): True, (50, 15, 4, 8): False,
        (6, 3, 2, 3): False, (10, 3, 10, 11): False,
    }
    got = {sh: genericity_is_plausible(ShapeParams(*sh)).plausible for sh in expected}
    assert got == expected
    assert time.perf_counter() - start < 10


# criterion 9: randomized property suites, all seed-pinned

def _random_shapes(count, seed=2024, max_cells=1500):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        n = rng.randint(3, 7)
        k = rng.randint(2, n - 1)
        r = rng.randint(2, 3)
        s = rng.randint(r + 1, r + 2)
        O, _, _ = order_ideal_from_shape(ShapeParams(n, k, r, s))
        if O.mu * O.nu <= max_cells:
            out.append(((n, k, r, s), rng.randint(0, 10**6)))
    return out


SHAPES = _random_shapes(50)


@pytest.fixture(scope="module")
def shape_ideals():
    return [(shape, shape_ideal(shape, seed)) for shape, seed in SHAPES]


@pytest.mark.criterion(9)
def test_sigma_surjective_and_psi(shape_ideals):
    for shape, I in shape_ideals:
        sigma = SigmaSystem(I)
        assert sigma.rank == len(I.O.targets), shape
        assert sigma.matrix.ncols - sigma.rank == predicted_syzygy_count(I), shape


@pytest.mark.criterion(9)
def test_reduced_s_polynomials_vanish(shape_ideals):
    for shape, I in shape_ideals:
        for p in I.O.neighbor_pairs:
            assert I.reduced_s_polynomial(p.j, p.j2).is_zero(), (shape, p)


@pytest.mark.criterion(9)
def test_s_and_z_prime_independent_and_tangent(shape_ideals):
    for shape, I in shape_ideals:
        family = delta_sets(I, PRIME)
        vs = s_tangent_vectors(I) + z_tangent_vectors(I, family)
        assert independence_check(vs), shape
        system = tangent_relations(I, check_basis=False)
        for k in range(len(vs)):
            assert system.is_tangent_vector(vs.dense(k)), (shape, vs.labels[k])


@pytest.mark.criterion(9)
def test_normal_form_idempotent_and_linear(shape_ideals):
    rng = random.Random(9)
    for trial in range(200):
        shape, I = shape_ideals[trial % len(shape_ideals)]
        n = I.n

        def rand_poly():
            return Polynomial(n, {
                tuple(rng.randint(0, 3) for _ in range(n)): rng.randint(-4, 4)
                for _ in range(rng.randint(1, 5))
            })

        f, g = rand_poly(), rand_poly()
        a, b = rng.randint(-3, 3), rng.randint(-3, 3)
        nf_f = I.normal_form(f)
        assert I.normal_form(nf_f) == nf_f
        assert all(m in I.O for m in nf_f.terms)
        assert I.normal_form(f * a + g * b) == nf_f * a + I.normal_form(g) * b


def _flat(I, syz):
    nu = I.O.nu
    vec = [0] * ((I.n + 1) * nu)
    for j, f in syz.items():
        for m, c in f.terms.items():
            a = 0 if sum(m) == 0 else m.index(1) + 1
            vec[a * nu + j] += c
    return vec


@pytest.mark.criterion(9)
def test_neighbor_syzygies_span(shape_ideals):
    checked = 0
    for shape, I in shape_ideals:
        if I.O.mu * I.O.nu > 600:
            continue
        basis = [s.flat() for s in linear_syzygy_basis(I, verify=False)]
        neigh = [_flat(I, s) for s in neighbor_syzygies(I)]
        assert rank_exact(SparseMatrix.from_dense(neigh)) == len(basis), shape
        checked += 1
    assert checked >= 5


@pytest.mark.criterion(9)
@pytest.mark.parametrize("shape", [
    (3, 2, 2, 3), (4, 2, 2, 3), (4, 3, 2, 3), (5, 2, 2, 3), (4, 2, 2, 4), (5, 3, 2, 3),
    (6, 3, 2, 3), (5, 2, 3, 4), (6, 2, 2, 3), (7, 3, 2, 3), (4, 3, 3, 4), (5, 4, 2, 3),
])
def test_a_count_bound(shape):
    sh = ShapeParams(*shape)
    I = shape_ideal(shape, 1)
    system = tangent_relations(I, check_basis=False)
    appearing: dict[int, set] = {}
    for row, d in zip(system.matrix.rows, system.row_degrees):
        appearing.setdefault(d, set()).update(row)
    for d in range(sh.s + 1):
        assert len(appearing.get(d, ())) <= a_bound(sh, d, I.O.nu, I.lam), (shape, d)
