import random

import pytest

from borderlab import monomials as mon
from borderlab.examples import EXAMPLES, running_data
from borderlab.ideals import BorderPrebasis, build_distinguished_ideal
from borderlab.linalg import SparseMatrix, rank_exact
from borderlab.order_ideals import OrderIdeal, ShapeParams, order_ideal_from_shape
from borderlab.syzygies import (
    LinearSyzygy,
    SigmaSystem,
    check_syzygy,
    linear_syzygy_basis,
    neighbor_syzygies,
    predicted_syzygy_count,
)


def point_ideal(n=2):
    O = OrderIdeal(n, [mon.one(n)])
    return BorderPrebasis(O, [{} for _ in O.border])


def test_sigma_on_single_point():
    I = point_ideal()
    sigma = SigmaSystem(I)
    dense = sigma.matrix.to_dense()
    tindex = I.O.target_index
    for j, b in enumerate(I.O.border):
        col = [row[j] for row in dense]
        assert col == [int(k == tindex[b]) for k in range(len(sigma.targets))]
    assert predicted_syzygy_count(I) == 1
    (syz,) = linear_syzygy_basis(I)
    # the Koszul relation x2 * x1 - x1 * x2
    f1, f2 = syz.f(0), syz.f(1)
    c = f1.terms[(0, 1)]
    assert f1.terms == {(0, 1): c} and f2.terms == {(1, 0): -c}
    assert check_syzygy(I, syz)


def test_running_example_sigma_shape():
    I = EXAMPLES["running-3-2-1"].build()
    sigma = SigmaSystem(I)
    assert sigma.matrix.ncols == 4 * 9
    targets = I.O.targets
    assert sigma.matrix.nrows == len(targets)
    # |T| by brute force over all products
    brute = set(I.O.border) | {mon.times_var(b, a) for b in I.O.border for a in (1, 2, 3)}
    assert len(brute) == len(targets)
    psi = 4 * 9 - len(brute)
    assert psi == predicted_syzygy_count(I) == len(linear_syzygy_basis(I))
    assert sigma.is_surjective()


def test_column_zero_block_is_unit():
    I = EXAMPLES["d-5-2-2-3"].build()
    sigma = SigmaSystem(I)
    cols = sigma.matrix.transpose().rows
    for j, b in enumerate(I.O.border):
        assert cols[j] == {I.O.target_index[b]: 1}
        assert sigma.column_label(j) == (0, j)


def test_monomial_ideal_syzygies_verify():
    O, lm, tm = running_data()
    I = build_distinguished_ideal(O, lm, tm, coefficients={})
    basis = linear_syzygy_basis(I, verify=True)
    assert len(basis) == predicted_syzygy_count(I)
    for s in basis:
        assert check_syzygy(I, s)


def test_check_syzygy_rejects_garbage():
    I = EXAMPLES["running-3-2-1"].build()
    vec = [0] * (4 * I.O.nu)
    vec[0] = 1
    assert not check_syzygy(I, LinearSyzygy.from_flat(3, I.O.nu, vec))


def _span_rank(vectors):
    return rank_exact(SparseMatrix.from_dense(vectors)) if vectors else 0


def _neighbor_flat(ideal, syz):
    n, nu = ideal.n, ideal.O.nu
    vec = [0] * ((n + 1) * nu)
    for j, f in syz.items():
        for m, c in f.terms.items():
            a = 0 if sum(m) == 0 else m.index(1) + 1
            vec[a * nu + j] += c
    return vec


@pytest.mark.parametrize("name", ["running-3-2-1", "iarrobino-emsalem", "d-5-2-2-3"])
def test_neighbor_syzygies_lie_in_linear_span(name):
    I = EXAMPLES[name].build()
    basis = [s.flat() for s in linear_syzygy_basis(I)]
    neigh = [_neighbor_flat(I, s) for s in neighbor_syzygies(I)]
    r = _span_rank(basis)
    assert _span_rank(basis + neigh) == r
    assert _span_rank(neigh) == r


@pytest.mark.parametrize("shape", [
    (n, k, r, s) for n in range(3, 9) for k in range(2, n) for r in (2, 3) for s in (r + 1, r + 2)
    if ShapeParams(n, k, r, s) and len(order_ideal_from_shape(ShapeParams(n, k, r, s))[0].border) < 200
])
def test_psi_formula_matches_kernel(shape):
    O, lm, tm = order_ideal_from_shape(ShapeParams(*shape))
    I = build_distinguished_ideal(O, lm, tm, seed=random.Random(str(shape)).randint(0, 999))
    sigma = SigmaSystem(I)
    assert sigma.is_surjective()
    assert sigma.matrix.ncols - sigma.rank == predicted_syzygy_count(I)
