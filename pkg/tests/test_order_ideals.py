from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from borderlab import monomials as mon
from borderlab.order_ideals import (
    OrderIdeal,
    OrderIdealError,
    ShapeParams,
    lex_segment_complement,
    order_ideal_from_shape,
)
from borderlab.plausibility import shape_counts


def mons(text, n):
    return {mon.parse_monomial(s, n) for s in text.split(",")}


RUNNING = lex_segment_complement(3, (1, 3, 2, 0))


def test_small_lex_segment_complements():
    O = lex_segment_complement(3, (1, 3, 2, 1, 0))
    assert set(O.basis) == mons("1,x1,x2,x3,x2*x3,x3^2,x3^3", 3)
    O = lex_segment_complement(4, (1, 4, 3, 0))
    assert set(O.basis) == mons("1,x1,x2,x3,x4,x3^2,x3*x4,x4^2", 4)
    O = lex_segment_complement(5, (1, 5, 3, 4, 0))
    assert O.mu == 13
    assert O.is_lex_segment_complement()


def test_lex_segment_errors():
    with pytest.raises(OrderIdealError):
        lex_segment_complement(3, (2, 3, 0))
    with pytest.raises(OrderIdealError):
        lex_segment_complement(3, (1, 3, 2))
    with pytest.raises(OrderIdealError):
        lex_segment_complement(2, (1, 3, 0))
    # not divisor closed: the single degree-2 monomial x3^2 is fine, but
    # (1,1,2,0) asks for x2*x3 and x3^2 over only x3 in degree 1
    with pytest.raises(OrderIdealError, match="x2"):
        lex_segment_complement(3, (1, 1, 2, 0))


def test_shape_fixtures():
    O, lm, tm = order_ideal_from_shape(ShapeParams(5, 2, 2, 3))
    assert O == lex_segment_complement(5, (1, 5, 3, 4, 0))
    assert (len(lm), len(tm), O.mu) == (12, 4, 13)
    O, lm, tm = order_ideal_from_shape(ShapeParams(6, 3, 2, 3))
    assert O.mu == 23
    O, lm, tm = order_ideal_from_shape(ShapeParams(6, 3, 3, 4))
    assert (O.mu, O.nu, len(lm), len(tm)) == (53, 142, 46, 15)


@pytest.mark.parametrize("bad", ["5,5,2,3", "5,2,3,3", "5,0,2,3", "5,2,0,3", "5,2"])
def test_shape_validation(bad):
    with pytest.raises(ValueError):
        ShapeParams.parse(bad)


def test_neighbor_pairs_running_example():
    O = RUNNING
    idx = O.border_index
    x1x2 = mon.parse_monomial("x1*x2", 3)
    pairs = {(p.j, p.j2): p for p in O.neighbor_pairs}
    brute = set()
    for j, b in enumerate(O.border):
        for j2, b2 in enumerate(O.border):
            if j >= j2:
                continue
            for k in range(1, 4):
                if mon.times_var(b, k) == b2 or mon.times_var(b2, k) == b:
                    brute.add((j, j2))
                for l in range(1, 4):
                    if k != l and mon.times_var(b, k) == mon.times_var(b2, l):
                        brute.add((j, j2))
    assert set(pairs) == brute
    assert len(O.neighbor_pairs) == len(brute)
    p = pairs[(idx[mon.parse_monomial("x1^2", 3)], idx[x1x2])]
    assert p.kind == "acrossStreet"
    assert mon.times_var(O.border[p.j], p.k) == mon.times_var(O.border[p.j2], p.l)


def test_next_door_pairs():
    O = lex_segment_complement(3, (1, 3, 3, 0))
    kinds = {p.kind for p in O.neighbor_pairs}
    assert kinds == {"nextDoor", "acrossStreet"}
    for p in O.neighbor_pairs:
        if p.kind == "nextDoor":
            assert mon.times_var(O.border[p.j], p.k) == O.border[p.j2]


def test_targets():
    O = OrderIdeal(2, [(0, 0)])
    assert [mon.format_monomial(t) for t in O.targets] == ["x1", "x2", "x1^2", "x1*x2", "x2^2"]
    O, _, _ = order_ideal_from_shape(ShapeParams(5, 2, 2, 3))
    deg3 = [t for t in O.targets if sum(t) == 3]
    # every degree-3 monomial outside the four back-variable cubes
    assert len(deg3) == comb(7, 3) - comb(4, 3) == 31


def test_max_basis_and_min_border():
    O = RUNNING
    for t in O.maximal_basis:
        assert all(mon.times_var(t, a) not in O for a in range(1, 4))
    for b in O.minimal_border:
        assert b in O.border_index
        assert all(mon.div(b, mon.variable(3, a + 1)) in O for a in range(3) if b[a])


def test_json_roundtrip():
    O = RUNNING
    assert OrderIdeal.from_json(O.to_json()) == O
    bad = O.to_json()
    bad["border"] = bad["border"][:-1]
    with pytest.raises(OrderIdealError):
        OrderIdeal.from_json(bad)


@st.composite
def admissible_hilbert(draw):
    n = draw(st.integers(1, 4))
    h = [1]
    d = 1
    while d < 5:
        top = comb(n - 1 + d, d)
        hd = draw(st.integers(0, min(top, h[-1] * n)))
        h.append(hd)
        if hd == 0:
            break
        d += 1
    if h[-1] != 0:
        h.append(0)
    return n, h


@settings(max_examples=80, deadline=None)
@given(admissible_hilbert())
def test_divisor_closure_or_clean_error(data):
    n, h = data
    try:
        O = lex_segment_complement(n, h)
    except OrderIdealError:
        return
    ms = set(O.basis)
    for m in ms:
        for a in range(n):
            if m[a]:
                low = list(m)
                low[a] -= 1
                assert tuple(low) in ms
    assert list(O.hilbert_function[: len(h)]) == list(h)
    # complement of a lex segment: anything lex-larger of the same or higher
    # degree than a non-member is also a non-member
    top = O.max_degree + 1
    for d in range(top + 1):
        level = list(mon.monomials_of_degree(n, d))  # lex descending
        member = [m in ms for m in level]
        # members form a suffix of the lex-descending list
        assert member == sorted(member)


@pytest.mark.parametrize("n,kappa,r,s", [
    (n, k, r, s)
    for n in range(3, 9) for k in range(2, n) for r in range(2, 4) for s in range(r + 1, 6)
    if comb(n + s, s) < 2500
])
def test_shape_closed_forms(n, kappa, r, s):
    shape = ShapeParams(n, kappa, r, s)
    O, lm, tm = order_ideal_from_shape(shape)
    c = shape_counts(shape)
    assert (c.lam, c.tau, c.mu, c.nu) == (len(lm), len(tm), O.mu, O.nu)
    for d in range(s + 1):
        assert c.o_sizes[d] == len(O.basis_of_degree(d))
    for d, size in c.t_sizes.items():
        assert size == sum(1 for t in O.targets if sum(t) == d), d
    assert set(lm) <= set(O.minimal_border)
    assert set(tm) <= set(O.maximal_basis)


def test_running_example_next_door_witness():
    idx = RUNNING.border_index
    j = idx[mon.parse_monomial("x1*x2", 3)]
    j2 = idx[mon.parse_monomial("x1*x2*x3", 3)]
    (p,) = [p for p in RUNNING.neighbor_pairs if (p.j, p.j2) == (j, j2)]
    assert (p.kind, p.k) == ("nextDoor", 3)
    assert RUNNING.nu == 9
