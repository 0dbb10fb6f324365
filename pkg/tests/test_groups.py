import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tapgroups import words as W
from tapgroups.groups import (
    INFINITY,
    BoundedIntVec,
    FinPerm,
    FreeVecElement,
    HSymbolic,
    PadicInt,
    PreconditionError,
    basis_a,
    bvec_mul,
    cycle,
    delta_stability_check,
    g,
    g_z_coord,
    h_bound_certificates,
    h_eval,
    make_model,
    make_sequence,
    padic_basis_sequence,
    padic_in_Un,
    perm_inv,
    perm_mul,
    pi_cycle_check,
    pi_n,
    short_core_power_bounds,
    sup_norm,
    t_of,
    transposition_b,
    v_p,
    y,
)
from tapgroups.groups.freevec import eta_certificate, h_window, mu_certificate
from tapgroups.seminorms import delta
from tapgroups.weights import Multiplier

from conftest import ref_mul

ints = st.integers(-5, 5)
zs = st.builds(Multiplier, st.lists(ints, max_size=8).map(tuple), st.sampled_from([0, 0, 0, 1, -2]))
hs = st.lists(st.tuples(zs, st.sampled_from([1, -1])), max_size=4).map(lambda f: HSymbolic(tuple(f)))


def ref_g_coord(z, i):
    return W.Word(ref_mul(*[((n, z(n)),) for n in range(i + 1) if z(n)]))


class TestFreeVec:
    def test_g_z_coord(self):
        assert g_z_coord(Multiplier((3, -1, 2)), 2) == W.parse_word("0^3.1^-1.2^2")
        assert g_z_coord(y(2), 1) == W.E
        assert g_z_coord(y(2), 5) == W.parse_word("2")
        assert g_z_coord(Multiplier(), 9) == W.E

    def test_h_eval(self):
        z = Multiplier((2, 0, -1), 3)
        assert h_eval(g(y(3)), 10) == W.parse_word("3")
        assert h_eval(HSymbolic(((z, 1), (z, -1))), 6) == W.E
        assert h_eval(HSymbolic(((y(1), 1), (y(0), 1))), 5) == W.parse_word("1.0")

    def test_certificates(self):
        z = Multiplier((2, -7, 1), 0)
        c = h_bound_certificates(g(z), 20, [0, 1, 2])
        assert c.eta_bound == 2
        assert c.mu_bounds == {0: 2, 1: 7, 2: 1}
        assert c.consistent
        h = HSymbolic(((z, 1), (y(2), -1), (z, 1)))
        assert h_bound_certificates(h, 10, []).eta_bound == 6

    def test_t_of(self):
        assert t_of(g(y(4)), 50) == 4
        assert t_of(HSymbolic(), 50) is None
        h = HSymbolic(((Multiplier((0, 2, 0, 5)), 1), (Multiplier((0, 0, 0, 5)), -1)))
        assert h_eval(h, 0) == W.E and h_eval(h, 1) == W.parse_word("1^2")
        assert t_of(h, 50) == 1
        assert t_of(FreeVecElement.from_h(g(y(3)), 10), 10) == 3

    def test_delta_stability(self):
        z = Multiplier((4, -1, 6), 2)
        for i in range(12):
            assert delta(2, h_eval(g(z), i)) == (6 if i >= 2 else 0)
        assert delta_stability_check(g(z), 2, 12)
        assert delta_stability_check(HSymbolic(), 3, 12)

    def test_short_core(self):
        r = short_core_power_bounds(g(y(3)), 7, 5)
        assert r.power == W.parse_word("3^7") and r.lead_mu == 7 and r.passed
        d = Multiplier((0, 1, 1), 0)
        a = HSymbolic(((d, 1), (y(4), 1), (d, -1)))
        assert h_eval(a, 6) == W.parse_word("1.2.4.2^-1.1^-1")
        r = short_core_power_bounds(a, 5, 6)
        assert r.power == W.parse_word("1.2.4^5.2^-1.1^-1") and r.passed
        with pytest.raises(PreconditionError):
            short_core_power_bounds(g(Multiplier((1, 1))), 2, 3)

    @given(hs, st.integers(0, 14))
    def test_h_eval_matches_reference(self, h, i):
        out = ()
        for z, e in h.factors:
            c = ref_g_coord(z, i).monoms
            out = ref_mul(out, c if e == 1 else tuple((x, -p) for x, p in reversed(c)))
        assert h_eval(h, i).monoms == out

    @given(hs, st.integers(1, 40))
    def test_window_matches_pointwise(self, h, window):
        assert h_window(h, window) == tuple(h_eval(h, i) for i in range(window))

    @given(hs)
    def test_certificates_bound_observed(self, h):
        letters = range(10)
        c = h_bound_certificates(h, 50, letters)
        assert c.consistent
        assert c.eta_bound == eta_certificate(h)
        assert all(c.mu_bounds[j] == mu_certificate(h, j) for j in letters)

    @given(hs, st.integers(0, 8))
    def test_delta_stability_random(self, h, j):
        assert delta_stability_check(h, j, 30)


class TestBounded:
    def test_examples(self):
        assert sup_norm(basis_a(3)) == 1
        assert sup_norm(BoundedIntVec()) == 0
        v = BoundedIntVec()
        for n in (0, 4, 9, 2):
            v = bvec_mul(v, basis_a(n))
        assert sup_norm(v) == 1
        assert [v(i) for i in range(11)] == [1, 0, 1, 0, 1, 0, 0, 0, 0, 1, 0]

    def test_normal_form(self):
        assert BoundedIntVec((1, 2, 5, 5), 5) == BoundedIntVec((1, 2), 5)


class TestPadic:
    def test_examples(self):
        assert v_p(PadicInt(18, 3)) == 2
        assert v_p(PadicInt(0, 3)) == INFINITY
        assert padic_in_Un(PadicInt(27, 3), 3)
        assert not padic_in_Un(PadicInt(27, 3), 4)
        assert padic_basis_sequence(4, 3) == PadicInt(81, 3)
        with pytest.raises(ValueError):
            PadicInt(1, 4)

    @given(st.lists(st.integers(-10 ** 9, 10 ** 9), min_size=1, max_size=12), st.integers(0, 11))
    def test_tail_sums(self, zvals, l):
        l = min(l, len(zvals) - 1)
        tail = sum(z * 3 ** n for n, z in enumerate(zvals) if n >= l)
        assert tail % 3 ** l == 0
        assert padic_in_Un(PadicInt(tail, 3), l)


class TestFinPerm:
    def test_pi_2(self):
        p = pi_n(2)
        assert [p(k) for k in range(4)] == [1, 2, 3, 0]
        # apply b_2, then b_1, then b_0
        oracle = [transposition_b(0)(transposition_b(1)(transposition_b(2)(k))) for k in range(4)]
        assert oracle == [1, 2, 3, 0]

    def test_involution(self):
        for n in range(10):
            assert perm_mul(transposition_b(n), transposition_b(n)) == FinPerm()

    def test_pi_n(self):
        for n in range(101):
            p = pi_n(n)
            assert pi_cycle_check(n)
            assert p == cycle(list(range(n + 2)))
            assert all(p(k) == k + 1 for k in range(n + 1))
            assert p(n + 1) == 0 and p(n + 2) == n + 2

    def test_rejects_non_bijection(self):
        with pytest.raises(ValueError):
            FinPerm((0, 0, 1))


def random_element(model, rng):
    name = model.name
    if name == "H":
        h = HSymbolic(tuple(
            (Multiplier(tuple(rng.randint(-3, 3) for _ in range(rng.randint(0, 6))), rng.choice([0, 0, 1])),
             rng.choice([1, -1]))
            for _ in range(rng.randint(0, 3))))
        return model.embed(h)
    if name == "bounded":
        return BoundedIntVec(tuple(rng.randint(-5, 5) for _ in range(rng.randint(0, 8))), rng.randint(-2, 2))
    if name == "padic":
        return PadicInt(rng.randint(-10 ** 6, 10 ** 6) * 3 ** rng.randint(0, 6), 3)
    table = list(range(rng.randint(0, 8)))
    rng.shuffle(table)
    return FinPerm(tuple(table))


@pytest.mark.parametrize("group", ["H", "bounded", "padic", "finperm"])
def test_group_laws_and_linearity(group):
    model = make_model(group, window=12)
    rng = random.Random(f"laws:{group}")
    e = model.identity()
    for _ in range(300):
        a, b, c = (random_element(model, rng) for _ in range(3))
        assert model.mul(model.mul(a, b), c) == model.mul(a, model.mul(b, c))
        assert model.mul(a, e) == a == model.mul(e, a)
        assert model.mul(a, model.inv(a)) == e
        k = rng.randint(-4, 4)
        acc = e
        for _ in range(abs(k)):
            acc = model.mul(acc, a if k > 0 else model.inv(a))
        assert model.pow(a, k) == acc
        for n in range(8):
            ina, inb = model.in_basic_subgroup(a, n), model.in_basic_subgroup(b, n)
            if ina and inb:
                assert model.in_basic_subgroup(model.mul(a, b), n)
            if ina:
                assert model.in_basic_subgroup(model.inv(a), n)
            if model.in_basic_subgroup(a, n + 1):
                assert ina
        assert model.in_basic_subgroup(e, 11)
        assert isinstance(model.render(a), str)


def test_make_sequence():
    seq = make_sequence("H", "g_y", model=make_model("H", 8))
    assert seq(3).coords == (W.E,) * 3 + (W.parse_word("3"),) * 5
    assert seq.symbolic(3) == g(y(3))
    assert make_sequence("padic", "powers", {"p": 5})(2) == PadicInt(25, 5)
    assert make_sequence("finperm", "transpositions")(1) == transposition_b(1)
    assert make_sequence("bounded", "basis")(2) == basis_a(2)
    with pytest.raises(ValueError):
        make_sequence("padic", "g_y")
    with pytest.raises(ValueError):
        make_model("Q")


def test_render_formats():
    h = make_model("H", 3).embed(HSymbolic(((Multiplier((1, -2)), 1),)))
    assert make_model("H", 3).render(h) == "[0]=0\n[1]=0.1^-2\n[2]=0.1^-2"
    assert make_model("padic").render(PadicInt(27, 3)) == "27(v_p=3)"
    assert make_model("finperm").render(pi_n(2)) == "(0 1 2 3)"
    assert perm_inv(pi_n(2)) == cycle([3, 2, 1, 0])
