import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from tapgroups import words as W
from tapgroups.seminorms import (
    ETA,
    MountainHypothesisError,
    MountainInstance,
    delta,
    eta,
    eta_power_bounds,
    mountain_check,
    mu,
    mu_seminorm,
    parse_seminorm,
    random_mountain_instance,
    seminorm_axiom_check,
)

from conftest import ref_eta, ref_mu, ref_mul, words


def w(text):
    return W.parse_word(text)


class TestExamples:
    def test_mu(self):
        assert mu(0, w("0^2.1^-3.0^-5")) == 5
        assert mu(7, W.E) == 0

    def test_eta(self):
        assert eta(w("1.0^4.3^-1.2")) == 4
        assert eta(w("0^3.1.2^-2")) == 2
        assert eta(W.E) == 0

    def test_delta(self):
        assert delta(0, w("0^2.1^-3.0^-5")) == -3
        assert delta(1, w("0^2.1^-3.0^-5")) == -3
        assert delta(9, w("0^2.1^-3.0^-5")) == 0

    def test_axiom_pair(self):
        a, b = w("0.1.0"), w("0^-1.1^-1")
        rep = seminorm_axiom_check(ETA, a, b)
        ab = W.mul(a, b)
        assert ab == w("0")
        assert (rep.nu_a, rep.nu_b, rep.nu_ab) == (3, 2, 1)
        assert rep.passed

    def test_axiom_symmetric_case(self):
        a = w("0^3.2.0^-7")
        rep = seminorm_axiom_check(mu_seminorm(0), a, W.inv(a))
        assert rep.nu_a == rep.nu_inv_a == 7
        assert rep.passed

    def test_power_bounds(self):
        r = eta_power_bounds(w("0.1"), 5)
        assert r.branch == "growth" and r.eta_power == 10 and r.lower_bound_ok
        r = eta_power_bounds(w("0.1^2.0^-1"), 7)
        assert W.pow(w("0.1^2.0^-1"), 7) == w("0.1^14.0^-1")
        assert r.branch == "stable" and r.eta_power == r.eta_w == 3 and r.exact_when_short_core
        r = eta_power_bounds(W.E, 4)
        assert r.branch == "stable" and r.eta_power == 0 and r.holds

    def test_power_bounds_rejects_n(self):
        with pytest.raises(ValueError):
            eta_power_bounds(w("0"), 0)

    def test_parse(self):
        assert parse_seminorm("eta") is ETA
        assert parse_seminorm("mu:3")(w("3^-4.1")) == 4
        assert parse_seminorm("delta:1")(w("1^2.0.1^-5")) == -3
        for bad in ("eta:1", "mu", "mu:x", "norm"):
            with pytest.raises(ValueError):
                parse_seminorm(bad)


class TestMountain:
    def test_independent_monoms(self):
        xs = (3, 0, 5, 2)
        inst = MountainInstance(tuple(W.from_monoms([(x, 4 ** (j + 1))]) for j, x in enumerate(xs)), xs)
        rep = mountain_check(inst)
        assert rep.verdict
        assert rep.product.letters == xs
        assert rep.n_m == 4

    def test_seam(self):
        inst = MountainInstance((w("0^8.1"), w("1^-1.0.1^8")), (0, 1))
        rep = mountain_check(inst)
        assert rep.product.monoms == ref_mul(w("0^8.1").monoms, w("1^-1.0.1^8").monoms)
        assert rep.product == w("0^9.1^8")
        assert rep.verdict and rep.n_m == 2

    def test_hypothesis_gate(self):
        with pytest.raises(MountainHypothesisError):
            mountain_check(MountainInstance((w("1^3"), w("2^5")), (0, 2)))
        with pytest.raises(MountainHypothesisError):
            mountain_check(MountainInstance((w("0^3"), w("0^2.1^9")), (0, 1)))

    def test_random_instances(self):
        rng = random.Random("mountain")
        for _ in range(200):
            inst = random_mountain_instance(rng, rng.randint(0, 6))
            assert not inst.hypothesis_violations()
            assert mountain_check(inst).verdict


class TestProperties:
    @given(words(), words(), st.integers(0, 7))
    def test_axioms(self, a, b, x):
        for nu in (ETA, mu_seminorm(x)):
            assert seminorm_axiom_check(nu, a, b).passed

    @given(words(), st.integers(0, 8))
    def test_reference_values(self, a, x):
        assert eta(a) == ref_eta(a.monoms)
        assert mu(x, a) == ref_mu(x, a.monoms)

    @given(words(), words(), st.integers(0, 8))
    def test_delta_homomorphism(self, a, b, j):
        assert delta(j, W.mul(a, b)) == delta(j, a) + delta(j, b)
        assert delta(j, W.mul(W.mul(b, a), W.inv(b))) == delta(j, a)
        assert delta(j, W.E) == 0

    @given(words(max_len=10), st.integers(1, 20))
    def test_power_branches(self, a, n):
        r = eta_power_bounds(a, n)
        assert r.holds
        if len(W.cyclic_conjugate(a)) > 1:
            assert r.branch == "growth" and r.eta_power >= 2 * n
        else:
            assert r.branch == "stable" and r.eta_power == eta(a)
