import pytest
from hypothesis import given
from hypothesis import strategies as st

from tapgroups.weights import (
    F_1,
    F_OMEGA,
    IDENTITY,
    OMEGA,
    ZIGZAG,
    ZERO,
    Const,
    Linear,
    Multiplier,
    Permutation,
    Weight,
    binary_slices,
    check_multiplier,
    compose_weight,
    decompose_signs,
    factor_injection,
    le,
    le_star,
    multiplier_from_obj,
    multiplier_to_obj,
    perm_apply,
    perm_inverse,
    permutation_from_obj,
    permutation_to_obj,
    weight_at,
    weight_from_obj,
    weight_to_obj,
)

# Small parameters keep every crossing of two tail rules below n = 12, so a
# pointwise scan up to 200 decides <= and <=* exactly.
SCAN = 200

values = st.one_of(st.integers(1, 5), st.just(OMEGA))
tails = st.one_of(st.builds(Const, values), st.builds(Linear, st.integers(0, 3), st.integers(1, 5)))
weights = st.builds(Weight, st.lists(values, max_size=5).map(tuple), tails)
multipliers = st.builds(Multiplier, st.lists(st.integers(-6, 6), max_size=8).map(tuple), st.integers(-3, 3))


def vle(a, b):
    if b is OMEGA:
        return True
    return a is not OMEGA and a <= b


def scan_le(f, g, start=0):
    return all(vle(f(n), g(n)) for n in range(start, SCAN))


def tables(max_size=8):
    return st.permutations(list(range(max_size))).flatmap(
        lambda t: st.integers(0, len(t)).map(lambda k: Permutation.from_table(
            [v for v in t if v < k] if k else [])))


class TestExamples:
    def test_weight_at(self):
        assert weight_at(F_OMEGA, 17) is OMEGA
        assert weight_at(F_1, 3) == 1
        assert weight_at(Weight((), Linear(1, 1)), 4) == 5

    def test_order(self):
        assert le(F_1, F_OMEGA)
        assert le_star(Weight((999,), Const(1)), F_1)
        assert not le(Weight((999,), Const(1)), F_1)
        lin = Weight((), Linear(1, 1))
        assert not le(lin, Weight((), Const(5)))
        assert not le_star(lin, Weight((), Const(5)))

    def test_check_multiplier(self):
        assert check_multiplier(Multiplier((), 3), F_OMEGA)
        assert not check_multiplier(Multiplier((), 2), F_1)
        assert not check_multiplier(Multiplier((5, -5), 0), Weight((), Linear(1, 1)))
        assert check_multiplier(Multiplier((0, 0, 0, 0, 5, -5), 0), Weight((), Linear(1, 1)))

    def test_decompose(self):
        plus, minus = decompose_signs(Multiplier((3, -2, 0), 0))
        assert plus.values(5) == [3, 0, 0, 0, 0]
        assert minus.values(5) == [0, 2, 0, 0, 0]
        assert decompose_signs(ZERO) == (ZERO, ZERO)

    def test_binary_slices(self):
        z1, z2 = binary_slices(Multiplier((2, 0, 1), 0), 2)
        assert z1.values(4) == [1, 0, 1, 0]
        assert z2.values(4) == [1, 0, 0, 0]
        assert all(s.values(10) == [0] * 10 for s in binary_slices(ZERO, 3))
        assert all(s.values(10) == [1] * 10 for s in binary_slices(Multiplier((), 4), 4))

    @pytest.mark.parametrize("z, k", [(Multiplier((-1,), 0), 2), (Multiplier((3,), 0), 2),
                                      (Multiplier((), 1), 0)])
    def test_binary_slices_rejects(self, z, k):
        with pytest.raises(ValueError):
            binary_slices(z, k)

    def test_permutations(self):
        assert [perm_apply(ZIGZAG, n) for n in range(6)] == [1, 0, 3, 2, 5, 4]
        assert perm_apply(IDENTITY, 41) == 41
        assert perm_inverse(ZIGZAG) == ZIGZAG
        assert all(perm_apply(ZIGZAG, perm_apply(ZIGZAG, n)) == n for n in range(101))
        with pytest.raises(ValueError):
            Permutation.from_table([0, 0, 1])

    def test_compose_weight(self):
        assert compose_weight(F_OMEGA, ZIGZAG, 5) == (OMEGA,) * 5
        assert compose_weight(Weight((), Linear(1, 1)), ZIGZAG, 3) == (2, 1, 4)
        assert compose_weight(F_1, Permutation.from_table([2, 0, 1]), 4) == (1, 1, 1, 1)

    def test_weight_validation(self):
        with pytest.raises(ValueError):
            Weight((0,), Const(1))
        with pytest.raises(ValueError):
            Weight((), Linear(-1, 1))
        with pytest.raises(ValueError):
            Weight((), Const(0))

    def test_injection(self):
        inj = factor_injection([5, 2, 9])
        assert [inj(n) for n in range(3)] == [5, 2, 9]


class TestSerialization:
    @given(weights)
    def test_weight_round_trip(self, f):
        assert weight_from_obj(weight_to_obj(f)) == f

    @given(multipliers)
    def test_multiplier_round_trip(self, z):
        assert multiplier_from_obj(multiplier_to_obj(z)) == z

    def test_permutation_round_trip(self):
        for phi in (IDENTITY, ZIGZAG, Permutation.from_table([2, 0, 1]),
                    Permutation.compose(ZIGZAG, Permutation.from_table([1, 0]))):
            assert permutation_from_obj(permutation_to_obj(phi)) == phi

    def test_config_shapes(self):
        assert weight_from_obj({"prefix": [3, 3], "tail": "omega"}) == Weight((3, 3), Const(OMEGA))
        assert multiplier_from_obj({"prefix": [1, -1, 2], "tail": 0}).values(4) == [1, -1, 2, 0]
        assert permutation_from_obj("zigzag") == ZIGZAG
        for bad in ("heavy", {"prefix": [0]}, {"tail": {"linear": [1]}}, {"oops": 1}):
            with pytest.raises(ValueError):
                weight_from_obj(bad)


class TestProperties:
    @given(weights, weights)
    def test_le_matches_scan(self, f, g):
        assert le(f, g) == scan_le(f, g)
        assert le_star(f, g) == scan_le(f, g, start=SCAN // 2)

    @given(weights, weights, weights)
    def test_order_laws(self, f, g, h):
        if le(f, g):
            assert le_star(f, g)
        if le_star(f, g) and le_star(g, h):
            assert le_star(f, h)
        assert le(F_1, f) and le(f, F_OMEGA)

    @given(multipliers, weights)
    def test_check_multiplier_matches_scan(self, z, f):
        assert check_multiplier(z, f) == all(vle(abs(z(n)), f(n)) for n in range(SCAN))

    @given(multipliers, weights)
    def test_decompose(self, z, f):
        plus, minus = decompose_signs(z)
        for n in range(12):
            assert z(n) == plus(n) - minus(n)
            assert plus(n) >= 0 and minus(n) >= 0
        if check_multiplier(z, f):
            assert check_multiplier(plus, f) and check_multiplier(minus, f)

    @given(st.lists(st.integers(0, 5), max_size=8), st.integers(0, 5))
    def test_binary_slices(self, prefix, tail):
        z = Multiplier(tuple(prefix), tail)
        k = max([*prefix, tail, 1])
        slices = binary_slices(z, k)
        assert len(slices) == k
        for n in range(12):
            assert sum(s(n) for s in slices) == z(n)
        assert all(check_multiplier(s, F_1) for s in slices)

    @given(st.lists(tables(), min_size=1, max_size=3), st.booleans())
    def test_bijective_on_windows(self, parts, zig):
        phi = Permutation.compose(*parts, *([ZIGZAG] if zig else []))
        inv = perm_inverse(phi)
        for p in (phi, inv, IDENTITY, ZIGZAG, *parts):
            q = perm_inverse(p)
            assert [perm_apply(q, perm_apply(p, n)) for n in range(1001)] == list(range(1001))
