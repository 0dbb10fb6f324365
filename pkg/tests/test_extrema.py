import pytest
from hypothesis import given
from hypothesis import strategies as st

from tapgroups.extrema import (
    ext_count,
    extrema,
    iota_injection,
    is_fd_sequence,
    is_subsequence,
    zigzag_enumeration,
)

from conftest import exhaustive_extrema_violations, ref_ext_count

fd_sequences = st.lists(st.integers(0, 6), min_size=1, max_size=15).filter(is_fd_sequence)


def test_increasing():
    rep = extrema((2, 5, 7, 9))
    assert rep.lmin == {0} and rep.lmax == {3} and len(rep) == 2


@pytest.mark.parametrize("n", [1, 2, 5])
def test_alternating(n):
    assert len(extrema((4, 1) * n)) == 2 * n


def test_single():
    rep = extrema((5,))
    assert rep.ext == {0} and len(rep) == 1


def test_subsequence():
    assert is_subsequence((1, 3), (1, 2, 3))
    assert not is_subsequence((3, 1), (1, 2, 3))
    assert is_subsequence((), (4, 2))


def test_iota_examples():
    assert iota_injection((1, 0, 3, 2), (0, 1, 2, 3)) == {0: 0, 1: 1, 2: 2, 3: 3}
    assert iota_injection((0, 2, 1, 3), (0, 3)) == {0: 0, 1: 3}


def test_iota_validates():
    with pytest.raises(ValueError):
        iota_injection((0, 1, 0), (0, 2))
    with pytest.raises(ValueError):
        iota_injection((0, 1, 2), (2, 1))
    with pytest.raises(ValueError):
        iota_injection((0, 1, 2), ())


def test_zigzag_examples():
    assert zigzag_enumeration(5) == (1, 0, 3, 2, 5, 4)
    assert zigzag_enumeration(3) == (1, 0, 3, 2)
    assert len(extrema(zigzag_enumeration(3))) == 4
    assert zigzag_enumeration(0) == (1,)
    assert len(extrema((1,))) == 1


def test_zigzag_clauses():
    for m in range(501):
        x = zigzag_enumeration(m)
        assert len(x) == m + 1
        assert ext_count(x) == m + 1
        assert sorted(x) != list(x) or m == 0
        # every initial segment is again a zig-zag with full extrema count
        assert x[: m] == zigzag_enumeration(m - 1)[: m] if m else True
        # the values used are exactly 0..m or 0..m+1 without one endpoint
        assert set(x) <= set(range(m + 2))
        assert len(set(x)) == m + 1


@given(fd_sequences)
def test_counts_match_reference(s):
    rep = extrema(s)
    assert len(rep) == ref_ext_count(s) == ext_count(s)
    assert {0, len(s) - 1} <= rep.ext


@given(fd_sequences, st.data())
def test_iota_random(s, data):
    idx = sorted(data.draw(st.sets(st.integers(0, len(s) - 1), min_size=1)))
    sub = [s[i] for i in idx]
    if not is_fd_sequence(sub):
        return
    iota = iota_injection(s, idx)
    ext = extrema(s).ext
    assert set(iota) == extrema(sub).ext
    assert len(set(iota.values())) == len(iota)
    assert set(iota.values()) <= ext


def test_exhaustive_length_8():
    checked, violations = exhaustive_extrema_violations(alphabet=5, max_length=8)
    assert checked > 10 ** 7
    assert violations == []
