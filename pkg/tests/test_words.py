import pytest
from hypothesis import given, strategies as st

from altbase.words import (
    EventuallyPeriodicWord,
    compare,
    format_word,
    parse_word,
    project,
    shift_word,
    word,
    zip_pair,
)

letters = st.integers(-2, 2)
lassos = st.builds(
    EventuallyPeriodicWord,
    st.lists(letters, max_size=5).map(tuple),
    st.lists(letters, min_size=1, max_size=4).map(tuple),
)


def _expand(w, n):
    return [w[i] for i in range(n)]


@given(lassos)
def test_canonical_is_same_infinite_word(w):
    c = w.canonical()
    n = len(w.prefix) + 3 * len(w.cycle) + 5
    assert _expand(c, n) == _expand(w, n)
    assert c == w and hash(c) == hash(w)


@given(lassos)
def test_canonical_is_minimal(w):
    c = w.canonical()
    # preperiod cannot be shortened and the period is primitive
    if c.prefix:
        assert c.prefix[-1] != c.cycle[-1]
    v = c.cycle
    for k in range(1, len(v)):
        if len(v) % k == 0:
            assert v != v[:k] * (len(v) // k)


@given(lassos, lassos)
def test_equality_matches_long_prefix(a, b):
    n = max(len(a.prefix), len(b.prefix)) + 2 * len(a.cycle) * len(b.cycle) + 2
    assert (a == b) == (_expand(a, n) == _expand(b, n))


@given(lassos, lassos)
def test_order_matches_long_prefix(a, b):
    n = max(len(a.prefix), len(b.prefix)) + 2 * len(a.cycle) * len(b.cycle) + 2
    ea, eb = _expand(a, n), _expand(b, n)
    assert compare(a, b) == (ea > eb) - (ea < eb)


@given(lassos)
def test_text_round_trip(w):
    assert parse_word(format_word(w)) == w
    assert format_word(parse_word(str(w))) == str(w)


@given(lassos, st.integers(0, 12))
def test_shift(w, n):
    s = shift_word(w, n)
    assert _expand(s, 10) == [w[n + i] for i in range(10)]


@given(lassos, lassos)
def test_zip_and_project(u, v):
    z = zip_pair(u, v)
    assert project(z, 0) == u and project(z, 1) == v


def test_examples():
    assert str(word([2, 0, 1])) == "2 0 1 (0)"
    assert str(EventuallyPeriodicWord((2, 0), (0, 1))) == "2 0 (0 1)"
    assert str(EventuallyPeriodicWord((2, 0, 0), (1, 0))) == "2 0 (0 1)"
    assert str(EventuallyPeriodicWord((1, 1, 0), (1, 1, 0))) == "(1 1 0)"
    assert parse_word("1 (-1 0)") == EventuallyPeriodicWord((1, -1, 0), (-1, 0))
    assert parse_word("1:0 (-1:0 0:0)").prefix == ((1, 0),)
    assert word([1]).ends_in_zero()
    assert parse_word("1 0 0") == parse_word("1")


@pytest.mark.parametrize("text", ["1 (", "(1) 2", "()", "1 ((2))"])
def test_parse_errors(text):
    with pytest.raises(ValueError):
        parse_word(text)
