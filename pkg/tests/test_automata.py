import random

import pytest
from hypothesis import given, strategies as st

from conftest import golden_base, random_word, random_zero_word, sqrt13_base
from altbase.automata import (
    BuchiAutomaton,
    _payload_text,
    accepts,
    build_real_zero_automaton,
    build_zero_automaton,
    export,
    from_json,
    group_blocks,
    to_dot,
)
from altbase.errors import ZeroNotInAlphabet
from altbase.expansion import AlternateBase, value
from altbase.numberfield import field_new
from altbase.spectrum import bound_M, bound_m, parse_alphabets
from altbase.words import EventuallyPeriodicWord, parse_word

B13 = sqrt13_base()
D13 = parse_alphabets("[-2..2];[-1..1]")
ZERO13 = build_zero_automaton(B13, D13)

# phase:value labels of the published drawing
FIG1_STATES = {
    "0:0", "0:1", "0:-1", "0:-β1", "0:β1", "0:β1-1", "0:-β1+1", "0:2β1-2", "0:-2β1+2", "0:β1-2", "0:-β1+2",
    "1:0", "1:1", "1:-1", "1:β0-1", "1:-β0+1", "1:β0-2", "1:-β0+2", "1:β0-3", "1:-β0+3",
}

# computed edges; 40 of them coincide with the drawing, the 4 leaving 1:β0-3 and
# 1:-β0+3 are drawn mirrored there (beta_1 (beta_0 - 3) = -1 exactly)
FIG1_EDGES = {
    ("0:-1", 1, "1:-β0+1"), ("0:-1", 2, "1:-β0+2"), ("0:-2β1+2", 1, "1:-1"), ("0:-2β1+2", 2, "1:0"),
    ("0:-β1", 2, "1:-β0+1"), ("0:-β1+1", 0, "1:-1"), ("0:-β1+1", 1, "1:0"), ("0:-β1+1", 2, "1:1"),
    ("0:-β1+2", -2, "1:β0-3"), ("0:-β1+2", -1, "1:β0-2"), ("0:-β1+2", 0, "1:β0-1"), ("0:0", -1, "1:-1"),
    ("0:0", 0, "1:0"), ("0:0", 1, "1:1"), ("0:1", -2, "1:β0-2"), ("0:1", -1, "1:β0-1"),
    ("0:2β1-2", -2, "1:0"), ("0:2β1-2", -1, "1:1"), ("0:β1", -2, "1:β0-1"), ("0:β1-1", -2, "1:-1"),
    ("0:β1-1", -1, "1:0"), ("0:β1-1", 0, "1:1"), ("0:β1-2", 0, "1:-β0+1"), ("0:β1-2", 1, "1:-β0+2"),
    ("0:β1-2", 2, "1:-β0+3"), ("1:-1", 0, "0:-β1"), ("1:-1", 1, "0:-β1+1"), ("1:-β0+1", 1, "0:-2β1+2"),
    ("1:-β0+2", -1, "0:-β1"), ("1:-β0+2", 0, "0:-β1+1"), ("1:-β0+2", 1, "0:-β1+2"), ("1:0", -1, "0:-1"),
    ("1:0", 0, "0:0"), ("1:0", 1, "0:1"), ("1:1", -1, "0:β1-1"), ("1:1", 0, "0:β1"),
    ("1:β0-1", -1, "0:2β1-2"), ("1:β0-2", -1, "0:β1-2"), ("1:β0-2", 0, "0:β1-1"), ("1:β0-2", 1, "0:β1"),
    ("1:β0-3", 0, "0:-1"), ("1:β0-3", 1, "0:0"), ("1:-β0+3", -1, "0:0"), ("1:-β0+3", 0, "0:1"),
}


def test_fig1_states_and_edges():
    aut = ZERO13.automaton
    names = [_payload_text(aut, s) for s in aut.states]
    assert ZERO13.complete and len(names) == 20
    assert set(names) == FIG1_STATES
    assert {(names[q], a, names[t]) for q, a, t in aut.transitions} == FIG1_EDGES
    assert aut.is_deterministic()
    assert aut.finals == frozenset(range(20))


def test_transitions_are_exact_and_bounded():
    aut = ZERO13.automaton
    for q, a, t in aut.transitions:
        (i, s), (j, u) = aut.states[q], aut.states[t]
        assert j == (i + 1) % 2
        assert u == B13[i] * s + a
        assert -bound_M(B13, D13, j) <= u <= -bound_m(B13, D13, j)


def test_zero_automaton_words():
    aut = ZERO13.automaton
    assert accepts(aut, parse_word("1 (-1 0)"))
    assert accepts(aut, parse_word("(0)"))
    assert not accepts(aut, parse_word("1"))
    # a period-6 zero word close to the one quoted with the drawing
    assert value(parse_word("(0 -1 2 1 -2 1)"), B13) == 0
    assert accepts(aut, parse_word("(0 -1 2 1 -2 1)"))
    assert value(parse_word("(0 -1 2 1 -2 -1)"), B13) != 0
    assert not accepts(aut, parse_word("(0 -1 2 1 -2 -1)"))


def test_acceptance_iff_zero():
    aut = ZERO13.automaton
    rng = random.Random(11)
    zeros = 0
    for _ in range(150):
        w = random_word(rng, D13)
        assert accepts(aut, w) == value(w, B13).is_zero()
    while zeros < 100:
        w = random_zero_word(rng, B13, D13)
        if w is None:
            continue
        zeros += 1
        assert value(w, B13) == 0
        assert accepts(aut, w)


def test_zero_not_in_alphabet():
    with pytest.raises(ZeroNotInAlphabet):
        build_zero_automaton(B13, parse_alphabets("[1..2];[-1..1]"))


def test_state_cap():
    out = build_zero_automaton(B13, D13, state_cap=5)
    assert not out.complete and len(out.automaton.states) == 5


def test_trivial_alphabet():
    f = field_new([-2, 1], (1, 3))
    b = AlternateBase([f.gen])
    out = build_zero_automaton(b, parse_alphabets("{0}"))
    assert len(out.automaton.states) == 1
    assert out.automaton.transitions == [(0, 0, 0)]


def test_real_zero_automaton():
    f = field_new([-2, 1], (1, 3))
    out = build_real_zero_automaton(f, {f(-1), f(0), f(1)})
    assert out.complete
    assert {s[1] for s in out.automaton.states} == {-1, 0, 1}
    g = golden_base()
    out = build_real_zero_automaton(g.field, {g.field(a) for a in (-1, 0, 1)})
    assert out.complete and out.automaton.is_deterministic()
    for w, zero in [("1 (-1)", False), ("1 -1 -1", True), ("(1 -1 -1)", True), ("(1 0 -1)", False), ("0 1 -1 -1", True)]:
        assert accepts(out.automaton, parse_word(w)) == zero
        assert (value(parse_word(w), g) == 0) == zero
    with pytest.raises(ZeroNotInAlphabet):
        build_real_zero_automaton(f, {f(1)})


def test_group_blocks_matches_real_automaton():
    grouped = group_blocks(ZERO13.automaton, B13, D13)
    assert len(grouped.alphabet) == 15
    real = build_real_zero_automaton(B13.field, set(grouped.alphabet)).automaton
    rng = random.Random(12)
    letters = list(grouped.alphabet)
    delta_base = AlternateBase([B13.delta], B13.field)
    for _ in range(100):
        pre = tuple(rng.choice(letters) for _ in range(rng.randrange(3)))
        cyc = tuple(rng.choice(letters) for _ in range(rng.randrange(1, 3)))
        w = EventuallyPeriodicWord(pre, cyc)
        z = value(w, delta_base).is_zero()
        assert accepts(grouped, w) == z == accepts(real, w)


@given(st.lists(st.integers(0, 3), min_size=1, max_size=4), st.lists(st.integers(0, 3), min_size=1, max_size=3))
def test_accepts_nondeterministic(pre, cyc):
    # states: 0 initial; letter 0 may go to 0 or 1; 1 final loops only on 0
    aut = BuchiAutomaton([0, 1], 0, frozenset({1}), [(0, 0, 0), (0, 0, 1), (0, 1, 0), (1, 0, 1)], (0, 1, 2, 3))
    w = EventuallyPeriodicWord(tuple(pre), tuple(cyc))
    letters = set(w.prefix) | set(w.cycle)
    expected = letters <= {0, 1} and set(w.cycle) == {0}
    assert accepts(aut, w) == expected


def test_json_round_trip_and_dot():
    aut = ZERO13.automaton
    back = from_json(export(aut, "json"))
    assert back.states == aut.states
    assert back.transitions == aut.transitions
    assert back.finals == aut.finals
    assert export(back, "json") == export(aut, "json")
    dot = to_dot(aut)
    assert dot.count("shape=doublecircle") == 20
    assert to_dot(aut) == dot
    with pytest.raises(ValueError):
        export(aut, "svg")
