"""Converter, greedy Büchi automaton, normalization automaton and a direct oracle."""
from __future__ import annotations

from collections import deque

from .automata import DEFAULT_STATE_CAP, BuchiAutomaton, BuildOutcome, build_zero_automaton
from .errors import CapExceeded, QuasiGreedyNotPeriodic, ValueOutOfRange
from .expansion import DEFAULT_STEP_CAP, AlternateBase, greedy_expand, quasi_greedy_expand_one, shift_base, value
from .spectrum import AlphabetTuple
from .words import EventuallyPeriodicWord


def greedy_digit_alphabets(b: AlternateBase) -> AlphabetTuple:
    """D'_i = [0, ceil(beta_i) - 1]."""
    return AlphabetTuple(tuple(range(b.ceil(i)) for i in range(b.p)))


def build_converter(b: AlternateBase, D: AlphabetTuple, Dprime: AlphabetTuple,
                    state_cap: int = DEFAULT_STATE_CAP) -> BuildOutcome:
    """Zero automaton over D - D' relabelled by the digit pairs (a, b) with a - b on the edge."""
    diff = D.difference(Dprime).require_zero()
    outcome = build_zero_automaton(b, diff, state_cap)
    zero = outcome.automaton
    transitions = []
    for q, c, t in zero.transitions:
        i = zero.states[q][0]
        for a in D[i]:
            if a - c in Dprime[i]:
                transitions.append((q, (a, a - c), t))
    alphabet = tuple(sorted({(a, x) for i in range(b.p) for a in D[i] for x in Dprime[i]}))
    aut = BuchiAutomaton(list(zero.states), zero.initial, zero.finals, transitions, alphabet, b.field, zero.names)
    return BuildOutcome(aut, outcome.complete, outcome.states_visited)


def quasi_greedy_writing(b: AlternateBase, step_cap: int = DEFAULT_STEP_CAP):
    """Digits t_0 .. t_{m+n-1} of d*(1) with m >= 1, as used by the greedy automaton.

    When the orbit of quasi-greedy remainders returns to 1 inside its cycle,
    the period is anchored at that return; a purely periodic word (t_0..t_{n-1})^w
    is then written t_0 (t_1 .. t_{n-1} t_0)^w.
    """
    res = quasi_greedy_expand_one(b, step_cap)
    if not res.periodic:
        raise QuasiGreedyNotPeriodic(f"quasi-greedy expansion not periodic within {step_cap} digits")
    w = res.word
    m, n = len(w.prefix), len(w.cycle)
    # remainder before digit j is r_{j-1}; r_{-1} = 1
    before = [b.field.one] + res.remainders[: m + n - 1]
    start = next((j for j in range(m, m + n) if before[j] == 1), m)
    if start == 0:
        start = 1
    digits = [w[j] for j in range(start + n)]
    return digits, start, n


def build_greedy_automaton(b: AlternateBase, step_cap: int = DEFAULT_STEP_CAP) -> BuchiAutomaton:
    """Accessible part of the automaton accepting greedy expansions of x in [0, 1)."""
    p = b.p
    writings = [quasi_greedy_writing(shift_base(b, i), step_cap) for i in range(p)]
    start = (0, 0, 0)
    states = [start]
    index = {start: 0}
    transitions = []
    queue = deque([0])

    def target(state):
        idx = index.get(state)
        if idx is None:
            idx = len(states)
            index[state] = idx
            states.append(state)
            queue.append(idx)
        return idx

    while queue:
        q = queue.popleft()
        i, j, k = states[q]
        digits, m, n = writings[i]
        t = digits[k]
        nj = (j + 1) % p
        for s in range(t):
            transitions.append((q, s, target((nj, nj, 0))))
        nk = k + 1 if k != m + n - 1 else m
        transitions.append((q, t, target((i, nj, nk))))
    finals = frozenset(idx for idx, (i, j, k) in enumerate(states) if i == j and k == 0)
    alphabet = tuple(range(max(b.ceil(i) for i in range(p))))
    return BuchiAutomaton(states, 0, finals, transitions, alphabet, b.field)


def build_normalization_automaton(b: AlternateBase, D: AlphabetTuple,
                                  state_cap: int = DEFAULT_STATE_CAP,
                                  step_cap: int = DEFAULT_STEP_CAP) -> BuildOutcome:
    """Product of the converter over (D, D') with the greedy automaton reading the second track.

    Every converter state is final, so the plain product with the greedy
    component's final states accepts the intersection.
    """
    Dprime = greedy_digit_alphabets(b)
    conv_outcome = build_converter(b, D, Dprime, state_cap)
    conv = conv_outcome.automaton
    greedy = build_greedy_automaton(b, step_cap)
    conv_edges = conv.out_edges()
    start = (conv.initial, greedy.initial)
    states = [start]
    index = {start: 0}
    transitions = []
    queue = deque([0])
    complete = conv_outcome.complete
    while queue:
        q = queue.popleft()
        c, g = states[q]
        for label, c2 in conv_edges.get(c, ()):
            for g2 in greedy.step(g, label[1]):
                key = (c2, g2)
                idx = index.get(key)
                if idx is None:
                    if len(states) >= state_cap:
                        complete = False
                        continue
                    idx = len(states)
                    index[key] = idx
                    states.append(key)
                    queue.append(idx)
                transitions.append((q, label, idx))
    finals = frozenset(idx for idx, (_, g) in enumerate(states) if g in greedy.finals)
    payloads = [(conv.states[c], greedy.states[g]) for c, g in states]
    aut = BuchiAutomaton(payloads, 0, finals, transitions, conv.alphabet, b.field)
    return BuildOutcome(aut, complete, len(states))


def normalize(u: EventuallyPeriodicWord, b: AlternateBase, step_cap: int = DEFAULT_STEP_CAP,
              D: AlphabetTuple | None = None) -> EventuallyPeriodicWord:
    """Greedy expansion of value(u); the value must lie in [0, 1)."""
    if D is not None:
        n_check = len(u.prefix) + len(u.cycle) * b.p
        for n in range(n_check):
            if u[n] not in D[n]:
                raise ValueOutOfRange(f"digit {u[n]} at position {n} is not in D_{n % b.p}")
    x = value(u, b)
    if x.sign() < 0 or (x - 1).sign() >= 0:
        raise ValueOutOfRange(f"value {float(x):.6g} is not in [0, 1)")
    res = greedy_expand(x, b, step_cap)
    if not res.periodic:
        raise CapExceeded(f"greedy expansion not periodic within {step_cap} digits", prefix=res.word)
    return res.word.canonical()
