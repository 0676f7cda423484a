"""Büchi automata: zero automata, block grouping, lasso acceptance, export."""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from dataclasses import field as dc_field
from fractions import Fraction

from .errors import ZeroNotInAlphabet
from .expansion import AlternateBase
from .numberfield import FieldElement, NumberField, format_rational
from .spectrum import AlphabetTuple, bound_M, bound_m, grouped_alphabet
from .words import EventuallyPeriodicWord

DEFAULT_STATE_CAP = 100_000


@dataclass
class BuchiAutomaton:
    """States are indexed payloads; transitions are (from, label, to) triples."""

    states: list
    initial: int
    finals: frozenset
    transitions: list
    alphabet: tuple = ()
    field: NumberField | None = None
    # phase -> (name, element) used to print state values, e.g. "β1-2"
    names: dict = dc_field(default_factory=dict, repr=False)

    def __post_init__(self):
        n = len(self.states)
        if not 0 <= self.initial < n:
            raise ValueError("initial state out of range")
        if any(not 0 <= q < n for q in self.finals):
            raise ValueError("final state out of range")
        for s, _, t in self.transitions:
            if not (0 <= s < n and 0 <= t < n):
                raise ValueError("transition endpoint out of range")
        self.finals = frozenset(self.finals)
        self._succ = None

    @property
    def succ(self):
        if self._succ is None:
            table = {}
            for s, a, t in self.transitions:
                table.setdefault((s, a), []).append(t)
            self._succ = table
        return self._succ

    def step(self, q, label):
        return self.succ.get((q, label), ())

    def out_edges(self):
        edges = {}
        for s, a, t in self.transitions:
            edges.setdefault(s, []).append((a, t))
        return edges

    def is_deterministic(self) -> bool:
        return all(len(v) == 1 for v in self.succ.values())

    def __len__(self):
        return len(self.states)


@dataclass
class BuildOutcome:
    automaton: BuchiAutomaton
    complete: bool
    states_visited: int


# -- construction ------------------------------------------------------------

def build_zero_automaton(b: AlternateBase, D: AlphabetTuple, state_cap: int = DEFAULT_STATE_CAP) -> BuildOutcome:
    """Accessible part of the zero automaton: (i, s) -a-> (i+1, beta_i s + a) inside [-M, -m]."""
    if D.p != b.p:
        raise ValueError(f"base has length {b.p} but {D.p} alphabets were given")
    try:
        D.require_zero()
    except ZeroNotInAlphabet:
        raise
    p = b.p
    upper = [-bound_m(b, D, i) for i in range(p)]
    lower = [-bound_M(b, D, i) for i in range(p)]
    zero = b.field.zero
    states = [(0, zero)]
    index = {(0, zero): 0}
    transitions = []
    queue = deque([0])
    complete = True
    while queue:
        q = queue.popleft()
        i, s = states[q]
        j = (i + 1) % p
        base = b[i] * s
        for a in D[i]:
            t = base + a
            key = (j, t)
            target = index.get(key)
            if target is None:
                if (t - lower[j]).sign() < 0 or (t - upper[j]).sign() > 0:
                    continue
                if len(states) >= state_cap:
                    complete = False
                    continue
                target = len(states)
                index[key] = target
                states.append(key)
                queue.append(target)
            transitions.append((q, a, target))
    alphabet = tuple(sorted(set().union(*map(set, D.alphabets))))
    names = {i: (f"β{(i - 1) % p}", b[i - 1]) for i in range(p)} if p > 1 else {0: ("δ", b.delta)}
    aut = BuchiAutomaton(states, 0, frozenset(range(len(states))), transitions, alphabet, b.field, names)
    return BuildOutcome(aut, complete, len(states))


def build_real_zero_automaton(field_: NumberField, A, state_cap: int = DEFAULT_STATE_CAP) -> BuildOutcome:
    """Zero automaton in base delta = field generator: z -a-> z delta + a while |.| <= M/(delta-1)."""
    digits = [field_(a) for a in A]
    digits = sorted(set(digits), key=float)
    if not any(a.is_zero() for a in digits):
        raise ZeroNotInAlphabet("0 must be a digit")
    delta = field_.gen
    M = max((abs(a) for a in digits), key=float)
    for a in digits:
        if (abs(a) - M).sign() > 0:
            M = abs(a)
    bound = M / (delta - 1)
    zero = field_.zero
    states = [(0, zero)]
    index = {zero: 0}
    transitions = []
    queue = deque([0])
    complete = True
    while queue:
        q = queue.popleft()
        s = states[q][1]
        base = s * delta
        for a in digits:
            t = base + a
            target = index.get(t)
            if target is None:
                if (abs(t) - bound).sign() > 0:
                    continue
                if len(states) >= state_cap:
                    complete = False
                    continue
                target = len(states)
                index[t] = target
                states.append((0, t))
                queue.append(target)
            transitions.append((q, a, target))
    aut = BuchiAutomaton(states, 0, frozenset(range(len(states))), transitions, tuple(digits), field_, {0: ("δ", delta)})
    return BuildOutcome(aut, complete, len(states))


def group_blocks(aut: BuchiAutomaton, b: AlternateBase, D: AlphabetTuple) -> BuchiAutomaton:
    """Read p letters at a time; the flag records whether the block path met a final state."""
    p = b.p
    tails = [b.field.one] * p
    for j in range(p - 2, -1, -1):
        tails[j] = tails[j + 1] * b[j + 1]
    edges = aut.out_edges()

    def block_paths(q):
        # (target, grouped label, visited final)
        out = []
        stack = [(q, 0, b.field.zero, False)]
        while stack:
            s, depth, acc, hit = stack.pop()
            if depth == p:
                out.append((s, acc, hit))
                continue
            for a, t in edges.get(s, ()):
                if a not in D[depth]:
                    continue
                stack.append((t, depth + 1, acc + a * tails[depth], hit or t in aut.finals))
        return out

    start = (aut.initial, aut.initial in aut.finals)
    states = [start]
    index = {start: 0}
    transitions = set()
    order = []
    queue = deque([0])
    while queue:
        k = queue.popleft()
        q, _ = states[k]
        for t, label, hit in block_paths(q):
            key = (t, hit)
            target = index.get(key)
            if target is None:
                target = len(states)
                index[key] = target
                states.append(key)
                queue.append(target)
            edge = (k, label, target)
            if edge not in transitions:
                transitions.add(edge)
                order.append(edge)
    finals = frozenset(k for k, (_, flag) in enumerate(states) if flag)
    alphabet = tuple(sorted(grouped_alphabet(b, D), key=float))
    return BuchiAutomaton(states, 0, finals, order, alphabet, b.field)


# -- acceptance --------------------------------------------------------------

def accepts(aut: BuchiAutomaton, w: EventuallyPeriodicWord) -> bool:
    """Lasso test: some run over u v^omega visits a final state infinitely often."""
    current = {aut.initial}
    for a in w.prefix:
        current = {t for q in current for t in aut.step(q, a)}
        if not current:
            return False
    v = w.cycle
    n = len(v)
    start = [(q, 0) for q in current]
    seen = set(start)
    stack = list(start)
    graph = {}
    while stack:
        node = stack.pop()
        q, k = node
        nxt = [(t, (k + 1) % n) for t in aut.step(q, v[k])]
        graph[node] = nxt
        for m in nxt:
            if m not in seen:
                seen.add(m)
                stack.append(m)
    for comp in _sccs(graph):
        if len(comp) == 1:
            node = comp[0]
            if node not in graph[node]:
                continue
        if any(q in aut.finals for q, _ in comp):
            return True
    return False


def _sccs(graph):
    """Tarjan's algorithm, iterative."""
    index, low, on_stack = {}, {}, set()
    stack, out = [], []
    counter = 0
    for root in graph:
        if root in index:
            continue
        work = [(root, iter(graph[root]))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            node, it = work[-1]
            advanced = False
            for m in it:
                if m not in index:
                    index[m] = low[m] = counter
                    counter += 1
                    stack.append(m)
                    on_stack.add(m)
                    work.append((m, iter(graph[m])))
                    advanced = True
                    break
                if m in on_stack:
                    low[node] = min(low[node], index[m])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])
            if low[node] == index[node]:
                comp = []
                while True:
                    m = stack.pop()
                    on_stack.discard(m)
                    comp.append(m)
                    if m == node:
                        break
                out.append(comp)
    return out


# -- export ------------------------------------------------------------------

def describe(value: FieldElement, name: str | None = None, element: FieldElement | None = None) -> str:
    """Write value as a*name + c when possible, else as a polynomial in d."""
    if value.is_rational():
        return _fmt_q(Fraction(value.num[0], value.den))
    if name is not None and element is not None and not element.is_rational():
        e, v = element.coords, value.coords
        j = next(k for k in range(1, len(e)) if e[k] != 0)
        a = v[j] / e[j]
        c = v[0] - a * e[0]
        if a * element + c == value:
            coef = "" if a == 1 else "-" if a == -1 else _fmt_q(a)
            text = f"{coef}{name}"
            if c:
                text += ("+" if c > 0 else "-") + _fmt_q(abs(c))
            return text
    return str(value)


def _fmt_q(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _payload_text(aut: BuchiAutomaton, payload) -> str:
    if isinstance(payload, tuple) and len(payload) == 2 and isinstance(payload[1], FieldElement):
        phase, val = payload
        name, elem = aut.names.get(phase, (None, None))
        return f"{phase}:{describe(val, name, elem)}"
    if isinstance(payload, FieldElement):
        return describe(payload)
    if isinstance(payload, tuple):
        return "(" + ",".join(_payload_text(aut, x) for x in payload) + ")"
    return str(payload)


def _label_text(label) -> str:
    if isinstance(label, tuple):
        return ":".join(str(x) for x in label)
    return str(label)


def to_dot(aut: BuchiAutomaton, name: str = "automaton") -> str:
    lines = [f"digraph {name} {{", "  rankdir=LR;", '  init [shape=point, label=""];']
    for k, payload in enumerate(aut.states):
        shape = "doublecircle" if k in aut.finals else "circle"
        label = _payload_text(aut, payload).replace('"', '\\"')
        lines.append(f'  q{k} [shape={shape}, label="{label}"];')
    lines.append(f"  init -> q{aut.initial};")
    for s, a, t in aut.transitions:
        lines.append(f'  q{s} -> q{t} [label="{_label_text(a)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _enc(x):
    if isinstance(x, bool) or isinstance(x, int):
        return x
    if isinstance(x, FieldElement):
        return {"elem": [format_rational(c) for c in x.coords]}
    if isinstance(x, tuple):
        return [_enc(y) for y in x]
    if isinstance(x, str):
        return x
    raise TypeError(f"cannot serialize payload {x!r}")


def _dec(x, field_):
    if isinstance(x, list):
        return tuple(_dec(y, field_) for y in x)
    if isinstance(x, dict) and "elem" in x:
        return field_.element(x["elem"])
    return x


def _enc_label(a):
    if isinstance(a, tuple):
        return ":".join(str(x) for x in a)
    return _enc(a)


def _dec_label(a, field_):
    if isinstance(a, str) and ":" in a:
        return tuple(int(x) for x in a.split(":"))
    return _dec(a, field_)


def to_json(aut: BuchiAutomaton) -> str:
    states = []
    for k, payload in enumerate(aut.states):
        entry = {"final": k in aut.finals}
        if isinstance(payload, tuple) and len(payload) == 2 and isinstance(payload[1], FieldElement) \
                and isinstance(payload[0], int):
            entry["phase"] = payload[0]
            entry["value"] = [format_rational(c) for c in payload[1].coords]
        else:
            entry["payload"] = _enc(payload)
        states.append(entry)
    obj = {
        "states": states,
        "initial": aut.initial,
        "transitions": [[s, _enc_label(a), t] for s, a, t in aut.transitions],
        "alphabet": [_enc_label(a) for a in aut.alphabet],
    }
    if aut.field is not None:
        obj["field"] = aut.field.to_json()
    return json.dumps(obj, sort_keys=True, indent=1)


def from_json(text: str) -> BuchiAutomaton:
    obj = json.loads(text)
    field_ = NumberField.from_json(obj["field"]) if "field" in obj else None
    states = []
    for entry in obj["states"]:
        if "phase" in entry:
            states.append((entry["phase"], field_.element(entry["value"])))
        else:
            states.append(_dec(entry["payload"], field_))
    finals = frozenset(k for k, e in enumerate(obj["states"]) if e["final"])
    transitions = [(s, _dec_label(a, field_), t) for s, a, t in obj["transitions"]]
    alphabet = tuple(_dec_label(a, field_) for a in obj.get("alphabet", []))
    return BuchiAutomaton(states, obj["initial"], finals, transitions, alphabet, field_)


def export(aut: BuchiAutomaton, fmt: str = "dot") -> str:
    if fmt == "dot":
        return to_dot(aut)
    if fmt == "json":
        return to_json(aut)
    raise ValueError(f"unknown export format {fmt!r}")
