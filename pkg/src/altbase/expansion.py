"""Alternate bases, greedy and quasi-greedy expansions, evaluation, admissibility."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import lcm

from .errors import InputOutOfRange, InvalidBase, QuasiGreedyNotPeriodic
from .numberfield import FieldElement, NumberField, ceil_elem, floor_elem
from .words import EventuallyPeriodicWord, FiniteWord, compare, shift_word

DEFAULT_STEP_CAP = 10_000

PERIODIC = "Periodic"
CAP_EXCEEDED = "CapExceeded"


class AlternateBase:
    """A p-tuple of reals beta_i > 1 in a common field; delta is their product."""

    def __init__(self, betas, field: NumberField | None = None):
        betas = list(betas)
        if not betas:
            raise InvalidBase("an alternate base needs at least one entry")
        if field is None:
            field = next((b.field for b in betas if isinstance(b, FieldElement)), None)
            if field is None:
                raise InvalidBase("cannot infer the number field")
        self.field = field
        self.betas = tuple(field(b) for b in betas)
        for i, b in enumerate(self.betas):
            if b.field is not field and b.field != field:
                raise InvalidBase(f"beta_{i} lives in another field")
            if (b - 1).sign() <= 0:
                raise InvalidBase(f"beta_{i} = {b} is not greater than 1")
        delta = field.one
        for b in self.betas:
            delta = delta * b
        self.delta = delta
        self._inv = tuple(b.inverse() for b in self.betas)
        self._floors = tuple(floor_elem(b) for b in self.betas)

    @property
    def p(self) -> int:
        return len(self.betas)

    def __getitem__(self, n: int) -> FieldElement:
        return self.betas[n % self.p]

    def inv(self, n: int) -> FieldElement:
        return self._inv[n % self.p]

    def floor(self, n: int) -> int:
        return self._floors[n % self.p]

    def ceil(self, n: int) -> int:
        return ceil_elem(self.betas[n % self.p])

    def __eq__(self, other):
        return isinstance(other, AlternateBase) and self.betas == other.betas

    def __hash__(self):
        return hash(self.betas)

    def __repr__(self):
        return "AlternateBase(" + ", ".join(f"{float(b):.6g}" for b in self.betas) + ")"

    def to_json(self):
        return {"field": self.field.to_json(), "p": self.p, "betas": [b.to_json() for b in self.betas]}

    @classmethod
    def from_json(cls, obj, field: NumberField | None = None):
        if field is None:
            field = NumberField.from_json(obj["field"])
        betas = [field.element(c) for c in obj["betas"]]
        if "p" in obj and obj["p"] != len(betas):
            raise InvalidBase(f"p = {obj['p']} but {len(betas)} betas were given")
        return cls(betas, field)


def shift_base(b: AlternateBase, i: int) -> AlternateBase:
    i %= b.p
    if i == 0:
        return b
    return AlternateBase(b.betas[i:] + b.betas[:i], b.field)


@dataclass
class ExpansionResult:
    status: str
    word: EventuallyPeriodicWord | FiniteWord
    remainders_seen: int
    remainders: list = field(default_factory=list, repr=False)

    @property
    def periodic(self) -> bool:
        return self.status == PERIODIC

    def __str__(self):
        if self.periodic:
            return str(self.word)
        return f"{self.word} ... (cap exceeded)"


def _finite_sum(digits, b: AlternateBase, start=0):
    """sum_{n < len} digits[n] / (beta_start ... beta_{start+n})."""
    f = b.field
    acc = f.zero
    for n in range(len(digits) - 1, -1, -1):
        acc = (acc + digits[n]) * b.inv(start + n)
    return acc


def value(w: EventuallyPeriodicWord, b: AlternateBase) -> FieldElement:
    """Exact sum_n a_n / (beta_0 ... beta_n)."""
    p = b.p
    u, v = w.prefix, w.cycle
    pad = (-len(u)) % p
    L = len(u) + pad
    K = lcm(len(v), p)
    head = [w[n] for n in range(L)]
    block = [w[L + n] for n in range(K)]
    head_value = _finite_sum(head, b)
    block_value = _finite_sum(block, b)
    if block_value.is_zero():
        return head_value
    q = b.delta ** (K // p)
    tail = block_value * q / (q - 1)
    return head_value + tail / b.delta ** (L // p)


def _check_unit_interval(x: FieldElement):
    if x.sign() < 0 or (x - 1).sign() > 0:
        raise InputOutOfRange(f"{x} is not in [0, 1]")


def _run(x, b: AlternateBase, step_cap: int, digit_rule):
    seen = {}
    digits = []
    remainders = []
    r = x
    for n in range(step_cap):
        key = (n % b.p, r)
        m = seen.get(key)
        if m is not None:
            w = EventuallyPeriodicWord(tuple(digits[:m]), tuple(digits[m:]))
            return ExpansionResult(PERIODIC, w, len(seen), remainders)
        seen[key] = n
        y = b[n] * r
        d = digit_rule(y)
        r = y - d
        digits.append(d)
        remainders.append(r)
    return ExpansionResult(CAP_EXCEEDED, FiniteWord(digits), len(seen), remainders)


def greedy_expand(x, b: AlternateBase, step_cap: int = DEFAULT_STEP_CAP) -> ExpansionResult:
    """Greedy expansion of x in [0, 1]; the word keeps the detected preperiod/period."""
    x = b.field(x)
    _check_unit_interval(x)
    return _run(x, b, step_cap, floor_elem)


def _quasi_digit(y: FieldElement) -> int:
    return ceil_elem(y) - 1


def quasi_greedy_expand_one(b: AlternateBase, step_cap: int = DEFAULT_STEP_CAP) -> ExpansionResult:
    """Quasi-greedy expansion of 1: remainders kept in (0, 1], digit ceil(beta r) - 1."""
    return _run(b.field.one, b, step_cap, _quasi_digit)


def greedy_remainder(x, b: AlternateBase, n: int) -> FieldElement:
    """r_n(x) after n + 1 greedy steps; r_{-1}(x) = x."""
    if n < -1:
        raise ValueError("n must be >= -1")
    x = b.field(x)
    _check_unit_interval(x)
    r = x
    for k in range(n + 1):
        y = b[k] * r
        r = y - floor_elem(y)
    return r


def quasi_greedy_all(b: AlternateBase, step_cap: int = DEFAULT_STEP_CAP):
    """d*_{beta^(i)}(1) for i = 0..p-1; raises if one is not found periodic."""
    out = []
    for i in range(b.p):
        res = quasi_greedy_expand_one(shift_base(b, i), step_cap)
        if not res.periodic:
            raise QuasiGreedyNotPeriodic(f"quasi-greedy expansion of shift {i} not periodic within {step_cap} digits")
        out.append(res.word)
    return out


def is_admissible(a: EventuallyPeriodicWord, b: AlternateBase, step_cap: int = DEFAULT_STEP_CAP, quasi=None) -> bool:
    """Every suffix a_n a_{n+1}... is lexicographically below d*_{beta^(n)}(1)."""
    if quasi is None:
        quasi = quasi_greedy_all(b, step_cap)
    if any(x < 0 for x in a.prefix + a.cycle):
        return False
    window = len(a.prefix) + lcm(len(a.cycle), b.p)
    for n in range(window):
        if compare(shift_word(a, n), quasi[n % b.p]) >= 0:
            return False
    return True


@dataclass
class ParryResult:
    parry: bool | None
    expansions: list


def is_parry(b: AlternateBase, step_cap: int = DEFAULT_STEP_CAP) -> ParryResult:
    """True when every d_{beta^(i)}(1) is eventually periodic; None when the cap was hit."""
    results = [greedy_expand(b.field.one, shift_base(b, i), step_cap) for i in range(b.p)]
    parry = True if all(r.periodic for r in results) else None
    return ParryResult(parry, results)
