"""Finite and eventually periodic words u v^omega.

Letters are integers, integer pairs, or any hashable value with equality.
A word keeps the preperiod and period it was built with (``prefix`` and
``cycle``); equality, hashing and printing go through the canonical form,
so two words compare equal iff they are equal as infinite words.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import lcm


def primitive_root(v):
    """Shortest x with v = x^k, via the failure function."""
    n = len(v)
    fail = [0] * (n + 1)
    fail[0] = -1
    k = -1
    for i in range(n):
        while k >= 0 and v[k] != v[i]:
            k = fail[k]
        k += 1
        fail[i + 1] = k
    p = n - fail[n]
    return tuple(v[:p]) if n % p == 0 else tuple(v)


@dataclass(frozen=True, eq=False)
class EventuallyPeriodicWord:
    prefix: tuple
    cycle: tuple

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(self.prefix))
        object.__setattr__(self, "cycle", tuple(self.cycle))
        if not self.cycle:
            raise ValueError("period must be nonempty")

    # canonical view
    @property
    def preperiod(self):
        return self.canonical().prefix

    @property
    def period(self):
        return self.canonical().cycle

    def canonical(self) -> EventuallyPeriodicWord:
        cached = self.__dict__.get("_canon")
        if cached is not None:
            return cached
        u = list(self.prefix)
        v = list(primitive_root(self.cycle))
        while u and u[-1] == v[-1]:
            u.pop()
            v = [v[-1]] + v[:-1]
        canon = EventuallyPeriodicWord.__new__(EventuallyPeriodicWord)
        object.__setattr__(canon, "prefix", tuple(u))
        object.__setattr__(canon, "cycle", tuple(v))
        object.__setattr__(canon, "_canon", canon)
        object.__setattr__(self, "_canon", canon)
        return canon

    def __getitem__(self, n: int):
        if n < 0:
            raise IndexError("negative index")
        if n < len(self.prefix):
            return self.prefix[n]
        return self.cycle[(n - len(self.prefix)) % len(self.cycle)]

    def take(self, n: int) -> tuple:
        return tuple(self[i] for i in range(n))

    def __eq__(self, other):
        if not isinstance(other, EventuallyPeriodicWord):
            return NotImplemented
        a, b = self.canonical(), other.canonical()
        return a.prefix == b.prefix and a.cycle == b.cycle

    def __hash__(self):
        c = self.canonical()
        return hash((c.prefix, c.cycle))

    def __str__(self):
        return format_word(self)

    def __repr__(self):
        return f"EventuallyPeriodicWord({format_word(self)!r})"

    def __lt__(self, other):
        return lex_less(self, other)

    def ends_in_zero(self) -> bool:
        return self.period == (0,)


@dataclass(frozen=True)
class FiniteWord:
    digits: tuple

    def __post_init__(self):
        object.__setattr__(self, "digits", tuple(self.digits))

    def __len__(self):
        return len(self.digits)

    def __str__(self):
        return " ".join(_fmt_letter(a) for a in self.digits)


def word(prefix, cycle=(0,)) -> EventuallyPeriodicWord:
    return EventuallyPeriodicWord(tuple(prefix), tuple(cycle))


def canonicalize(w: EventuallyPeriodicWord) -> EventuallyPeriodicWord:
    return w.canonical()


def shift_word(w: EventuallyPeriodicWord, n: int) -> EventuallyPeriodicWord:
    if n < 0:
        raise ValueError("shift must be non-negative")
    u, v = w.prefix, w.cycle
    if n <= len(u):
        return EventuallyPeriodicWord(u[n:], v).canonical()
    k = (n - len(u)) % len(v)
    return EventuallyPeriodicWord((), v[k:] + v[:k]).canonical()


def compare(a: EventuallyPeriodicWord, b: EventuallyPeriodicWord) -> int:
    """-1, 0, 1 for the lexicographic order of the infinite words."""
    window = max(len(a.prefix), len(b.prefix)) + lcm(len(a.cycle), len(b.cycle))
    for n in range(window):
        x, y = a[n], b[n]
        if x != y:
            return -1 if x < y else 1
    return 0


def lex_less(a: EventuallyPeriodicWord, b: EventuallyPeriodicWord) -> bool:
    return compare(a, b) < 0


def zip_pair(u: EventuallyPeriodicWord, v: EventuallyPeriodicWord) -> EventuallyPeriodicWord:
    pre = max(len(u.prefix), len(v.prefix))
    per = lcm(len(u.cycle), len(v.cycle))
    letters = [(u[n], v[n]) for n in range(pre + per)]
    return EventuallyPeriodicWord(tuple(letters[:pre]), tuple(letters[pre:])).canonical()


def project(w: EventuallyPeriodicWord, track: int) -> EventuallyPeriodicWord:
    return EventuallyPeriodicWord(
        tuple(a[track] for a in w.prefix), tuple(a[track] for a in w.cycle)
    ).canonical()


def map_letters(w: EventuallyPeriodicWord, fn) -> EventuallyPeriodicWord:
    return EventuallyPeriodicWord(tuple(fn(a) for a in w.prefix), tuple(fn(a) for a in w.cycle))


# -- text format ------------------------------------------------------------

def _fmt_letter(a):
    if isinstance(a, tuple):
        return ":".join(str(x) for x in a)
    return str(a)


def _parse_letter(tok: str):
    if ":" in tok:
        return tuple(int(x) for x in tok.split(":"))
    return int(tok)


def format_word(w: EventuallyPeriodicWord, canonical=True) -> str:
    if canonical:
        w = w.canonical()
    parts = [_fmt_letter(a) for a in w.prefix]
    parts.append("(" + " ".join(_fmt_letter(a) for a in w.cycle) + ")")
    return " ".join(parts)


def parse_word(text: str) -> EventuallyPeriodicWord:
    """Read "2 0 1 (0)" style text.  A word without parentheses is padded with (0)."""
    text = text.strip()
    if text.count("(") > 1 or text.count(")") != text.count("("):
        raise ValueError(f"malformed word {text!r}")
    if "(" in text:
        head, rest = text.split("(", 1)
        body, tail = rest.split(")", 1)
        if tail.strip():
            raise ValueError(f"trailing letters after the period in {text!r}")
        cycle = tuple(_parse_letter(t) for t in body.split())
        if not cycle:
            raise ValueError("empty period")
    else:
        head, cycle = text, (0,)
    prefix = tuple(_parse_letter(t) for t in head.split())
    return EventuallyPeriodicWord(prefix, cycle)
