"""Digit alphabets, bounds M^(i) / m^(i), truncated spectra and gap estimates."""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from math import lcm

from .errors import ElementCapExceeded, NotPisot, TooFewElements, ZeroNotInAlphabet
from .expansion import AlternateBase, shift_base
from .numberfield import FieldElement, conjugate_embed, is_pisot

DEFAULT_ELEMENT_CAP = 200_000


@dataclass(frozen=True)
class AlphabetTuple:
    alphabets: tuple

    def __post_init__(self):
        alphs = tuple(tuple(sorted(set(int(a) for a in d))) for d in self.alphabets)
        if not alphs or any(not d for d in alphs):
            raise ValueError("alphabets must be nonempty")
        object.__setattr__(self, "alphabets", alphs)

    @property
    def p(self):
        return len(self.alphabets)

    def __getitem__(self, n):
        return self.alphabets[n % self.p]

    def shifted(self, i) -> AlphabetTuple:
        i %= self.p
        return AlphabetTuple(self.alphabets[i:] + self.alphabets[:i])

    def require_zero(self):
        for i, d in enumerate(self.alphabets):
            if 0 not in d:
                raise ZeroNotInAlphabet(f"alphabet D_{i} does not contain 0")
        return self

    def difference(self, other: AlphabetTuple) -> AlphabetTuple:
        """Letterwise D_i - D'_i."""
        if other.p != self.p:
            raise ValueError("alphabet tuples of different lengths")
        return AlphabetTuple(tuple({a - b for a in d for b in e} for d, e in zip(self.alphabets, other.alphabets)))

    def __str__(self):
        return format_alphabets(self)


def format_alphabets(D: AlphabetTuple) -> str:
    parts = []
    for d in D.alphabets:
        if list(d) == list(range(d[0], d[-1] + 1)):
            parts.append(f"[{d[0]}..{d[-1]}]")
        else:
            parts.append("{" + ",".join(str(a) for a in d) + "}")
    return ";".join(parts)


_RANGE = re.compile(r"^\[\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*\]$")
_SET = re.compile(r"^\{\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\}$")


def parse_alphabets(text: str) -> AlphabetTuple:
    """Read "[a..b];[c..d]" or "{0,1,3};[..]" alphabet tuples."""
    out = []
    for part in text.split(";"):
        part = part.strip()
        m = _RANGE.match(part)
        if m:
            lo, hi = int(m.group(1)), int(m.group(2))
            if lo > hi:
                raise ValueError(f"empty range {part!r}")
            out.append(range(lo, hi + 1))
            continue
        m = _SET.match(part)
        if m:
            out.append(int(x) for x in m.group(1).split(","))
            continue
        raise ValueError(f"cannot read alphabet {part!r}")
    return AlphabetTuple(tuple(tuple(d) for d in out))


def _check_lengths(b: AlternateBase, D: AlphabetTuple):
    if b.p != D.p:
        raise ValueError(f"base has length {b.p} but {D.p} alphabets were given")


def _tail_products(b: AlternateBase, phase: int):
    """beta_{i+j+1} ... beta_{i+p-1} for j = 0..p-1."""
    p = b.p
    out = [b.field.one] * p
    for j in range(p - 2, -1, -1):
        out[j] = out[j + 1] * b[phase + j + 1]
    return out


def grouped_alphabet(b: AlternateBase, D: AlphabetTuple, phase: int = 0) -> set:
    """All sums a_0 beta_{i+1}...beta_{i+p-1} + ... + a_{p-1} with a_j in D_{i+j}."""
    _check_lengths(b, D)
    tails = _tail_products(b, phase)
    out = {b.field.zero}
    for j in range(b.p):
        out = {s + a * tails[j] for s in out for a in D[phase + j]}
    return out


def bound_M(b: AlternateBase, D: AlphabetTuple, i: int) -> FieldElement:
    """sum_{n >= i} max(D_n) / (beta_i ... beta_n) in closed form."""
    return _bound(b, D, i, max)


def bound_m(b: AlternateBase, D: AlphabetTuple, i: int) -> FieldElement:
    return _bound(b, D, i, min)


def _bound(b, D, i, pick):
    _check_lengths(b, D)
    acc = b.field.zero
    prod = b.field.one
    for j in range(b.p):
        prod = prod * b.inv(i + j)
        acc = acc + pick(D[i + j]) * prod
    return acc * b.delta / (b.delta - 1)


@dataclass(frozen=True)
class SpectrumLevel:
    phase: int
    level: int
    elements: frozenset

    def __len__(self):
        return len(self.elements)

    def sorted(self):
        return sort_exact(self.elements)

    def to_json(self):
        return [{"coords": e.to_json(), "approx": float(e)} for e in self.sorted()]


def spectrum_level(b: AlternateBase, D: AlphabetTuple, phase: int, level: int,
                   element_cap: int = DEFAULT_ELEMENT_CAP) -> SpectrumLevel:
    """Values of words a_0..a_{l-1} (a_n in D_{i+n}) read as sum a_n beta_{i+n+1}...beta_{i+l-1}."""
    _check_lengths(b, D)
    phase %= b.p
    current = {b.field.zero}
    for k in range(level):
        beta = b[phase + k]
        nxt = set()
        for s in current:
            t = beta * s
            for a in D[phase + k]:
                nxt.add(t + a)
            if len(nxt) > element_cap:
                raise ElementCapExceeded(f"more than {element_cap} elements at level {k + 1}")
        current = nxt
    return SpectrumLevel(phase, level, frozenset(current))


def _cmp(x, y):
    return (x - y).sign()


def sort_exact(elements):
    """Sort field elements: float keys first, then exact check of neighbours."""
    items = list(elements)
    items.sort(key=float)
    if all((items[k + 1] - items[k]).sign() > 0 for k in range(len(items) - 1)):
        return items
    return sorted(items, key=cmp_to_key(_cmp))


def min_gap(s) -> FieldElement:
    elements = s.elements if isinstance(s, SpectrumLevel) else s
    if len(elements) < 2:
        raise TooFewElements("need at least two elements")
    ordered = sort_exact(elements)
    gaps = [ordered[k + 1] - ordered[k] for k in range(len(ordered) - 1)]
    approx = [float(g) for g in gaps]
    low = min(approx)
    # exact minimum among the gaps whose float is close to the smallest one
    candidates = [g for g, a in zip(gaps, approx) if a <= low * (1 + 1e-9) + 1e-300]
    best = candidates[0]
    for g in candidates[1:]:
        if (g - best).sign() < 0:
            best = g
    return best


def separation_bound(b: AlternateBase, D: AlphabetTuple, precision: int = 53, phase: int = 0) -> Fraction:
    """Certified lower bound on distances between distinct elements of X(phase).

    Uses the norm argument: q(x - y) is a nonzero algebraic integer, so its norm
    is at least 1 while every conjugate is at most M / (1 - |delta_k|).
    """
    field = b.field
    if b.delta != field.gen:
        raise ValueError("separation bound needs the base product to be the field generator")
    if not is_pisot(field):
        raise NotPisot("the product of the base is not a Pisot number")
    grouped = grouped_alphabet(b, D, phase)
    pool = set(grouped) | {x - y for x in grouped for y in grouped}
    q = 1
    for a in pool:
        q = lcm(q, a.den)
    d = field.degree
    if d == 1:
        return Fraction(1, q)
    cleared = [a * q for a in pool if not a.is_zero()]
    while True:
        bits = precision
        moduli = [conjugate_embed(field.gen, k, bits).abs_upper(bits) for k in range(d - 1)]
        if all(m < 1 for m in moduli):
            break
        precision *= 2
        if precision > 4096:
            raise NotPisot("could not separate conjugates from the unit circle")
    M = Fraction(1)
    for a in cleared:
        for k in range(d - 1):
            M = max(M, conjugate_embed(a, k, precision).abs_upper(precision))
    bound = Fraction(1, q)
    for m in moduli:
        bound *= (1 - m) / M
    return bound
