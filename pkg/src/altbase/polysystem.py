"""Polynomial relations forced on a base by eventually periodic expansions of 1.

Given the p expansions of 1 (one per cyclic shift), every expansion is
rewritten with preperiod m*p and period k*p.  Each digit stream then yields
integer polynomials g_{i,j}, the matrix M(y), and a monic h(y) vanishing at
delta.  Conversely delta plus the expansions determine the base.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from . import poly
from .errors import (
    DeltaNotRoot,
    FirstDigitZero,
    LeadingCoefficientUnexpected,
    RankNotPminus1,
    VerificationFailed,
)
from .expansion import AlternateBase, shift_base, value
from .numberfield import FieldElement, NumberField
from .words import EventuallyPeriodicWord


@dataclass(frozen=True)
class AlignedExpansions:
    words: tuple
    m: int
    k: int

    @property
    def p(self):
        return len(self.words)

    def digits(self, i):
        """The (m + k) p digits of word i: preperiod then one period."""
        w = self.words[i]
        return [w[n] for n in range((self.m + self.k) * self.p)]

    def aligned_word(self, i) -> EventuallyPeriodicWord:
        d = self.digits(i)
        cut = self.m * self.p
        return EventuallyPeriodicWord(tuple(d[:cut]), tuple(d[cut:]))


def align(expansions) -> AlignedExpansions:
    words = tuple(expansions)
    p = len(words)
    if p == 0:
        raise ValueError("need at least one expansion")
    for i, w in enumerate(words):
        if w[0] < 1:
            raise FirstDigitZero(f"expansion {i} does not start with a positive digit")
    m = max(1, max(-(-len(w.preperiod) // p) for w in words))
    period = p
    for w in words:
        period = lcm(period, len(w.period))
    return AlignedExpansions(words, m, period // p)


def associated_polynomial(a, m: int, k: int) -> list:
    """(y^k - 1) sum_{n<m} a_n y^(m-1-n) + sum_{n<k} a_(m+n) y^(k-1-n), ascending coefficients."""
    a = list(a)
    if len(a) != m + k:
        raise ValueError(f"expected {m + k} digits, got {len(a)}")
    if k < 1:
        raise ValueError("k must be positive")
    head = [0] * m
    for n in range(m):
        head[m - 1 - n] = a[n]
    tail = [0] * k
    for n in range(k):
        tail[k - 1 - n] = a[m + n]
    yk1 = [-1] + [0] * (k - 1) + [1]
    return poly.add(poly.mul(yk1, head), tail)


def stream_polynomials(aligned: AlignedExpansions, i: int) -> list:
    """g_{i,0}, ..., g_{i,p-1} from the digit subsequences a_j, a_{j+p}, ..."""
    p, m, k = aligned.p, aligned.m, aligned.k
    d = aligned.digits(i)
    return [associated_polynomial(d[j::p], m, k) for j in range(p)]


def check_series_identity(a: EventuallyPeriodicWord, m: int, k: int, field: NumberField) -> bool:
    """sum a_n / delta^(n+1) == g(delta) / (delta^m (delta^k - 1)) exactly."""
    delta = field.gen
    digits = [a[n] for n in range(m + k)]
    aligned = EventuallyPeriodicWord(tuple(digits[:m]), tuple(digits[m:]))
    if aligned != a:
        raise ValueError(f"word is not of preperiod {m} and period {k}")
    g = associated_polynomial(digits, m, k)
    lhs = value(a, AlternateBase([delta], field))
    rhs = _eval(g, delta) / (delta ** m * (delta ** k - 1))
    return lhs == rhs


def _eval(coeffs, x: FieldElement) -> FieldElement:
    acc = x.field.zero
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def build_matrix(aligned: AlignedExpansions) -> list:
    """p x p matrix of integer polynomials; row i-1 for i = 1..p, base index i mod p."""
    p = aligned.p
    g = [stream_polynomials(aligned, i) for i in range(p)]
    rows = []
    for i in range(1, p + 1):
        gi = g[i % p]
        row = []
        for c in range(p):
            j = c - i
            if j >= 0:
                row.append(poly.shift(gi[j], 1))
            else:
                row.append(list(gi[j + p]))
        rows.append(row)
    return rows


def delta_polynomial(aligned: AlignedExpansions) -> list:
    """Monic h = (-1)^p det(M(y) - y^m (y^k - 1) I)."""
    p, m, k = aligned.p, aligned.m, aligned.k
    M = build_matrix(aligned)
    diag = poly.shift([-1] + [0] * (k - 1) + [1], m)
    shifted = [[poly.sub(e, diag) if r == c else e for c, e in enumerate(row)] for r, row in enumerate(M)]
    h = poly.bareiss_det(shifted)
    if not h or h[-1] != (-1) ** p:
        raise LeadingCoefficientUnexpected(f"leading coefficient {h[-1] if h else 0}, expected {(-1) ** p}")
    return poly.scale(h, (-1) ** p)


def divides(f, h) -> bool:
    _, r = poly.poly_divmod(h, f)
    return not r


def _solve(rows, rhs):
    """Gauss-Jordan over the field; None if singular."""
    n = len(rows)
    a = [list(r) + [b] for r, b in zip(rows, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if not a[r][col].is_zero()), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        inv = a[col][col].inverse()
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and not a[r][col].is_zero():
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


def recover_bases(field: NumberField, expansions) -> AlternateBase:
    """The unique base with product delta = field generator and the given expansions of 1."""
    aligned = align(expansions)
    p, m, k = aligned.p, aligned.m, aligned.k
    delta = field.gen
    h = delta_polynomial(aligned)
    if not _eval(h, delta).is_zero():
        raise DeltaNotRoot(f"delta is not a root of {poly.to_str(h)}")
    lam = delta ** m * (delta ** k - 1)
    M = [[_eval(e, delta) for e in row] for row in build_matrix(aligned)]
    A = [[M[r][c] - (lam if r == c else 0) for c in range(p)] for r in range(p)]
    if p == 1:
        v = [field.one]
    else:
        v = None
        for drop in [p - 1] + list(range(p - 1)):
            keep = [r for r in range(p) if r != drop]
            sol = _solve([[A[r][c] for c in range(p - 1)] for r in keep], [-A[r][p - 1] for r in keep])
            if sol is not None:
                v = sol + [field.one]
                break
        if v is None:
            raise RankNotPminus1("no (p-1)-row subsystem has full rank")
        for r in range(p):
            if not sum((A[r][c] * v[c] for c in range(p)), field.zero).is_zero():
                raise VerificationFailed("solution does not satisfy the deleted equation")
    if any(x.sign() <= 0 for x in v):
        raise VerificationFailed("eigenvector is not positive")
    betas = [None] * p
    if p > 1:
        betas[p - 1] = v[p - 2]
        for j in range(1, p - 1):
            betas[j] = v[j - 1] / v[j]
    betas[0] = delta / v[0]
    if any((b - 1).sign() <= 0 for b in betas):
        raise VerificationFailed("recovered bases are not all greater than 1")
    base = AlternateBase(betas, field)
    for i, w in enumerate(aligned.words):
        if value(w, shift_base(base, i)) != 1:
            raise VerificationFailed(f"expansion {i} does not have value 1 in the recovered base")
    return base
