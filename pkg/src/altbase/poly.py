"""Dense univariate polynomials as ascending coefficient lists.

Coefficients are ``int`` or ``Fraction``.  Nothing here uses floating point:
root counting (Sturm, Schur-Cohn) and determinants are exact.
"""
from fractions import Fraction
from itertools import zip_longest


def strip(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p):
    return len(strip(p)) - 1


def add(p, q):
    return strip(a + b for a, b in zip_longest(p, q, fillvalue=0))


def sub(p, q):
    return strip(a - b for a, b in zip_longest(p, q, fillvalue=0))


def scale(p, c):
    return strip(c * a for a in p)


def mul(p, q):
    p, q = strip(p), strip(q)
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return strip(out)


def power(p, n):
    out = [1]
    for _ in range(n):
        out = mul(out, p)
    return out


def shift(p, n):
    """Multiply by y**n."""
    p = strip(p)
    return [0] * n + p if p else []


def deriv(p):
    return strip(k * a for k, a in enumerate(p) if k > 0)


def evaluate(p, x):
    acc = 0
    for a in reversed(p):
        acc = acc * x + a
    return acc


def poly_divmod(a, b):
    """Quotient and remainder over the rationals."""
    a = [Fraction(c) for c in strip(a)]
    b = strip(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    lead = Fraction(b[-1])
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c = a[-1] / lead
        k = len(a) - len(b)
        q[k] = c
        for i, bi in enumerate(b):
            a[i + k] -= c * bi
        a = strip(a)
    return strip(q), a


def exact_div_int(a, b):
    """Divide integer polynomials, asserting the quotient is integral and exact."""
    q, r = poly_divmod(a, b)
    if r:
        raise ArithmeticError("inexact polynomial division")
    if any(c.denominator != 1 for c in q):
        raise ArithmeticError("non-integral polynomial quotient")
    return [int(c) for c in q]


def monic(p):
    p = strip(p)
    lead = Fraction(p[-1])
    return [Fraction(c) / lead for c in p]


def gcd(p, q):
    """Monic gcd over Q."""
    p, q = strip(p), strip(q)
    while q:
        _, r = poly_divmod(p, q)
        p, q = q, r
    return monic(p) if p else []


def ext_gcd(a, b):
    """Return (g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = [Fraction(c) for c in strip(a)], [Fraction(c) for c in strip(b)]
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1))
        t0, t1 = t1, sub(t0, mul(q, t1))
    lead = r0[-1]
    return [c / lead for c in r0], [c / lead for c in s0], [c / lead for c in t0]


def reciprocal(p):
    """y**deg * p(1/y)."""
    return strip(list(reversed(strip(p))))


def rational_roots_int(p):
    """Rational roots of an integer polynomial (candidates num | a0, den | an)."""
    p = strip(p)
    if not p:
        raise ValueError("zero polynomial")
    roots = set()
    if p[0] == 0:
        roots.add(Fraction(0))
        k = 0
        while p[k] == 0:
            k += 1
        p = p[k:]
    if len(p) == 1:
        return roots
    nums = _divisors(abs(int(p[0])))
    dens = _divisors(abs(int(p[-1])))
    for n in nums:
        for d in dens:
            for s in (1, -1):
                x = Fraction(s * n, d)
                if evaluate(p, x) == 0:
                    roots.add(x)
    return roots


def _divisors(n):
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            out.append(n // i)
        i += 1
    return sorted(set(out))


# -- real root counting ----------------------------------------------------

def sturm_sequence(p):
    seq = [[Fraction(c) for c in strip(p)], deriv([Fraction(c) for c in strip(p)])]
    while seq[-1]:
        _, r = poly_divmod(seq[-2], seq[-1])
        if not r:
            break
        seq.append(scale(r, -1))
    return [s for s in seq if s]


def _sign(x):
    return (x > 0) - (x < 0)


def sign_variations(seq, x):
    signs = [_sign(evaluate(s, x)) for s in seq]
    signs = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _variations_at_infinity(seq, positive):
    signs = []
    for s in seq:
        lead = _sign(s[-1])
        if not positive and (len(s) - 1) % 2 == 1:
            lead = -lead
        signs.append(lead)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_real_roots(p, lo=None, hi=None, seq=None):
    """Distinct real roots in the half-open interval (lo, hi]; None means infinite."""
    if seq is None:
        seq = sturm_sequence(p)
    v_lo = _variations_at_infinity(seq, False) if lo is None else sign_variations(seq, lo)
    v_hi = _variations_at_infinity(seq, True) if hi is None else sign_variations(seq, hi)
    return v_lo - v_hi


# -- roots in the unit disk ------------------------------------------------

def _schur_cohn(p):
    """Number of roots strictly inside |z| < 1, or None in the singular case.

    Assumes no root on the unit circle. Each step applies Rouche to
    a0*p - an*p^* which has lower degree.
    """
    p = strip(p)
    n = len(p) - 1
    if n <= 0:
        return 0
    if p[0] == 0:
        rest = _schur_cohn(p[1:])
        return None if rest is None else 1 + rest
    a0, an = p[0], p[-1]
    gamma = a0 * a0 - an * an
    if gamma == 0:
        return None
    t = strip(a0 * p[k] - an * p[n - k] for k in range(n + 1))
    sub_count = _schur_cohn(t)
    if sub_count is None:
        return None
    return sub_count if gamma > 0 else n - sub_count


def roots_in_disk(p, rho):
    """Roots with |z| < rho (rho rational > 0), None if the test is singular."""
    rho = Fraction(rho)
    scaled = [Fraction(c) * rho ** k for k, c in enumerate(strip(p))]
    return _schur_cohn(scaled)


def has_unit_circle_root(p):
    """Exact test for a root of modulus 1 (real coefficients)."""
    p = strip(p)
    if evaluate(p, 1) == 0 or evaluate(p, -1) == 0:
        return True
    g = gcd(p, reciprocal(p))
    if len(g) <= 1:
        return False
    # z = (w - i)/(w + i) maps the real line onto the circle minus {1}.
    n = len(g) - 1
    re_part, im_part = [], []
    for k, c in enumerate(g):
        # c * (w - i)^k * (w + i)^(n - k), tracked as (real, imag) polynomials
        term = ([Fraction(c)], [])
        for _ in range(k):
            term = _cmul(term, ([0, 1], [-1]))
        for _ in range(n - k):
            term = _cmul(term, ([0, 1], [1]))
        re_part = add(re_part, term[0])
        im_part = add(im_part, term[1])
    h = gcd(re_part, im_part) if re_part and im_part else (re_part or im_part)
    if len(strip(h)) <= 1:
        return False
    return count_real_roots(h) > 0


def _cmul(a, b):
    ar, ai = a
    br, bi = b
    return sub(mul(ar, br), mul(ai, bi)), add(mul(ar, bi), mul(ai, br))


def count_inside_unit_disk(p, max_bits=4096):
    """Exact number of roots with |z| < 1 for a polynomial without unit-circle roots.

    Brackets the unit circle by radii 1 -/+ 2**-e until the two counts
    agree, which certifies an empty annulus around the circle.
    """
    if has_unit_circle_root(p):
        raise ValueError("polynomial has a root on the unit circle")
    e = 4
    while e <= max_bits:
        inner = roots_in_disk(p, 1 - Fraction(1, 2 ** e))
        outer = roots_in_disk(p, 1 + Fraction(1, 2 ** e))
        if inner is not None and inner == outer:
            return inner
        e *= 2
    raise ArithmeticError("Schur-Cohn bracketing did not stabilise")


# -- determinants over Z[y] ------------------------------------------------

def bareiss_det(matrix):
    """Fraction-free determinant of a square matrix of integer polynomials."""
    m = [[strip(e) for e in row] for row in matrix]
    n = len(m)
    if n == 0:
        return [1]
    sign = 1
    prev = [1]
    for k in range(n - 1):
        if not m[k][k]:
            swap = next((r for r in range(k + 1, n) if m[r][k]), None)
            if swap is None:
                return []
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = sub(mul(m[i][j], m[k][k]), mul(m[i][k], m[k][j]))
                m[i][j] = exact_div_int(num, prev) if num else []
            m[i][k] = []
        prev = m[k][k]
    return scale(m[n - 1][n - 1], sign)


def to_str(p, var="y"):
    p = strip(p)
    if not p:
        return "0"
    terms = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if c == 0:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if mono and abs(c) == 1:
            coef = "-" if c < 0 else "+"
            terms.append(f"{coef}{mono}")
        else:
            terms.append(f"{'+' if c > 0 else '-'}{abs(c)}{mono}")
    out = "".join(terms)
    return out[1:] if out.startswith("+") else out
