"""Exact arithmetic in a real number field Q(delta), delta > 1 an algebraic integer.

Elements are stored as an integer numerator vector over a common positive
denominator, in the power basis 1, delta, ..., delta^(d-1).  Equality is
coordinate equality.  Signs are certified by evaluating the numerator
polynomial at a dyadic approximation of delta together with an explicit
error bound, refining the isolating interval of delta on demand.
"""
from __future__ import annotations

import threading
import warnings
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

import mpmath

from . import poly
from .errors import (
    AltBaseError,
    DivisionByZero,
    FieldMismatch,
    IrreducibilityWarning,
    MultipleRootsInInterval,
    NoRootInInterval,
    NotSquarefree,
    Reducible,
    RootEnclosureFailure,
    RootNotGreaterThanOne,
)

MAX_SIGN_BITS = 1 << 18


def parse_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot read a rational from {value!r}")


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


class NumberField:
    """The field Q(delta) for the unique root delta > 1 of ``minpoly`` in ``root_interval``."""

    def __init__(self, minpoly, root_interval):
        coeffs = [int(c) for c in minpoly]
        if any(Fraction(c) != int(c) for c in minpoly):
            raise ValueError("minimal polynomial must have integer coefficients")
        coeffs = poly.strip(coeffs)
        if len(coeffs) < 2 or coeffs[-1] != 1:
            raise ValueError("minimal polynomial must be monic of degree >= 1")
        a, b = (parse_rational(x) for x in root_interval)
        if not a < b:
            raise ValueError("root interval must satisfy a < b")
        self.minpoly = tuple(coeffs)
        self.degree = len(coeffs) - 1
        if poly.degree(poly.gcd(coeffs, poly.deriv(coeffs))) > 0:
            raise NotSquarefree(f"{poly.to_str(coeffs, 'x')} is not squarefree")
        if self.degree >= 2 and poly.rational_roots_int(coeffs):
            raise Reducible(f"{poly.to_str(coeffs, 'x')} has a rational root")
        # irreducibility: exact for degree <= 3 (no rational root), assumed above
        self.irreducibility_verified = self.degree <= 3
        self._lock = threading.Lock()
        self._approx_cache = {}
        self._roots_cache = {}
        self._rational_root = None
        if self.degree == 1:
            root = Fraction(-coeffs[0])
            if not a <= root <= b:
                raise NoRootInInterval(f"root {root} not in [{a}, {b}]")
            if root <= 1:
                raise RootNotGreaterThanOne(f"root {root} is not > 1")
            self._rational_root = root
            self._enclosure = (root, root)
        else:
            seq = poly.sturm_sequence(coeffs)
            n = poly.count_real_roots(coeffs, a, b, seq)
            if n == 0:
                raise NoRootInInterval(f"no root of {poly.to_str(coeffs, 'x')} in ({a}, {b})")
            if n > 1:
                raise MultipleRootsInInterval(f"{n} roots in ({a}, {b})")
            if b <= 1 or (a < 1 and poly.count_real_roots(coeffs, Fraction(1), b, seq) == 0):
                raise RootNotGreaterThanOne("isolated root is not greater than 1")
            self._enclosure = (max(a, Fraction(1)), b)
            self._lo_sign = _sgn(poly.evaluate(coeffs, self._enclosure[0]))
            self._refine_to(Fraction(1, 16))
        self._initial_interval = self._enclosure
        self._bound = int(self._enclosure[1]) + 2
        self._powers = self._reduction_table()

    # -- construction helpers ---------------------------------------------

    def _reduction_table(self):
        """Integer coordinates of delta^k for k < 2d - 1."""
        d = self.degree
        table = []
        for k in range(2 * d - 1):
            if k < d:
                v = [0] * d
                v[k] = 1
            else:
                prev = table[-1]
                top = prev[-1]
                v = [0] + prev[:-1]
                for j in range(d):
                    v[j] -= top * self.minpoly[j]
            table.append(v)
        return table

    def _refine_to(self, width):
        with self._lock:
            lo, hi = self._enclosure
            if hi - lo <= width:
                return
            f = self.minpoly
            lo_sign = self._lo_sign
            while hi - lo > width:
                mid = (lo + hi) / 2
                s = _sgn(poly.evaluate(f, mid))
                if s == 0:
                    raise Reducible("hit a rational root while refining")
                if s == lo_sign:
                    lo = mid
                else:
                    hi = mid
            self._enclosure = (lo, hi)

    # -- public surface ---------------------------------------------------

    @property
    def root_interval(self):
        return self._enclosure

    @property
    def gen(self) -> FieldElement:
        d = self.degree
        if d == 1:
            return self.element([self._rational_root])
        return FieldElement._make(self, tuple(1 if k == 1 else 0 for k in range(d)), 1)

    def element(self, coords) -> FieldElement:
        coords = [parse_rational(c) for c in coords]
        if len(coords) > self.degree:
            raise ValueError(f"expected at most {self.degree} coordinates")
        coords += [Fraction(0)] * (self.degree - len(coords))
        den = 1
        for c in coords:
            den = den * c.denominator // gcd(den, c.denominator)
        nums = tuple(int(c * den) for c in coords)
        return FieldElement._make(self, nums, den)

    def __call__(self, value) -> FieldElement:
        if isinstance(value, FieldElement):
            if value.field is not self and value.field != self:
                raise FieldMismatch("element belongs to another field")
            return value
        if isinstance(value, (list, tuple)):
            return self.element(value)
        q = parse_rational(value)
        if self.degree == 1:
            return self.element([q])
        return FieldElement._make(self, (q.numerator,) + (0,) * (self.degree - 1), q.denominator)

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, NumberField) or self.minpoly != other.minpoly:
            return False
        if self.degree == 1:
            return True
        lo = max(self._enclosure[0], other._enclosure[0])
        hi = min(self._enclosure[1], other._enclosure[1])
        if lo > hi:
            return False
        f = self.minpoly
        return poly.evaluate(f, lo) == 0 or poly.count_real_roots(f, lo, hi) >= 1

    def __hash__(self):
        return hash(self.minpoly)

    def __repr__(self):
        lo, hi = self._enclosure
        return f"NumberField({list(self.minpoly)}, ({lo}, {hi}))"

    def to_json(self):
        lo, hi = self._initial_interval
        return {"minpoly": list(self.minpoly), "root_interval": [format_rational(lo), format_rational(hi)]}

    @classmethod
    def from_json(cls, obj):
        return cls(obj["minpoly"], obj["root_interval"])

    # -- certified evaluation ---------------------------------------------

    def _approx(self, bits):
        """Integer C with |delta - C/2^bits| <= 2^-bits."""
        cached = self._approx_cache.get(bits)
        if cached is not None:
            return cached
        if self._rational_root is not None:
            r = self._rational_root
            # exact when the root is an integer, which it is for monic linear polys
            c = r.numerator * (1 << bits) // r.denominator
        else:
            self._refine_to(Fraction(1, 1 << (bits + 1)))
            lo, hi = self._enclosure
            mid = (lo + hi) / 2
            c = round(mid * (1 << bits))
        self._approx_cache[bits] = c
        return c

    def _scaled_value(self, nums, bits):
        """2^(bits*(d-1)) * P(C/2^bits) as an exact integer."""
        c = self._approx(bits)
        acc = 0
        for k, n in enumerate(reversed(nums)):
            acc = acc * c + (n << (bits * k)) if k else n
        return acc

    def _sign_nums(self, nums):
        if not any(nums):
            return 0
        d = self.degree
        if d == 1:
            return _sgn(nums[0])
        slope = sum(abs(n) * j * self._bound ** (j - 1) for j, n in enumerate(nums) if j)
        bits = max(64, slope.bit_length() + 16)
        while bits <= MAX_SIGN_BITS:
            v = self._scaled_value(nums, bits)
            if abs(v) > slope << (bits * (d - 2)):
                return _sgn(v)
            bits *= 2
        raise Reducible("sign undecided; the defining polynomial is probably reducible")

    def _enclose_nums(self, nums, den, bits):
        """Rational interval of width <= 2^-bits around P(delta)/den."""
        d = self.degree
        if d == 1:
            v = Fraction(nums[0], den)
            return v, v
        slope = sum(abs(n) * j * self._bound ** (j - 1) for j, n in enumerate(nums) if j)
        k = bits + slope.bit_length() + 2
        v = self._scaled_value(nums, k)
        scale_ = den << (k * (d - 1))
        err = Fraction(slope, den << k)
        mid = Fraction(v, scale_)
        return mid - err, mid + err

    # -- complex roots ----------------------------------------------------

    def root_disks(self, bits):
        """Certified isolating disks (center, radius) for all roots of minpoly.

        Returns ``(disks, delta_index)``; every disk contains exactly one root
        and the radius is at most 2^-bits.
        """
        with self._lock:
            cached = self._roots_cache.get(bits)
        if cached is not None:
            return cached
        f = self.minpoly
        d = self.degree
        df = poly.deriv(list(f))
        dps = bits // 3 + 30
        for _attempt in range(6):
            with mpmath.workdps(dps):
                approx = mpmath.polyroots(list(reversed(f)), maxsteps=400, extraprec=4 * dps)
                centers = [(_mpf_to_fraction(mpmath.re(z)), _mpf_to_fraction(mpmath.im(z))) for z in approx]
            disks = []
            for center in centers:
                fz = _ceval(f, center)
                dfz = _ceval(df, center)
                den2 = _cabs2(dfz)
                if den2 == 0:
                    break
                radius = _sqrt_upper(d * d * _cabs2(fz) / den2, bits + 8)
                disks.append((center, radius))
            else:
                if all(r <= Fraction(1, 1 << bits) for _, r in disks) and _disjoint(disks):
                    idx = self._locate_delta(disks)
                    if idx is not None:
                        result = (disks, idx)
                        with self._lock:
                            self._roots_cache[bits] = result
                        return result
            dps *= 2
        raise RootEnclosureFailure(f"could not isolate the roots of {poly.to_str(f, 'x')}")

    def _locate_delta(self, disks):
        lo, hi = self._enclosure
        hits = [
            i for i, ((re, im), r) in enumerate(disks)
            if abs(im) <= r and lo - r <= re <= hi + r
        ]
        if len(hits) == 1:
            return hits[0]
        # widen precision on delta until one disk is singled out
        self._refine_to(min(r for _, r in disks) / 4)
        lo, hi = self._enclosure
        hits = [i for i in hits if lo - disks[i][1] <= disks[i][0][0] <= hi + disks[i][1]]
        return hits[0] if len(hits) == 1 else None

    def conjugate_disks(self, bits):
        """Disks of the conjugates other than delta, ordered by (real, imag) of centres."""
        disks, idx = self.root_disks(bits)
        others = [dk for i, dk in enumerate(disks) if i != idx]
        return sorted(others, key=lambda dk: dk[0])


class FieldElement:
    __slots__ = ("field", "num", "den")

    def __init__(self, field: NumberField, coords):
        other = field.element(coords)
        self.field, self.num, self.den = field, other.num, other.den

    @classmethod
    def _make(cls, field, nums, den):
        if den < 0:
            nums, den = tuple(-n for n in nums), -den
        g = den
        for n in nums:
            g = gcd(g, n)
            if g == 1:
                break
        if g > 1:
            nums, den = tuple(n // g for n in nums), den // g
        obj = object.__new__(cls)
        obj.field, obj.num, obj.den = field, tuple(nums), den
        return obj

    @property
    def coords(self):
        return tuple(Fraction(n, self.den) for n in self.num)

    def is_zero(self):
        return not any(self.num)

    def is_rational(self):
        return not any(self.num[1:])

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch("operands live in different fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d1, d2 = self.den, other.den
        nums = tuple(a * d2 + b * d1 for a, b in zip(self.num, other.num))
        return FieldElement._make(self.field, nums, d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return FieldElement._make(self.field, tuple(-a for a in self.num), self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        f = self.field
        d = f.degree
        if other.is_rational():
            c = other.num[0]
            return FieldElement._make(f, tuple(a * c for a in self.num), self.den * other.den)
        if self.is_rational():
            return other * self
        prod = [0] * (2 * d - 1)
        for i, a in enumerate(self.num):
            if a:
                for j, b in enumerate(other.num):
                    prod[i + j] += a * b
        nums = prod[:d]
        for k in range(d, 2 * d - 1):
            c = prod[k]
            if c:
                for j, t in enumerate(f._powers[k]):
                    nums[j] += c * t
        return FieldElement._make(f, tuple(nums), self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        f = self.field
        if self.is_rational():
            return FieldElement._make(f, (self.den,) + (0,) * (f.degree - 1), self.num[0])
        g, _, t = poly.ext_gcd(list(f.minpoly), list(self.num))
        if len(g) != 1:
            raise Reducible("element shares a factor with the minimal polynomial")
        _, t = poly.poly_divmod(t, list(f.minpoly))
        inv = f.element(t)
        return inv * self.den

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparison -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                return False
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.num[0], self.den) == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(self.num[0], self.den))
        return hash((self.num, self.den))

    def sign(self):
        return self.field._sign_nums(self.num)

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def enclose(self, bits=64):
        return self.field._enclose_nums(self.num, self.den, bits)

    def __float__(self):
        lo, hi = self.enclose(60)
        return float((lo + hi) / 2)

    def __repr__(self):
        return f"FieldElement({poly.to_str([Fraction(n, self.den) for n in self.num], 'd')} ~ {float(self):.6g})"

    def __str__(self):
        return poly.to_str([Fraction(n, self.den) for n in self.num], "d")

    def to_json(self):
        return [format_rational(c) for c in self.coords]


def _sgn(x):
    return (x > 0) - (x < 0)


def _mpf_to_fraction(x):
    neg, man, exp, _ = x._mpf_
    if not man:
        return Fraction(0)
    v = Fraction(man << exp) if exp >= 0 else Fraction(man, 1 << -exp)
    return -v if neg else v


def _ceval(p, z):
    re, im = z
    ar, ai = Fraction(0), Fraction(0)
    for c in reversed(p):
        ar, ai = ar * re - ai * im + c, ar * im + ai * re
    return ar, ai


def _cabs2(z):
    return z[0] * z[0] + z[1] * z[1]


def _sqrt_upper(q, bits):
    """Dyadic upper bound for sqrt(q)."""
    q = Fraction(q)
    if q == 0:
        return Fraction(0)
    scaled = q * (1 << (2 * bits))
    n = -(-scaled.numerator // scaled.denominator)
    r = isqrt(n)
    if r * r < n:
        r += 1
    return Fraction(r, 1 << bits)


def _sqrt_lower(q, bits):
    q = Fraction(q)
    if q <= 0:
        return Fraction(0)
    scaled = q * (1 << (2 * bits))
    return Fraction(isqrt(scaled.numerator // scaled.denominator), 1 << bits)


def _disjoint(disks):
    for i in range(len(disks)):
        (ci, ri) = disks[i]
        for j in range(i + 1, len(disks)):
            (cj, rj) = disks[j]
            dist2 = (ci[0] - cj[0]) ** 2 + (ci[1] - cj[1]) ** 2
            if dist2 <= (ri + rj) ** 2:
                return False
    return True


@dataclass(frozen=True)
class ComplexInterval:
    real_lo: Fraction
    real_hi: Fraction
    imag_lo: Fraction
    imag_hi: Fraction

    def __post_init__(self):
        if self.real_lo > self.real_hi or self.imag_lo > self.imag_hi:
            raise ValueError("empty complex interval")

    @property
    def width(self):
        return max(self.real_hi - self.real_lo, self.imag_hi - self.imag_lo)

    def midpoint(self):
        return complex(float((self.real_lo + self.real_hi) / 2), float((self.imag_lo + self.imag_hi) / 2))

    def contains(self, z) -> bool:
        re, im = (Fraction(z), Fraction(0)) if not isinstance(z, tuple) else z
        return self.real_lo <= re <= self.real_hi and self.imag_lo <= im <= self.imag_hi

    def abs_upper(self, bits=64):
        re = max(abs(self.real_lo), abs(self.real_hi))
        im = max(abs(self.imag_lo), abs(self.imag_hi))
        return _sqrt_upper(re * re + im * im, bits)

    def abs_lower(self, bits=64):
        re = _closest_to_zero(self.real_lo, self.real_hi)
        im = _closest_to_zero(self.imag_lo, self.imag_hi)
        return _sqrt_lower(re * re + im * im, bits)

    def __mul__(self, other):
        re = _imul((self.real_lo, self.real_hi), (other.real_lo, other.real_hi))
        im = _imul((self.imag_lo, self.imag_hi), (other.imag_lo, other.imag_hi))
        ri = _imul((self.real_lo, self.real_hi), (other.imag_lo, other.imag_hi))
        ir = _imul((self.imag_lo, self.imag_hi), (other.real_lo, other.real_hi))
        return ComplexInterval(re[0] - im[1], re[1] - im[0], ri[0] + ir[0], ri[1] + ir[1])


def _closest_to_zero(lo, hi):
    if lo <= 0 <= hi:
        return Fraction(0)
    return min(abs(lo), abs(hi))


def _imul(a, b):
    products = [a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]]
    return min(products), max(products)


def _round_out(lo, hi, bits):
    scale_ = 1 << bits
    return (Fraction((lo * scale_).__floor__(), scale_), Fraction((hi * scale_).__ceil__(), scale_))


# -- operations -------------------------------------------------------------

def field_new(minpoly, root_interval) -> NumberField:
    return NumberField(minpoly, root_interval)


def elem_arith(x: FieldElement, y: FieldElement, op: str) -> FieldElement:
    if x.field is not y.field and x.field != y.field:
        raise FieldMismatch("operands live in different fields")
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        return x / y
    raise ValueError(f"unknown operation {op!r}")


def sign(x: FieldElement) -> int:
    return x.sign()


def floor_elem(x: FieldElement) -> int:
    f = x.field
    if x.is_rational():
        return Fraction(x.num[0], x.den).__floor__()
    lo, _ = x.enclose(8)
    n = lo.__floor__()
    while (x - n).sign() < 0:
        n -= 1
    while (x - (n + 1)).sign() >= 0:
        n += 1
    del f
    return n


def ceil_elem(x: FieldElement) -> int:
    return -floor_elem(-x)


def is_pisot(field: NumberField) -> bool:
    """Decide whether every conjugate of delta other than delta lies in |z| < 1."""
    if not field.irreducibility_verified:
        warnings.warn(
            f"irreducibility of {poly.to_str(list(field.minpoly), 'x')} assumed, not verified",
            IrreducibilityWarning,
            stacklevel=2,
        )
    if field.degree == 1:
        return True
    f = list(field.minpoly)
    if poly.has_unit_circle_root(f):
        return False
    return poly.count_inside_unit_disk(f) == field.degree - 1


def conjugate_embed(x: FieldElement, conj_index: int, precision: int = 53) -> ComplexInterval:
    """Certified box of width <= 2^-precision around psi_k(x).

    ``conj_index`` ranges over the conjugates of delta other than delta itself,
    ordered by (real part, imaginary part).
    """
    field = x.field
    if not 0 <= conj_index < field.degree - 1:
        raise IndexError(f"conjugate index {conj_index} out of range for degree {field.degree}")
    bits = precision + 16
    nums, den = x.num, x.den
    for _ in range(12):
        (re, im), r = field.conjugate_disks(bits)[conj_index]
        pr, pi = _ceval([Fraction(n, den) for n in nums], (re, im))
        zabs = abs(re) + abs(im) + r
        slope = sum(Fraction(abs(n) * j, den) * zabs ** (j - 1) for j, n in enumerate(nums) if j)
        err = r * slope
        if 2 * err <= Fraction(1, 1 << (precision + 1)):
            rl, rh = _round_out(pr - err, pr + err, precision + 2)
            il, ih = _round_out(pi - err, pi + err, precision + 2)
            return ComplexInterval(rl, rh, il, ih)
        bits *= 2
    raise RootEnclosureFailure("conjugate enclosure did not reach requested precision")


def real_embed(x: FieldElement, precision: int = 53) -> ComplexInterval:
    """Box around x itself (the identity embedding), for symmetric use with conjugates."""
    lo, hi = x.enclose(precision + 1)
    lo, hi = _round_out(lo, hi, precision + 2)
    return ComplexInterval(lo, hi, Fraction(0), Fraction(0))


def conjugate_moduli_upper(field: NumberField, precision: int = 53):
    """Rational upper bounds for |delta_k| over the conjugates other than delta."""
    g = field.gen
    return [conjugate_embed(g, k, precision).abs_upper(precision) for k in range(field.degree - 1)]


def field_norm(x: FieldElement) -> Fraction:
    """Exact norm: determinant of multiplication by x on the power basis."""
    f = x.field
    d = f.degree
    if x.is_zero():
        return Fraction(0)
    integral = FieldElement._make(f, x.num, 1)
    cols = []
    basis = f.one
    for _ in range(d):
        cols.append((integral * basis).num)
        basis = basis * f.gen
    matrix = [[[cols[j][i]] for j in range(d)] for i in range(d)]
    det = poly.bareiss_det(matrix)
    value = det[0] if det else 0
    return Fraction(value, x.den ** d)
