import pytest
from hypothesis import given, strategies as st

from conftest import sqrt13_base, three_phi_phi
from altbase import poly
from altbase.errors import DeltaNotRoot, FirstDigitZero
from altbase.expansion import AlternateBase, greedy_expand, shift_base
from altbase.numberfield import field_new
from altbase.polysystem import (
    align,
    associated_polynomial,
    build_matrix,
    check_series_identity,
    delta_polynomial,
    divides,
    recover_bases,
)
from altbase.words import EventuallyPeriodicWord, parse_word

PHI3 = three_phi_phi()
SQRT13 = sqrt13_base()


def _expansions(b):
    return [greedy_expand(1, shift_base(b, i)).word for i in range(b.p)]


def test_align_three_phi_phi():
    a = align(_expansions(PHI3))
    assert (a.m, a.k) == (1, 1)
    assert a.digits(0) == [3, 0, 0, 0, 0, 0]
    assert a.digits(2) == [1, 1, 1, 0, 1, 1]
    assert a.aligned_word(2) == parse_word("1 (1 1 0)")


def test_associated_polynomial_small():
    # m = 1, k = 1, digits (2, 1): (y - 1) 2 + 1
    assert associated_polynomial([2, 1], 1, 1) == [-1, 2]
    with pytest.raises(ValueError):
        associated_polynomial([1, 2, 3], 1, 1)


@given(st.lists(st.integers(-3, 3), min_size=1, max_size=3), st.lists(st.integers(-3, 3), min_size=1, max_size=3))
def test_series_identity(pre, cyc):
    f = SQRT13.field
    w = EventuallyPeriodicWord(tuple(pre), tuple(cyc))
    assert check_series_identity(w, len(pre), len(cyc), f)


def test_delta_polynomial_three_phi_phi():
    h = delta_polynomial(align(_expansions(PHI3)))
    assert h == [0, 0, 9, -27, 28, -11, 1]
    assert divides([9, -9, 1], h)
    assert poly.to_str(h) == "y^6-11y^5+28y^4-27y^3+9y^2"


def test_delta_polynomial_sqrt13():
    h = delta_polynomial(align(_expansions(SQRT13)))
    assert divides([-1, -3, 1], h)
    assert h[-1] == 1


def test_matrix_shape():
    M = build_matrix(align(_expansions(PHI3)))
    assert len(M) == 3 and all(len(r) == 3 for r in M)


def test_recover_bases():
    rec = recover_bases(PHI3.field, _expansions(PHI3))
    assert rec == PHI3
    assert rec[1] * rec[2] == PHI3.delta / 3
    assert recover_bases(SQRT13.field, _expansions(SQRT13)) == SQRT13


def test_recover_single_base():
    g = field_new([-1, -1, 1], (1, 2))
    assert recover_bases(g, [parse_word("1 1")]).betas == (g.gen,)


def test_recover_errors():
    golden = field_new([-1, -1, 1], (1, 2))
    with pytest.raises(DeltaNotRoot):
        recover_bases(golden, _expansions(PHI3))
    with pytest.raises(FirstDigitZero):
        align([parse_word("0 1"), parse_word("1")])


def test_recover_other_bases():
    # (delta/c, c) is Parry here since delta is Pisot; the base comes back from its own expansions
    f = SQRT13.field
    d = f.gen
    for c in (2, 3):
        b = AlternateBase([d / c, f(c)], f)
        assert recover_bases(f, _expansions(b)) == b
