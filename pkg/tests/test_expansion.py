import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from conftest import golden_base, random_unit_element, random_word, sqrt13_base, three_phi_phi
from altbase.errors import InputOutOfRange, InvalidBase
from altbase.expansion import (
    AlternateBase,
    greedy_expand,
    greedy_remainder,
    is_admissible,
    is_parry,
    quasi_greedy_all,
    quasi_greedy_expand_one,
    shift_base,
    value,
)
from altbase.numberfield import field_new
from altbase.words import EventuallyPeriodicWord, parse_word

B13 = sqrt13_base()
PHI3 = three_phi_phi()

lassos = st.builds(
    EventuallyPeriodicWord,
    st.lists(st.integers(-3, 3), max_size=5).map(tuple),
    st.lists(st.integers(-3, 3), min_size=1, max_size=4).map(tuple),
)


def mp_value(w, b, terms=400):
    """Direct truncated sum at high precision; the tail is below 2 * 3 / 1.4^400."""
    with mpmath.workdps(50):
        betas = [_mp(x) for x in b.betas]
        acc, prod = mpmath.mpf(0), mpmath.mpf(1)
        for n in range(terms):
            prod *= betas[n % b.p]
            acc += w[n] / prod
        return acc


def _mp(x):
    lo, hi = x.enclose(180)
    return (mpmath.mpf(lo.numerator) / lo.denominator + mpmath.mpf(hi.numerator) / hi.denominator) / 2


@given(lassos)
def test_value_matches_direct_sum(w):
    with mpmath.workdps(50):
        assert abs(mp_value(w, B13) - _mp(value(w, B13))) < mpmath.mpf(10) ** -30


def test_value_examples():
    assert value(parse_word("1 (-1 0)"), B13) == 0
    assert value(parse_word("2 0 1"), B13) == 1
    assert value(parse_word("1 1"), shift_base(B13, 1)) == 1
    assert value(parse_word("(1)"), golden_base()) == golden_base().delta
    for i, w in enumerate(["3", "1 1", "1 (1 1 0)"]):
        assert value(parse_word(w), shift_base(PHI3, i)) == 1


def test_greedy_examples():
    assert str(greedy_expand(1, B13).word) == "2 0 1 (0)"
    assert str(greedy_expand(0, B13).word) == "(0)"
    res = quasi_greedy_expand_one(B13)
    # raw writing is kept, canonical form is used for display
    assert (res.word.prefix, res.word.cycle) == ((2, 0), (0, 1))
    assert str(res.word) == "2 0 (0 1)"
    assert str(quasi_greedy_expand_one(shift_base(B13, 1)).word) == "(1 0)"


def test_greedy_domain():
    with pytest.raises(InputOutOfRange):
        greedy_expand(Fraction(-1, 5), B13)
    with pytest.raises(InputOutOfRange):
        greedy_expand(B13.field.gen, B13)


def test_invalid_base():
    f = field_new([-1, -3, 1], (3, 4))
    with pytest.raises(InvalidBase):
        AlternateBase([f(1), f.gen])
    with pytest.raises(InvalidBase):
        AlternateBase([])


def test_value_greedy_round_trip():
    rng = random.Random(3)
    for b in (B13, golden_base()):
        for _ in range(40):
            x = random_unit_element(rng, b.field)
            res = greedy_expand(x, b)
            assert res.periodic
            assert value(res.word, b) == x
            # digits lie in [0, ceil(beta_n) - 1]
            w = res.word
            n_check = len(w.prefix) + len(w.cycle) * b.p
            assert all(0 <= w[n] < b.ceil(n) for n in range(n_check))


def test_remainders_in_unit_interval():
    rng = random.Random(4)
    for _ in range(20):
        x = random_unit_element(rng, B13.field)
        res = greedy_expand(x, B13)
        assert all(0 <= r < 1 for r in res.remainders)
        assert greedy_remainder(x, B13, -1) == x
        for n in (0, 3, 7):
            assert greedy_remainder(x, B13, n) == res.remainders[n]


def test_remainder_identity():
    # r_n(x) = beta_0...beta_n (x - sum_{k<=n} a_k / (beta_0...beta_k))
    x = Fraction(5, 7)
    res = greedy_expand(x, B13)
    prod = B13.field.one
    partial = B13.field.zero
    for n in range(12):
        prod = prod * B13[n]
        partial = partial + res.word[n] / prod
        assert res.remainders[n] == prod * (x - partial)


def test_cap_exceeded():
    f = field_new([-1, 0, 0, 0, 0, -1, 1], (1, 2))
    b = AlternateBase([f(Fraction(6, 5)), f.gen * Fraction(5, 6)], f)
    res = greedy_expand(1, b, step_cap=50)
    assert not res.periodic and len(res.word) == 50
    assert is_parry(b, step_cap=50).parry is None


def test_parry():
    assert is_parry(B13).parry is True
    r = is_parry(PHI3)
    assert r.parry is True
    assert [str(e.word) for e in r.expansions] == ["3 (0)", "1 1 (0)", "1 (1 1 0)"]


def test_admissibility_examples():
    assert is_admissible(parse_word("2 0 0 1"), B13)
    assert not is_admissible(parse_word("2 1"), B13)
    assert not is_admissible(quasi_greedy_expand_one(B13).word, B13)
    assert not is_admissible(parse_word("(-1)"), B13)
    assert is_admissible(parse_word("(0)"), B13)


def test_admissible_iff_greedy_expansion():
    """Oracle: a non-negative word is admissible iff it is the greedy expansion of its value in [0, 1)."""
    rng = random.Random(5)
    quasi = quasi_greedy_all(B13)
    digits = [tuple(range(B13.ceil(i))) for i in range(B13.p)]
    for _ in range(200):
        w = random_word(rng, digits, max_pre=4, max_per=3)
        x = value(w, B13)
        greedy = x < 1 and greedy_expand(x, B13).word == w
        assert is_admissible(w, B13, quasi=quasi) == greedy


def test_shift_base_cycles():
    assert shift_base(B13, 2) is B13
    assert shift_base(PHI3, 1).betas == (PHI3[1], PHI3[2], PHI3[0])
    assert shift_base(PHI3, 1).delta == PHI3.delta


def test_json_round_trip():
    assert AlternateBase.from_json(PHI3.to_json(), PHI3.field) == PHI3
