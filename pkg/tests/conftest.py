import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings

from altbase.expansion import AlternateBase, greedy_expand, value
from altbase.numberfield import field_new
from altbase.spectrum import parse_alphabets
from altbase.words import EventuallyPeriodicWord

settings.register_profile(
    "default",
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("default")


# -- shared bases -------------------------------------------------------------

def sqrt13_field():
    return field_new([-1, -3, 1], (3, 4))


def sqrt13_base():
    f = sqrt13_field()
    d = f.gen
    # (1 + sqrt13)/2 = delta - 1 and (5 + sqrt13)/6 = (1 + delta)/3
    return AlternateBase([d - 1, (1 + d) / 3], f)


def three_phi_phi():
    f = field_new([9, -9, 1], (7, 8))
    phi = f.gen / 3 - 1
    return AlternateBase([f(3), phi, phi], f)


def golden_base():
    f = field_new([-1, -1, 1], (1, 2))
    return AlternateBase([f.gen], f)


def sextic_field():
    return field_new([-1, 0, 0, 0, 0, -1, 1], (1, 2))


@pytest.fixture(scope="session")
def sqrt13():
    return sqrt13_base()


@pytest.fixture(scope="session")
def phi3():
    return three_phi_phi()


@pytest.fixture(scope="session")
def golden():
    return golden_base()


@pytest.fixture(scope="session")
def sextic():
    return sextic_field()


@pytest.fixture(scope="session")
def D13():
    return parse_alphabets("[-2..2];[-1..1]")


# -- random words -------------------------------------------------------------

def random_word(rng, alphabets, max_pre=4, max_per=3):
    """Random lasso word with digit n drawn from alphabets[n mod p]; period a multiple of p."""
    p = alphabets.p if hasattr(alphabets, "p") else len(alphabets)
    pre = rng.randrange(0, max_pre + 1)
    per = p * rng.randrange(1, max_per + 1)
    letters = [rng.choice(alphabets[n % p]) for n in range(pre + per)]
    return EventuallyPeriodicWord(tuple(letters[:pre]), tuple(letters[pre:]))


def random_zero_word(rng, b, alphabets, blocks=3):
    """A word over the alphabets with value exactly 0, or None.

    A random head u of length L (a multiple of p) is completed by the greedy
    expansion of -delta^(L/p) val(u), or the negated expansion of its opposite.
    """
    p = b.p
    L = p * rng.randrange(1, blocks + 1)
    head = [rng.choice(alphabets[n % p]) for n in range(L)]
    head_word = EventuallyPeriodicWord(tuple(head), (0,))
    y = -(b.delta ** (L // p)) * value(head_word, b)
    sgn = 1
    if y.sign() < 0:
        y, sgn = -y, -1
    if (y - 1).sign() >= 0:
        return None
    res = greedy_expand(y, b, 2000)
    if not res.periodic:
        return None
    tail = res.word
    letters_ok = all(sgn * tail[n] in alphabets[n % p]
                     for n in range(len(tail.prefix) + p * len(tail.cycle)))
    if not letters_ok:
        return None
    return EventuallyPeriodicWord(
        tuple(head) + tuple(sgn * a for a in tail.prefix),
        tuple(sgn * a for a in tail.cycle),
    )


def random_unit_element(rng, field, size=20):
    """Random element of [0, 1) in the field, as the fractional part of a random combination."""
    from altbase.numberfield import floor_elem
    coords = [Fraction(rng.randint(-size, size), rng.randint(1, size)) for _ in range(field.degree)]
    x = field.element(coords)
    return x - floor_elem(x)


@pytest.fixture
def rng():
    return random.Random(20240607)


# -- acceptance report ----------------------------------------------------------

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(line)
