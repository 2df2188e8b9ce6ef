from fractions import Fraction

import pytest
from hypothesis import strategies as st

from cantordiff.address import DIGITS, Address, base, cell_endpoints, Cell, coordinate
from cantordiff.sampler import SamplerConfig, sample_element
from cantordiff.syntax import parse_element

G = "n=2; 0->00, 10->01, 11->1"
H2 = "n=2; 0->01, 10->00, 11->1"
FLIP = "n=2; *->*~"
SIGMA = "n=2; 00->01, 01->10, 10->11, 11->00"
TAU = "n=2; 00->01, 01->00, 1->1"
SWAP = "n=2; 0->1, 1->0"


@pytest.fixture
def g():
    return parse_element(G)


@pytest.fixture
def flip():
    return parse_element(FLIP)


@pytest.fixture
def sigma():
    return parse_element(SIGMA)


@pytest.fixture
def tau():
    return parse_element(TAU)


@pytest.fixture
def swap():
    return parse_element(SWAP)


def affine_image(g, x):
    """Image of x computed on the real line from the affine pieces, independent of word rewriting."""
    u, v, e = g.rule_for(x)
    lo_u, _ = cell_endpoints(Cell(g.arity, u))
    lo_v, hi_v = cell_endpoints(Cell(g.arity, v))
    scale = Fraction(base(g.arity)) ** (len(u) - len(v))
    offset = (coordinate(x) - lo_u) * scale
    return hi_v - offset if e else lo_v + offset


def corner_points(*elements):
    """Cell corners u0^inf, u(n-1)^inf of every domain cell: separates reduced elements."""
    n = elements[0].arity
    pts = set()
    for el in elements:
        for u, _, _ in el.rules:
            pts.add(Address(n, u, "0"))
            pts.add(Address(n, u, DIGITS[n - 1]))
            pts.add(Address(n, u, "01"))
    return pts


arities = st.sampled_from([2, 3, 4])


@st.composite
def addresses(draw, n=None):
    n = n or draw(arities)
    alphabet = DIGITS[:n]
    pre = draw(st.text(alphabet, max_size=6))
    per = draw(st.text(alphabet, min_size=1, max_size=4))
    return Address(n, pre, per)


@st.composite
def elements(draw, n=None, max_leaves=4, flips=True):
    n = n or draw(arities)
    m = 1 + (n - 1) * draw(st.integers(0, max_leaves))
    p = draw(st.sampled_from([Fraction(0), Fraction(1, 2), Fraction(1)])) if flips else Fraction(0)
    seed = draw(st.integers(0, 2**32))
    return sample_element(SamplerConfig(n, m, p, seed))


@st.composite
def element_with_address(draw, **kw):
    g = draw(elements(**kw))
    return g, draw(addresses(g.arity))


def random_address(rng, n, max_pre=6, max_period=4):
    pre = "".join(rng.choice(DIGITS[:n]) for _ in range(rng.randint(0, max_pre)))
    per = "".join(rng.choice(DIGITS[:n]) for _ in range(rng.randint(1, max_period)))
    return Address(n, pre, per)


def difference_quotient_points(x, rule_depth, count=4):
    """Addresses x_k != x sharing ever longer prefixes with x, starting at rule_depth."""
    n = x.arity
    out = []
    for k in range(rule_depth, rule_depth + count):
        head = x.prefix(k)
        nxt = x.prefix(k + 1)[-1]
        other = DIGITS[(DIGITS.index(nxt) + 1) % n]
        out.append(Address(n, head + other, "0"))
    return out


def difference_quotient(g, x, y):
    from cantordiff.element import apply

    return (coordinate(apply(g, y)) - coordinate(apply(g, x))) / (coordinate(y) - coordinate(x))


# acceptance reporting: one line per criterion in the terminal summary
_acceptance = {}


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("acceptance")
    if marker is None or call.when != "call":
        return
    number, title = marker.args
    _acceptance[number] = (title, "PASS" if call.excinfo is None else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        title, status = _acceptance[number]
        terminalreporter.write_line(f"criterion {number}: {status}  {title}")
