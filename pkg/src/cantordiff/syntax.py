"""Text formats for elements, addresses and clopen sets.

Element grammar::

    n=<arity>; <dom>-><ran>[~](, <dom>-><ran>[~])*

``~`` marks a flipped rule and ``*`` is the empty word, so ``n=2; *->*~`` is
the reflection of K_2.  Formatting lists rules sorted by domain word, and
``parse_element(format_element(g)) == g`` for every reduced g.
"""

import re
from fractions import Fraction

from cantordiff.address import DIGITS, Address
from cantordiff.clopen import ClopenSet
from cantordiff.element import Element, reduce
from cantordiff.errors import InvalidElement, ParseError

_HEADER = re.compile(r"\s*n\s*=\s*(\d+)\s*;")
_RULE = re.compile(r"\s*([0-9a-z]+|\*)\s*->\s*([0-9a-z]+|\*)\s*(~?)\s*")


def format_element(g):
    body = ", ".join(f"{u or '*'}->{v or '*'}{'~' if e else ''}" for u, v, e in g.rules)
    return f"n={g.arity}; {body}"


def parse_element(text, *, reduced=True):
    """Parse the element grammar; returns the reduced element unless ``reduced=False``."""
    m = _HEADER.match(text)
    if not m:
        raise ParseError("expected 'n=<arity>;' header", text, 0)
    n = int(m.group(1))
    if not 2 <= n <= len(DIGITS):
        raise ParseError(f"arity must be in [2, {len(DIGITS)}]", text, m.start(1))
    pos = m.end()
    rules = []
    while True:
        r = _RULE.match(text, pos)
        if not r:
            raise ParseError("expected '<dom>-><ran>[~]'", text, pos)
        for group in (1, 2):
            word = r.group(group)
            for i, ch in enumerate(word):
                if ch != "*" and ch not in DIGITS[:n]:
                    raise ParseError(f"digit {ch!r} not valid for arity {n}", text, r.start(group) + i)
        u, v = (w.replace("*", "") for w in r.group(1, 2))
        rules.append((u, v, 1 if r.group(3) else 0))
        pos = r.end()
        if pos == len(text):
            break
        if text[pos] != ",":
            raise ParseError("expected ',' between rules", text, pos)
        pos += 1
    g = Element(n, tuple(rules))
    return reduce(g) if reduced else g


def parse_address(text, n):
    return Address.parse(text, n)


def format_address(x):
    return str(x)


def parse_clopen(text, n):
    return ClopenSet.parse(text, n)


def format_clopen(a):
    return str(a)


def format_fraction(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def decimal(q, digits):
    """Decimal rendering of an exact rational, for display only."""
    q = Fraction(q)
    sign = "-" if q < 0 else ""
    q = abs(q)
    scaled = round(q * 10**digits)
    whole, frac = divmod(scaled, 10**digits)
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{digits}d}"


__all__ = [
    "InvalidElement",
    "ParseError",
    "decimal",
    "format_address",
    "format_clopen",
    "format_element",
    "format_fraction",
    "parse_address",
    "parse_clopen",
    "parse_element",
]
