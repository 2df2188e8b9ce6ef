"""Points and cells of the Cantor set K_n.

K_n is built from [0, 1] by cutting each interval into 2n-1 equal pieces and
keeping the pieces of even index.  Kept piece ``a`` (0 <= a < n) of [0, 1] is
``[2a/(2n-1), (2a+1)/(2n-1)]``, so a digit word names a cell and an infinite
digit word names a point.  Only eventually periodic words are representable;
these are exactly the points reachable from other such points by group
elements.

Words are stored as ``str`` over the alphabet ``0-9a-z`` (so n <= 36).
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, total_ordering
from math import lcm

from cantordiff.errors import ArityMismatch, ParseError

DIGITS = "0123456789abcdefghijklmnopqrstuvwxyz"
MAX_ARITY = len(DIGITS)


def check_arity(n):
    if not isinstance(n, int) or isinstance(n, bool) or not 2 <= n <= MAX_ARITY:
        raise ValueError(f"arity must be an integer in [2, {MAX_ARITY}], got {n!r}")
    return n


def base(n):
    """Subdivision base 2n-1."""
    return 2 * n - 1


@lru_cache(maxsize=None)
def complement_table(n):
    """``str.translate`` table for the digitwise complement a -> n-1-a."""
    alphabet = DIGITS[:n]
    return str.maketrans(alphabet, alphabet[::-1])


def complement(word, n):
    return word.translate(complement_table(n))


def check_word(word, n):
    alphabet = DIGITS[:n]
    for i, ch in enumerate(word):
        if ch not in alphabet:
            raise ValueError(f"digit {ch!r} at index {i} is not valid for arity {n}")
    return word


def _word_value(word, b):
    # integer whose base-b digits are 2a for each digit a of word
    total = 0
    for ch in word:
        total = total * b + 2 * DIGITS.index(ch)
    return total


def _primitive_root(word):
    size = len(word)
    for d in range(1, size):
        if size % d == 0 and word[:d] * (size // d) == word:
            return word[:d]
    return word


def canonical_form(preperiod, period):
    """Return the (preperiod, period) pair with primitive period and shortest preperiod."""
    if not period:
        raise ValueError("period must be nonempty")
    period = _primitive_root(period)
    while preperiod and preperiod[-1] == period[-1]:
        preperiod = preperiod[:-1]
        period = period[-1] + period[:-1]
    return preperiod, period


@total_ordering
@dataclass(frozen=True)
class Address:
    """Eventually periodic point ``preperiod . period^inf`` of K_n, kept canonical."""

    arity: int
    preperiod: str
    period: str

    def __post_init__(self):
        check_arity(self.arity)
        check_word(self.preperiod, self.arity)
        check_word(self.period, self.arity)
        pre, per = canonical_form(self.preperiod, self.period)
        object.__setattr__(self, "preperiod", pre)
        object.__setattr__(self, "period", per)

    @classmethod
    def parse(cls, text, n):
        """Parse ``<preperiod>(<period>)``, e.g. ``0(1)`` or ``(10)``."""
        s = text.strip()
        lo = s.find("(")
        if lo < 0 or not s.endswith(")"):
            raise ParseError(f"address must look like 'pre(period)': {text!r}", text)
        pre, per = s[:lo], s[lo + 1:-1]
        if not per:
            raise ParseError("empty period", text, lo + 1)
        alphabet = DIGITS[:n]
        for i, ch in enumerate(s):
            if ch not in alphabet and i != lo and i != len(s) - 1:
                raise ParseError(f"bad digit {ch!r} for arity {n}", text, i)
        return cls(n, pre, per)

    def __str__(self):
        return f"{self.preperiod}({self.period})"

    def __repr__(self):
        return f"Address(n={self.arity}, {self})"

    def prefix(self, k):
        """First k digits of the expansion."""
        pre = self.preperiod
        if k <= len(pre):
            return pre[:k]
        rest = k - len(pre)
        reps = rest // len(self.period) + 1
        return pre + (self.period * reps)[:rest]

    def startswith(self, word):
        return self.prefix(len(word)) == word

    def drop(self, k):
        """The address obtained by deleting the first k digits."""
        pre = self.preperiod
        if k <= len(pre):
            return Address._trusted(self.arity, pre[k:], self.period)
        shift = (k - len(pre)) % len(self.period)
        return Address._trusted(self.arity, "", self.period[shift:] + self.period[:shift])

    def prepend(self, word):
        check_word(word, self.arity)
        return Address._trusted(self.arity, word + self.preperiod, self.period)

    def complement(self):
        n = self.arity
        return Address._trusted(n, complement(self.preperiod, n), complement(self.period, n))

    def coordinate(self):
        return coordinate(self)

    @classmethod
    def _trusted(cls, n, preperiod, period):
        # skips digit validation; callers guarantee the words are over DIGITS[:n]
        obj = object.__new__(cls)
        pre, per = canonical_form(preperiod, period)
        object.__setattr__(obj, "arity", n)
        object.__setattr__(obj, "preperiod", pre)
        object.__setattr__(obj, "period", per)
        return obj

    def _key_length(self, other):
        return max(len(self.preperiod), len(other.preperiod)) + lcm(len(self.period), len(other.period))

    def __lt__(self, other):
        if not isinstance(other, Address):
            return NotImplemented
        return compare(self, other) < 0


def coordinate(a):
    """Exact position of the point in [0, 1]."""
    b = base(a.arity)
    k, period_len = len(a.preperiod), len(a.period)
    head = _word_value(a.preperiod, b)
    tail = Fraction(_word_value(a.period, b), b**period_len - 1)
    return (head + tail) / b**k


def compare(a, b):
    """Order of two points on the line: -1, 0 or 1."""
    if a.arity != b.arity:
        raise ArityMismatch(f"cannot compare addresses of arity {a.arity} and {b.arity}")
    # expansions that agree this far agree forever
    k = a._key_length(b)
    x, y = a.prefix(k), b.prefix(k)
    return (x > y) - (x < y)


@dataclass(frozen=True, order=True)
class Cell:
    """The interval of K_n addressed by a finite digit word (empty word = all of K_n)."""

    arity: int
    word: str = ""

    def __post_init__(self):
        check_arity(self.arity)
        check_word(self.word, self.arity)

    def __str__(self):
        return self.word or "*"

    def __len__(self):
        return len(self.word)

    def left(self):
        return Address(self.arity, self.word, "0")

    def right(self):
        return Address(self.arity, self.word, DIGITS[self.arity - 1])

    def contains(self, x):
        return x.startswith(self.word)


def cell_endpoints(c):
    """Coordinates of the leftmost and rightmost points of the cell."""
    if isinstance(c, Cell):
        return coordinate(c.left()), coordinate(c.right())
    raise TypeError(f"expected a Cell, got {type(c).__name__}")
