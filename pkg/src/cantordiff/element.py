"""Elements of diff(K_n) as tree-pair diagrams with flips.

An element is a list of rules ``(u, v, flip)``.  The domain words ``u`` form a
complete prefix code (the cells partition K_n), and so do the range words.
Rule ``(u, v, 0)`` is the increasing affine map of cell ``u`` onto cell ``v``:
on addresses it replaces the prefix ``u`` by ``v``.  With ``flip = 1`` the map
is composed with the reflection of cell ``v`` about its centre.  Reflecting a
cell reverses the order of its n kept subcells, so on addresses it is the
digitwise complement ``a -> n-1-a`` of the tail; rule ``(u, v, 1)`` sends
``u + s`` to ``v + complement(s)``.

Elements with no flips form the Higman-Thompson group V_n.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from cantordiff import kernels
from cantordiff.address import DIGITS, Address, base, check_arity, check_word, complement_table
from cantordiff.clopen import ClopenSet, complement as clopen_complement
from cantordiff.errors import ArityMismatch, DepthExceeded, InvalidElement

DEFAULT_MAX_DEPTH = 64


def _check_prefix_code(words, n, side):
    ordered = sorted(words)
    for a, b in zip(ordered, ordered[1:]):
        if b.startswith(a):
            shown = (a or "*", b or "*")
            raise InvalidElement(f"{side} cells overlap: {shown[0]} and {shown[1]}")
    missing = clopen_complement(ClopenSet._trusted(n, ordered))
    if missing:
        raise InvalidElement(f"{side} not a complete prefix code: missing {', '.join(w or '*' for w in missing)}")


@dataclass(frozen=True)
class Element:
    """One element of diff(K_n); ``rules`` is kept sorted by domain word.

    The constructor validates but does not reduce.  ``compose``, ``inverse``
    and ``reduce`` always return reduced elements, and two reduced elements
    are equal exactly when they are the same map.
    """

    arity: int
    rules: tuple

    def __post_init__(self):
        n = check_arity(self.arity)
        rules = []
        for rule in self.rules:
            try:
                u, v, e = rule
            except (TypeError, ValueError):
                raise InvalidElement(f"rule must be a (domain, range, flip) triple: {rule!r}") from None
            try:
                check_word(u, n)
                check_word(v, n)
            except ValueError as exc:
                raise InvalidElement(str(exc)) from None
            if e not in (0, 1, True, False):
                raise InvalidElement(f"flip bit must be 0 or 1: {e!r}")
            rules.append((u, v, int(e)))
        if not rules:
            raise InvalidElement("an element needs at least one rule")
        _check_prefix_code([r[0] for r in rules], n, "domain")
        _check_prefix_code([r[1] for r in rules], n, "range")
        object.__setattr__(self, "rules", tuple(sorted(rules)))

    @classmethod
    def _trusted(cls, n, rules):
        # rules must already be valid and sorted
        obj = object.__new__(cls)
        object.__setattr__(obj, "arity", n)
        object.__setattr__(obj, "rules", rules)
        return obj

    def __str__(self):
        from cantordiff.syntax import format_element

        return format_element(self)

    def __repr__(self):
        return f"Element({self})"

    def __len__(self):
        return len(self.rules)

    @cached_property
    def _domain_index(self):
        return {u: (v, e) for u, v, e in self.rules}

    @cached_property
    def _max_domain(self):
        return max(len(u) for u, _, _ in self.rules)

    def rule_for(self, x):
        """The rule whose domain cell contains the address x."""
        head = x.prefix(self._max_domain)
        index = self._domain_index
        for k in range(len(head) + 1):
            hit = index.get(head[:k])
            if hit is not None:
                return head[:k], hit[0], hit[1]
        raise AssertionError("domain cells do not cover K_n")

    def is_identity(self):
        return self.rules == (("", "", 0),)

    def has_flips(self):
        return any(e for _, _, e in self.rules)

    def slope(self, rule):
        """Signed slope of the affine piece carried by ``rule``."""
        u, v, e = rule
        s = Fraction(base(self.arity)) ** (len(u) - len(v))
        return -s if e else s

    def __call__(self, x):
        return apply(self, x)

    def __mul__(self, other):
        return compose(self, other)

    def __pow__(self, k):
        return power(self, k)

    def to_json(self):
        return {"arity": self.arity, "rules": [[u, v, e] for u, v, e in self.rules]}

    @classmethod
    def from_json(cls, data):
        return cls(data["arity"], tuple(tuple(r) for r in data["rules"]))


def _same_arity(a, b):
    if a.arity != b.arity:
        raise ArityMismatch(f"arity {a.arity} vs {b.arity}")


def identity(n):
    check_arity(n)
    return Element._trusted(n, (("", "", 0),))


def global_flip(n):
    """The reflection of [0, 1], restricted to K_n."""
    check_arity(n)
    return Element._trusted(n, (("", "", 1),))


def from_rules(n, rules):
    """Validate a rule list and return the reduced element."""
    return reduce(Element(n, tuple(rules)))


def apply(g, x):
    if g.arity != x.arity:
        raise ArityMismatch(f"element of arity {g.arity} applied to address of arity {x.arity}")
    u, v, e = g.rule_for(x)
    tail = x.drop(len(u))
    if e:
        tail = tail.complement()
    return Address._trusted(g.arity, v + tail.preperiod, tail.period)


def reduce(g):
    return Element._trusted(g.arity, kernels.reduce_rules(g.rules, g.arity))


def compose(g, f, max_depth=DEFAULT_MAX_DEPTH):
    """``g after f``, reduced."""
    _same_arity(g, f)
    n = g.arity
    rules = kernels.compose_rules(g.rules, f.rules, complement_table(n), max_depth)
    if rules is None:
        raise DepthExceeded(None, max_depth)
    return Element._trusted(n, kernels.reduce_rules(rules, n))


def inverse(g):
    return Element._trusted(g.arity, kernels.reduce_rules([(v, u, e) for u, v, e in g.rules], g.arity))


def power(g, k, max_depth=DEFAULT_MAX_DEPTH):
    if k < 0:
        g, k = inverse(g), -k
    result = identity(g.arity)
    square = g
    while k:
        if k & 1:
            result = compose(result, square, max_depth)
        k >>= 1
        if k:
            square = compose(square, square, max_depth)
    return result


def expand(g, rule_index):
    """Replace one rule by its n children; the map is unchanged."""
    if not 0 <= rule_index < len(g.rules):
        raise IndexError(f"rule index {rule_index} out of range for {len(g.rules)} rules")
    n = g.arity
    rules = list(g.rules)
    children = kernels.expand_rule(rules.pop(rule_index), n, complement_table(n))
    return Element._trusted(n, tuple(sorted(rules + list(children))))


def image(g, a):
    """Image of a clopen set, normalized."""
    _same_arity(g, a)
    n = g.arity
    table = complement_table(n)
    index = g._domain_index
    out = []
    for c in a.words:
        for k in range(len(c) + 1):
            hit = index.get(c[:k])
            if hit is not None:
                v, e = hit
                s = c[k:]
                out.append(v + (s.translate(table) if e else s))
                break
        else:
            out.extend(v for u, v, _ in g.rules if u.startswith(c))
    return ClopenSet._trusted(n, out)


def preimage(g, a):
    return image(inverse(g), a)


def commutes(g, h):
    return compose(g, h) == compose(h, g)


def cell_permutation(n, words, targets, flips=None):
    """Element permuting cells: ``words[i]`` goes onto ``targets[i]``.

    ``words`` and ``targets`` must both be complete prefix codes; used to
    build finite-order examples.
    """
    flips = flips or [0] * len(words)
    return from_rules(n, zip(words, targets, flips))


def all_words(n, depth):
    """All words of exactly the given length, in lexicographic order."""
    words = [""]
    for _ in range(depth):
        words = [w + d for w in words for d in DIGITS[:n]]
    return words
