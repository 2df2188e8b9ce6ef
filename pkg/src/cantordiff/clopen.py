"""Clopen subsets of K_n as normalized antichains of cells.

Every clopen subset of K_n is a finite union of cells, and it has exactly one
description as a set of words in which no word is a prefix of another and no
complete family of n siblings occurs.  Equality of ``ClopenSet`` values is
therefore equality of the underlying sets.

Text syntax: ``{00, 01, 1}``; ``{}`` is empty and ``{*}`` is all of K_n.
"""

import re
from dataclasses import dataclass

from cantordiff.address import DIGITS, Address, Cell, check_arity, check_word
from cantordiff.errors import ArityMismatch, ParseError

_BRACES = re.compile(r"\s*\{(.*)\}\s*", re.S)


def _drop_covered(words):
    """Remove duplicates and every word that extends another word."""
    kept = []
    for w in sorted(set(words)):
        if kept and w.startswith(kept[-1]):
            continue
        kept.append(w)
    return kept


def _merge_siblings(words, n):
    by_len = {}
    for w in words:
        by_len.setdefault(len(w), set()).add(w)
    depth = max(by_len, default=0)
    while depth > 0:
        level = by_len.get(depth, set())
        counts = {}
        for w in level:
            counts[w[:-1]] = counts.get(w[:-1], 0) + 1
        for parent, count in counts.items():
            if count == n:
                level.difference_update(parent + d for d in DIGITS[:n])
                by_len.setdefault(depth - 1, set()).add(parent)
        depth -= 1
    return sorted(w for level in by_len.values() for w in level)


def normalize_words(words, n):
    """Normal form (sorted tuple of words) of a union of cells."""
    return tuple(_merge_siblings(_drop_covered(words), n))


@dataclass(frozen=True)
class ClopenSet:
    arity: int
    words: tuple = ()

    def __post_init__(self):
        check_arity(self.arity)
        words = tuple(self.words)
        for w in words:
            check_word(w, self.arity)
        object.__setattr__(self, "words", normalize_words(words, self.arity))

    @classmethod
    def _trusted(cls, n, words):
        obj = object.__new__(cls)
        object.__setattr__(obj, "arity", n)
        object.__setattr__(obj, "words", normalize_words(words, n))
        return obj

    @classmethod
    def full(cls, n):
        return cls(n, ("",))

    @classmethod
    def empty(cls, n):
        return cls(n, ())

    @classmethod
    def parse(cls, text, n):
        """Parse ``{w1, w2, ...}``; ``*`` (or ``ε``) is the empty word."""
        m = _BRACES.fullmatch(text)
        if m is None:
            raise ParseError(f"clopen set must be wrapped in braces: {text!r}", text)
        if not m.group(1).strip():
            return cls.empty(n)
        words = []
        start = m.start(1)
        for part in m.group(1).split(","):
            token = part.strip()
            pos = start + len(part) - len(part.lstrip())
            start += len(part) + 1
            if not token:
                raise ParseError("empty cell in clopen set", text, pos)
            if token in ("*", "ε"):
                token = ""
            for i, ch in enumerate(token):
                if ch not in DIGITS[:n]:
                    raise ParseError(f"bad digit {ch!r} for arity {n}", text, pos + i)
            words.append(token)
        return cls(n, words)

    def __str__(self):
        return "{" + ", ".join(w or "*" for w in self.words) + "}"

    def __repr__(self):
        return f"ClopenSet(n={self.arity}, {self})"

    def __bool__(self):
        return bool(self.words)

    def __iter__(self):
        return iter(self.words)

    def __len__(self):
        return len(self.words)

    def cells(self):
        return [Cell(self.arity, w) for w in self.words]

    def is_full(self):
        return self.words == ("",)

    def __or__(self, other):
        return union(self, other)

    def __and__(self, other):
        return intersection(self, other)

    def __invert__(self):
        return complement(self)

    def __le__(self, other):
        return is_subset(self, other)

    def __contains__(self, x):
        return contains_address(self, x)


def _same_arity(a, b):
    if a.arity != b.arity:
        raise ArityMismatch(f"arity {a.arity} vs {b.arity}")


def normalize(cells, n=None):
    """Build a ClopenSet from Cells (or raw words when ``n`` is given)."""
    cells = list(cells)
    if n is None:
        if not cells:
            raise ValueError("arity needed to normalize an empty list of cells")
        n = cells[0].arity
    words = []
    for c in cells:
        if isinstance(c, Cell):
            if c.arity != n:
                raise ArityMismatch(f"cell {c} has arity {c.arity}, expected {n}")
            words.append(c.word)
        else:
            words.append(c)
    return ClopenSet(n, words)


def union(a, b):
    _same_arity(a, b)
    return ClopenSet._trusted(a.arity, a.words + b.words)


def intersection(a, b):
    _same_arity(a, b)
    out = []
    for u in a.words:
        for v in b.words:
            if u.startswith(v):
                out.append(u)
            elif v.startswith(u):
                out.append(v)
    return ClopenSet._trusted(a.arity, out)


def _complement_under(prefix, words, alphabet):
    if not words:
        return [prefix]
    if words[0] == prefix:
        return []
    depth = len(prefix)
    out = []
    for d in alphabet:
        sub = [w for w in words if w[depth] == d]
        out.extend(_complement_under(prefix + d, sub, alphabet))
    return out


def complement(a):
    return ClopenSet._trusted(a.arity, _complement_under("", list(a.words), DIGITS[: a.arity]))


def difference(a, b):
    return intersection(a, complement(b))


def is_subset(a, b):
    _same_arity(a, b)
    # b is normalized, so a cell of a inside b lies under a single cell of b
    covers = set(b.words)
    return all(any(u[:k] in covers for k in range(len(u) + 1)) for u in a.words)


def is_disjoint(a, b):
    return not intersection(a, b)


def contains_address(a, x):
    if not isinstance(x, Address):
        raise TypeError(f"expected an Address, got {type(x).__name__}")
    if a.arity != x.arity:
        raise ArityMismatch(f"arity {a.arity} vs {x.arity}")
    if not a.words:
        return False
    head = x.prefix(max(len(w) for w in a.words))
    covers = set(a.words)
    return any(head[:k] in covers for k in range(len(head) + 1))
