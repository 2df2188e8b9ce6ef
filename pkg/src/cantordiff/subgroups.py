"""Procedures on finitely generated subgroups.

Closure enumeration, orbits, commutators, ping-pong certificates for free
subsemigroups and the search for crossed pairs that produce them.
"""

from collections import deque
from dataclasses import dataclass

from cantordiff.address import Address, Cell, cell_endpoints
from cantordiff.clopen import ClopenSet, contains_address, intersection, is_subset, union
from cantordiff.dynamics import FixedSet, derivative_at, fixed_points
from cantordiff.element import (
    DEFAULT_MAX_DEPTH,
    Element,
    apply,
    compose,
    identity,
    image,
    inverse,
    power,
    reduce,
)
from cantordiff.errors import ArityMismatch

DEFAULT_CAP = 10_000
DEFAULT_SEARCH_DEPTH = 6


@dataclass(frozen=True)
class GeneratingSet:
    """Reduced generators with identity and duplicates removed (order kept).

    An input made only of identities gives an empty generator list, which
    stands for the trivial group.
    """

    arity: int
    generators: tuple

    def __post_init__(self):
        gens = []
        for g in self.generators:
            if g.arity != self.arity:
                raise ArityMismatch(f"generator of arity {g.arity} in a set of arity {self.arity}")
            g = reduce(g)
            if not g.is_identity() and g not in gens:
                gens.append(g)
        object.__setattr__(self, "generators", tuple(gens))

    @classmethod
    def of(cls, *elements):
        if not elements:
            raise ValueError("a generating set needs at least one element")
        return cls(elements[0].arity, elements)

    def symmetric(self):
        """Generators followed by their inverses, without repeats."""
        out = list(self.generators)
        for g in self.generators:
            g_inv = inverse(g)
            if g_inv not in out:
                out.append(g_inv)
        return out

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)


def _as_gens(gens):
    if isinstance(gens, GeneratingSet):
        return gens
    return GeneratingSet.of(*gens)


@dataclass(frozen=True)
class FiniteClosure:
    elements: tuple
    multiplication_closed: bool
    table_checked: bool
    kind = "finite"

    def __len__(self):
        return len(self.elements)

    def to_json(self):
        return {
            "kind": self.kind,
            "size": len(self.elements),
            "multiplication_closed": self.multiplication_closed,
            "elements": [str(g) for g in self.elements],
        }


@dataclass(frozen=True)
class Exceeded:
    cap: int
    count_reached: int
    kind = "exceeded"

    def to_json(self):
        return {"kind": self.kind, "cap": self.cap, "count_reached": self.count_reached}


def closure_check(elements, table_limit=200):
    """(closed, full_table_used) for a finite set of elements."""
    pool = set(elements)
    if any(inverse(g) not in pool for g in elements):
        return False, False
    if len(elements) > table_limit:
        return True, False
    return all(compose(a, b) in pool for a in elements for b in elements), True


def enumerate_group(gens, cap=DEFAULT_CAP, table_limit=200, max_depth=DEFAULT_MAX_DEPTH):
    """Breadth-first closure from the identity under the generators and inverses.

    The reduced form is the deduplication key.  Returns ``FiniteClosure`` if
    the frontier empties with at most ``cap`` elements, ``Exceeded``
    otherwise.  For at most ``table_limit`` elements the whole
    multiplication table is checked; above that only inverse closure is
    checked, since generator closure holds by construction.
    """
    if cap < 1:
        raise ValueError("cap must be at least 1")
    gens = _as_gens(gens)
    step = gens.symmetric()
    start = identity(gens.arity)
    seen = {start}
    elements = [start]
    queue = deque([start])
    while queue:
        current = queue.popleft()
        for s in step:
            nxt = compose(current, s, max_depth)
            if nxt in seen:
                continue
            if len(seen) >= cap:
                return Exceeded(cap, len(seen))
            seen.add(nxt)
            elements.append(nxt)
            queue.append(nxt)
    closed, table = closure_check(elements, table_limit)
    return FiniteClosure(tuple(elements), closed, table)


def commutator(g, h):
    """g h g^-1 h^-1."""
    if g.arity != h.arity:
        raise ArityMismatch(f"arity {g.arity} vs {h.arity}")
    return compose(compose(g, h), compose(inverse(g), inverse(h)))


@dataclass(frozen=True)
class FiniteOrbit:
    points: tuple
    kind = "finite"

    def __len__(self):
        return len(self.points)

    def to_json(self):
        return {"kind": self.kind, "size": len(self.points), "points": [str(p) for p in self.points]}


def orbit(x, gens, cap=DEFAULT_CAP):
    if cap < 1:
        raise ValueError("cap must be at least 1")
    gens = _as_gens(gens)
    if gens.arity != x.arity:
        raise ArityMismatch(f"address of arity {x.arity}, generators of arity {gens.arity}")
    step = gens.symmetric()
    seen = {x}
    queue = deque([x])
    while queue:
        current = queue.popleft()
        for s in step:
            y = apply(s, current)
            if y in seen:
                continue
            if len(seen) >= cap:
                return Exceeded(cap, len(seen))
            seen.add(y)
            queue.append(y)
    return FiniteOrbit(tuple(sorted(seen)))


def common_fixed_set(gens):
    """Points fixed by every generator."""
    gens = _as_gens(gens)
    n = gens.arity
    if not gens.generators:
        return FixedSet(ClopenSet.full(n))
    sets = [fixed_points(g) for g in gens]
    clopen = sets[0].clopen_part
    for fs in sets[1:]:
        clopen = intersection(clopen, fs.clopen_part)
    candidates = {p for fs in sets for p in fs.points()}
    isolated = []
    for p in sorted(candidates):
        if contains_address(clopen, p):
            continue
        if all(apply(g, p) == p for g in gens):
            isolated.append((p, derivative_at(gens.generators[0], p)))
    return FixedSet(clopen, tuple(isolated))


def pingpong_verify(h1, h2, a, b):
    """Exact check of the positive ping-pong inclusions.

    True certifies that h1 and h2 generate a free semigroup.
    """
    if not (h1.arity == h2.arity == a.arity == b.arity):
        raise ArityMismatch("ping-pong data must share one arity")
    if not a or not b or intersection(a, b):
        return False
    both = union(a, b)
    return is_subset(image(h1, both), a) and is_subset(image(h2, both), b)


def positive_words(f1, f2, length, max_depth=DEFAULT_MAX_DEPTH):
    """Yield (word, element) for every positive word of length 1..length, shortest first."""
    layer = [("", identity(f1.arity))]
    named = (("1", f1), ("2", f2))
    for _ in range(length):
        nxt = []
        for word, value in layer:
            for letter, f in named:
                nxt.append((word + letter, compose(value, f, max_depth)))
        yield from nxt
        layer = nxt


def distinct_words_check(f1, f2, length, max_depth=DEFAULT_MAX_DEPTH):
    """True when all positive words of length <= ``length`` give different elements.

    Necessary for freeness, never a certificate of it.
    """
    if length < 1:
        raise ValueError("word length must be at least 1")
    if f1.arity != f2.arity:
        raise ArityMismatch(f"arity {f1.arity} vs {f2.arity}")
    seen = set()
    for _, value in positive_words(f1, f2, length, max_depth):
        if value in seen:
            return False
        seen.add(value)
    return True


@dataclass(frozen=True)
class CrossedWitness:
    """A crossed pair (g, h) with the ping-pong data it yields.

    ``f1 = g**n`` and ``f2 = h * f1``; A and B are the ping-pong sets.
    """

    g: Element
    h: Element
    p1: Address
    p2: Address
    n: int
    f1: Element
    f2: Element
    A: ClopenSet
    B: ClopenSet

    def check(self):
        """Re-verify every defining property from scratch."""
        g, h, p1, p2 = self.g, self.h, self.p1, self.p2
        if not p1 < p2:
            return False
        if apply(g, p1) != p1 or apply(g, p2) != p2:
            return False
        if _fixed_between(fixed_points(g), p1, p2):
            return False
        if not (_increasing_on(g, p1, p2) and _increasing_on(h, p1, p2)):
            return False
        if not (p1 < apply(h, p1) < p2 or p1 < apply(h, p2) < p2):
            return False
        if self.f1 != power(g, self.n) or self.f2 != compose(h, self.f1):
            return False
        if intersection(self.A, self.B):
            return False
        return pingpong_verify(self.f1, self.f2, self.A, self.B)

    def to_json(self):
        return {
            "g": str(self.g),
            "h": str(self.h),
            "p1": str(self.p1),
            "p2": str(self.p2),
            "n": self.n,
            "f1": str(self.f1),
            "f2": str(self.f2),
            "A": str(self.A),
            "B": str(self.B),
            "verified": self.check(),
        }


@dataclass(frozen=True)
class NotFound:
    searched: int = 0
    kind = "not_found"

    def to_json(self):
        return {"kind": self.kind, "elements_searched": self.searched}


def _cell_interval(n, word):
    return cell_endpoints(Cell(n, word))


def _increasing_on(g, p1, p2):
    """All rules whose domain cell meets [p1, p2] carry no flip."""
    lo, hi = p1.coordinate(), p2.coordinate()
    for u, _, e in g.rules:
        if e:
            left, right = _cell_interval(g.arity, u)
            if left <= hi and right >= lo:
                return False
    return True


def _fixed_between(fixed, p1, p2):
    if any(p1 < p < p2 for p in fixed.points()):
        return True
    lo, hi = p1.coordinate(), p2.coordinate()
    for w in fixed.clopen_part:
        left, right = _cell_interval(fixed.arity, w)
        if left < hi and right > lo:
            return True
    return False


def adjacent_fixed_pairs(g):
    """Pairs p1 < p2 of fixed points of g with no fixed point strictly between."""
    n = g.arity
    fixed = fixed_points(g)
    marks = set(fixed.points())
    for w in fixed.clopen_part:
        marks.add(Cell(n, w).left())
        marks.add(Cell(n, w).right())
    ordered = sorted(marks)
    return [(p, q) for p, q in zip(ordered, ordered[1:]) if not _fixed_between(fixed, p, q)]


def product_elements(gens, length, max_depth=DEFAULT_MAX_DEPTH):
    """Distinct non-identity products of generators and inverses up to ``length``,
    in length-lexicographic order of the first word reaching each."""
    gens = _as_gens(gens)
    step = gens.symmetric()
    start = identity(gens.arity)
    seen = {start}
    out = []
    layer = [start]
    for _ in range(length):
        nxt = []
        for value in layer:
            for s in step:
                prod = compose(value, s, max_depth)
                if prod not in seen:
                    seen.add(prod)
                    nxt.append(prod)
        out.extend(nxt)
        layer = nxt
    return out


def _build_witness(g, h, p1, p2, p, search_depth, max_depth):
    """Ping-pong data around the endpoint p, which h pushes into (p1, p2)."""
    slope = derivative_at(g, p)
    if abs(slope) == 1:
        return None
    sign = 1 if abs(slope) < 1 else -1
    contracting = g if sign == 1 else inverse(g)
    longest = max(len(u) for u, _, _ in g.rules + h.rules)
    deepest = longest + len(p.preperiod) + len(p.period) + search_depth
    for k in range(1, deepest + 1):
        a = ClopenSet._trusted(g.arity, [p.prefix(k)])
        b = image(h, a)
        if intersection(a, b):
            continue
        current = union(a, b)
        for steps in range(1, search_depth + 1):
            current = image(contracting, current)
            if is_subset(current, a):
                f1 = power(g, sign * steps, max_depth)
                f2 = compose(h, f1, max_depth)
                witness = CrossedWitness(g, h, p1, p2, sign * steps, f1, f2, a, b)
                if witness.check():
                    return witness
                break
    return None


def find_crossed(gens, search_depth=DEFAULT_SEARCH_DEPTH, max_depth=DEFAULT_MAX_DEPTH):
    """First crossed pair among generator products of length <= search_depth.

    Candidates are visited in length-lexicographic order, g before h.  A pair
    qualifies when p1 < p2 are adjacent fixed points of g, g and h carry no
    flip on [p1, p2], and h moves p1 or p2 strictly inside (p1, p2).  The
    endpoint pushed inside must be a hyperbolic fixed point of g, so that a
    small cell around it is contracted by a power of g.  Every returned
    witness has passed ``CrossedWitness.check``.
    """
    if search_depth < 1:
        raise ValueError("search_depth must be at least 1")
    candidates = product_elements(gens, search_depth, max_depth)
    for g in candidates:
        pairs = adjacent_fixed_pairs(g)
        pairs = [(p1, p2) for p1, p2 in pairs if _increasing_on(g, p1, p2)]
        if not pairs:
            continue
        for h in candidates:
            for p1, p2 in pairs:
                if not _increasing_on(h, p1, p2):
                    continue
                for p in (p1, p2):
                    if not p1 < apply(h, p) < p2:
                        continue
                    witness = _build_witness(g, h, p1, p2, p, search_depth, max_depth)
                    if witness is not None:
                        return witness
    return NotFound(len(candidates))
