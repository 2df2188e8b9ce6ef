"""Derivatives, fixed points, periodic points and orders of single elements."""

from bisect import bisect_left
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm

from cantordiff.address import DIGITS, Address, complement, complement_table
from cantordiff.clopen import ClopenSet, contains_address, normalize
from cantordiff.element import DEFAULT_MAX_DEPTH, compose, power
from cantordiff.errors import ArityMismatch, DepthExceeded

def derivative_at(g, x):
    """Signed derivative of g at x: (-1)^flip * (2n-1)^(|u|-|v|) on the covering rule."""
    if g.arity != x.arity:
        raise ArityMismatch(f"element of arity {g.arity} at address of arity {x.arity}")
    return g.slope(g.rule_for(x))


@dataclass(frozen=True)
class FixedSet:
    """Fixed points of an element: a clopen set fixed pointwise plus isolated points.

    ``isolated`` holds ``(address, derivative)`` pairs sorted along the line.
    """

    clopen_part: ClopenSet
    isolated: tuple = ()

    @property
    def arity(self):
        return self.clopen_part.arity

    def points(self):
        return tuple(p for p, _ in self.isolated)

    def is_empty(self):
        return not self.clopen_part and not self.isolated

    def contains(self, x):
        return contains_address(self.clopen_part, x) or x in self.points()

    def same_points(self, other):
        """Equality as subsets of K_n (derivatives ignored)."""
        return self.clopen_part == other.clopen_part and self.points() == other.points()

    def hyperbolic(self):
        return [(p, d) for p, d in self.isolated if abs(d) != 1]

    def __str__(self):
        pts = ", ".join(f"({p}, {_frac(d)})" for p, d in self.isolated)
        return f"{{clopen: {self.clopen_part}, isolated: [{pts}]}}"

    def to_json(self):
        return {
            "clopen": str(self.clopen_part),
            "isolated": [{"address": str(p), "derivative": _frac(d)} for p, d in self.isolated],
        }


def _frac(q):
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def fixed_points(g):
    """Exact fixed set, computed rule by rule.

    A rule ``(u, v, e)`` contributes: its whole cell when ``u == v`` and
    ``e == 0``; the centre of the cell when ``u == v``, ``e == 1`` and n is
    odd; the unique solution of ``s = t + c^e(s)`` when ``v = u + t``; the
    mirror solution when ``u = v + t``; nothing otherwise.
    """
    n = g.arity
    fixed_cells = []
    points = []
    for rule in g.rules:
        u, v, e = rule
        if u == v:
            if not e:
                fixed_cells.append(u)
            elif n % 2:
                points.append((Address._trusted(n, u, DIGITS[(n - 1) // 2]), Fraction(-1)))
            continue
        if v.startswith(u):
            t = v[len(u):]
        elif u.startswith(v):
            t = u[len(v):]
        else:
            continue
        tail = t + complement(t, n) if e else t
        # u + tail^inf == v + tail^inf when one of u, v extends the other by t
        start = v if u.startswith(v) else u
        points.append((Address._trusted(n, start, tail), g.slope(rule)))
    points.sort(key=lambda item: item[0])
    return FixedSet(ClopenSet._trusted(n, fixed_cells), tuple(points))


@dataclass(frozen=True)
class PeriodicSet:
    """Per(g) as Fix(g^N).

    ``stabilized`` means the itinerary search finished, so N is a multiple of
    every period, and Fix(g^N) == Fix(g^2N) was checked on the powers.
    """

    stabilizing_power: int
    set: FixedSet
    stabilized: bool
    power_element: object = field(default=None, compare=False, repr=False)

    def to_json(self):
        return {"N": self.stabilizing_power, "stabilized": self.stabilized, "set": self.set.to_json()}


def _fixed_point_of(n, u, v, e):
    """Fixed point of the affine map u+s -> v+c^e(s) for nested, distinct u and v."""
    if v.startswith(u):
        t, start = v[len(u):], u
    else:
        t, start = u[len(v):], v
    return Address._trusted(n, start, t + complement(t, n) if e else t)


def _orbit(g, z):
    """Orbit of a periodic point and the derivative of g^period along it."""
    points, d, w = [], Fraction(1), z
    while True:
        points.append(w)
        d *= g.slope(g.rule_for(w))
        w = g(w)
        if w == z:
            return points, d


def _inside(word, cells):
    return any(word.startswith(c) for c in cells)


class ItinerarySearch:
    """Finds the periodic orbits of g by following cylinders of itineraries.

    A branch is a cell X of starting points that visited the same domain
    cells for j steps, with its image cell Y = g^j(X) and the parity of the
    flips used.  When X and Y are nested the branch closes: X is a periodic
    cell if X == Y, otherwise g^j contracts or expands X and has exactly one
    periodic point in it.  A branch whose X or Y lies inside a closed cell
    carries no periodic point that is not already known, so it is dropped.
    Once no branch is left every period has been seen.
    """

    def __init__(self, g, max_depth=DEFAULT_MAX_DEPTH):
        self.g, self.max_depth = g, max_depth
        self._table = complement_table(g.arity)
        self._domains = [u for u, _, _ in g.rules]
        self.periods = set()
        self.periodic_cells = []
        self.closed_cells = []
        self.orbits = {}  # point -> (period, derivative of g^period)
        self.steps = 0
        self._live = [(u, u, 0) for u in self._domains]

    @property
    def complete(self):
        return not self._live

    def run(self, steps):
        """Advance every live branch by up to ``steps`` steps."""
        for _ in range(steps):
            if not self._live:
                return
            self.steps += 1
            self._live = [b for branch in self._live for b in self._advance(*branch)]

    def _successors(self, x, y, par):
        g, doms = self.g, self._domains
        index = g._domain_index
        for k in range(min(len(y), g._max_domain) + 1):
            hit = index.get(y[:k])
            if hit is not None:
                v, e = hit
                s = y[k:]
                yield x, v + (s.translate(self._table) if e else s), par ^ e
                return
        i = bisect_left(doms, y)
        while i < len(doms) and doms[i].startswith(y):
            s = doms[i][len(y):]
            v, e = index[doms[i]]
            yield x + (s.translate(self._table) if par else s), v, par ^ e
            i += 1

    def _advance(self, x, y, par):
        j = self.steps
        for x2, y2, p2 in self._successors(x, y, par):
            depth = max(len(x2), len(y2))
            if depth > self.max_depth:
                raise DepthExceeded(depth, self.max_depth)
            if x2 == y2:
                self.periods.add(2 * j if p2 else j)
                self.periodic_cells.append(x2)
                self.closed_cells.append(x2)
            elif x2.startswith(y2) or y2.startswith(x2):
                self._record(_fixed_point_of(self.g.arity, x2, y2, p2))
                self.closed_cells.append(x2)
            elif _inside(x2, self.periodic_cells) or _inside(y2, self.periodic_cells):
                self.periodic_cells.append(x2)
            elif not (_inside(x2, self.closed_cells) or _inside(y2, self.closed_cells)):
                yield x2, y2, p2

    def _record(self, z):
        if z in self.orbits:
            return
        points, d = _orbit(self.g, z)
        self.periods.add(len(points))
        for w in points:
            self.orbits[w] = (len(points), d)

    def period_multiple(self):
        return lcm(*self.periods) if self.periods else 1

    def hyperbolic_points(self):
        """``(point, period, derivative of g^period)`` sorted along the line."""
        return [(p, k, d) for p, (k, d) in sorted(self.orbits.items())]

    def periodic_set(self, big):
        """Fix(g^big) for a multiple ``big`` of every period, read off the search."""
        isolated = tuple((p, d ** (big // k)) for p, k, d in self.hyperbolic_points())
        return FixedSet(normalize(self.periodic_cells, self.g.arity), isolated)


def _search(g, max_rounds, max_depth):
    if max_rounds < 1:
        raise ValueError("max_rounds must be positive")
    search = ItinerarySearch(g, max_depth)
    budget = 4 * len(g.rules) + 8
    for _ in range(max_rounds):
        search.run(budget)
        if search.complete:
            break
        budget *= 2
    return search


def periodic_points(g, max_rounds=8, max_depth=DEFAULT_MAX_DEPTH):
    """Find N with Per(g) = Fix(g^N).

    N is the lcm of the periods found by the itinerary search, which gets
    ``max_rounds`` rounds with a doubling step budget.  Fix(g^N) is computed
    from the power and checked against Fix(g^2N) and against the search.
    """
    search = _search(g, max_rounds, max_depth)
    big = search.period_multiple()
    current = power(g, big, max_depth)
    current_fix = fixed_points(current)
    stabilized = False
    if search.complete:
        twice = fixed_points(compose(current, current, max_depth))
        stabilized = current_fix.same_points(twice) and current_fix == search.periodic_set(big)
    return PeriodicSet(big, current_fix, stabilized, current)


@dataclass(frozen=True)
class Finite:
    order: int
    kind = "finite"

    def to_json(self):
        return {"kind": self.kind, "order": self.order}


@dataclass(frozen=True)
class Infinite:
    """Infinite order, witnessed by a hyperbolic fixed point of ``g**power``."""

    witness: Address
    power: int
    derivative: Fraction
    kind = "infinite"

    def to_json(self):
        return {
            "kind": self.kind,
            "witness": str(self.witness),
            "power": self.power,
            "derivative": _frac(self.derivative),
        }


@dataclass(frozen=True)
class Unknown:
    reason: str
    kind = "unknown"

    def to_json(self):
        return {"kind": self.kind, "reason": self.reason}


def order(g, max_rounds=8, max_depth=DEFAULT_MAX_DEPTH):
    """Finite(k), Infinite(witness) or Unknown(reason); Unknown is never guessed away."""
    hyperbolic = fixed_points(g).hyperbolic()
    if hyperbolic:
        return Infinite(hyperbolic[0][0], 1, hyperbolic[0][1])
    try:
        search = _search(g, max_rounds, max_depth)
    except DepthExceeded as exc:
        return Unknown(f"depth guard hit while following itineraries: {exc}")
    found = search.hyperbolic_points()
    if found:
        return Infinite(*found[0])
    if not search.complete:
        return Unknown(f"itinerary search unfinished after {search.steps} steps")
    # no hyperbolic orbit and nothing left unexplored: every point is periodic
    big = search.period_multiple()
    try:
        for d in range(1, big + 1):
            if big % d == 0 and power(g, d, max_depth).is_identity():
                return Finite(d)
    except DepthExceeded as exc:
        return Unknown(f"depth guard hit while computing powers: {exc}")
    return Unknown(f"g^{big} is not the identity although every point is periodic")


def is_hyperbolic_somewhere(g):
    return bool(fixed_points(g).hyperbolic())
