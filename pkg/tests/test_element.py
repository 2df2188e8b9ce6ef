import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cantordiff.address import Address, coordinate
from cantordiff.clopen import ClopenSet, intersection, union
from cantordiff.element import (
    Element,
    apply,
    compose,
    expand,
    from_rules,
    global_flip,
    identity,
    image,
    inverse,
    power,
    reduce,
)
from cantordiff.errors import ArityMismatch, DepthExceeded, InvalidElement
from cantordiff.sampler import SamplerConfig, sample_element
from cantordiff.syntax import parse_element

from conftest import G, addresses, affine_image, corner_points, element_with_address, elements


def E(text):
    return parse_element(text)


def raw(n, *rules):
    return Element(n, tuple(rules))


def test_identity():
    e = identity(2)
    assert e.rules == (("", "", 0),)
    x = Address(2, "", "10")
    assert apply(e, x) == x


def test_apply_examples(g, flip):
    x = Address(2, "1", "0")
    y = apply(g, x)
    assert y == Address(2, "01", "0")
    assert coordinate(x) == Fraction(2, 3) and coordinate(y) == Fraction(2, 9)
    assert coordinate(y) == affine_image(g, x)
    assert apply(flip, Address(2, "", "0")) == Address(2, "", "1")
    fixer = E("n=2; 0->0, 10->11, 11->10")
    z = Address(2, "0", "110")
    assert apply(fixer, z) == z


@given(element_with_address())
def test_apply_matches_affine_oracle(pair):
    g, x = pair
    assert coordinate(apply(g, x)) == affine_image(g, x)


def test_compose_examples(g, flip):
    assert compose(g, g) == raw(2, ("0", "000", 0), ("10", "001", 0), ("110", "01", 0), ("111", "1", 0))
    for x in ["(0)", "10(0)", "110(1)", "111(0)", "0(1)", "(10)", "1(01)"]:
        x = Address.parse(x, 2)
        assert apply(compose(g, g), x) == apply(g, apply(g, x))
    assert compose(flip, g) == raw(2, ("0", "11", 1), ("10", "10", 1), ("11", "0", 1))
    assert compose(g, inverse(g)) == identity(2)


def test_inverse_examples(g, flip):
    assert inverse(g) == raw(2, ("00", "0", 0), ("01", "10", 0), ("1", "11", 0))
    assert inverse(identity(3)) == identity(3)
    assert inverse(flip) == flip
    assert compose(flip, flip) == identity(2)


def test_reduce_examples(g):
    assert reduce(raw(2, ("00", "00", 0), ("01", "01", 0), ("1", "1", 0))) == identity(2)
    flipped = raw(2, ("0", "1", 1), ("1", "0", 1))
    assert reduce(flipped) == global_flip(2)
    for x in ["(0)", "(1)", "0(1)"]:
        x = Address.parse(x, 2)
        assert apply(flipped, x) == apply(global_flip(2), x)
    assert reduce(g) == g
    # n = 3 flipped family: child a goes to complement
    family = raw(3, ("00", "12", 1), ("01", "11", 1), ("02", "10", 1), ("1", "0", 0), ("2", "2", 0))
    assert reduce(family) == raw(3, ("0", "1", 1), ("1", "0", 0), ("2", "2", 0))
    # a family with mixed flips does not merge
    mixed = raw(2, ("0", "0", 0), ("1", "1", 1))
    assert reduce(mixed) == mixed


def test_expand_examples(g):
    assert expand(identity(2), 0) == raw(2, ("0", "0", 0), ("1", "1", 0))
    assert expand(global_flip(2), 0) == raw(2, ("0", "1", 1), ("1", "0", 1))
    assert expand(global_flip(3), 0) == raw(3, ("0", "2", 1), ("1", "1", 1), ("2", "0", 1))
    with pytest.raises(IndexError):
        expand(g, 3)


def test_image_examples(g, flip):
    assert image(g, ClopenSet(2, ["0"])) == ClopenSet(2, ["00"])
    assert image(flip, ClopenSet(2, ["0"])) == ClopenSet(2, ["1"])
    a = ClopenSet(2, ["01", "110"])
    assert image(identity(2), a) == a
    # shallow cell spread over several rules
    assert image(g, ClopenSet(2, ["1"])) == ClopenSet(2, ["01", "1"])


def test_invalid_elements():
    with pytest.raises(InvalidElement, match="range not a complete prefix code: missing 1"):
        raw(2, ("0", "00", 0), ("1", "01", 0))
    with pytest.raises(InvalidElement, match="domain cells overlap"):
        raw(2, ("0", "0", 0), ("01", "1", 0))
    with pytest.raises(InvalidElement, match="domain not a complete prefix code"):
        raw(3, ("0", "0", 0), ("1", "1", 0), ("20", "2", 0))
    with pytest.raises(InvalidElement):
        raw(2, ("0", "1", 2), ("1", "0", 0))
    with pytest.raises(InvalidElement):
        raw(2)
    with pytest.raises(ArityMismatch):
        compose(identity(2), identity(3))
    with pytest.raises(ArityMismatch):
        apply(identity(2), Address(3, "", "1"))


def test_depth_guard(g):
    assert len(power(g, 30).rules) == 32
    with pytest.raises(DepthExceeded):
        power(g, 100)
    deep = power(g, 100, max_depth=200)
    assert deep.rules[0] == ("0", "0" * 101, 0)


def test_power_agrees_with_repeated_composition(g, sigma):
    for el in (g, sigma, E("n=3; 0->1~, 1->2, 2->0"), E("n=3; 0->00, 1->01~, 20->02, 21->1, 22->2")):
        acc = identity(el.arity)
        for k in range(6):
            assert power(el, k) == acc
            assert power(el, -k) == inverse(acc)
            acc = compose(el, acc)


@settings(max_examples=200)
@given(st.data())
def test_homomorphism_and_group_laws(data):
    n = data.draw(st.sampled_from([2, 3]))
    f, g, h = (data.draw(elements(n)) for _ in range(3))
    x = data.draw(addresses(n))
    assert apply(compose(g, f), x) == apply(g, apply(f, x))
    assert compose(h, compose(g, f)) == compose(compose(h, g), f)
    assert compose(g, inverse(g)) == identity(n)
    assert compose(inverse(g), g) == identity(n)
    assert inverse(inverse(g)) == g
    assert compose(identity(n), g) == g == compose(g, identity(n))


@given(st.data())
def test_reduce_confluent_under_random_expansions(data):
    g = data.draw(elements())
    rng = random.Random(data.draw(st.integers(0, 2**32)))
    h = g
    for _ in range(data.draw(st.integers(1, 6))):
        h = expand(h, rng.randrange(len(h.rules)))
        for x in corner_points(g):
            assert apply(h, x) == apply(g, x)
    assert reduce(h) == g
    assert reduce(reduce(h)) == reduce(h)


def test_reduced_forms_decide_equality_brute_force():
    pool = set()
    for seed in range(300):
        for m in (1, 2, 3):
            pool.add(sample_element(SamplerConfig(2, m, Fraction(1, 2), seed)))
    pool = sorted(pool, key=str)
    assert len(pool) > 40
    for a, b in itertools.combinations(pool, 2):
        pts = corner_points(a, b)
        same = all(apply(a, x) == apply(b, x) for x in pts)
        assert not same, f"{a} and {b} agree on every corner"


@given(st.data())
def test_image_commutes_with_union(data):
    n = data.draw(st.sampled_from([2, 3]))
    g = data.draw(elements(n))
    words = st.lists(st.text("0123"[:n], max_size=3), max_size=4)
    a, b = ClopenSet(n, data.draw(words)), ClopenSet(n, data.draw(words))
    assert image(g, union(a, b)) == union(image(g, a), image(g, b))
    if not intersection(a, b):
        assert not intersection(image(g, a), image(g, b))
    assert image(inverse(g), image(g, a)) == a


@given(st.data())
def test_flip_free_rules_are_increasing(data):
    g = data.draw(elements(flips=False))
    x, y = data.draw(addresses(g.arity)), data.draw(addresses(g.arity))
    ux, uy = g.rule_for(x), g.rule_for(y)
    if ux == uy and x < y:
        assert apply(g, x) < apply(g, y)
    assert not g.has_flips()


def test_json_roundtrip(g):
    assert Element.from_json(g.to_json()) == g
    assert from_rules(2, g.rules) == g
