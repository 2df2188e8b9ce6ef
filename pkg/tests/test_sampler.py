import random
from fractions import Fraction

import pytest

from cantordiff.dynamics import Finite, order
from cantordiff.element import Element, compose, global_flip, identity, inverse
from cantordiff.sampler import (
    SamplerConfig,
    random_prefix_code,
    sample_element,
    sample_finite_order,
    sample_sizes,
)


def test_config_validation():
    with pytest.raises(ValueError, match="partition size"):
        SamplerConfig(3, 4)
    with pytest.raises(ValueError):
        SamplerConfig(2, 0)
    with pytest.raises(ValueError, match="flip probability"):
        SamplerConfig(2, 3, Fraction(3, 2))
    with pytest.raises(ValueError):
        SamplerConfig(1, 1)
    assert SamplerConfig(2, 3, "1/3").flip_probability == Fraction(1, 3)
    assert SamplerConfig(2, 3, seed=-1).seed == 2**64 - 1


def test_rank_one_samples():
    for seed in range(20):
        g = sample_element(SamplerConfig(2, 1, Fraction(1, 2), seed))
        assert g in (identity(2), global_flip(2))
    assert sample_element(SamplerConfig(3, 1, Fraction(1), 0)) == global_flip(3)


def test_determinism():
    cfg = SamplerConfig(2, 4, Fraction(1, 2), 12345)
    assert sample_element(cfg) == sample_element(cfg)
    assert len({sample_element(SamplerConfig(2, 6, Fraction(1, 2), s)) for s in range(30)}) > 20


def test_samples_are_valid_and_invertible():
    for seed in range(1000):
        g = sample_element(SamplerConfig(2, 4, Fraction(1, 2), seed))
        Element(g.arity, g.rules)  # revalidates both prefix codes
        assert compose(g, inverse(g)) == identity(2)


def test_prefix_codes_are_complete():
    rng = random.Random(0)
    for n in (2, 3, 5):
        for size in sample_sizes(n, 12):
            code = random_prefix_code(n, size, rng)
            assert len(code) == size
            # Kraft equality for a complete n-ary prefix code
            assert sum(Fraction(1, n ** len(w)) for w in code) == 1


def test_flip_free_samples_stay_flip_free():
    els = [sample_element(SamplerConfig(3, 5, Fraction(0), s)) for s in range(40)]
    assert not any(g.has_flips() for g in els)
    for a, b in zip(els, els[1:]):
        assert not compose(a, b).has_flips()
    assert all(sample_element(SamplerConfig(2, 1, Fraction(1), s)).has_flips() for s in range(5))


def test_finite_order_sampler():
    rng = random.Random(9)
    for _ in range(20):
        g, cells = sample_finite_order(2, 5, rng)
        assert len(cells) == 5
        assert isinstance(order(g), Finite)


def test_sample_sizes():
    assert sample_sizes(2, 4) == [1, 2, 3, 4]
    assert sample_sizes(3, 8) == [1, 3, 5, 7]
