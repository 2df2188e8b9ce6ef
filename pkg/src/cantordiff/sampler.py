"""Random elements built from two random partitions, a bijection and flips.

The partitions are grown from the root by repeatedly splitting a uniformly
chosen leaf into its n children.  Randomness comes from ``random.Random``
(Mersenne Twister), whose output for a given integer seed is the same on
every platform.
"""

import random
from dataclasses import dataclass
from fractions import Fraction

from cantordiff.address import DIGITS, check_arity
from cantordiff.element import from_rules


@dataclass(frozen=True)
class SamplerConfig:
    arity: int
    partition_size: int
    flip_probability: Fraction = Fraction(0)
    seed: int = 0

    def __post_init__(self):
        n = check_arity(self.arity)
        m = self.partition_size
        if not isinstance(m, int) or m < 1 or (m - 1) % (n - 1):
            raise ValueError(f"partition size {m!r} is not reachable for arity {n}: need m = 1 mod {n - 1}")
        p = Fraction(self.flip_probability)
        if not 0 <= p <= 1:
            raise ValueError(f"flip probability must lie in [0, 1], got {p}")
        object.__setattr__(self, "flip_probability", p)
        object.__setattr__(self, "seed", int(self.seed) & (2**64 - 1))


def random_prefix_code(n, size, rng):
    leaves = [""]
    while len(leaves) < size:
        leaf = leaves.pop(rng.randrange(len(leaves)))
        leaves.extend(leaf + d for d in DIGITS[:n])
    return leaves


def _bernoulli(p, rng):
    # exact for rational p
    return rng.randrange(p.denominator) < p.numerator


def sample_element(cfg, rng=None):
    """Reduced random element; deterministic for a given config when ``rng`` is None."""
    rng = rng or random.Random(cfg.seed)
    n, m = cfg.arity, cfg.partition_size
    domains = random_prefix_code(n, m, rng)
    ranges = random_prefix_code(n, m, rng)
    rng.shuffle(ranges)
    flips = [int(_bernoulli(cfg.flip_probability, rng)) for _ in range(m)]
    return from_rules(n, zip(domains, ranges, flips))


def sample_finite_order(n, size, rng, flip_probability=Fraction(1, 2), cells=None):
    """Random permutation of the cells of one partition, with random flips.

    Such an element has finite order: a power equal to the permutation's order
    maps every cell to itself, and the square of that is the identity.  Pass
    ``cells`` to reuse a partition; elements permuting the same partition
    generate a finite group.
    """
    if cells is None:
        cells = random_prefix_code(n, size, rng)
    targets = cells[:]
    rng.shuffle(targets)
    flips = [int(_bernoulli(Fraction(flip_probability), rng)) for _ in cells]
    return from_rules(n, zip(cells, targets, flips)), cells


def sample_sizes(n, limit):
    """Partition sizes reachable for arity n, up to limit."""
    return list(range(1, limit + 1, n - 1))
