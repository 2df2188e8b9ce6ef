"""Exact computations in the groups of diffeomorphisms of the Cantor sets K_n."""

from cantordiff.address import Address, Cell, cell_endpoints, compare, coordinate
from cantordiff.clopen import ClopenSet, complement, contains_address, intersection, is_subset, normalize, union
from cantordiff.dynamics import (
    Finite,
    FixedSet,
    Infinite,
    PeriodicSet,
    Unknown,
    derivative_at,
    fixed_points,
    order,
    periodic_points,
)
from cantordiff.element import (
    DEFAULT_MAX_DEPTH,
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
from cantordiff.errors import ArityMismatch, CantorDiffError, DepthExceeded, InvalidElement, ParseError
from cantordiff.kernels import BACKEND
from cantordiff.sampler import SamplerConfig, sample_element
from cantordiff.subgroups import (
    CrossedWitness,
    Exceeded,
    FiniteClosure,
    FiniteOrbit,
    GeneratingSet,
    NotFound,
    commutator,
    distinct_words_check,
    enumerate_group,
    find_crossed,
    orbit,
    pingpong_verify,
)
from cantordiff.syntax import format_element, parse_element

__version__ = "0.1.0"
