"""Compare the compiled and pure-Python rule kernels.

Each workload runs in a fresh interpreter per backend, because the backend is
chosen once at import.  Usage::

    python benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import json
import os
import subprocess
import sys

WORKLOADS = r"""
import json, random, sys, timeit
from fractions import Fraction
from cantordiff import kernels
from cantordiff.element import compose, from_rules, inverse
from cantordiff.sampler import SamplerConfig, random_prefix_code, sample_element
from cantordiff.subgroups import distinct_words_check, enumerate_group
from cantordiff.syntax import parse_element

repeat = int(sys.argv[1])
rng = random.Random(7)
cells = random_prefix_code(2, 5, rng)
rot = from_rules(2, zip(cells, cells[1:] + cells[:1], [0] * 5))
swap = from_rules(2, zip(cells, [cells[1], cells[0]] + cells[2:], [0] * 5))
flip = from_rules(2, zip(cells, cells, [1] + [0] * 4))
h1 = parse_element("n=2; 0->00, 10->01, 11->1")
h2 = parse_element("n=2; 0->01, 10->00, 11->1")
pairs = [
    (sample_element(SamplerConfig(3, 15, Fraction(1, 3), seed)), sample_element(SamplerConfig(3, 15, Fraction(1, 3), seed + 999)))
    for seed in range(200)
]

def random_products():
    for f, g in pairs:
        compose(compose(f, g), inverse(f))

cases = {
    "enumerate hyperoctahedral B5 (3840 elements)": lambda: enumerate_group([rot, swap, flip]),
    "positive words of length <= 11 (4094 products)": lambda: distinct_words_check(h1, h2, 11),
    "600 products of random n=3 elements": random_products,
}
out = {"backend": kernels.BACKEND}
for name, fn in cases.items():
    out[name] = min(timeit.repeat(fn, number=1, repeat=repeat))
print(json.dumps(out))
"""


def run(pure, repeat):
    env = dict(os.environ, CANTORDIFF_PURE_PYTHON="1" if pure else "0")
    proc = subprocess.run([sys.executable, "-c", WORKLOADS, str(repeat)], env=env, capture_output=True, text=True, check=True)
    return json.loads(proc.stdout)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    compiled = run(False, args.repeat)
    python = run(True, args.repeat)
    if compiled.pop("backend") != "compiled":
        print("compiled kernel is not built; only the fallback timings are meaningful")
    python.pop("backend")
    width = max(len(k) for k in python)
    print(f"{'workload':<{width}}  {'python s':>9}  {'compiled s':>10}  {'speedup':>7}")
    for name, slow in python.items():
        fast = compiled[name]
        print(f"{name:<{width}}  {slow:9.4f}  {fast:10.4f}  {slow / fast:6.2f}x")


if __name__ == "__main__":
    main()
