"""Command-line front end.

    cantordiff <verb> [args] [--json] [--seed N] [--cap N] [--depth N] [--decimal K]

Elements are given inline (``"n=2; 0->00, 10->01, 11->1"``) or as ``@path``
to a file holding one.  Addresses use ``pre(period)`` and clopen sets
``{00, 1}``.  Exit status: 0 on success, 1 on invalid input, 2 when a cap
or the depth guard stops a computation.
"""

import argparse
import json
import sys
from fractions import Fraction

from cantordiff import dynamics, subgroups
from cantordiff.address import Address, coordinate
from cantordiff.clopen import ClopenSet
from cantordiff.element import DEFAULT_MAX_DEPTH, apply, compose, image, inverse, reduce
from cantordiff.errors import CantorDiffError, DepthExceeded
from cantordiff.sampler import SamplerConfig, sample_element
from cantordiff.syntax import decimal, format_element, format_fraction, parse_element

SCHEMA = 1
EXIT_OK, EXIT_INPUT, EXIT_CAP = 0, 1, 2


class CapReached(Exception):
    """Carries a result that stopped at a cap, so it is printed before exiting with 2."""

    def __init__(self, payload, text):
        self.payload, self.text = payload, text


def _read(text):
    if text.startswith("@"):
        with open(text[1:], encoding="utf-8") as fh:
            return fh.read().strip()
    return text


def _element(text, reduced=True):
    return parse_element(_read(text), reduced=reduced)


def _num(q, args):
    out = {"exact": format_fraction(q)}
    if args.decimal is not None:
        out["decimal"] = decimal(q, args.decimal)
    return out


def _num_text(q, args):
    text = format_fraction(q)
    if args.decimal is not None:
        text += f" (~{decimal(q, args.decimal)})"
    return text


def _point(x, args):
    return {"address": str(x), "coordinate": _num(coordinate(x), args)}


def cmd_compose(args):
    g, f = _element(args.g), _element(args.f)
    h = compose(g, f, args.depth)
    return {"element": format_element(h)}, format_element(h)


def cmd_inverse(args):
    h = inverse(_element(args.g))
    return {"element": format_element(h)}, format_element(h)


def cmd_reduce(args):
    h = reduce(_element(args.g, reduced=False))
    return {"element": format_element(h)}, format_element(h)


def cmd_apply(args):
    g = _element(args.g)
    y = apply(g, Address.parse(args.x, g.arity))
    return _point(y, args), f"{y}  coordinate {_num_text(coordinate(y), args)}"


def cmd_derivative(args):
    g = _element(args.g)
    d = dynamics.derivative_at(g, Address.parse(args.x, g.arity))
    return {"derivative": _num(d, args)}, _num_text(d, args)


def cmd_fixed_points(args):
    fs = dynamics.fixed_points(_element(args.g))
    return fs.to_json(), str(fs)


def cmd_periodic_points(args):
    per = dynamics.periodic_points(_element(args.g), args.rounds, args.depth)
    text = f"N={per.stabilizing_power} stabilized={str(per.stabilized).lower()} set={per.set}"
    if not per.stabilized:
        raise CapReached(per.to_json(), text)
    return per.to_json(), text


def cmd_order(args):
    result = dynamics.order(_element(args.g), args.rounds, args.depth)
    payload = result.to_json()
    if isinstance(result, dynamics.Finite):
        return payload, f"finite: {result.order}"
    if isinstance(result, dynamics.Infinite):
        return payload, (
            f"infinite: witness {result.witness} fixed by g^{result.power}, "
            f"derivative {_num_text(result.derivative, args)}"
        )
    raise CapReached(payload, f"unknown: {result.reason}")


def cmd_image(args):
    g = _element(args.g)
    out = image(g, ClopenSet.parse(args.a, g.arity))
    return {"image": str(out)}, str(out)


def _gens(texts):
    return subgroups.GeneratingSet.of(*(_element(t) for t in texts))


def cmd_enumerate(args):
    result = subgroups.enumerate_group(_gens(args.gens), args.cap, max_depth=args.depth)
    payload = result.to_json()
    if isinstance(result, subgroups.Exceeded):
        raise CapReached(payload, f"exceeded: more than {result.cap} elements")
    lines = [f"finite: {len(result)} elements"] + [format_element(g) for g in result.elements]
    return payload, "\n".join(lines)


def cmd_commutator(args):
    h = subgroups.commutator(_element(args.g), _element(args.h))
    return {"element": format_element(h)}, format_element(h)


def cmd_orbit(args):
    gens = _gens(args.gens)
    result = subgroups.orbit(Address.parse(args.x, gens.arity), gens, args.cap)
    if isinstance(result, subgroups.Exceeded):
        raise CapReached(result.to_json(), f"exceeded: more than {result.cap} points")
    payload = {"kind": "finite", "size": len(result), "points": [_point(p, args) for p in result.points]}
    lines = [f"finite orbit: {len(result)} points"]
    lines += [f"{p}  {_num_text(coordinate(p), args)}" for p in result.points]
    return payload, "\n".join(lines)


def cmd_crossed(args):
    result = subgroups.find_crossed(_gens(args.gens), args.search_depth, args.depth)
    payload = result.to_json()
    if isinstance(result, subgroups.NotFound):
        return payload, f"not found among {result.searched} elements"
    text = "\n".join(f"{k}: {v}" for k, v in payload.items())
    return payload, text


def cmd_pingpong(args):
    h1, h2 = _element(args.h1), _element(args.h2)
    a, b = ClopenSet.parse(args.a, h1.arity), ClopenSet.parse(args.b, h1.arity)
    ok = subgroups.pingpong_verify(h1, h2, a, b)
    return {"verified": ok}, "verified" if ok else "not verified"


def cmd_words_distinct(args):
    ok = subgroups.distinct_words_check(_element(args.f1), _element(args.f2), args.length, args.depth)
    return {"distinct": ok, "length": args.length}, "distinct" if ok else "collision"


def cmd_sample(args):
    cfg = SamplerConfig(args.arity, args.size, Fraction(args.flip_prob), args.seed)
    g = sample_element(cfg)
    return {"element": format_element(g)}, format_element(g)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--cap", type=int, default=subgroups.DEFAULT_CAP, help="element/point cap")
    common.add_argument("--depth", type=int, default=DEFAULT_MAX_DEPTH, help="maximum cell depth")
    common.add_argument("--decimal", type=int, metavar="K", help="also print K-digit decimals")

    parser = argparse.ArgumentParser(prog="cantordiff", description="Symbolic computations in diff(K_n).")
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name, func, *positionals, **kw):
        p = sub.add_parser(name, parents=[common], **kw)
        for spec in positionals:
            p.add_argument(*spec[:1], **spec[1])
        p.set_defaults(func=func)
        return p

    elem = {"help": "element text or @file"}
    verb("compose", cmd_compose, ("g", elem), ("f", elem), help="g after f")
    verb("inverse", cmd_inverse, ("g", elem))
    verb("reduce", cmd_reduce, ("g", elem))
    verb("apply", cmd_apply, ("g", elem), ("x", {"help": "address pre(period)"}))
    verb("derivative", cmd_derivative, ("g", elem), ("x", {"help": "address pre(period)"}))
    verb("fixed-points", cmd_fixed_points, ("g", elem))
    for name, func in (("periodic-points", cmd_periodic_points), ("order", cmd_order)):
        p = verb(name, func, ("g", elem))
        p.add_argument("--rounds", type=int, default=8, help="stabilization attempts")
    verb("image", cmd_image, ("g", elem), ("a", {"help": "clopen set, e.g. {00, 1}"}))
    verb("enumerate", cmd_enumerate, ("gens", {"nargs": "+", **elem}))
    verb("commutator", cmd_commutator, ("g", elem), ("h", elem))
    verb("orbit", cmd_orbit, ("x", {"help": "address pre(period)"}), ("gens", {"nargs": "+", **elem}))
    p = verb("crossed", cmd_crossed, ("gens", {"nargs": "+", **elem}))
    p.add_argument("--search-depth", type=int, default=subgroups.DEFAULT_SEARCH_DEPTH)
    verb("pingpong", cmd_pingpong, ("h1", elem), ("h2", elem), ("a", {}), ("b", {}))
    verb("words-distinct", cmd_words_distinct, ("f1", elem), ("f2", elem), ("length", {"type": int}))
    p = verb("sample", cmd_sample)
    p.add_argument("--arity", type=int, default=2)
    p.add_argument("--size", type=int, default=4)
    p.add_argument("--flip-prob", default="0", help="rational, e.g. 1/2")
    return parser


def _emit(args, payload, text, status="ok"):
    if args.json:
        print(json.dumps({"schema": SCHEMA, "command": args.verb, "status": status, "result": payload}))
    else:
        print(text, file=sys.stderr if status == "error" else sys.stdout)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, text = args.func(args)
    except CapReached as stop:
        _emit(args, stop.payload, stop.text, "cap")
        return EXIT_CAP
    except DepthExceeded as exc:
        _emit(args, {"error": str(exc)}, f"error: {exc}", "cap")
        return EXIT_CAP
    except (CantorDiffError, ValueError, OSError) as exc:
        _emit(args, {"error": str(exc)}, f"error: {exc}", "error")
        return EXIT_INPUT
    _emit(args, payload, text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
