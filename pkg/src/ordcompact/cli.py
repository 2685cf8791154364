"""Verb-style command line: ``ordcompact <verb> [options]``.

Exit status is 0 on success, 1 when an operation raises a domain error and 2
on usage errors (including malformed literals). Output never depends on the
clock; omitted seeds default to 0.

Topology arguments accept inline JSON (``{"n":2,"opens":[[],[0],[0,1]]}``),
``@path`` to a JSON file, or the shorthands ``trivial:N``, ``discrete:N`` and
``sierpinski[:k]``. Point sets are comma-separated indices (``0,2``) or a JSON
list; ``{}`` is the empty set.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import compactify, finspace, lattice, ordinal, separation
from .errors import WorkbenchError
from .finspace import Topology, indices_of, mask_of


def parse_topology(text: str) -> Topology:
    text = text.strip()
    if text.startswith("@"):
        text = Path(text[1:]).read_text(encoding="utf-8")
    m = re.fullmatch(r"(trivial|discrete):(\d+)", text)
    if m:
        return finspace.standard_topology(int(m[2]), m[1])
    m = re.fullmatch(r"sierpinski(?::([01]))?", text)
    if m:
        return finspace.sierpinski(int(m[1] or 0))
    return Topology.from_json(text)


def parse_points(text: str) -> list[int]:
    text = text.strip()
    if text in ("", "{}", "[]"):
        return []
    if text.startswith("["):
        return [int(i) for i in json.loads(text)]
    return [int(t) for t in text.strip("{}").split(",")]


def _arg(fn):
    """Adapt a parser so argparse reports failures as usage errors."""

    def wrapped(text):
        try:
            return fn(text)
        except (WorkbenchError, ValueError, KeyError, TypeError, OSError) as exc:
            raise argparse.ArgumentTypeError(f"{exc}") from exc

    wrapped.__name__ = fn.__name__
    return wrapped


def _probability(text: str) -> float:
    return float(text)


def _exceptions(text: str) -> tuple:
    pairs = []
    for item in filter(None, (t.strip() for t in text.split(","))):
        k, v = item.split(":")
        pairs.append((ordinal.parse_ordinal(k), float(v)))
    return tuple(pairs)


def _emit(text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    sys.stdout.write(text)


def _json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def _opens_text(T: Topology) -> str:
    return " ".join("{" + ",".join(map(str, indices_of(u))) + "}" for u in T.opens)


def _topology_out(T: Topology, fmt: str) -> str:
    if fmt == "json":
        return _json(T.to_dict())
    return f"n={T.n} opens={len(T)}: {_opens_text(T)}"


def _single_topology(args) -> Topology:
    if args.file is not None:
        return args.file
    if args.topology is None:
        raise UsageError("one of --topology or --file is required")
    return args.topology


class UsageError(Exception):
    pass


def cmd_enumerate(args) -> str:
    progress = None
    if args.n == lattice.MAX_ENUM_POINTS:
        progress = lambda k: print(f"... {k} topologies", file=sys.stderr)  # noqa: E731
    count, tops = lattice.enumerate_topologies(args.n, progress=progress)
    if args.count_only:
        return str(count)
    if args.format == "dot":
        return lattice.hasse_dot(args.n)
    tops = list(tops)
    if args.unlabeled:
        tops = sorted(set(lattice.canonical_form(t) for t in tops), key=lambda t: t.opens)
    if args.format == "json":
        return _json({"n": args.n, "count": len(tops), "topologies": [t.to_dict() for t in tops]})
    lines = [str(len(tops))]
    for T in tops:
        lines.append(f"{separation.classify(T).strongest or 'None':>4}  {_opens_text(T)}")
    return "\n".join(lines)


def cmd_classify(args) -> str:
    T = _single_topology(args)
    fn = separation.classify_definitional if args.definitional else separation.classify
    prof = fn(T)
    if args.format == "json":
        return _json(prof.to_dict())
    return separation.describe(prof)


def _chain_dot(chain: lattice.Chain, trace: lattice.ChainTrace) -> str:
    lines = ["digraph chain {", "  rankdir=BT;", "  node [shape=box];"]
    for step, T in zip(trace.steps, chain):
        label = f"i={step.parameter}\\n{len(T)} opens\\n{step.profile.strongest or 'None'}"
        lines.append(f'  c{step.index} [label="{label}"];')
    for j in range(len(chain) - 1):
        lines.append(f"  c{j} -> c{j + 1};")
    lines.append("}")
    return "\n".join(lines)


def cmd_chain(args) -> str:
    chain = lattice.deformation_chain(args.n, args.strategy, args.seed)
    trace = lattice.classify_chain(chain)
    if args.format == "json":
        return _json(lattice.chain_dump(chain, trace))
    if args.format == "dot":
        return _chain_dot(chain, trace)
    lines = [f"chain length {len(chain)} ({args.strategy}, seed {args.seed})"]
    for (j, param, seen, scheduled), T in zip(trace.schedule_rows(), chain):
        lines.append(
            f"{j:>3} i={str(param):<6} observed={seen or 'None':<4} "
            f"schedule={scheduled or 'None':<8} {_opens_text(T)}"
        )
    bounds = ", ".join(f"{k}@{v}" for k, v in trace.boundaries.items())
    lines.append(f"first index achieving: {bounds}")
    return "\n".join(lines)


def cmd_homotopy(args) -> str:
    chain = lattice.deformation_chain(args.n, args.strategy, args.seed)
    return _topology_out(lattice.homotopy_eval(chain, args.i), args.format)


def cmd_meet(args) -> str:
    return _topology_out(lattice.meet(args.a, args.b), args.format)


def cmd_join(args) -> str:
    return _topology_out(lattice.join(args.a, args.b), args.format)


def _set_query(args):
    T = _single_topology(args)
    return T, T.ground.check(mask_of(args.set))


def cmd_limit_points(args) -> str:
    T, S = _set_query(args)
    result = {"set": indices_of(S), "derived": indices_of(finspace.derived_set(T, S))}
    if args.point is not None:
        result["point"] = args.point
        result["is_limit_point"] = finspace.is_limit_point(T, S, args.point)
    if args.format == "json":
        return _json(result)
    return "\n".join(f"{k}: {v}" for k, v in result.items())


def cmd_closure(args) -> str:
    T, S = _set_query(args)
    result = {
        "set": indices_of(S),
        "closure": indices_of(finspace.closure(T, S)),
        "interior": indices_of(finspace.interior(T, S)),
    }
    if args.format == "json":
        return _json(result)
    return "\n".join(f"{k}: {v}" for k, v in result.items())


def cmd_dense(args) -> str:
    T, S = _set_query(args)
    dense = finspace.is_dense(T, S)
    if args.format == "json":
        return _json({"set": indices_of(S), "dense": dense})
    return str(dense).lower()


def cmd_ordinal(args) -> str:
    space, S = args.space, args.set
    result = {
        "space": str(space),
        "set": str(S),
        "is_open": ordinal.is_open(space, S),
        "derived": str(ordinal.derived_set_o(space, S)),
        "closure": str(ordinal.closure_o(space, S)),
        "dense": ordinal.is_dense_o(space, S),
    }
    if space == ordinal.ONE_POINT:
        result["alexandroff_open"] = ordinal.alexandroff_open(S)
    if args.format == "json":
        return _json(result)
    return "\n".join(f"{k}: {str(v).lower() if isinstance(v, bool) else v}" for k, v in result.items())


def cmd_cover(args) -> str:
    steps = ordinal.subcover_steps(args.space, args.atoms)
    if args.format == "json":
        return _json({
            "space": str(args.space),
            "atoms": str(args.atoms),
            "subcover": [str(s.member) for s in steps],
        })
    lines = [f"finite subcover of {args.space} with {len(steps)} members:"]
    for s in steps:
        at = "tail" if s.point is None else str(s.point)
        lines.append(f"  {s.member}   (atom {args.atoms.atoms[s.atom_index]}, covering {at})")
    return "\n".join(lines)


def cmd_compactify(args) -> str:
    report = compactify.run_pipeline(args.n, args.strategy, args.seed, args.alpha)
    if args.format == "json":
        return report.to_json()
    return report.render_text()


def cmd_maps(args) -> str:
    maps = compactify.all_continuous_maps(args.dom, args.cod)
    if args.format == "json":
        return _json({"count": len(maps), "maps": [list(f) for f in maps]})
    return "\n".join([str(len(maps))] + [" ".join(map(str, f)) for f in maps])


def cmd_extend(args) -> str:
    f = compactify.EventuallyConstantMap(args.exceptions, args.tail)
    ext = compactify.extend_eventually_constant(f)
    result = {"map": f.to_dict(), "value_at_w": ext.value, "tail_start": ext.tail_start}
    if args.format == "json":
        return _json(result)
    return f"value at w: {ext.value}\ntail start: {ext.tail_start}"


def _add_format(p, choices=("text", "json")):
    p.add_argument("--format", choices=choices, default="text")


def _add_chain_args(p):
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--strategy", choices=lattice.STRATEGIES, default="singleton_ascending")
    p.add_argument("--seed", type=int, default=0)


def _add_topology_args(p):
    p.add_argument("--topology", type=_arg(parse_topology), help="inline JSON or shorthand")
    p.add_argument("--file", type=_arg(lambda s: parse_topology("@" + s)), help="JSON file")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ordcompact", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True, metavar="verb")
    parser.verbs = sub.choices

    p = sub.add_parser("enumerate", help="all topologies on n points")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--unlabeled", action="store_true", help="one topology per relabeling class")
    _add_format(p, ("text", "json", "dot"))
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("classify", help="separation axioms of a topology")
    _add_topology_args(p)
    p.add_argument("--definitional", action="store_true", help="use the brute-force checker")
    _add_format(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("chain", help="deformation chain from trivial to discrete")
    _add_chain_args(p)
    _add_format(p, ("text", "json", "dot"))
    p.set_defaults(func=cmd_chain)

    p = sub.add_parser("homotopy", help="chain entry at parameter i in [0,1]")
    _add_chain_args(p)
    p.add_argument("--i", type=_arg(_probability), required=True)
    _add_format(p)
    p.set_defaults(func=cmd_homotopy)

    for verb, func in (("meet", cmd_meet), ("join", cmd_join)):
        p = sub.add_parser(verb, help=f"lattice {verb} of two topologies")
        p.add_argument("--a", type=_arg(parse_topology), required=True)
        p.add_argument("--b", type=_arg(parse_topology), required=True)
        _add_format(p)
        p.set_defaults(func=func)

    for verb, func in (("limit-points", cmd_limit_points), ("closure", cmd_closure), ("dense", cmd_dense)):
        p = sub.add_parser(verb, help=f"{verb} of a point set in a finite space")
        _add_topology_args(p)
        p.add_argument("--set", type=_arg(parse_points), required=True)
        if verb == "limit-points":
            p.add_argument("--point", type=int)
        _add_format(p)
        p.set_defaults(func=func)

    p = sub.add_parser("ordinal", help="order-topology queries on an interval set")
    p.add_argument("--space", type=_arg(ordinal.OrdinalSpace.parse), required=True)
    p.add_argument("--set", type=_arg(ordinal.parse_interval_set), required=True)
    _add_format(p)
    p.set_defaults(func=cmd_ordinal)

    p = sub.add_parser("cover", help="finite subcover by greedy descent")
    p.add_argument("--space", type=_arg(ordinal.OrdinalSpace.parse), required=True)
    p.add_argument("--atoms", type=_arg(ordinal.CoverFamily.parse), required=True)
    _add_format(p)
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("compactify", help="run the four-step pipeline")
    _add_chain_args(p)
    p.add_argument("--alpha", type=_arg(ordinal.parse_ordinal), default=ordinal.OMEGA)
    _add_format(p)
    p.set_defaults(func=cmd_compactify)

    p = sub.add_parser("maps", help="continuous maps between finite spaces")
    p.add_argument("--dom", type=_arg(parse_topology), required=True)
    p.add_argument("--cod", type=_arg(parse_topology), required=True)
    _add_format(p)
    p.set_defaults(func=cmd_maps)

    p = sub.add_parser("extend", help="extend an eventually constant sequence to w")
    p.add_argument("--exceptions", type=_arg(_exceptions), default=(), help='e.g. "0:3.5,2:-1"')
    p.add_argument("--tail", type=float, required=True)
    _add_format(p)
    p.set_defaults(func=cmd_extend)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.func(args)
    except UsageError as exc:
        verb_parser = parser.verbs[args.verb]
        sys.stderr.write(verb_parser.format_usage())
        print(f"{verb_parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    except WorkbenchError as exc:
        err = {"error": type(exc).__name__, "message": str(exc)}
        if args.format == "json":
            _emit(_json(err))
        else:
            print(f"error: {err['error']}: {err['message']}", file=sys.stderr)
        return 1
    _emit(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
