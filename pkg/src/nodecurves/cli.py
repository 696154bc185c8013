"""Command-line front end over the JSON interchange formats.

Every subcommand is a pure function of its arguments and input files:
identical invocations produce byte-identical output.  Node sets, polynomials
and curves travel as JSON with rationals encoded as strings, so exactness
survives shell pipelines.

Exit codes: 0 success; 1 parse or precondition failure; 2 when one of the
structure checkers detects an internal inconsistency.  Failures print a
one-line JSON object {"error": ...} to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Optional

from . import curves, generators, nodes, verify
from .curves import Curve, LineForm, LineUnion
from .errors import BudgetExceeded, TheoremViolation
from .nodes import NodeSet
from .poly import Poly
from .svg import render_svg


def _dumps(obj) -> str:
    return json.dumps(obj) + "\n"


def _emit_error(message: str) -> None:
    sys.stderr.write(_dumps({"error": message}))


def _load_json(arg: str):
    """Accept a file path, inline JSON, or '-' for standard input."""
    if arg == "-":
        return json.loads(sys.stdin.read())
    if arg.lstrip()[:1] in ("{", "["):
        return json.loads(arg)
    with open(arg, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _nodes_arg(args) -> tuple[NodeSet, int]:
    xs, file_n = NodeSet.from_json(_load_json(args.nodes))
    n = args.n if getattr(args, "n", None) is not None else file_n
    if n is None:
        raise ValueError("degree -n is required (flag or \"n\" field)")
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return xs, n


def _nodes_json(xs: NodeSet) -> list:
    return [[str(p.x), str(p.y)] for p in xs]


def _lines_arg(data) -> list[LineForm]:
    if isinstance(data, dict):
        data = [data]
    if not isinstance(data, list) or not data:
        raise ValueError("expected a line object or a nonempty list of them")
    return [LineForm.from_json(item) for item in data]


def _curve_poly(data) -> Poly:
    # accept a curve, a bare polynomial, or a line coefficient object
    if "poly" in data:
        return Curve.from_json(data).poly
    if "coeffs" in data:
        return Poly.from_json(data)
    if {"a", "b", "c"} <= data.keys():
        return LineForm.from_json(data).poly()
    raise ValueError("unrecognized curve object")


def _cmd_indep(args) -> str:
    xs, n = _nodes_arg(args)
    h = nodes.hilbert_function(xs, n)
    return _dumps({"independent": h == len(xs), "hilbert": h})


def _cmd_poised(args) -> str:
    xs, n = _nodes_arg(args)
    return _dumps({"poised": nodes.is_poised(xs, n)})


def _cmd_basis(args) -> str:
    xs, n = _nodes_arg(args)
    space = nodes.vanishing_basis(xs, n)
    return _dumps({
        "n": n,
        "dimension": space.dimension,
        "basis": [p.to_json() for p in space.basis],
    })


def _cmd_fund(args) -> str:
    xs, n = _nodes_arg(args)
    if not 0 <= args.node < len(xs):
        raise ValueError("node index out of range")
    p = nodes.fundamental_polynomial(xs[args.node], xs, n)
    return _dumps(None if p is None else p.to_json())


def _cmd_dstar(args) -> str:
    return _dumps({
        "d": curves.max_nodes_on_curve(args.n, args.k),
        "K": curves.uniqueness_threshold(args.n, args.k),
    })


def _cmd_gen(args) -> str:
    n, seed = args.n, args.seed
    if args.kind == "br":
        built = generators.berzolari_radon(n, seed)
        meta = {
            "kind": "br", "seed": seed, "n": n,
            "lines": [[str(l.a), str(l.b), str(l.c)] for l in built.lines],
            "counts": list(built.counts),
        }
        return _dumps(built.nodes.to_json(n, meta))
    if args.kind == "poised":
        xs = generators.random_poised(n, seed)
        return _dumps(xs.to_json(n, {"kind": "poised", "seed": seed, "n": n}))
    if args.k is None:
        raise ValueError("gen defect requires -k")
    cfg = generators.defect_config(n, args.k, seed)
    meta = {
        "kind": "defect", "seed": seed, "n": n, "k": args.k,
        "mu": cfg.mu.to_json(),
        "mu_lines": [[str(l.a), str(l.b), str(l.c)] for l in cfg.mu_lines],
        "outlier_index": cfg.outlier_index,
    }
    return _dumps(cfg.nodes.to_json(n, meta))


def _cmd_extend(args) -> str:
    xs, n = _nodes_arg(args)
    if args.on_curve is None:
        out = nodes.extend_to_poised(xs, n)
    else:
        lines = _lines_arg(_load_json(args.on_curve))
        sampler = lines[0] if len(lines) == 1 else LineUnion.of(lines)
        q = Curve.from_poly(sampler.poly())
        out = curves.extend_on_curve(xs, sampler, q, n)
    return _dumps(out.to_json(n))


def _report(theorem: str, params: dict, dim: Optional[int],
            outlier_index: Optional[int], mu: Optional[dict],
            ok: bool, **extra) -> str:
    data = {"theorem": theorem, "params": params, "dim": dim,
            "outlier_index": outlier_index, "mu": mu, "ok": ok}
    data.update(extra)
    return _dumps(data)


def _cmd_verify(args) -> str:
    if args.theorem == "uniqueness":
        xs, n = _nodes_arg(args)
        if args.k is None:
            raise ValueError("verify uniqueness requires -k")
        ok = verify.verify_uniqueness(xs, n, args.k)
        dim = verify.curves_through(xs, args.k).dimension
        return _report("uniqueness", {"n": n, "k": args.k}, dim, None, None, ok)
    if args.theorem == "defect":
        xs, n = _nodes_arg(args)
        if args.k is None:
            raise ValueError("verify defect requires -k")
        rep = verify.characterize_defect(xs, n, args.k)
        mu = rep.mu.to_json() if rep.mu is not None else None
        return _report("defect", {"n": n, "k": args.k}, rep.curve_space_dim,
                       rep.outlier_index, mu, rep.consistent)
    if args.theorem == "lineusage":
        xs, n = _nodes_arg(args)
        reports = verify.line_usage_reports(xs, n)
        return _report("lineusage", {"n": n}, None, None, None, True, reports=[
            {
                "line": r.line.to_json(),
                "nodes_on_line": _nodes_json(r.nodes_on_line),
                "users": _nodes_json(r.users),
                "noncollinear_users": r.noncollinear_users,
            }
            for r in reports
        ])
    # twocurves
    xs, _ = NodeSet.from_json(_load_json(args.nodes))
    if args.k is None:
        raise ValueError("verify twocurves requires -k")
    if args.at is None:
        raise ValueError("verify twocurves requires --at x,y")
    parts = args.at.split(",")
    if len(parts) != 2:
        raise ValueError("--at expects two comma-separated rationals")
    a = nodes.node(Fraction(parts[0].strip()), Fraction(parts[1].strip()))
    dim = verify.curves_through(xs, args.k).dimension
    curve = verify.curve_through_extra_node(xs, args.k, a)
    return _report("twocurves", {"k": args.k, "at": [str(a.x), str(a.y)]},
                   dim, None, None, True, curve=curve.to_json())


def _cmd_render(args) -> str:
    xs, _ = NodeSet.from_json(_load_json(args.nodes))
    polys = [_curve_poly(_load_json(c)) for c in (args.curve or [])]
    return render_svg(xs, polys)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nodecurves",
        description="Exact interpolation-node analysis, generation, "
                    "verification, and SVG rendering.")
    sub = parser.add_subparsers(dest="command", required=True)
    nodes_help = "node-set JSON: a file path, inline JSON, or - for stdin"
    out_kw = dict(default=None,
                  help="write output to a file instead of stdout")

    p = sub.add_parser("indep", help="independence and Hilbert function")
    p.add_argument("-n", type=int, default=None, help="total degree bound")
    p.add_argument("nodes", help=nodes_help)
    p.add_argument("-o", "--output", **out_kw)
    p.set_defaults(func=_cmd_indep)

    p = sub.add_parser("poised", help="unisolvence check for a set")
    p.add_argument("-n", type=int, default=None, help="total degree bound")
    p.add_argument("nodes", help=nodes_help)
    p.add_argument("-o", "--output", **out_kw)
    p.set_defaults(func=_cmd_poised)

    p = sub.add_parser("basis", help="vanishing-space basis of a set")
    p.add_argument("-n", type=int, default=None, help="total degree bound")
    p.add_argument("nodes", help=nodes_help)
    p.add_argument("-o", "--output", **out_kw)
    p.set_defaults(func=_cmd_basis)

    p = sub.add_parser("fund", help="fundamental polynomial of one node")
    p.add_argument("-n", type=int, default=None, help="total degree bound")
    p.add_argument("--node", type=int, required=True, help="node index")
    p.add_argument("nodes", help=nodes_help)
    p.add_argument("-o", "--output", **out_kw)
    p.set_defaults(func=_cmd_fund)

    p = sub.add_parser("dstar", help="on-curve node maximum and the "
                       "uniqueness threshold")
    p.add_argument("-n", type=int, required=True, help="total degree bound")
    p.add_argument("-k", type=int, required=True, help="curve degree")
    p.add_argument("-o", "--output", **out_kw)
    p.set_defaults(func=_cmd_dstar)

    p = sub.add_parser("gen", help="deterministic seeded set generators")
    p.add_argument("kind", choices=["br", "poised", "defect"])
    p.add_argument("-n", type=int, required=True, help="total degree bound")
    p.add_argument("-k", type=int, default=None, help="curve degree "
                   "(defect only)")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("-o", "--output", **out_kw)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("extend", help="grow a set to a distinguished size")
    p.add_argument("-n", type=int, default=None, help="total degree bound")
    p.add_argument("--on-curve", default=None, metavar="LINES",
                   help="line or line-list JSON; extend along that curve")
    p.add_argument("nodes", help=nodes_help)
    p.add_argument("-o", "--output", **out_kw)
    p.set_defaults(func=_cmd_extend)

    p = sub.add_parser("verify", help="structure checks with JSON reports")
    p.add_argument("theorem",
                   choices=["uniqueness", "defect", "lineusage", "twocurves"])
    p.add_argument("-n", type=int, default=None, help="total degree bound")
    p.add_argument("-k", type=int, default=None, help="curve degree")
    p.add_argument("--at", default=None, metavar="X,Y",
                   help="extra point for twocurves")
    p.add_argument("nodes", help=nodes_help)
    p.add_argument("-o", "--output", **out_kw)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("render", help="SVG figure of nodes and curves")
    p.add_argument("--curve", action="append", default=None, metavar="CURVE",
                   help="curve JSON to draw; may repeat")
    p.add_argument("nodes", help=nodes_help)
    p.add_argument("-o", "--output", **out_kw)
    p.set_defaults(func=_cmd_render)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        if exc.code in (0, None):
            return 0
        _emit_error("invalid arguments")
        return 1
    try:
        out = args.func(args)
    except TheoremViolation as exc:
        _emit_error(str(exc))
        return 2
    except BudgetExceeded as exc:
        _emit_error(str(exc))
        return 1
    except (ValueError, KeyError, IndexError, TypeError, OSError,
            ZeroDivisionError) as exc:
        _emit_error(str(exc) if not isinstance(exc, KeyError)
                    else f"missing field {exc}")
        return 1
    if args.output is not None:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
