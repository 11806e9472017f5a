"""Command-line front end. Every subcommand prints one JSON object on stdout.

Exit status: 0 on success, 1 on a domain or guard error (the JSON then holds
an ``error`` object), 2 on a usage error.
"""
from __future__ import annotations

import argparse
import inspect
import json
import sys
from fractions import Fraction

from . import __version__
from .cliques import clique_census, maximum_clique
from .errors import BudgetExhausted, CliqueMinorError, GuardError, InputError
from .extremal import (
    ForbiddenMinorSpec,
    envelope_build,
    extremal_union_construct,
    family_ip_optimum,
    k_s_bound,
    small_n_bound,
    wood_bound,
)
from .graph import Graph, ShapeParams, complement, complement_of_matching, complete_graph
from .graphio import EDGE_LIST, FORMATS, parse_graph, serialize_graph
from .matching import maximum_matching
from .minors import (
    DEFAULT_BUDGET,
    HADWIGER_MAX_VERTICES,
    dense_precondition,
    find_minor_model,
    hadwiger_dense,
    hadwiger_exact,
)
from .social import SOCIAL_MAX_VERTICES, best_contraction_minor, is_social
from .suites import SUITES, run_suite

SCHEMA_VERSION = 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# -- JSON helpers -------------------------------------------------------


def frac(q) -> dict:
    q = Fraction(q)
    return {"num": str(q.numerator), "den": str(q.denominator)}


def shape_json(p: ShapeParams) -> dict:
    return {"a": p.a, "b": p.b}


def model_json(model) -> list:
    return [sorted(s) for s in model.branch_sets]


def family_json(family) -> list:
    return [{"t": s.t, "x": s.x} for s in family]


# -- input --------------------------------------------------------------


def _read_graph(inline: str | None, path: str | None, fmt: str, what: str = "graph") -> Graph:
    if inline is not None and path is not None:
        raise UsageError(f"give the {what} inline or as a file, not both")
    if inline is None and path is None:
        raise UsageError(f"missing {what}: use --{what} TEXT or --{what}-file PATH")
    if path is not None:
        try:
            with open(path, encoding="ascii") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {path}: {exc.strerror}") from None
    else:
        # shells rarely pass real newlines, so accept the two-character escape
        text = inline.replace("\\n", "\n")
    return parse_graph(text, fmt)


def parse_family_item(item: str) -> ForbiddenMinorSpec:
    """``k6`` (a clique) or ``t:x`` (connected graph on t vertices, missing matching x)."""
    item = item.strip().lower()
    try:
        if item.startswith("k"):
            return ForbiddenMinorSpec.clique(int(item[1:]))
        t, x = item.split(":")
        return ForbiddenMinorSpec(int(t), int(x))
    except ValueError as exc:
        if isinstance(exc, InputError):
            raise
        raise UsageError(f"bad family member {item!r}; expected kT or T:X") from None


def _family(items) -> list[ForbiddenMinorSpec]:
    out = []
    for chunk in items or []:
        out.extend(parse_family_item(part) for part in chunk.split(",") if part.strip())
    if not out:
        raise UsageError("need at least one --family member")
    return out


# -- subcommands --------------------------------------------------------


def cmd_census(args) -> dict:
    g = _read_graph(args.graph, args.graph_file, args.format)
    census = clique_census(g)
    return {
        "n": g.n,
        "count": str(census.total),
        "omega": census.omega,
        "containing": [str(c) for c in census.containing],
        "alpha": [frac(a) for a in census.fractions],
        "maximum_clique": maximum_clique(g),
    }


def cmd_minor(args) -> dict:
    g = _read_graph(args.graph, args.graph_file, args.format)
    h = _read_graph(args.minor, args.minor_file, args.format, "minor")
    model = find_minor_model(g, h, args.budget)
    out = {"is_minor": model is not None, "model": None}
    if model is not None:
        model.validate(g, h)
        out["model"] = model_json(model)
    return out


def cmd_hadwiger(args) -> dict:
    g = _read_graph(args.graph, args.graph_file, args.format)
    if g.n > args.max_vertices:
        raise GuardError(f"graph has {g.n} vertices; --max-vertices is {args.max_vertices}")
    method = args.method
    if method == "auto":
        method = "dense" if dense_precondition(g) else "exact"
    if method == "dense":
        h, model = hadwiger_dense(g)
    else:
        if g.n > HADWIGER_MAX_VERTICES:
            raise GuardError(f"exact search is limited to {HADWIGER_MAX_VERTICES} vertices")
        h, model = hadwiger_exact(g, args.budget)
    model.validate(g, complete_graph(h))
    return {"hadwiger": h, "method": method, "mode": "exact", "model": model_json(model)}


def cmd_matching(args) -> dict:
    g = _read_graph(args.graph, args.graph_file, args.format)
    target = complement(g) if args.missing else g
    m = maximum_matching(target)
    return {"size": m.size, "edges": sorted(sorted(e) for e in m.edges), "missing": args.missing}


def cmd_bound(args) -> dict:
    if args.ks is not None:
        kb = k_s_bound(args.ks)
        w = kb.witness
        return {
            "kind": "k-s",
            "s": kb.s,
            "count": None if kb.exact_value is None else str(kb.exact_value),
            "cube_bound": str(3 ** kb.s),
            "value_float": kb.value_float,
            "shape": None if w is None else shape_json(w),
        }
    if args.small_n is not None:
        t, n = args.small_n
        sb = small_n_bound(t, n)
        return {
            "kind": "small-n",
            "t": t,
            "n": n,
            "shape": shape_json(sb.shape),
            "count": str(sb.count),
            "theorem_value": str(sb.theorem_value),
            "log2_part": sb.log2_part,
            "log3_part": sb.log3_part,
        }
    if args.wood is not None:
        t, n = args.wood
        return {"kind": "wood", "t": t, "n": n, "count": str(wood_bound(t, n))}
    family = _family(args.family)
    opt = family_ip_optimum(family)
    env = envelope_build(family)
    return {
        "kind": "family",
        "family": family_json(family),
        "shape": shape_json(opt.shape),
        "count": str(opt.clique_count),
        "lp_point": {"a": frac(opt.lp.a), "b": frac(opt.lp.b)},
        "lp_exponent": opt.lp.exponent,
        "extreme_points": [{"a": frac(a), "b": frac(b)} for a, b in env.extreme_points],
        "mode": "exact",
    }


def cmd_construct(args) -> dict:
    if args.shape is not None:
        a, b = args.shape
        p = ShapeParams(a, b)
        g = complement_of_matching(p)
        return {
            "kind": "shape",
            "shape": shape_json(p),
            "count": str(p.clique_count),
            "graph": serialize_graph(g, args.format),
        }
    if args.n is None:
        raise UsageError("construct needs --shape A B or --family ... --n N")
    family = _family(args.family)
    built = extremal_union_construct(family, args.n)
    return {
        "kind": "union",
        "family": family_json(family),
        "n": args.n,
        "pieces": [shape_json(p) for p in built.pieces],
        "count": str(built.count),
        "graph": serialize_graph(built.graph(), args.format),
    }


def cmd_social(args) -> dict:
    g = _read_graph(args.graph, args.graph_file, args.format)
    if g.n > args.max_vertices:
        raise GuardError(f"graph has {g.n} vertices; --max-vertices is {args.max_vertices}")
    report = is_social(g)
    out = {
        "is_social": report.is_social,
        "violating_edge": None if report.violating_edge is None else list(report.violating_edge),
        "bad_vertices": sorted(report.bad_vertices),
        "structure_violations": sorted(report.structure_violations),
        "max_missing_degree": report.max_missing_degree,
        "outside_core": report.outside_core,
        "structure_holds": report.structure_holds,
        "alpha_star": report.alpha_star,
    }
    if args.contract:
        res = best_contraction_minor(g, args.mode)
        out["best_contraction"] = {
            "mode": res.mode,
            "count": str(res.census.total),
            "contractions": [list(e) for e in res.contractions],
            "graph": serialize_graph(res.graph, args.format),
        }
    return out


# verify flags and the suite keyword each one feeds
VERIFY_FLAGS = {
    "n": "n",
    "max_n": "max_n",
    "t": "t",
    "max_t": "max_t",
    "max_m": "max_m",
    "max_a": "max_a",
    "max_b": "max_b",
    "seed": "seed",
    "families": "families",
    "budget": "budget",
}


def cmd_verify(args) -> dict:
    accepted = inspect.signature(SUITES[args.suite]).parameters
    params = {}
    for flag, key in VERIFY_FLAGS.items():
        value = getattr(args, flag)
        if value is None:
            continue
        if key not in accepted:
            raise UsageError(f"suite {args.suite} does not take --{flag.replace('_', '-')}")
        params[key] = value
    result = run_suite(args.suite, params)
    return result.to_json()


# -- parser -------------------------------------------------------------


def _graph_args(p, minor: bool = False):
    p.add_argument("--graph", help="graph text; a literal \\n separates lines")
    p.add_argument("--graph-file", "--file", dest="graph_file", help="read the graph from a file")
    if minor:
        p.add_argument("--minor", help="pattern graph text")
        p.add_argument("--minor-file", help="read the pattern graph from a file")
    p.add_argument("--format", choices=FORMATS, default=EDGE_LIST)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="accepted for symmetry; output is always JSON")
    common.add_argument("--indent", type=int, default=None, help="pretty-print the JSON")
    parser = _Parser(prog="cliqueminor", description="Clique counts and clique minors, exactly.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help):
        return sub.add_parser(name, help=help, parents=[common])

    p = add("census", help="clique count, clique number and per-vertex fractions")
    _graph_args(p)
    p.set_defaults(func=cmd_census)

    p = add("minor", help="search for a minor model of one graph in another")
    _graph_args(p, minor=True)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_minor)

    p = add("hadwiger", help="largest clique minor")
    _graph_args(p)
    p.add_argument("--method", choices=("auto", "exact", "dense"), default="auto")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--max-vertices", type=int, default=HADWIGER_MAX_VERTICES)
    p.set_defaults(func=cmd_hadwiger)

    p = add("matching", help="maximum matching")
    _graph_args(p)
    p.add_argument("--missing", action="store_true", help="match in the complement instead")
    p.set_defaults(func=cmd_matching)

    p = add("bound", help="extremal shapes and closed-form bounds")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--family", action="append", help="forbidden minor: kT or T:X; repeat or comma-separate")
    g.add_argument("--ks", type=int, metavar="S", help="bound on cliques when n + omega <= S")
    g.add_argument("--small-n", type=int, nargs=2, metavar=("T", "N"))
    g.add_argument("--wood", type=int, nargs=2, metavar=("T", "N"))
    p.set_defaults(func=cmd_bound)

    p = add("construct", help="build a shape or an extremal disjoint union")
    p.add_argument("--shape", type=int, nargs=2, metavar=("A", "B"))
    p.add_argument("--family", action="append")
    p.add_argument("--n", type=int)
    p.add_argument("--format", choices=FORMATS, default=EDGE_LIST)
    p.set_defaults(func=cmd_construct)

    p = add("social", help="social test, bad vertices and structure check")
    _graph_args(p)
    p.add_argument("--contract", action="store_true", help="also search for the best contraction minor")
    p.add_argument("--mode", choices=("auto", "exact", "heuristic"), default="auto")
    p.add_argument("--max-vertices", type=int, default=SOCIAL_MAX_VERTICES)
    p.set_defaults(func=cmd_social)

    p = add("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    for flag in VERIFY_FLAGS:
        p.add_argument("--" + flag.replace("_", "-"), dest=flag, type=int)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    indent = None
    try:
        args = parser.parse_args(argv)
        indent = args.indent
        body = args.func(args)
        status = 0
    except UsageError as exc:
        body, status = {"error": {"kind": "usage", "message": str(exc)}}, 2
    except BudgetExhausted as exc:
        body = {"error": {"kind": "budget", "message": str(exc), "steps": exc.steps, "indeterminate": True}}
        status = 1
    except (CliqueMinorError, ValueError) as exc:
        body, status = {"error": {"kind": type(exc).__name__, "message": str(exc)}}, 1
    except SystemExit as exc:
        # --help and --version
        return int(exc.code or 0)
    if status == 0 and body.get("passed") is False:
        # a suite that finds a counterexample is a domain failure
        status = 1
    out = {"schema_version": SCHEMA_VERSION, "ok": status == 0, **body}
    sys.stdout.write(json.dumps(out, indent=indent) + "\n")
    return status
