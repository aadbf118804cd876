"""
cli
===

Command line interface of sdimtools.

Commands:
    info      labeling, block, atypicality, parity and Kostant flag of a weight
    sdim      superdimension of L(λ) with all its ingredients
    mult      multiplicity m(λ) from the closed formula and from the relations
    moves     expansions of the basic moves at every site (or at one, --at)
    reduce    reduction trace of m(λ); --trace streams one JSON record per relation
    kostant   Kostant flag and, for maximal atypical Kostant weights, the chain S^0..S^n, Π
    covariant covariant module {λ} of Gl(m|n)
    extdim    self-Ext dimensions of the ground state of a maximal atypical block
    verify    verification suites; exit code 3 on failure
    render    ASCII or SVG picture of the cup diagram
    table     superdimensions of all weights of a block with ∨ in a window
    batch     superdimensions of the weights listed in a file

Targets are weights ``"m|n: a1,...,am ; b1,...,bn"`` or ``"vees {0,2,4}"`` with ``--crosses``.

Exit codes: 0 success, 1 domain error or invalid option value, 2 parse error, 3 verification
failure.

Example:
    ```
    sdimtools sdim "3|1: 1,0,0 ; 0"
    sdimtools mult "vees {0,2,4}" --format json
    sdimtools verify relations --max-n 3
    ```
"""

from __future__ import annotations

import argparse
import itertools
import json
import logging
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

import pandas as pd

from . import __version__
from .data_structures.cup_diagram import CompactedDiagram, build, compact
from .data_structures.super_weight import BlockId, SuperWeight, labeling, validate_weight
from .errors import BadShape, ParseError
from .input_output.memo_cache_file import MemoCacheFile
from .input_output.serialization import dumps, to_dict
from .input_output.weight_parser import parse_partition, parse_target, parse_vee_set, parse_weight
from .invariants.blocks import (
    atypicality,
    block_of,
    is_kostant,
    is_maximal_atypical,
    labeling_window,
    parity,
)
from .invariants.bruhat import ext_self_dims
from .invariants.covariant import (
    covariant_sdim_oracle,
    hook_condition,
    is_covariant_max_atypical,
    to_highest_weight,
)
from .invariants.moves import classify_site, expand, move_sites
from .invariants.multiplicity import m_closed, sdim
from .invariants.reduction import algorithm_iv, default_engine, m_oracle, reduce_trace
from .rendering.cup_diagram_plot import render_ascii, render_svg
from .verification.control import SUITES, VerificationControl
from .verification.suites import run_suite

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_PARSE = 2
EXIT_VERIFY = 3


def _emit(text: str):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _colour(text: str, passed: bool) -> str:
    if "NO_COLOR" in os.environ or not sys.stdout.isatty():
        return text
    return f"\033[{32 if passed else 31}m{text}\033[0m"


def _key_values(rows: Sequence[tuple[str, object]]) -> str:
    width = max(len(key) for key, _ in rows)
    return "\n".join(f"{key:<{width}}  {value}" for key, value in rows)


def _frame_text(frame: pd.DataFrame, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(frame.astype(str).to_dict(orient="records"), sort_keys=True)
    if fmt == "csv":
        return frame.to_csv(index=False)
    return frame.to_string(index=False)


def _target(args) -> SuperWeight:
    return parse_target(args.target, args.crosses)


def _vees(values) -> str:
    return "{" + ",".join(str(x) for x in sorted(values)) + "}"


def cmd_info(args) -> int:
    w = _target(args)
    lab = labeling(w)
    block = block_of(w)
    p, p_mod2 = parity(w)
    if args.format == "json":
        _emit(
            dumps(
                {
                    "weight": to_dict(w),
                    "labeling": to_dict(lab),
                    "window": labeling_window(w, ascii_only=args.ascii),
                    "block": to_dict(block),
                    "atypicality": atypicality(w),
                    "maximal_atypical": is_maximal_atypical(w),
                    "p": p,
                    "p_mod2": p_mod2,
                    "kostant": is_kostant(w),
                }
            )
        )
        return EXIT_OK
    lower, _ = lab.default_window(w.n)
    _emit(
        _key_values(
            [
                ("weight", w),
                ("labeling", f"{labeling_window(w, ascii_only=args.ascii)}  (from {lower})"),
                ("crosses", _vees(block.crosses)),
                ("circles", _vees(block.circles)),
                ("vees", _vees(lab.vees)),
                ("atypicality", atypicality(w)),
                ("maximal atypical", is_maximal_atypical(w)),
                ("parity", f"{p} ({p_mod2})"),
                ("kostant", is_kostant(w)),
            ]
        )
    )
    return EXIT_OK


def cmd_sdim(args) -> int:
    w = _target(args)
    result = sdim(w)
    if args.format == "json":
        _emit(dumps(result))
        return EXIT_OK
    _emit(
        _key_values(
            [
                ("weight", w),
                ("maximal atypical", result.maximal_atypical),
                ("parity", f"{result.p} ({result.p_mod2})"),
                ("parity shift", result.shift),
                ("multiplicity", result.multiplicity),
                ("rho", f"{result.rho} ⊗ det^{result.det_twist}"),
                ("dim rho", result.dim_rho),
                ("sdim", result.sdim),
            ]
        )
    )
    return EXIT_OK


def cmd_mult(args) -> int:
    d = compact(_target(args))
    closed, oracle = m_closed(d), m_oracle(d)
    if args.format == "json":
        _emit(dumps({"vees": list(d.vees), "m": str(closed), "oracle": str(oracle)}))
    else:
        _emit(_key_values([("diagram", d), ("m", closed), ("oracle", oracle)]))
    return EXIT_OK if closed == oracle else EXIT_VERIFY


def cmd_moves(args) -> int:
    d = compact(_target(args))
    sites = [classify_site(d, args.at)] if args.at is not None else move_sites(d)
    expansions = [expand(site) for site in sites]
    if args.format == "json":
        payload = to_dict(expansions[0]) if args.at is not None else [to_dict(e) for e in expansions]
        _emit(dumps(payload))
        return EXIT_OK
    lines = []
    for expansion in expansions:
        site = expansion.site
        lines.append(f"site {site.i} ({site.kind}, a = {site.a}, b = {site.b})")
        lines.extend(f"  {c.move:<14}{c.diagram}" for c in expansion.middle)
    _emit("\n".join(lines) if lines else "no sites")
    return EXIT_OK


def cmd_reduce(args) -> int:
    trace = reduce_trace(_target(args))
    if args.trace:
        for step in trace.steps:
            _emit(dumps(step))
        return EXIT_OK
    if args.format == "json":
        _emit(dumps(trace))
        return EXIT_OK
    lines = [f"diagram {trace.root}: m = {trace.multiplicity}, {len(trace.steps)} relations"]
    for step in trace.steps:
        rhs = " + ".join(f"m({x})" for x in step.relation.rhs)
        lines.append(
            f"  [{step.pivot.algorithm}] {step.diagram}: 2·m({step.relation.lhs}) = {rhs}"
        )
    lines.append(
        "leaves: " + ", ".join(f"{c}·{d}" for d, c in trace.leaves.items())
    )
    _emit("\n".join(lines))
    return EXIT_OK


def cmd_kostant(args) -> int:
    w = _target(args)
    flag = is_kostant(w)
    chain = algorithm_iv(w) if flag and is_maximal_atypical(w) and w.n else None
    if args.format == "json":
        _emit(dumps({"kostant": flag, "chain": None if chain is None else to_dict(chain)}))
        return EXIT_OK
    rows = [("weight", w), ("kostant", flag)]
    if chain is not None:
        rows.append(("chain", " -> ".join(str(d) for d in chain.chain)))
        rows.append(("pi", chain.pi))
        rows.append(("middle sets", "as expected" if chain.matches_expected() else "UNEXPECTED"))
    _emit(_key_values(rows))
    return EXIT_OK


def cmd_covariant(args) -> int:
    p = parse_partition(args.partition)
    m, n = args.m, args.n
    validate_weight(m, n, [0] * (m + n))
    hook = hook_condition(p, m, n)
    rows = {"partition": str(p), "hook": hook, "oracle": str(covariant_sdim_oracle(p, m, n))}
    if hook:
        w = to_highest_weight(p, m, n)
        rows.update(
            weight=str(w),
            maximal_atypical=is_covariant_max_atypical(p, m, n),
            sdim=str(sdim(w).sdim),
        )
    if args.format == "json":
        _emit(dumps(rows))
    else:
        _emit(_key_values([(key.replace("_", " "), value) for key, value in rows.items()]))
    return EXIT_OK


def cmd_extdim(args) -> int:
    crosses = parse_vee_set(args.crosses) if args.crosses else ()
    block = BlockId(crosses, (), args.n + len(crosses), args.n)
    profiles = ext_self_dims(block, args.jmax)
    frame = pd.DataFrame(
        {"degree": [p.degree for p in profiles], "dimension": [p.dimension for p in profiles]}
    )
    _emit(_frame_text(frame, args.format))
    return EXIT_OK


def cmd_verify(args) -> int:
    control = VerificationControl()
    control.set_suite(args.suite)
    if args.window is not None:
        control.set_window(*args.window)
    if args.max_n is not None:
        control.set_max_n(args.max_n)
        control.set_factorial_n(args.max_n)
    if args.samples is not None or args.seed is not None:
        control.set_samples(
            control.samples if args.samples is None else args.samples, seed=args.seed
        )
    if args.bound is not None:
        control.set_identity_bound(args.bound)
    if args.jmax is not None:
        control.set_hilbert_bounds(control.max_n, args.jmax)
    if args.degree is not None:
        control.set_covariant(args.degree)
    control.set_workers(args.workers)

    report = run_suite(control)
    if args.format == "json":
        _emit(dumps(_report_dict(report)))
    else:
        status = _colour("PASS" if report.passed else "FAIL", report.passed)
        rows = [("suite", report.suite), ("status", status), ("cases", report.checked)]
        if report.counterexample:
            rows.append(("counterexample", report.counterexample))
        _emit(_key_values(rows))
    return EXIT_OK if report.passed else EXIT_VERIFY


def _report_dict(report) -> dict:
    return {
        "suite": report.suite,
        "passed": report.passed,
        "checked": report.checked,
        "counterexample": report.counterexample,
    }


def cmd_render(args) -> int:
    d = compact(_target(args))
    if args.format == "svg":
        _emit(render_svg(d, ascii_only=args.ascii))
    else:
        _emit(render_ascii(d, ascii_only=args.ascii))
    return EXIT_OK


def _sdim_row(w: SuperWeight) -> dict:
    result = sdim(w)
    vees = sorted(compact(w).vees) if result.maximal_atypical else []
    return {
        "weight": str(w),
        "vees": _vees(vees),
        "p": result.p,
        "shift": result.shift,
        "m": result.multiplicity,
        "dim_rho": result.dim_rho,
        "sdim": result.sdim,
    }


def cmd_table(args) -> int:
    if args.crosses:
        crosses = parse_vee_set(args.crosses)
        m = args.n + len(crosses)
        if args.m is not None and args.m != m:
            raise BadShape(f"--m {args.m} does not match n + |crosses| = {m}")
    else:
        m = args.m if args.m is not None else args.n
        crosses = block_of(validate_weight(m, args.n, [0] * (m + args.n))).crosses
    lower, upper = args.window
    rows = [
        _sdim_row(CompactedDiagram(vees, crosses).to_weight())
        for vees in itertools.combinations(range(lower, upper + 1), args.n)
    ]
    frame = pd.DataFrame(rows, columns=["weight", "vees", "p", "shift", "m", "dim_rho", "sdim"])
    _emit(_frame_text(frame, args.format))
    return EXIT_OK


def cmd_batch(args) -> int:
    path = Path(args.file)
    if not path.exists():
        logging.error("File '%s' not found.", path)
        raise FileNotFoundError(f"The file '{path}' does not exist.")
    rows = []
    for number, line in enumerate(path.read_text(encoding="utf-8").splitlines(), start=1):
        text = line.split("#", 1)[0].strip()
        if not text:
            continue
        try:
            w = parse_weight(text)
        except ParseError as error:
            raise ParseError(f"line {number}: {error}") from error
        rows.append(_sdim_row(w))
    frame = pd.DataFrame(rows, columns=["weight", "vees", "p", "shift", "m", "dim_rho", "sdim"])
    _emit(_frame_text(frame, args.format))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    """The argument parser of the `sdimtools` command."""
    parser = argparse.ArgumentParser(
        prog="sdimtools",
        description="Superdimensions and cup diagram combinatorics of Gl(m|n).",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="log at INFO")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="log errors only")
    parser.add_argument("--cache-load", metavar="PATH", help="load a memo cache file")
    parser.add_argument("--cache-save", metavar="PATH", help="save the memo table")

    def text_or_json(sub, *extra):
        sub.add_argument("--format", choices=("text", "json", *extra), default="text")

    def target(sub):
        sub.add_argument("target", help="weight 'm|n: ... ; ...' or 'vees {...}'")
        sub.add_argument("--crosses", help="cross positions '{...}' for a 'vees' target")

    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("info", help="labeling and block data")
    target(sub)
    text_or_json(sub)
    sub.add_argument("--ascii", action="store_true", help="ASCII label symbols")
    sub.set_defaults(handler=cmd_info)

    for name, handler, helptext in (
        ("sdim", cmd_sdim, "superdimension"),
        ("mult", cmd_mult, "multiplicity"),
        ("kostant", cmd_kostant, "Kostant flag and chain"),
    ):
        sub = commands.add_parser(name, help=helptext)
        target(sub)
        text_or_json(sub)
        sub.set_defaults(handler=handler)

    sub = commands.add_parser("moves", help="basic move expansions")
    target(sub)
    text_or_json(sub)
    sub.add_argument("--at", type=int, help="compacted position i of a single site")
    sub.set_defaults(handler=cmd_moves)

    sub = commands.add_parser("reduce", help="reduction trace")
    target(sub)
    text_or_json(sub)
    sub.add_argument("--trace", action="store_true", help="JSON lines, one per relation")
    sub.set_defaults(handler=cmd_reduce)

    sub = commands.add_parser("covariant", help="covariant module {λ}")
    sub.add_argument("partition", help="partition '(3,1,1)'")
    sub.add_argument("m", type=int)
    sub.add_argument("n", type=int)
    text_or_json(sub)
    sub.set_defaults(handler=cmd_covariant)

    sub = commands.add_parser("extdim", help="self-Ext dimensions of a ground state")
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--crosses", help="cross positions '{...}' of the block")
    sub.add_argument("--jmax", type=int, default=12)
    text_or_json(sub, "csv")
    sub.set_defaults(handler=cmd_extdim)

    sub = commands.add_parser("verify", help="verification suites")
    sub.add_argument("suite", choices=SUITES)
    sub.add_argument("--window", type=int, nargs=2, metavar=("LOWER", "UPPER"))
    sub.add_argument("--max-n", type=int)
    sub.add_argument("--samples", type=int)
    sub.add_argument("--seed", type=int)
    sub.add_argument("--bound", type=int, help="identity bound")
    sub.add_argument("--jmax", type=int)
    sub.add_argument("--degree", type=int, help="largest covariant degree")
    sub.add_argument("--workers", type=int, default=1)
    text_or_json(sub)
    sub.set_defaults(handler=cmd_verify)

    sub = commands.add_parser("render", help="cup diagram picture")
    target(sub)
    sub.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    sub.add_argument("--ascii", action="store_true", help="ASCII label symbols")
    sub.set_defaults(handler=cmd_render)

    sub = commands.add_parser("table", help="superdimensions of a block")
    sub.add_argument("--m", type=int)
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--crosses", help="cross positions '{...}' of the block")
    sub.add_argument("--window", type=int, nargs=2, default=(-4, 4), metavar=("LOWER", "UPPER"))
    text_or_json(sub, "csv")
    sub.set_defaults(handler=cmd_table)

    sub = commands.add_parser("batch", help="superdimensions of the weights in a file")
    sub.add_argument("file")
    text_or_json(sub, "csv")
    sub.set_defaults(handler=cmd_batch)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Runs the command line interface.

    Args:
        argv (Sequence[str], optional): Arguments without the program name. Defaults to
            ``sys.argv[1:]``.

    Returns:
        int: The exit code.
    """
    args = build_parser().parse_args(argv)
    root = logging.getLogger()
    if args.verbose:
        root.setLevel(logging.INFO)
    elif args.quiet:
        root.setLevel(logging.ERROR)

    engine = default_engine()
    try:
        if args.cache_load:
            engine.load(MemoCacheFile(args.cache_load).read())
        code = args.handler(args)
        if args.cache_save:
            MemoCacheFile(args.cache_save, must_exist=False).write(engine.export())
    except ParseError as error:
        sys.stderr.write(f"parse error: {error}\n")
        return EXIT_PARSE
    except (ValueError, OSError) as error:
        sys.stderr.write(f"error: {error}\n")
        return EXIT_DOMAIN
    return code


if __name__ == "__main__":
    sys.exit(main())
