"""Command-line front end.

Exit codes: 0 success, 2 parse/usage error, 3 verification failure,
4 search budget exceeded, 5 requested color count out of range.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import experiment, families
from .coloring import RangeError, interpolate
from .fileformats import (
    FormatError,
    VerificationError,
    format_coloring,
    format_degeneracy,
    format_fvs,
    format_graph,
    format_packing,
    parse_certificate,
    read_graph,
    verify_certificate,
)
from .graph import degeneracy
from .guests import GuestClass, check_compatible, default_guest
from .solvers import BudgetExceeded, chi_h, dac, nu_h, psi_h, tau_h

EXIT_OK, EXIT_PARSE, EXIT_VERIFY, EXIT_BUDGET, EXIT_RANGE = 0, 2, 3, 4, 5
BUDGET_ENV = "ACOLOR_BUDGET"


class CliError(Exception):
    def __init__(self, msg: str, code: int):
        super().__init__(msg)
        self.code = code


def _default_budget() -> int | None:
    raw = os.environ.get(BUDGET_ENV)
    if not raw:
        return None
    try:
        return int(raw)
    except ValueError:
        raise CliError(f"{BUDGET_ENV}={raw!r} is not an integer", EXIT_PARSE) from None


def _load(path: str):
    try:
        return read_graph(path)
    except FormatError as exc:
        raise CliError(f"{path}: {exc}", EXIT_PARSE) from None
    except OSError as exc:
        raise CliError(str(exc), EXIT_PARSE) from None


def _guest(args, host) -> GuestClass:
    H = GuestClass.parse(args.guest) if args.guest else default_guest(host)
    try:
        check_compatible(H, host)
    except TypeError as exc:
        raise CliError(str(exc), EXIT_PARSE) from None
    return H


def _write(path: str | None, text: str) -> None:
    if path is None:
        return
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def cmd_compute(args) -> int:
    host = _load(args.input)
    budget = args.budget if args.budget is not None else _default_budget()
    param = args.param
    if param == "degeneracy":
        d, order = degeneracy(host, multiplicity=not args.simple)
        print(d)
        _write(args.cert, format_degeneracy(d, order, multiplicity=not args.simple))
        return EXIT_OK
    if param == "dac":
        if not host.directed:
            raise CliError("dac needs a digraph", EXIT_PARSE)
        r = dac(host, budget=budget)
        print(r.value)
        _write(args.cert, format_coloring(r.witness))
        return EXIT_OK
    H = _guest(args, host)
    if param == "chi":
        r = chi_h(H, host, budget=budget)
        text = format_coloring(r.witness)
    elif param == "psi":
        r = psi_h(H, host, budget=budget)
        text = format_coloring(r.witness)
    elif param == "tau":
        r = tau_h(H, host, budget=budget)
        text = format_fvs(r.witness)
    else:
        r = nu_h(H, host, induced=args.induced, budget=budget)
        text = format_packing(r.witness)
    print(r.value)
    _write(args.cert, text)
    return EXIT_OK


def cmd_verify(args) -> int:
    host = _load(args.input)
    try:
        with open(args.cert) as fh:
            cert = parse_certificate(fh.read())
    except FormatError as exc:
        raise CliError(f"{args.cert}: {exc}", EXIT_PARSE) from None
    except OSError as exc:
        raise CliError(str(exc), EXIT_PARSE) from None
    H = GuestClass.parse(args.guest) if args.guest else None
    try:
        report = verify_certificate(host, cert, args.mode, H)
    except VerificationError as exc:
        print(f"FAIL: {exc}")
        return EXIT_VERIFY
    print(report)
    return EXIT_OK


def cmd_interpolate(args) -> int:
    host = _load(args.input)
    H = _guest(args, host)
    budget = args.budget if args.budget is not None else _default_budget()
    try:
        cert = interpolate(H, host, args.colors, budget=budget)
    except RangeError as exc:
        raise CliError(str(exc), EXIT_RANGE) from None
    text = format_coloring(cert)
    _write(args.out or "-", text)
    return EXIT_OK


def cmd_gen(args) -> int:
    params = {k: getattr(args, k) for k in ("n", "m", "k", "count", "length", "p", "seed")
              if getattr(args, k) is not None}
    params["directed"] = args.directed
    spec = families.FamilySpec(args.family, params, bidirect=args.bidirect, double=args.double)
    try:
        host = families.generate(spec)
    except ValueError as exc:
        raise CliError(str(exc), EXIT_PARSE) from None
    _write(args.out or "-", format_graph(host))
    return EXIT_OK


def cmd_experiment(args) -> int:
    budget = args.budget if args.budget is not None else _default_budget()
    if args.corpus == "gnp":
        if args.n is None or args.p is None:
            raise CliError("gnp corpus needs --n and --p", EXIT_PARSE)
        instances = experiment.gnp_corpus(args.n, args.p, args.trials, args.seed)
    elif args.corpus == "families":
        instances = experiment.families_corpus()
    else:
        instances = experiment.mixed_corpus(args.size, args.seed)
    rows = experiment.run(instances, budget=budget, jobs=args.jobs)
    _write(args.out or "-", experiment.format_table(rows, timing=args.timing))
    if args.summary:
        _write(args.summary, experiment.format_summary(experiment.summarize(rows)))
    flagged = sum(r["budget"] == "1" for r in rows)
    if flagged:
        print(f"{flagged} row(s) exceeded the search budget", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="acolor", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)
    guest = dict(choices=[g.value for g in GuestClass],
                 help="guest class (default: dicycles for digraphs, cycles for graphs)")

    p = sub.add_parser("compute", help="compute one parameter")
    p.add_argument("input", nargs="?")
    p.add_argument("--input", dest="input_opt")
    p.add_argument("--param", required=True, choices=["chi", "psi", "tau", "nu", "dac", "degeneracy"])
    p.add_argument("--guest", **guest)
    p.add_argument("--cert", help="write the certificate here")
    p.add_argument("--budget", type=int, help=f"search node limit (default ${BUDGET_ENV})")
    p.add_argument("--induced", action=argparse.BooleanOptionalAction, default=True,
                   help="pack chordless members (nu only; the value is the same)")
    p.add_argument("--simple", action="store_true",
                   help="degeneracy of the simplification (parallel edges count once)")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="check a certificate against a graph")
    p.add_argument("input", nargs="?")
    p.add_argument("cert_pos", nargs="?", metavar="cert")
    p.add_argument("--input", dest="input_opt")
    p.add_argument("--cert")
    p.add_argument("--mode", choices=["proper", "complete", "dac", "fvs", "packing", "degeneracy"])
    p.add_argument("--guest", **guest)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("interpolate", help="complete coloring with exactly L classes")
    p.add_argument("input", nargs="?")
    p.add_argument("--input", dest="input_opt")
    p.add_argument("--colors", type=int, required=True)
    p.add_argument("--guest", **guest)
    p.add_argument("--out")
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_interpolate)

    p = sub.add_parser("gen", help="write a family member as a graph file")
    p.add_argument("--family", required=True, choices=families.FAMILY_TAGS)
    for name in ("n", "m", "k", "count", "length", "seed"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--directed", action="store_true", help="disjoint-cycles: directed cycles")
    p.add_argument("--bidirect", action="store_true")
    p.add_argument("--double", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("experiment", help="run all solvers over a corpus, write a table")
    p.add_argument("--corpus", choices=["gnp", "families", "mixed"], default="gnp")
    p.add_argument("--n", type=int)
    p.add_argument("--p", type=float)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=2024)
    p.add_argument("--size", type=int, default=500, help="mixed corpus size")
    p.add_argument("--budget", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--timing", action="store_true", help="add a runtime column (not reproducible)")
    p.add_argument("--out")
    p.add_argument("--summary", help="write max-ratio summary here")
    p.set_defaults(func=cmd_experiment)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if hasattr(args, "input_opt"):
        args.input = args.input_opt or args.input
        if args.command in ("compute", "verify", "interpolate") and not args.input:
            print("acolor: error: an input graph file is required", file=sys.stderr)
            return EXIT_PARSE
    if args.command == "verify":
        args.cert = args.cert or args.cert_pos
        if not args.cert:
            print("acolor: error: a certificate file is required", file=sys.stderr)
            return EXIT_PARSE
    try:
        return args.func(args)
    except CliError as exc:
        print(f"acolor: error: {exc}", file=sys.stderr)
        return exc.code
    except BudgetExceeded as exc:
        print(f"acolor: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
