"""Command-line interface: ``kfold <subcommand> ...``.

Exit codes: 0 success, 1 ``verify`` found an invalid coloring, 2 invalid
input, 3 oracle size limit exceeded.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Sequence

from .bounds import bounds_report, strictness_check
from .coloring import chi_k, optimal_coloring, verify_coloring
from .criticality import chi_k_minus_v, is_chik_critical, is_chistar_critical
from .families import (
    Family,
    FamilyParams,
    InstanceTooLargeError,
    InvalidParamsError,
    all_params,
    alpha,
    delete_vertex,
    materialize,
    omega,
)
from .io import FormatError, dumps_coloring, loads_coloring, read_dimacs, to_dimacs
from .numtheory import ProductOverflowError
from .oracle import exact_chi_k, exact_chi_k_via_lex

TABLE_COLUMNS = (
    "family", "n", "p", "k", "alpha", "omega", "chi_k", "chi_k_minus_v", "critical", "chistar_critical",
)


class UsageError(ValueError):
    pass


def _params(args) -> FamilyParams:
    if args.k is not None and args.k < 1:
        raise UsageError(f"k >= 1 violated (k={args.k})")
    return FamilyParams(Family(args.family), args.n, args.p)


def _emit(args, human: str, payload: dict) -> None:
    print(json.dumps(payload) if args.json else human)


def cmd_chik(args) -> int:
    params = _params(args)
    value = chi_k(params, args.k)
    _emit(args, str(value), {"family": params.family.value, "n": params.n, "p": params.p, "k": args.k, "chi_k": value})
    return 0


def cmd_color(args) -> int:
    params = _params(args)
    coloring = optimal_coloring(params, args.k)
    if args.json:
        print(dumps_coloring(params, args.k, coloring))
    else:
        print(f"{params}: {args.k}-fold {coloring.x}-coloring")
        for c, members in enumerate(coloring.classes, start=1):
            print(f"color {c}: {' '.join(map(str, members))}")
    return 0


def cmd_verify(args) -> int:
    text = sys.stdin.read() if args.file == "-" else open(args.file, encoding="utf-8").read()
    params, k, coloring = loads_coloring(text)
    verdict = verify_coloring(materialize(params), coloring, k)
    if args.json:
        print(json.dumps({
            "valid": verdict.valid,
            "x": verdict.x,
            "k": k,
            "multiplicity": verdict.multiplicity,
            "undercovered": verdict.undercovered,
            "conflicts": [list(c) for c in verdict.conflicts],
        }))
    elif verdict.valid:
        print(f"valid {k}-fold {verdict.x}-coloring of {params}")
    else:
        print(f"invalid coloring of {params} (x={verdict.x}, k={k})")
        for v in verdict.undercovered:
            print(f"  vertex {v} has {verdict.multiplicity[v]} colors, needs {k}")
        for color, u, v in verdict.conflicts:
            print(f"  color {color} on adjacent vertices {u} and {v}")
    return 0 if verdict.valid else 1


def cmd_minusv(args) -> int:
    params = _params(args)
    value = chi_k_minus_v(params, args.k)
    _emit(args, str(value), {"family": params.family.value, "n": params.n, "p": params.p, "k": args.k,
                             "chi_k_minus_v": value})
    return 0


def cmd_critical(args) -> int:
    report = is_chik_critical(_params(args), args.k)
    _emit(args, report.describe(), report.to_dict())
    return 0


def cmd_bounds(args) -> int:
    params = _params(args)
    rep = bounds_report(params, args.k)
    strict = strictness_check(params, args.k)
    if args.json:
        print(json.dumps(rep.to_dict()))
        return 0
    rows = [
        ("k*omega", rep.k_omega, "tight" if rep.tight_omega else "strict" if strict.lower_strict else ""),
        ("k*n/alpha", f"{rep.frac_chi * args.k}", "tight" if rep.tight_frac else ""),
        ("ceil(k*n/alpha)", rep.lex_lower, ""),
        ("chi_k", rep.chi_k, ""),
        ("k*chi", rep.k_chi, "tight" if rep.tight_chi else "strict" if strict.upper_strict else ""),
    ]
    for name, value, note in rows:
        print(f"{name:<16}{value!s:>10}  {note}".rstrip())
    return 0


def cmd_oracle(args) -> int:
    if args.k < 1:
        raise UsageError(f"k >= 1 violated (k={args.k})")
    if args.dimacs:
        with open(args.dimacs, encoding="utf-8") as fh:
            g = read_dimacs(fh)
        label = args.dimacs
    else:
        if args.family is None or args.n is None or args.p is None:
            raise UsageError("oracle needs --dimacs or all of --family, -n, -p")
        params = _params(args)
        g = materialize(params)
        label = str(params)
    if args.delete is not None:
        g = delete_vertex(g, args.delete)
        label += f" - v{args.delete}"
    value = exact_chi_k_via_lex(g, args.k) if args.via_lex else exact_chi_k(g, args.k)
    _emit(args, str(value), {"graph": label, "k": args.k, "chi_k": value})
    return 0


def table_rows(families: Sequence[Family], n_max: int, k: int, n_min: int = 2):
    for params in all_params(n_max, families, n_min=n_min):
        rep = is_chik_critical(params, k)
        yield {
            "family": params.family.value,
            "n": params.n,
            "p": params.p,
            "k": k,
            "alpha": alpha(params),
            "omega": omega(params),
            "chi_k": rep.chi_k,
            "chi_k_minus_v": rep.chi_k_minus_v,
            "critical": int(rep.is_critical),
            "chistar_critical": int(is_chistar_critical(params).critical),
        }


def cmd_table(args) -> int:
    if args.k < 1:
        raise UsageError(f"k >= 1 violated (k={args.k})")
    families = [Family(args.family)] if args.family else list(Family)
    writer = csv.DictWriter(sys.stdout, fieldnames=TABLE_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for row in table_rows(families, args.n_max, args.k, args.n_min):
        writer.writerow(row)
    return 0


def cmd_export(args) -> int:
    text = to_dimacs(materialize(_params(args)))
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kfold", description="Optimal k-fold colorings of webs and antiwebs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def family_args(p: argparse.ArgumentParser, need_k: bool = True, required: bool = True) -> None:
        p.add_argument("--family", choices=[f.value for f in Family], required=required)
        p.add_argument("-n", type=int, required=required, help="number of vertices")
        p.add_argument("-p", type=int, required=required, help="distance parameter")
        if need_k:
            p.add_argument("-k", type=int, default=1, help="fold (default 1)")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    family_args(sub.add_parser("chik", help="k-th chromatic number"))
    family_args(sub.add_parser("color", help="optimal k-fold coloring"))
    family_args(sub.add_parser("minusv", help="k-th chromatic number after deleting a vertex"))
    family_args(sub.add_parser("critical", help="chi_k-criticality verdict"))
    family_args(sub.add_parser("bounds", help="chi_k against omega, chi and n/alpha"))

    p = sub.add_parser("verify", help="check a JSON coloring document")
    p.add_argument("file", help="path to JSON coloring, or - for stdin")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("oracle", help="exact chi_k by exhaustive search (small graphs)")
    family_args(p, required=False)
    p.add_argument("--dimacs", help="read the graph from a DIMACS .col file instead")
    p.add_argument("--delete", type=int, help="delete this vertex first (0-based)")
    p.add_argument("--via-lex", action="store_true", help="compute chi(G o K_k) instead")

    p = sub.add_parser(
        "table",
        help="CSV survey over all valid (n, p)",
        description="Columns: " + ",".join(TABLE_COLUMNS) + ". Booleans are written as 0/1.",
    )
    p.add_argument("--family", choices=[f.value for f in Family])
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--k", "-k", type=int, default=1)

    p = sub.add_parser("export", help="write the graph in DIMACS .col format")
    family_args(p, need_k=False)
    p.add_argument("-o", "--output", help="output file (default stdout)")
    return parser


COMMANDS = {
    "chik": cmd_chik,
    "color": cmd_color,
    "verify": cmd_verify,
    "minusv": cmd_minusv,
    "critical": cmd_critical,
    "bounds": cmd_bounds,
    "oracle": cmd_oracle,
    "table": cmd_table,
    "export": cmd_export,
}


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if not hasattr(args, "k"):
        args.k = None
    try:
        return COMMANDS[args.command](args)
    except InstanceTooLargeError as exc:
        print(f"error: instance too large: {exc}", file=sys.stderr)
        return 3
    except (InvalidParamsError, UsageError, ProductOverflowError, FormatError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
