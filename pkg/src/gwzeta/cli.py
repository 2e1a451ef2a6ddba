"""Command line interface: ``gwzeta {zeta,cellular,fit,check,euler}``.

Exit codes: 0 success, 2 parse/validation error, 3 inconsistent data,
4 missing capability, 5 fit failure.
"""

from __future__ import annotations

import argparse
import sys

from . import checks
from . import varieties as V
from . import varspec
from .display import SCHEMA, dumps, factor_list_json, format_factor_list, gw_json, json_int
from .fit import FitError, fit_dlog_rational
from .gw import FqTag, format_gw
from .zeta import (
    InconsistentCountsError,
    NotProperError,
    cellular_closed_form,
    disc_series_direct,
    dlog_zeta,
    euler_characteristic,
)

EXIT_OK, EXIT_PARSE, EXIT_DATA, EXIT_CAPABILITY, EXIT_FIT = 0, 2, 3, 4, 5

DATA_ERRORS = (
    InconsistentCountsError,
    V.InsufficientDataError,
    V.NegativeCountError,
    V.InconsistentWeilDataError,
)


class CommandError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _resolve(spec: str, q: int | None) -> V.PointCountSource:
    try:
        node = varspec.parse(spec)
        declared = varspec.file_fields(node)
        if len(declared) > 1:
            raise CommandError(EXIT_PARSE, f"data files disagree on q: {sorted(declared)}")
        if q is None:
            q = declared.pop() if declared else 3
        elif declared and declared != {q}:
            raise CommandError(EXIT_PARSE, f"--q {q} conflicts with data file q = {declared.pop()}")
        return varspec.build(node, FqTag.of(q))
    except DATA_ERRORS as exc:
        raise CommandError(EXIT_DATA, str(exc)) from exc
    except ValueError as exc:
        raise CommandError(EXIT_PARSE, str(exc)) from exc


def _report(X: V.PointCountSource, order: int, spec: str) -> dict:
    return {"schema": SCHEMA, "q": X.field.q, "variety": spec, "order": order}


def _zeta(X: V.PointCountSource, order: int):
    try:
        return dlog_zeta(X, order)
    except NotProperError as exc:
        raise CommandError(EXIT_CAPABILITY, str(exc)) from exc
    except DATA_ERRORS as exc:
        raise CommandError(EXIT_DATA, str(exc)) from exc


def _series_lines(series) -> list[str]:
    return [f"t^{m}: {format_gw(c)}" for m, c in enumerate(series)]


def cmd_zeta(args) -> tuple[str, dict]:
    X = _resolve(args.spec, args.q)
    rep = _zeta(X, args.order)
    checks_ = {
        "rank_equals_counts": True,
        "disc_two_paths": disc_series_direct(X, args.order) == rep.disc_series,
    }
    doc = _report(X, args.order, args.spec)
    doc["coefficients"] = [gw_json(c) for c in rep.enriched]
    doc["checks"] = checks_
    lines = [f"dlog zeta^A1 of {X.label} over F_{X.field.q}, order {args.order}"]
    lines += _series_lines(rep.enriched)
    lines.append("rank: " + ", ".join(str(c.rank) for c in rep.enriched))
    lines.append("disc: " + ", ".join(str(c.disc) for c in rep.enriched))
    lines += [f"check {k}: {'pass' if v else 'FAIL'}" for k, v in checks_.items()]
    return "\n".join(lines), doc


def _cells(X: V.PointCountSource) -> V.CellData:
    if X.cells is None:
        raise CommandError(EXIT_CAPABILITY, f"no cell data for {X.label}")
    return X.cells


def cmd_cellular(args) -> tuple[str, dict]:
    X = _resolve(args.spec, args.q)
    cells = _cells(X)
    factors, closed = cellular_closed_form(X.field, cells, args.order)
    rep = _zeta(X, args.order)
    match = rep.enriched == closed
    doc = _report(X, args.order, args.spec)
    doc["coefficients"] = [gw_json(c) for c in closed]
    doc["closed_form"] = factor_list_json(factors)
    doc["checks"] = {"pipeline_match": match}
    lines = [
        f"cells b = {list(cells.b)}",
        "dlog zeta^A1 = " + format_factor_list(factors),
        *_series_lines(closed),
        "MATCH" if match else "MISMATCH",
    ]
    if not match:
        raise CommandError(EXIT_DATA, "\n".join(lines))
    return "\n".join(lines), doc


def cmd_fit(args) -> tuple[str, dict]:
    X = _resolve(args.spec, args.q)
    rep = _zeta(X, args.order)
    try:
        factors = fit_dlog_rational(rep.enriched)
    except FitError as exc:
        raise CommandError(EXIT_FIT, str(exc)) from exc
    doc = _report(X, args.order, args.spec)
    doc["coefficients"] = [gw_json(c) for c in rep.enriched]
    doc["closed_form"] = factor_list_json(factors)
    doc["checks"] = {"round_trip": factors.expand(args.order) == rep.enriched}
    lines = [
        f"{len(factors)} factors",
        "dlog zeta^A1 = " + format_factor_list(factors),
        *(f"  weight {format_gw(f.weight)}, pole {format_gw(f.pole)}, mult {f.mult}" for f in factors),
    ]
    return "\n".join(lines), doc


def cmd_euler(args) -> tuple[str, dict]:
    X = _resolve(args.spec, args.q)
    cells = _cells(X)
    chi = euler_characteristic(cells, X.field)
    even = sum(cells.b[0::2])
    odd = sum(cells.b[1::2])
    doc = _report(X, 0, args.spec)
    doc["euler"] = gw_json(chi)
    doc["checks"] = {}
    return f"{even}⟨1⟩ + {odd}⟨−1⟩ = ({chi.rank},{chi.disc})", doc


def cmd_check(args) -> tuple[str, dict]:
    try:
        qs = [int(x) for x in args.q.split(",")] if args.q else [3, 5, 7]
        for q in qs:
            FqTag.of(q)
    except ValueError as exc:
        raise CommandError(EXIT_PARSE, f"bad --q list: {exc}") from exc
    results = checks.run(args.suite, qs, args.order)
    lines = [f"{'pass' if ok else 'FAIL'}  {name}" for name, ok in results]
    failed = sum(not ok for _, ok in results)
    lines.append(f"{len(results) - failed}/{len(results)} passed")
    doc = {
        "schema": SCHEMA,
        "suite": args.suite,
        "q": [json_int(q) for q in qs],
        "order": args.order,
        "checks": {name: ok for name, ok in results},
    }
    if failed:
        args._exit = 1
    return "\n".join(lines), doc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gwzeta", description="Enriched logarithmic zeta functions over finite fields")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, spec=True, order=True, q_list=False):
        if spec:
            p.add_argument("spec", help="variety specification, e.g. 'prod(Pn(1),Pn(1))'")
        if q_list:
            p.add_argument("--q", default=None, help="comma separated prime powers (default 3,5,7)")
        else:
            p.add_argument("--q", type=int, default=None, help="field size (default 3, or the data file's q)")
        if order:
            p.add_argument("--order", type=int, default=12, help="truncation order M (default 12)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", default=None, help="write output to this path")

    for name, fn, kw in (
        ("zeta", cmd_zeta, {}),
        ("cellular", cmd_cellular, {}),
        ("fit", cmd_fit, {}),
        ("euler", cmd_euler, {"order": False}),
    ):
        p = sub.add_parser(name)
        common(p, **kw)
        p.set_defaults(func=fn)
    p = sub.add_parser("check")
    p.add_argument("suite", nargs="?", default="all", choices=("all", *checks.SUITES))
    common(p, spec=False, q_list=True)
    p.set_defaults(func=cmd_check)
    return parser


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    if getattr(args, "order", 1) < 1:
        print("error: --order must be positive", file=sys.stderr)
        return EXIT_PARSE
    args._exit = EXIT_OK
    try:
        text, doc = args.func(args)
    except CommandError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    _emit(dumps(doc) if args.format == "json" else text + "\n", args.out)
    return args._exit


if __name__ == "__main__":
    sys.exit(main())
