"""Command-line interface.

Exit codes: 0 success (for ``witness``: a witness was found), 1 parse or
usage error, 2 ``witness`` on an analytic germ, 3 ``witness`` inconclusive,
4 internal assertion failure.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence

from .analyticity import (
    Analytic,
    CurveInPoleLocus,
    DecideConfig,
    InsufficientTruncation,
    NotAnalytic,
    curve_check,
    decide,
)
from .certificate import principalization_document, regularization_document, verdict_document
from .expr import germ_from_text, max_var, parse_list, to_series
from .principalize import BudgetExceeded, minimalize, principalize_search, regularize_tuple
from .semigroup import semigroup, sg_frobenius_bound
from .series import format_series

EXIT_OK, EXIT_USAGE, EXIT_ANALYTIC, EXIT_INCONCLUSIVE, EXIT_INTERNAL = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> List[int]:
    try:
        vals = [int(s) for s in text.replace(" ", "").split(",") if s]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}")
    if not vals or any(v <= 0 for v in vals):
        raise UsageError(f"curve exponents must be positive integers, got {text!r}")
    return vals


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--trunc", type=int, default=32, help="degree bound for series expansions")
    common.add_argument("--budget", type=int, default=10_000, help="chart expansion budget")
    common.add_argument("--seed", type=int, default=None, help="accepted for harness use; ignored")
    common.add_argument("--nvars", "-n", type=int, default=None, help="override variable count")
    common.add_argument("--out", default=None, help="also write the output to this file")
    common.add_argument("-v", "--verbose", action="store_true")

    p = _Parser(prog="moncurve", description="Analyticity of g/h at the origin via monomial curves.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("frobenius", parents=[common], help="Frobenius number, bound and Apery set")
    s.add_argument("gens", nargs="+", type=int)

    s = sub.add_parser("curve-check", parents=[common], help="check g/h along t -> t^m")
    s.add_argument("-f", "--expr", required=True)
    s.add_argument("-m", "--curve", help="comma-separated exponents")
    s.add_argument("--curves", help="file with one curve per line")
    s.add_argument("--jobs", type=int, default=1)

    s = sub.add_parser("principalize", parents=[common], help="principalize a monomial ideal")
    s.add_argument("-i", "--ideal", required=True, help='comma-separated monomials, e.g. "x^2,y^3"')

    s = sub.add_parser("regularize", parents=[common], help="regularize a tuple of polynomials")
    s.add_argument("-f", "--exprs", required=True, help='semicolon-separated, e.g. "x*y;x^2+y^2"')

    for name, hlp in (("decide", "decide analyticity of g/h"), ("witness", "only report a failing curve")):
        s = sub.add_parser(name, parents=[common], help=hlp)
        s.add_argument("-f", "--expr", required=True)
    return p


def _emit(args, text: str, payload) -> None:
    """Write ``text``, or with --json the payload (a JSON string or a plain object)."""
    out = text
    if args.json:
        out = payload if isinstance(payload, str) else json.dumps(payload, indent=2) + "\n"
    sys.stdout.write(out)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(out)


def cmd_frobenius(args) -> int:
    if any(g <= 0 for g in args.gens):
        raise UsageError("generators must be positive")
    S = semigroup(tuple(args.gens))
    try:
        bound: Optional[int] = sg_frobenius_bound(S)
    except ValueError:
        bound = None
    obj = {
        "generators": list(S.raw_generators),
        "gcd": S.d,
        "minimal_generators": list(S.minimal_generators()),
        "frobenius": S.frobenius,
        "bound": bound,
        "apery": list(S.apery),
    }
    lines = [
        f"frobenius: {S.frobenius}" + (f" (generators divided by gcd {S.d})" if S.d > 1 else ""),
        f"bound: {bound if bound is not None else 'n/a'}",
        f"apery set mod {S.pivot}: {' '.join(map(str, S.apery))}",
    ]
    _emit(args, "\n".join(lines) + "\n", obj)
    return EXIT_OK


def _check_one(F, m):
    try:
        return curve_check(F, m).to_dict()
    except (CurveInPoleLocus, InsufficientTruncation) as exc:
        return {"curve": list(m), "error": str(exc)}


def cmd_curve_check(args) -> int:
    F = germ_from_text(args.expr, args.nvars)
    curves = []
    if args.curve:
        curves.append(_int_list(args.curve))
    if args.curves:
        with open(args.curves) as fh:
            curves += [_int_list(line) for line in fh if line.strip() and not line.startswith("#")]
    if not curves:
        raise UsageError("give -m or --curves")
    for m in curves:
        if len(m) != F.n:
            raise UsageError(f"curve {m} has {len(m)} entries, expression has {F.n} variables")
    with ThreadPoolExecutor(max(1, args.jobs)) as pool:
        reports = list(pool.map(lambda m: _check_one(F, m), curves))
    lines = []
    for r in reports:
        m = ",".join(map(str, r["curve"]))
        if "error" in r:
            lines.append(f"({m}): {r['error']}")
        elif r["passed"]:
            lines.append(f"({m}): passed (checked below t^{r['truncation_used']})")
        elif r["pole"]:
            lines.append(f"({m}): failed, pole of order {-r['offending_exponent']}")
        else:
            lines.append(f"({m}): failed at exponent {r['offending_exponent']}, "
                         f"coefficient {r['offending_coefficient']}")
    _emit(args, "\n".join(lines) + "\n", reports[0] if len(reports) == 1 else reports)
    return EXIT_OK


def cmd_principalize(args) -> int:
    nodes = parse_list(args.ideal, ",")
    n = args.nvars or max(1, *(max_var(x) for x in nodes))
    gens = []
    for node in nodes:
        f = to_series(node, n)
        if len(f.support()) != 1:
            raise UsageError(f"ideal generators must be monomials, got {format_series(f)}")
        gens.append(f.support()[0])
    res = principalize_search(minimalize(gens), args.budget)
    doc = principalization_document(args.ideal, n, res, args.budget)
    text = (f"moves: {len(res.path)}\n"
            f"path: {json.dumps(doc.path)}\n"
            f"composite: {doc.composite}\n"
            f"principal monomial: {list(res.M)}\n")
    _emit(args, text, doc.to_json())
    return EXIT_OK


def cmd_regularize(args) -> int:
    nodes = parse_list(args.exprs, ";")
    n = args.nvars or max(1, *(max_var(x) for x in nodes))
    hs = [to_series(node, n) for node in nodes]
    if all(h.is_zero() for h in hs):
        raise UsageError("all series are zero")
    reg = regularize_tuple(hs, args.budget)
    doc = regularization_document(args.exprs, n, reg, args.budget)
    text = (f"path: {json.dumps(doc.path)}\n"
            f"principal monomial: {list(reg.M)}\n"
            + "".join(f"h~{k}: {s}\n" for k, s in enumerate(doc.certificate["reduced"]))
            + f"unit index: {reg.unit_index}\n")
    _emit(args, text, doc.to_json())
    return EXIT_OK


def _verdict(args):
    F = germ_from_text(args.expr, args.nvars)
    cfg = DecideConfig(trunc=args.trunc, budget=args.budget)
    return F, decide(F, config=cfg)


def _verdict_text(v) -> str:
    if isinstance(v, Analytic):
        return f"Analytic ({v.kind}): {format_series(v.certificate)}\n"
    if isinstance(v, NotAnalytic):
        w = v.witness
        what = (f"pole of order {-w.offending_exponent}" if w.pole
                else f"t^{w.offending_exponent} with coefficient {w.offending_coefficient}")
        return (f"NotAnalytic: along t -> t^({','.join(map(str, w.curve))}) the restriction has {what}\n"
                f"path: {json.dumps(v.path.to_list())}\n")
    return f"Inconclusive: {v.reason} (trunc {v.truncation}, budget {v.budget})\n"


def cmd_decide(args) -> int:
    F, v = _verdict(args)
    doc = verdict_document(args.expr, F.n, v, args.trunc, args.budget)
    _emit(args, _verdict_text(v), doc.to_json())
    return EXIT_OK


def cmd_witness(args) -> int:
    F, v = _verdict(args)
    if isinstance(v, NotAnalytic):
        w = v.witness
        text = f"{','.join(map(str, w.curve))} {w.offending_exponent}\n"
        _emit(args, text, w.to_dict())
        return EXIT_OK
    _emit(args, _verdict_text(v), {"verdict": type(v).__name__})
    return EXIT_ANALYTIC if isinstance(v, Analytic) else EXIT_INCONCLUSIVE


COMMANDS = {
    "frobenius": cmd_frobenius,
    "curve-check": cmd_curve_check,
    "principalize": cmd_principalize,
    "regularize": cmd_regularize,
    "decide": cmd_decide,
    "witness": cmd_witness,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except AssertionError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except (UsageError, ValueError, ZeroDivisionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
