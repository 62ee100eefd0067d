"""
Command-line front end.

Exit status: 0 when every executed check passes, 2 when a mathematical
check fails, 1 on usage or configuration errors. Parameters are accepted
only as exact rationals ("7/2", "-3", never "3.5").
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction

from . import __version__
from .exact import format_rational, parse_rational
from .identities import verify_grid
from .moments import verify_orthogonality
from .nonextensive import q_from_family, q_pair_table3
from .polys import Family, FamilyParam, coeffs_to_csv, coeffs_to_json, family_poly
from .transforms import (
    DensitySpec,
    density_eval_1d,
    ks_distance,
    nagel_map,
    pushforward_check_1d,
    pushforward_grid,
    sample_1d,
    thm5_grid,
    verify_thm5,
)

EXIT_OK, EXIT_USAGE, EXIT_FAIL = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _dump(obj, indent: int = 0) -> str:
    """JSON with fixed key order and floats at 17 significant digits."""
    pad, inner = "  " * indent, "  " * (indent + 1)
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, float):
        if not math.isfinite(obj):
            return "null"
        return format(obj, ".17g")
    if isinstance(obj, (int, str)):
        return json.dumps(obj, ensure_ascii=False)
    if isinstance(obj, Fraction):
        return json.dumps(format_rational(obj))
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        body = ",\n".join(f"{inner}{json.dumps(str(k), ensure_ascii=False)}: {_dump(v, indent + 1)}"
                          for k, v in obj.items())
        return "{\n" + body + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        return "[\n" + ",\n".join(inner + _dump(v, indent + 1) for v in obj) + "\n" + pad + "]"
    if hasattr(obj, "item"):
        return _dump(obj.item(), indent)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj) -> str:
    return _dump(obj) + "\n"


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _workers() -> int:
    raw = os.environ.get("QJACOBI_WORKERS", "1")
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"QJACOBI_WORKERS must be an integer, got {raw!r}") from None
    if n < 1:
        raise UsageError("QJACOBI_WORKERS must be >= 1")
    return n


def cmd_table(args) -> int:
    spec = FamilyParam(Family(args.family), args.n, args.param)
    p = family_poly(spec)
    if args.format == "json":
        text = dumps(json.loads(coeffs_to_json(spec, p)))
    elif args.format == "csv":
        text = coeffs_to_csv(p)
    else:
        terms = [f"{format_rational(c)}*X^{j}" for j, c in enumerate(p.coeffs) if c]
        text = (" + ".join(terms) or "0") + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    reports = verify_grid(args.identity, args.n_max, args.param, workers=_workers())
    docs = [r.to_json() for r in reports]
    if args.format == "text":
        lines = []
        for r in reports:
            status = "skip" if r.skipped else ("ok" if r.exact_equal else "FAIL")
            lines.append(f"{r.identity} n={r.n} param={format_rational(r.params[0])}: {status}")
        text = "\n".join(lines) + "\n"
    else:
        text = dumps(docs)
    _emit(text, args.out)
    return EXIT_FAIL if any(r.exact_equal is False for r in reports) else EXIT_OK


def cmd_ortho(args) -> int:
    rep = verify_orthogonality(args.family, args.param, args.n_max)
    if args.format == "text":
        lines = [f"{rep.family} param={format_rational(rep.param)} n<={rep.n_max}: "
                 f"off-diagonal {'all zero' if rep.off_diagonal_zero else 'NONZERO'}"
                 f", {len(rep.skips)} non-integrable pairs skipped"]
        for m in range(rep.n_max + 1):
            row = []
            for n in range(rep.n_max + 1):
                e = rep.entries.get((m, n))
                row.append("--" if e is None else format_rational(e.ratio_to_mu0))
            lines.append("  ".join(row))
        text = "\n".join(lines) + "\n"
    else:
        text = dumps(rep.to_json())
    _emit(text, args.out)
    return EXIT_OK if rep.off_diagonal_zero else EXIT_FAIL


def cmd_qmap(args) -> int:
    if args.geometry:
        if args.m is None:
            raise UsageError("--geometry needs --m")
        q1, q2 = q_pair_table3(args.geometry, args.param, args.m)
        doc = {"family": args.geometry,
               "params": {"param": format_rational(args.param), "m": args.m},
               "q": [format_rational(q1), format_rational(q2)],
               "q_float": [float(q1), float(q2)],
               "branch": ["q<1" if q < 1 else "q>1" if q > 1 else "q=1" for q in (q1, q2)]}
    else:
        if args.family is None:
            raise UsageError("qmap needs --family or --geometry")
        if args.family == "rhp":
            params = (args.param, args.m or 0, args.n or 0)
            shown = {"N": format_rational(args.param), "m": args.m or 0, "n": args.n or 0}
        else:
            params = args.param
            shown = {"param": format_rational(args.param)}
        q, tag = q_from_family(args.family, params)
        doc = {"family": args.family, "params": shown, "q": format_rational(q),
               "q_float": float(q), "branch": tag}
    if args.format == "text":
        text = f"q = {doc['q']}  ({doc['q_float']})  branch {doc['branch']}\n"
    else:
        text = dumps(doc)
    _emit(text, args.out)
    return EXIT_OK


def cmd_pushforward(args) -> int:
    err = pushforward_check_1d(args.n, args.param, pushforward_grid(args.grid))
    ok = err < args.tol
    doc = {"params": {"n": args.n, "N": format_rational(args.param)},
           "grid_size": args.grid, "max_error": err, "pass": ok}
    _emit(dumps(doc), args.out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_thm5(args) -> int:
    res = verify_thm5(args.m, args.n, args.param, thm5_grid(args.grid))
    doc = res.to_json(args.tol)
    _emit(dumps(doc), args.out)
    return EXIT_OK if doc["pass"] else EXIT_FAIL


def cmd_sample(args) -> int:
    src = DensitySpec("relativistic1d", args.n, args.param)
    batch = sample_1d(src, args.count, args.seed)
    values = batch.values
    if args.transform:
        values = nagel_map(values, args.param)
        target = DensitySpec("sphere1d", args.n, args.param)
        ks = ks_distance(values, lambda y: density_eval_1d(target, y), lower=-1.0)
    else:
        ks = ks_distance(values, lambda x: density_eval_1d(src, x))
    if args.samples:
        with open(args.samples, "w", encoding="utf-8", newline="") as fh:
            fh.write("value\n")
            fh.writelines(format(float(v), ".17g") + "\n" for v in values)
    ok = ks < args.tol
    doc = {"seed": args.seed, "count": args.count, "ks": ks,
           "acceptance_rate": batch.proposal_acceptance_rate, "pass": ok}
    _emit(dumps(doc), args.out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_report(args) -> int:
    from .acceptance import report_all
    doc = report_all(args.profile)
    if args.format == "text":
        text = "".join(f"[{'PASS' if c['pass'] else 'FAIL'}] {c['criterion']:2d}. {c['title']} "
                       f"({c['seconds']:.2f}s)\n" for c in doc["criteria"])
    else:
        text = dumps(doc)
    _emit(text, args.out)
    return EXIT_OK if doc["all_pass"] else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="qjacobi", description=__doc__.strip().splitlines()[0])
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, formats=("json", "text")):
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--out", help="write output here instead of stdout")
        return p

    families = [f.value for f in Family]

    p = common(sub.add_parser("table", help="coefficient table of one polynomial"), ("csv", "json", "text"))
    p.add_argument("--family", choices=families, required=True)
    p.add_argument("--param", type=_rational)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_table)

    p = common(sub.add_parser("verify", help="exact identity checks over a grid"))
    p.add_argument("--identity", choices=["thm1", "thm2", "thm3", "nagel", "square"], required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--param", type=_rational, action="append", required=True,
                   help="repeatable")
    p.set_defaults(func=cmd_verify)

    p = common(sub.add_parser("ortho", help="exact Gram matrix of one family"))
    p.add_argument("--family", choices=[f for f in families if f != "hermite"], required=True)
    p.add_argument("--param", type=_rational, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.set_defaults(func=cmd_ortho)

    p = common(sub.add_parser("qmap", help="nonextensivity parameter of a weight"))
    p.add_argument("--family", choices=["gegenbauer", "carinena", "carinena-pos", "rhp"])
    p.add_argument("--geometry", choices=["sphere", "hyperbolic"])
    p.add_argument("--param", type=_rational, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--n", type=int)
    p.set_defaults(func=cmd_qmap)

    p = common(sub.add_parser("pushforward", help="1D density pushforward check"), ("json",))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--param", type=_rational, required=True)
    p.add_argument("--grid", type=int, default=1001)
    p.add_argument("--tol", type=float, default=1e-10)
    p.set_defaults(func=cmd_pushforward)

    p = common(sub.add_parser("thm5", help="2D hyperbolic-to-sphere density check"), ("json",))
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--param", type=_rational, required=True)
    p.add_argument("--grid", type=int, default=21)
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(func=cmd_thm5)

    p = common(sub.add_parser("sample", help="draw from a relativistic density"), ("json",))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--param", type=_rational, required=True)
    p.add_argument("--count", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--transform", action="store_true", help="push samples onto [-1, 1] first")
    p.add_argument("--samples", help="CSV path for the drawn values")
    p.add_argument("--tol", type=float, default=0.02, help="KS distance threshold")
    p.set_defaults(func=cmd_sample)

    p = common(sub.add_parser("report", help="run the acceptance suite"))
    p.add_argument("--profile", choices=["quick", "full"], default="quick")
    p.set_defaults(func=cmd_report)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError, OSError) as exc:
        print(f"qjacobi {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
