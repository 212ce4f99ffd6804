"""Command-line interface.

Exit codes: 0 success (or verification pass), 1 verification failure,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import random
import sys

from . import formats
from .dercat import euler_matrix
from .mutations import (
    apply_word,
    braid_orbit_search,
    format_word,
    is_unipotent_upper,
    parse_word,
    random_unipotent,
)
from .partitions import BoxContext, enumerate_subsets, parse_partition
from .stokes import (
    DEFAULT_TOL,
    AdmissibleLine,
    canonical_coords_grassmannian,
    grassmann_stokes,
    is_admissible,
    order_by_line,
)
from .symfunc import lr_expand, skew_schur_spec
from .verify import verify, verify_all

DEFAULT_CAP = 12
CAP_ENV = "STOKES_GRASSMANN_CAP"


def _cap(args) -> int:
    if args.cap is not None:
        return args.cap
    env = os.environ.get(CAP_ENV)
    return int(env) if env else DEFAULT_CAP


def _context(parser: argparse.ArgumentParser, args, n: int | None = None) -> BoxContext:
    n = args.n if n is None else n
    cap = _cap(args)
    if n > cap:
        parser.error(
            f"n={n} exceeds the size cap {cap}; the matrix would have C(n, r) rows. "
            f"Raise it with --cap or {CAP_ENV}."
        )
    try:
        return BoxContext(args.r, n)
    except ValueError as exc:
        parser.error(str(exc))


def _parse_t(text: str) -> complex:
    text = text.strip()
    if "," in text:
        re_part, im_part = text.split(",", 1)
        return complex(float(re_part), float(im_part))
    return complex(text.replace(" ", ""))


def _emit(args, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_stokes(parser, args) -> int:
    ctx = _context(parser, args)
    s = grassmann_stokes(ctx)
    if args.format == "csv":
        _emit(args, formats.matrix_to_csv(s.order, s.rows()))
    else:
        _emit(args, formats.matrix_to_json(ctx, s.order, s.rows(), kind="stokes"))
    return 0


def cmd_euler(parser, args) -> int:
    ctx = _context(parser, args)
    e = euler_matrix(ctx)
    order = enumerate_subsets(ctx)
    if args.format == "csv":
        _emit(args, formats.matrix_to_csv(order, e.rows()))
    else:
        _emit(args, formats.matrix_to_json(ctx, order, e.rows(), kind="euler"))
    return 0


_REPORT_FIELDS = ["r", "n", "matrix_size", "pairs_checked", "mismatches", "determinant", "verdict"]


def _render_reports(args, reports, single: bool) -> str:
    fields = _REPORT_FIELDS + (["elapsed_seconds"] if args.timing else [])
    docs = [rep.to_dict(timing=args.timing) for rep in reports]
    if args.format == "csv":
        lines = [",".join(fields)]
        for d in docs:
            d["mismatches"] = len(d["mismatches"])
            lines.append(",".join(str(d[k]) for k in fields))
        return "\n".join(lines) + "\n"
    return json.dumps(docs[0] if single else docs, sort_keys=True, indent=1) + "\n"


def cmd_verify(parser, args) -> int:
    report = verify(_context(parser, args))
    _emit(args, _render_reports(args, [report], single=True))
    return 0 if report.passed else 1


def cmd_verify_all(parser, args) -> int:
    if args.max_n > _cap(args):
        parser.error(f"--max-n {args.max_n} exceeds the size cap {_cap(args)}")
    if args.max_n < 2:
        parser.error("--max-n must be at least 2")
    reports = verify_all(args.max_n)
    _emit(args, _render_reports(args, reports, single=False))
    return 0 if all(rep.passed for rep in reports) else 1


def cmd_canonical(parser, args) -> int:
    ctx = _context(parser, args)
    if args.t is not None:
        try:
            t = _parse_t(args.t)
        except ValueError:
            parser.error(f"cannot parse --t {args.t!r}; use 're,im'")
    else:
        t = complex(args.t_re, args.t_im)
    try:
        line = AdmissibleLine(args.phi % math.pi)
    except ValueError as exc:
        parser.error(str(exc))
    points = canonical_coords_grassmannian(ctx, t)
    check = is_admissible(line, points, args.tol)
    order = order_by_line(line, points, tol=args.tol) if check else None
    doc = {
        "r": ctx.r,
        "n": ctx.n,
        "t": [t.real, t.imag],
        "phi": line.phi,
        "points": [
            {"label": list(p.label), "re": p.value.real, "im": p.value.imag, "abs": abs(p.value)}
            for p in points
        ],
        "admissible": check.admissible,
        "degenerate": check.degenerate,
        "coincident": [[list(a), list(b)] for a, b in check.coincident],
        "orthogonal": [[list(a), list(b)] for a, b in check.orthogonal],
        "order": [list(k) for k in order] if order is not None else None,
    }
    if args.format == "json":
        _emit(args, json.dumps(doc, sort_keys=True, indent=1) + "\n")
        return 0
    lines = [f"Gr({ctx.r},{ctx.n})  t={t.real:g}{t.imag:+g}i  phi={line.phi:g}"]
    for p in points:
        lines.append(f"u[{p.label.to_string()}] = {p.value.real:+.12g} {p.value.imag:+.12g}i"
                     f"  |u| = {abs(p.value):.12g}")
    lines.append(f"admissible: {'yes' if check.admissible else 'no'}")
    if check.degenerate:
        pairs = " ".join(f"({a.to_string()})=({b.to_string()})" for a, b in check.coincident)
        lines.append(f"degenerate: coincident critical values {pairs}")
    if check.orthogonal:
        pairs = " ".join(f"({a.to_string()})|({b.to_string()})" for a, b in check.orthogonal)
        lines.append(f"orthogonal pairs: {pairs}")
    if order is not None:
        lines.append("order: " + " ".join(f"({k.to_string()})" for k in order))
    _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_skew(parser, args) -> int:
    lam, mu = parse_partition(args.lam), parse_partition(args.mu)
    if args.n < 1:
        parser.error("--n must be positive")
    _emit(args, f"{skew_schur_spec(lam, mu, args.n)}\n")
    return 0


def cmd_lr(parser, args) -> int:
    mu, nu = parse_partition(args.mu), parse_partition(args.nu)
    expansion = lr_expand(mu, nu, rows=args.rows)
    items = sorted(expansion.items(), key=lambda kv: tuple(kv[0]), reverse=True)
    if args.format == "json":
        doc = {lam.to_string(): str(c) for lam, c in items}
        _emit(args, json.dumps(doc, sort_keys=True, indent=1) + "\n")
    else:
        _emit(args, "".join(f"{lam.to_string()}: {c}\n" for lam, c in items))
    return 0


def cmd_mutate(parser, args) -> int:
    if args.matrix is not None:
        try:
            g = formats.parse_matrix(args.matrix)
        except ValueError:
            parser.error(f"cannot parse --matrix {args.matrix!r}; use rows like '1,2;0,1'")
    else:
        g = [list(row) for row in random_unipotent(args.n, random.Random(args.seed))]
    if len(g) != args.n or not is_unipotent_upper(g):
        parser.error(f"--matrix must be a unit upper triangular {args.n}x{args.n} integer matrix")
    try:
        word = parse_word(args.word)
        result = apply_word(g, word)
    except (ValueError, IndexError) as exc:
        parser.error(str(exc))
    doc = {
        "n": args.n,
        "input": [[str(x) for x in row] for row in g],
        "word": format_word(word),
        "matrix": [[str(x) for x in row] for row in result],
    }
    if args.target is not None:
        try:
            h = formats.parse_matrix(args.target)
        except ValueError:
            parser.error(f"cannot parse --target {args.target!r}")
        if len(h) != args.n or not is_unipotent_upper(h):
            parser.error("--target must be a unit upper triangular matrix of the same size")
        found = braid_orbit_search(result, h, args.depth, signs=args.signs)
        doc["search"] = {
            "depth": args.depth,
            "signs": args.signs,
            "witness": format_word(found) if found is not None else None,
        }
    if args.format == "json":
        _emit(args, json.dumps(doc, sort_keys=True, indent=1) + "\n")
    else:
        out = formats.format_matrix(result) + "\n"
        if "search" in doc:
            w = doc["search"]["witness"]
            out += f"witness: {w if w is not None else 'none within depth (inconclusive)'}\n"
        _emit(args, out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stokes-grassmann",
        description="Stokes matrices and Euler pairings for Grassmannians, in exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, box=True, fmt=("json", "csv"), default_fmt="json"):
        if box:
            p.add_argument("--r", type=int, required=True)
            p.add_argument("--n", type=int, required=True)
        p.add_argument("--format", choices=fmt, default=default_fmt)
        p.add_argument("--out", metavar="FILE")
        p.add_argument("--cap", type=int, help=f"size cap on n (default {DEFAULT_CAP}, env {CAP_ENV})")
        return p

    common(sub.add_parser("stokes", help="Grassmannian Stokes matrix (rows L, columns K)"))
    common(sub.add_parser("euler", help="Euler pairing matrix of the Kapranov collection"))
    p = common(sub.add_parser("verify", help="check Stokes = Euler = skew Schur for every pair"))
    p.add_argument("--timing", action="store_true", help="include elapsed seconds in the report")
    p = common(sub.add_parser("verify-all", help="run verify for all 1 <= r < n <= max-n"), box=False)
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--timing", action="store_true")

    p = common(sub.add_parser("canonical", help="canonical coordinates and admissibility"),
               fmt=("text", "json"), default_fmt="text")
    p.add_argument("--t", help="complex t as 're,im' or a Python complex literal")
    p.add_argument("--t-re", type=float, default=0.0)
    p.add_argument("--t-im", type=float, default=0.0)
    p.add_argument("--phi", type=float, default=0.0)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)

    p = common(sub.add_parser("skew", help="s_{lambda/mu}(1^n)"), box=False, fmt=("text",),
               default_fmt="text")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--n", type=int, required=True)

    p = common(sub.add_parser("lr", help="Littlewood-Richardson expansion of s_mu s_nu"), box=False,
               fmt=("text", "json"), default_fmt="text")
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("--rows", type=int, help="keep shapes with at most this many rows")

    p = common(sub.add_parser("mutate", help="apply a braid word to a unipotent Gram matrix"),
               box=False, fmt=("text", "json"), default_fmt="text")
    p.add_argument("--n", type=int, required=True, help="matrix size")
    p.add_argument("--matrix", help="rows separated by ';', entries by ','")
    p.add_argument("--word", default="", help='e.g. "b1 b2 b1^-1"')
    p.add_argument("--seed", type=int, default=0, help="seed for a random matrix when --matrix is omitted")
    p.add_argument("--target", help="search for a braid word from the result to this matrix")
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--signs", action="store_true", help="compare up to sign changes of basis vectors")
    return parser


_COMMANDS = {
    "stokes": cmd_stokes,
    "euler": cmd_euler,
    "verify": cmd_verify,
    "verify-all": cmd_verify_all,
    "canonical": cmd_canonical,
    "skew": cmd_skew,
    "lr": cmd_lr,
    "mutate": cmd_mutate,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command in ("skew", "lr"):
        for name in ("lam", "mu", "nu"):
            value = getattr(args, name, None)
            if value is not None:
                try:
                    parse_partition(value)
                except ValueError as exc:
                    parser.error(f"malformed partition {value!r}: {exc}")
    return _COMMANDS[args.command](parser, args)


if __name__ == "__main__":
    sys.exit(main())
